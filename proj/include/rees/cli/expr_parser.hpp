#pragma once

#include <string>
#include <string_view>

#include "rees/errors.hpp"
#include "rees/poly.hpp"

namespace rees::cli {

// Syntax error at a 1-based line and column.
class ParseError : public InvalidArgumentError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InvalidArgumentError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := integer ('/' integer)? | identifier | '(' expr ')'
//
// `line` and `column` locate the first character of `text` for error
// messages. Every identifier must be a variable of `ring`.
Poly parse_expression(std::string_view text, const RingPtr& ring, int line = 1, int column = 1);

bool is_identifier(std::string_view s);

}  // namespace rees::cli
