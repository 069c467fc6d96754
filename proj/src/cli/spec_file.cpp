#include "rees/cli/spec_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rees/cli/expr_parser.hpp"
#include "rees/rees_presentation.hpp"

namespace rees::cli {

namespace {

struct Item {
  std::string text;
  int line;
  int column;
};

struct Section {
  int line = 0;
  std::vector<Item> items;
};

std::size_t trim_front(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim(std::string_view s) {
  s.remove_prefix(trim_front(s));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits `body` (starting at `column` on `line`) on any of `seps`, dropping
// empty pieces.
void split_items(std::string_view body, int line, int column, std::string_view seps, std::vector<Item>& out) {
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && seps.find(body[i]) == std::string_view::npos) continue;
    std::string_view piece = body.substr(start, i - start);
    std::size_t lead = trim_front(piece);
    std::string_view t = trim(piece);
    if (!t.empty()) out.push_back({std::string(t), line, column + static_cast<int>(start + lead)});
    start = i + 1;
  }
}

int to_int(const Item& item, std::string_view value, int value_col) {
  int out = 0;
  try {
    std::size_t used = 0;
    long v = std::stol(std::string(value), &used);
    if (used != value.size() || v < 0 || v > 1000000000) throw std::out_of_range("");
    out = static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError("expected a non-negative integer", item.line, value_col);
  }
  return out;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::string current_name;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }

    int body_col = 1;
    std::string_view body = line;
    std::size_t lead = trim_front(line);
    std::size_t colon = line.find(':');
    if (colon != std::string_view::npos && is_identifier(trim(line.substr(lead, colon - lead)))) {
      std::string name(trim(line.substr(lead, colon - lead)));
      if (name != "ring" && name != "relations" && name != "derivation" && name != "options")
        throw ParseError("unknown section '" + name + "'", line_no, static_cast<int>(lead) + 1);
      if (sections.count(name)) throw ParseError("duplicate section '" + name + "'", line_no, static_cast<int>(lead) + 1);
      current = &sections[name];
      current->line = line_no;
      current_name = name;
      body = line.substr(colon + 1);
      body_col = static_cast<int>(colon) + 2;
    } else if (!current) {
      throw ParseError("expected a section header", line_no, static_cast<int>(lead) + 1);
    }
    split_items(body, line_no, body_col, current_name == "ring" ? "," : ";", current->items);
    if (end == text.size()) break;
  }

  auto ring_it = sections.find("ring");
  if (ring_it == sections.end()) throw ParseError("missing 'ring:' section", line_no, 1);
  std::vector<std::string> names;
  for (const auto& item : ring_it->second.items) {
    if (!is_identifier(item.text)) throw ParseError("invalid variable name '" + item.text + "'", item.line, item.column);
    if (item.text == kUpsilonLabel) throw ParseError("'upsilon' is reserved", item.line, item.column);
    for (const auto& n : names)
      if (n == item.text) throw ParseError("variable '" + item.text + "' declared twice", item.line, item.column);
    names.push_back(item.text);
  }
  if (names.empty()) throw ParseError("the ring needs at least one variable", ring_it->second.line, 1);

  SpecFile spec;
  spec.ring = Ring::make(names);
  spec.images.assign(names.size(), Poly(spec.ring));

  if (auto it = sections.find("relations"); it != sections.end())
    for (const auto& item : it->second.items) {
      Poly r = parse_expression(item.text, spec.ring, item.line, item.column);
      if (!r.is_zero()) spec.relations.push_back(std::move(r));
    }

  if (auto it = sections.find("derivation"); it != sections.end()) {
    std::vector<bool> seen(names.size(), false);
    for (const auto& item : it->second.items) {
      auto arrow = item.text.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'variable -> expression'", item.line, item.column);
      std::string var(trim(std::string_view(item.text).substr(0, arrow)));
      auto idx = spec.ring->index_of(var);
      if (!idx) throw ParseError("unknown variable '" + var + "'", item.line, item.column);
      if (seen[*idx]) throw ParseError("derivation of '" + var + "' given twice", item.line, item.column);
      seen[*idx] = true;
      spec.images[*idx] =
          parse_expression(std::string_view(item.text).substr(arrow + 2), spec.ring, item.line,
                           item.column + static_cast<int>(arrow) + 2);
    }
  }

  if (auto it = sections.find("options"); it != sections.end())
    for (const auto& item : it->second.items) {
      auto eq = item.text.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'key = value'", item.line, item.column);
      std::string key(trim(std::string_view(item.text).substr(0, eq)));
      std::string_view raw = std::string_view(item.text).substr(eq + 1);
      std::string_view value = trim(raw);
      int value_col = item.column + static_cast<int>(eq + 1 + trim_front(raw));
      if (key == "bound")
        spec.options.bound = to_int(item, value, value_col);
      else if (key == "max-iter")
        spec.options.max_iter = to_int(item, value, value_col);
      else if (key == "max-pairs")
        spec.options.max_pairs = static_cast<std::size_t>(to_int(item, value, value_col));
      else
        throw ParseError("unknown option '" + key + "'", item.line, item.column);
    }
  return spec;
}

SpecFile load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

QuotientAlgebra spec_algebra(const SpecFile& spec, const GbOptions& options) {
  return QuotientAlgebra(spec.ring, spec.relations, options);
}

Derivation spec_derivation(const SpecFile& spec, const GbOptions& options) {
  return Derivation(spec_algebra(spec, options), spec.images);
}

void validate(const Derivation& d, int bound) {
  DerivationCheck check = check_derivation(d);
  if (!check.well_defined)
    throw DerivationError("derivation does not preserve the relation " + check.offending_relation->to_string() +
                          " (its image " + check.offending_image->to_string() + " is nonzero)");
  NilpotencyReport report = is_locally_nilpotent(d, bound);
  for (std::size_t i = 0; i < report.variable_degrees.size(); ++i)
    if (!report.variable_degrees[i]) throw NilpotencyError(d.ring()->name(i), bound);
}

}  // namespace rees::cli
