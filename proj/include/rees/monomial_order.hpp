#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rees/monomial.hpp"

namespace rees {

// Non-negative integer weight per variable.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> values);
  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<std::int64_t>(n, 1)); }
  static WeightVector zeros(std::size_t n) { return WeightVector(std::vector<std::int64_t>(n, 0)); }

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t degree(const Monomial& m) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// A block order: blocks are compared in sequence, each block restricted to
// its own variables. A single block gives the usual orders; two blocks give
// an elimination order for the first block.
//
// Within a block the comparison is
//   lex:                 first differing exponent, larger wins
//   weighted_deglex:     weighted degree, then total degree, then lex
//   weighted_degrevlex:  weighted degree, then total degree, then reverse lex
// The total-degree tie-break keeps the weighted orders well-founded when some
// weights are zero.
class MonomialOrder {
 public:
  enum class Kind { lex, weighted_deglex, weighted_degrevlex };

  struct Block {
    std::vector<std::size_t> vars;
    Kind kind = Kind::weighted_degrevlex;
    std::vector<std::int64_t> weights;  // parallel to vars
    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<Block> blocks);

  static MonomialOrder lex(std::size_t n);
  static MonomialOrder degrevlex(std::size_t n);
  static MonomialOrder weighted_degrevlex(const WeightVector& w);
  static MonomialOrder weighted_deglex(const WeightVector& w);
  // Block order ranking every monomial containing a `front` variable above
  // every monomial without one; `inner` is restricted to each block.
  static MonomialOrder elimination(const std::vector<bool>& front, const MonomialOrder& inner);

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  // The blocks with variable i renamed to mapping[i]; used to splice this
  // order into a larger ring.
  std::vector<Block> relabeled_blocks(const std::vector<std::size_t>& mapping) const;
  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
};

}  // namespace rees
