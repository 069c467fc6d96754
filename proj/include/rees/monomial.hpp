#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rees {

// Dense exponent vector over a ring's variables.
//
// The divisibility mask (bit i set iff variable i mod 64 occurs) and the
// total degree are cached so that the hot paths of reduction can reject
// non-divisors without touching the exponents.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0 || coprime_slow(other); }

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  // Precondition: divides(other) holds for *this as divisor.
  Monomial quotient_of(const Monomial& dividend) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  void refresh();
  bool coprime_slow(const Monomial& other) const;

  std::vector<Exponent> exps_;
  std::uint64_t mask_ = 0;
  std::uint64_t degree_ = 0;
};

}  // namespace rees
