#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/rational.hpp"
#include "rees/ring.hpp"

namespace rees {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial with rational coefficients.
//
// Terms are stored strictly decreasing in the ring's monomial order with no
// zero coefficients, so structural equality is polynomial equality.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly term(RingPtr ring, Monomial m, Rational c);
  // Arbitrary order, duplicates allowed; combined and sorted here.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Coefficient of the empty monomial.
  Rational constant_coeff() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly scaled(const Rational& c) const;
  Poly times_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned k) const;
  // Divided by its leading coefficient; zero stays zero.
  Poly monic() const;

  bool involves(std::size_t var) const;
  std::vector<bool> support() const;
  Monomial::Exponent degree_in(std::size_t var) const;
  std::uint64_t total_degree() const;

  // Re-expresses the polynomial in `target` by variable name. Every variable
  // that occurs must exist in `target`.
  Poly in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_same_ring(const Poly& other) const;
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }

}  // namespace rees
