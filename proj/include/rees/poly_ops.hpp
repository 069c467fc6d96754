#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rees/monomial_order.hpp"
#include "rees/poly.hpp"

namespace rees {

// Weighted degree with a distinguished −∞ for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;  // −∞
  constexpr explicit Degree(std::int64_t value) : value_(value) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  // Precondition: is_finite().
  constexpr std::int64_t value() const { return *value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.is_finite() || !b.is_finite()) return Degree();
    return Degree(*a.value_ + *b.value_);
  }
  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.is_finite()) return b.is_finite() ? std::strong_ordering::less : std::strong_ordering::equal;
    if (!b.is_finite()) return std::strong_ordering::greater;
    return *a.value_ <=> *b.value_;
  }
  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "-inf"; }

 private:
  std::optional<std::int64_t> value_;
};

Degree weighted_degree(const Poly& p, const WeightVector& w);
bool is_homogeneous(const Poly& p, const WeightVector& w);

// Pads each term with powers of `hvar` up to the top weighted degree.
// Requires w[hvar] == 1 and that `hvar` does not occur in p.
Poly homogenize(const Poly& p, const WeightVector& w, std::size_t hvar);

// Replaces bound variables by the given polynomials (over `target`); unbound
// variables are carried over to `target` by name.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings, const RingPtr& target);
// Same-ring convenience.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);

Poly partial_derivative(const Poly& p, std::size_t var);

// Terms of weighted degree exactly d.
Poly homogeneous_component(const Poly& p, const WeightVector& w, std::int64_t d);

}  // namespace rees
