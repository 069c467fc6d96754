#include "rees/derivation.hpp"

#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

namespace rees {

Derivation::Derivation(QuotientAlgebra algebra, std::vector<Poly> images) : algebra_(std::move(algebra)) {
  const auto& ring = algebra_.ring();
  if (images.size() != ring->size()) throw InvalidArgumentError("derivation needs one image per variable");
  images_.reserve(images.size());
  for (auto& im : images) {
    if (!im.ring()->same_as(*ring)) throw RingMismatchError("derivation image lies in another ring");
    images_.push_back(algebra_.reduce(im));
  }
}

Derivation Derivation::zero(QuotientAlgebra algebra) {
  std::vector<Poly> images(algebra.ring()->size(), Poly(algebra.ring()));
  return Derivation(std::move(algebra), std::move(images));
}

Poly Derivation::apply(const Poly& a) const {
  const auto& ring = algebra_.ring();
  if (!a.ring()->same_as(*ring)) throw RingMismatchError("derivation applied to a polynomial from another ring");
  Poly out(ring);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (images_[i].is_zero() || !a.involves(i)) continue;
    out += partial_derivative(a, i) * images_[i];
  }
  return algebra_.reduce(out);
}

Poly Derivation::iterate(const Poly& a, unsigned k) const {
  Poly cur = algebra_.reduce(a);
  for (unsigned j = 0; j < k && !cur.is_zero(); ++j) cur = apply(cur);
  return cur;
}

Derivation Derivation::extend_to(const QuotientAlgebra& bigger) const {
  const auto& big = bigger.ring();
  std::vector<Poly> images(big->size(), Poly(big));
  for (std::size_t i = 0; i < ring()->size(); ++i) images[big->require_index(ring()->name(i))] = images_[i].in_ring(big);
  return Derivation(bigger, std::move(images));
}

DerivationCheck check_derivation(const Derivation& d) {
  DerivationCheck report;
  for (const auto& g : d.algebra().relations()) {
    Poly image = d.apply(g);
    if (!image.is_zero()) {
      report.well_defined = false;
      report.offending_relation = g;
      report.offending_image = image;
      break;
    }
  }
  return report;
}

int nil_degree(const Derivation& d, const Poly& a, int bound) {
  Poly cur = d.algebra().reduce(a);
  for (int n = 0; n <= bound; ++n) {
    cur = d.apply(cur);
    if (cur.is_zero()) return n;
  }
  throw NilpotencyError(a.to_string(), bound);
}

NilpotencyReport is_locally_nilpotent(const Derivation& d, int bound) {
  NilpotencyReport report;
  report.bound = bound;
  for (std::size_t i = 0; i < d.ring()->size(); ++i) {
    try {
      report.variable_degrees.push_back(nil_degree(d, Poly::variable(d.ring(), i), bound));
    } catch (const NilpotencyError&) {
      report.variable_degrees.push_back(std::nullopt);
      report.locally_nilpotent = false;
    }
  }
  return report;
}

bool in_filtration(const Derivation& d, const Poly& a, int n) {
  if (n < 0) throw InvalidArgumentError("filtration level must be non-negative");
  return d.iterate(a, static_cast<unsigned>(n) + 1).is_zero();
}

Poly divided_power(const Derivation& d, const Poly& a, unsigned i) {
  return d.iterate(a, i).scaled(Rational(1) / factorial(i));
}

Poly exp_t(const Derivation& d, const Poly& a, const std::string& parameter, int bound) {
  if (d.ring()->has(parameter))
    throw InvalidArgumentError("parameter '" + parameter + "' clashes with a ring variable");
  QuotientAlgebra at = d.algebra().adjoin({parameter});
  const auto& ring = at.ring();
  const std::size_t t = ring->require_index(parameter);
  Poly out(ring);
  Poly cur = d.algebra().reduce(a);
  for (int i = 0; !cur.is_zero(); ++i) {
    if (i > bound) throw NilpotencyError(a.to_string(), bound);
    Rational c = Rational(1) / factorial(static_cast<unsigned>(i));
    out += cur.in_ring(ring).times_term(Monomial::variable(ring->size(), t, static_cast<unsigned>(i)), c);
    cur = d.apply(cur);
  }
  return out;
}

}  // namespace rees
