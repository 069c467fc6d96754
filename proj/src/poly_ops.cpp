#include "rees/poly_ops.hpp"

#include <algorithm>

#include "rees/errors.hpp"

namespace rees {

Degree weighted_degree(const Poly& p, const WeightVector& w) {
  if (w.size() != p.ring()->size()) throw InvalidArgumentError("weight vector has the wrong length");
  Degree d;
  for (const auto& t : p.terms()) d = std::max(d, Degree(w.degree(t.mono)));
  return d;
}

bool is_homogeneous(const Poly& p, const WeightVector& w) {
  if (w.size() != p.ring()->size()) throw InvalidArgumentError("weight vector has the wrong length");
  if (p.is_zero()) return true;
  auto d = w.degree(p.terms()[0].mono);
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return w.degree(t.mono) == d; });
}

Poly homogenize(const Poly& p, const WeightVector& w, std::size_t hvar) {
  if (hvar >= p.ring()->size()) throw InvalidArgumentError("homogenizing variable out of range");
  if (w[hvar] != 1) throw InvalidArgumentError("homogenizing variable must have weight 1");
  if (p.involves(hvar))
    throw InvalidArgumentError("homogenizing variable '" + p.ring()->name(hvar) + "' occurs in the polynomial");
  auto top = weighted_degree(p, w);
  if (!top.is_finite()) return p;
  std::vector<Term> out;
  out.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(hvar, static_cast<Monomial::Exponent>(top.value() - w.degree(t.mono)));
    out.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(p.ring(), std::move(out));
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings, const RingPtr& target) {
  const auto& src = *p.ring();
  for (const auto& [name, image] : bindings) {
    if (!src.has(name)) throw InvalidArgumentError("substitution binds unknown variable '" + name + "'");
    if (!image.ring()->same_as(*target))
      throw RingMismatchError("substitution image for '" + name + "' is not over the target ring");
  }
  std::vector<Poly> images;
  images.reserve(src.size());
  auto used = p.support();
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = bindings.find(src.name(i));
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (auto j = target->index_of(src.name(i))) {
      images.push_back(Poly::variable(target, *j));
    } else if (used[i]) {
      throw RingMismatchError("unbound variable '" + src.name(i) + "' does not exist in the target ring");
    } else {
      images.push_back(Poly(target));
    }
  }
  // Cache powers per variable; exponents in fixture-scale inputs are small.
  std::vector<std::vector<Poly>> powers(src.size());
  auto power = [&](std::size_t var, Monomial::Exponent e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size() && !term.is_zero(); ++i)
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  return substitute(p, bindings, p.ring());
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.coeff * e});
  }
  return Poly::from_terms(p.ring(), std::move(out));
}

Poly homogeneous_component(const Poly& p, const WeightVector& w, std::int64_t d) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (w.degree(t.mono) == d) out.push_back(t);
  return Poly::from_terms(p.ring(), std::move(out));
}

}  // namespace rees
