#include "rees/rees_presentation.hpp"

#include <algorithm>

#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

namespace rees {

bool generator_before(const GradedGenerator& a, const GradedGenerator& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.origin != b.origin) return a.origin < b.origin;
  return a.index < b.index;
}

void sort_generators(std::vector<GradedGenerator>& gens) { std::stable_sort(gens.begin(), gens.end(), generator_before); }

GradedGenerator upsilon_generator(const RingPtr& algebra_ring) {
  return {Poly::constant(algebra_ring, Rational(1)), 1, kUpsilonLabel, GeneratorOrigin::upsilon, 0};
}

RingPtr presentation_ring(const std::vector<GradedGenerator>& gens) {
  std::vector<std::string> names;
  std::vector<std::int64_t> w;
  for (const auto& g : gens) {
    names.push_back(g.label);
    w.push_back(g.weight);
  }
  return Ring::make(std::move(names), MonomialOrder::weighted_deglex(WeightVector(std::move(w))));
}

QuotientAlgebra upsilon_algebra(const QuotientAlgebra& a) {
  if (a.ring()->has(kUpsilonLabel)) throw InvalidArgumentError("'upsilon' is reserved and cannot be a ring variable");
  return a.adjoin({kUpsilonLabel});
}

std::shared_ptr<const SubalgebraMembership> rees_membership(const Derivation& d,
                                                            const std::vector<GradedGenerator>& gens,
                                                            const GbOptions& options) {
  QuotientAlgebra au = upsilon_algebra(d.algebra());
  const auto& ring = au.ring();
  const std::size_t ups = ring->require_index(kUpsilonLabel);
  std::vector<Poly> images;
  for (const auto& g : gens) {
    Poly e = g.element.in_ring(ring);
    if (g.origin == GeneratorOrigin::upsilon)
      images.push_back(Poly::variable(ring, ups));
    else
      images.push_back(e.times_term(Monomial::variable(ring->size(), ups, static_cast<unsigned>(g.weight)), Rational(1)));
  }
  return std::make_shared<SubalgebraMembership>(ring, au.relations(), std::move(images), presentation_ring(gens),
                                                options);
}

ReesPresentation::ReesPresentation(Derivation derivation, std::vector<GradedGenerator> gens, const GbOptions& options)
    : derivation_(std::move(derivation)), generators_(std::move(gens)) {
  sort_generators(generators_);
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i].label == generators_[j].label)
        throw InvalidArgumentError("duplicate generator label '" + generators_[i].label + "'");
  membership_ = rees_membership(derivation_, generators_, options);
}

ReesPresentation::ReesPresentation(Derivation derivation, std::vector<GradedGenerator> sorted_gens,
                                   std::shared_ptr<const SubalgebraMembership> membership)
    : derivation_(std::move(derivation)), generators_(std::move(sorted_gens)), membership_(std::move(membership)) {}

WeightVector ReesPresentation::weights() const {
  std::vector<std::int64_t> w;
  for (const auto& g : generators_) w.push_back(g.weight);
  return WeightVector(std::move(w));
}

std::size_t ReesPresentation::upsilon_index() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].origin == GeneratorOrigin::upsilon) return i;
  throw InconsistencyError("presentation has no upsilon generator");
}

Poly ReesPresentation::evaluate(const Poly& p) const {
  const auto& gens = membership_->generators();
  std::map<std::string, Poly> bindings;
  for (std::size_t i = 0; i < gens.size(); ++i) bindings.emplace(generators_[i].label, gens[i]);
  QuotientAlgebra au = upsilon_algebra(algebra());
  return au.reduce(substitute(p, bindings, au.ring()));
}

}  // namespace rees
