#include "rees/rees_algorithm.hpp"

#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

namespace rees {

Poly sigma(const Derivation& d, const Poly& a, int n) {
  if (n < 0) throw InvalidArgumentError("sigma needs a non-negative level");
  if (!in_filtration(d, a, n))
    throw InvalidArgumentError("sigma: " + a.to_string() + " is not in F_" + std::to_string(n));
  return divided_power(d, a, static_cast<unsigned>(n));
}

Ideal graded_kernel(const Derivation& d, const std::vector<GradedGenerator>& gens, const GbOptions& options) {
  const auto& a = d.algebra();
  QuotientAlgebra aw = a.adjoin({fresh_name(*a.ring(), "w")});
  const auto& ring = aw.ring();
  const std::size_t w = ring->size() - 1;
  std::vector<Poly> images;
  for (const auto& g : gens) {
    if (g.origin == GeneratorOrigin::upsilon) {
      images.push_back(Poly(ring));
      continue;
    }
    Poly s = sigma(d, g.element, g.weight).in_ring(ring);
    images.push_back(s.times_term(Monomial::variable(ring->size(), w, static_cast<unsigned>(g.weight)), Rational(1)));
  }
  return ringmap_kernel(RingMap{presentation_ring(gens), ring, aw.relations(), std::move(images)}, options);
}

Ideal presentation_relations(const Derivation& d, const std::vector<GradedGenerator>& gens,
                             const GbOptions& options) {
  return rees_membership(d, gens, options)->relations();
}

namespace {

std::string next_label(const Ring& algebra_ring, std::size_t& discovered) {
  for (;;) {
    std::string label = "g" + std::to_string(++discovered);
    if (!algebra_ring.has(label) && label != kUpsilonLabel) return label;
  }
}

Poly graded_element(const Poly& q, int weight, const RingPtr& au) {
  const std::size_t ups = au->require_index(kUpsilonLabel);
  return q.in_ring(au).times_term(Monomial::variable(au->size(), ups, static_cast<unsigned>(weight)), Rational(1));
}

}  // namespace

std::vector<GradedGenerator> initial_generators(const Derivation& d, int bound) {
  const auto& ring = d.ring();
  std::vector<GradedGenerator> gens;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    Poly x = d.algebra().reduce(Poly::variable(ring, i));
    gens.push_back({x, nil_degree(d, x, bound), ring->name(i), GeneratorOrigin::initial, i});
  }
  gens.push_back(upsilon_generator(ring));
  sort_generators(gens);
  return gens;
}

StepResult rees_step(const ReesState& state) {
  const Derivation& d = state.derivation;
  const auto& a = d.algebra();
  const auto& gens = state.generators;
  StepResult result;
  result.membership = rees_membership(d, gens, state.options.gb);
  const RingPtr au = result.membership->ambient();

  Ideal kernel = graded_kernel(d, gens, state.options.gb);
  std::map<std::string, Poly> at_one;
  for (const auto& g : gens) at_one.emplace(g.label, g.element);

  std::vector<std::size_t> survivors;
  for (const auto& q_poly : kernel.groebner_basis()) {
    CandidateRecord rec{q_poly, Poly(a.ring()), 0, CandidateVerdict::zero, {}};
    // φ(Q) = Q(1, a)·υ^N for homogeneous Q of weight N; dividing by υ leaves
    // Q(1, a)·υ^{N-1}, and Q(1, a) lies in F_{N-1}.
    Poly q = a.reduce(substitute(q_poly, at_one, a.ring()));
    if (!q.is_zero()) {
      q = q.monic();
      rec.element = q;
      rec.weight = nil_degree(d, q, state.options.bound);
      if (q.is_constant() || result.membership->contains(graded_element(q, rec.weight, au))) {
        rec.verdict = CandidateVerdict::member;
      } else {
        rec.verdict = CandidateVerdict::added;
        for (auto k : survivors)
          if (result.candidates[k].element == q && result.candidates[k].weight == rec.weight)
            rec.verdict = CandidateVerdict::duplicate;
        if (rec.verdict == CandidateVerdict::added) survivors.push_back(result.candidates.size());
      }
    }
    result.candidates.push_back(std::move(rec));
  }

  // Later survivors may already follow from earlier ones.
  std::vector<GradedGenerator> grown = gens;
  std::size_t discovered = state.discovered;
  for (std::size_t s = 0; s < survivors.size(); ++s) {
    auto& rec = result.candidates[survivors[s]];
    if (s > 0) {
      auto grown_membership = rees_membership(d, grown, state.options.gb);
      if (grown_membership->contains(graded_element(rec.element, rec.weight, au))) {
        rec.verdict = CandidateVerdict::member;
        continue;
      }
    }
    rec.label = next_label(*a.ring(), discovered);
    GradedGenerator g{rec.element, rec.weight, rec.label, GeneratorOrigin::discovered, discovered};
    result.added.push_back(g);
    grown.push_back(g);
    sort_generators(grown);
  }
  return result;
}

ReesResult rees_algorithm(const Derivation& d, const ReesOptions& options) {
  ReesResult result;
  ReesState state{d, initial_generators(d, options.bound), 0, options};
  int adding_iterations = 0;
  for (;;) {
    StepResult step = rees_step(state);
    IterationRecord rec;
    for (const auto& g : state.generators) rec.labels.push_back(g.label);
    rec.candidates = step.candidates;
    rec.added = step.added;
    rec.stable = step.added.empty();
    result.trace.iterations.push_back(std::move(rec));

    if (step.added.empty()) {
      result.status = ReesStatus::stabilized;
      result.presentation.emplace(d, state.generators, step.membership);
      result.last_generators = state.generators;
      return result;
    }
    if (adding_iterations >= options.max_iter) {
      result.status = ReesStatus::not_terminated;
      result.last_generators = state.generators;
      return result;
    }
    ++adding_iterations;
    state.discovered = step.added.back().index;
    for (auto& g : step.added) state.generators.push_back(std::move(g));
    sort_generators(state.generators);
  }
}

}  // namespace rees
