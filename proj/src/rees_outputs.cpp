#include "rees/rees_outputs.hpp"

#include <sstream>

#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

namespace rees {

namespace {

// The presentation ring without υ, same labels and weights.
RingPtr ring_without_upsilon(const ReesPresentation& pres) {
  std::vector<GradedGenerator> rest;
  for (const auto& g : pres.generators())
    if (g.origin != GeneratorOrigin::upsilon) rest.push_back(g);
  return presentation_ring(rest);
}

std::vector<Poly> specialize(const ReesPresentation& pres, const RingPtr& target, const Rational& value) {
  std::map<std::string, Poly> bind{{kUpsilonLabel, Poly::constant(target, value)}};
  std::vector<Poly> out;
  for (const auto& r : pres.relations().groebner_basis()) {
    Poly s = substitute(r, bind, target);
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

}  // namespace

GradedAlgebra associated_graded(const ReesPresentation& pres) {
  RingPtr ring = ring_without_upsilon(pres);
  Ideal relations(ring, specialize(pres, ring, Rational(0)), pres.relations().options());
  std::vector<std::int64_t> w;
  for (const auto& g : pres.generators())
    if (g.origin != GeneratorOrigin::upsilon) w.push_back(g.weight);

  // ∂(a·υ^e) = ∂(a)·υ^e = (∂(a)·υ^{e−1})·υ, so gr(∂) sends the class of a·υ^e
  // to the class of ∂(a)·υ^{e−1}.
  const Derivation& d = pres.derivation();
  const RingPtr au = pres.membership().ambient();
  const std::size_t ups = au->require_index(kUpsilonLabel);
  std::map<std::string, Poly> drop{{kUpsilonLabel, Poly(ring)}};
  std::vector<Poly> images;
  for (const auto& g : pres.generators()) {
    if (g.origin == GeneratorOrigin::upsilon) continue;
    if (g.weight == 0) {
      images.push_back(Poly(ring));
      continue;
    }
    Poly target = d.apply(g.element).in_ring(au).times_term(
        Monomial::variable(au->size(), ups, static_cast<unsigned>(g.weight - 1)), Rational(1));
    auto witness = pres.membership().express(target);
    if (!witness) throw InconsistencyError("derivative of generator " + g.label + " left the Rees algebra");
    images.push_back(relations.normal_form(substitute(*witness, drop, ring)));
  }
  return {ring, std::move(relations), WeightVector(std::move(w)), std::move(images)};
}

UpsilonOneChart specialize_upsilon_one(const ReesPresentation& pres) {
  RingPtr ring = ring_without_upsilon(pres);
  UpsilonOneChart chart{ring, Ideal(ring, specialize(pres, ring, Rational(1)), pres.relations().options()), false, {}};

  const auto& a = pres.algebra();
  std::vector<Poly> elements;
  for (const auto& g : pres.generators())
    if (g.origin != GeneratorOrigin::upsilon) elements.push_back(g.element);
  SubalgebraMembership back(a.ring(), a.relations(), elements, ring, pres.relations().options());

  bool generates = true;
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    auto w = back.express(Poly::variable(a.ring(), i));
    if (!w) {
      generates = false;
      break;
    }
    chart.variable_witnesses.push_back(*w);
  }
  chart.isomorphic = generates && ideal_equal(chart.relations, back.relations());
  return chart;
}

std::vector<Poly> degree_module_gens(const ReesPresentation& pres, int n) {
  if (n < 0) throw InvalidArgumentError("degree module level must be non-negative");
  const auto& a = pres.algebra();
  std::vector<const GradedGenerator*> pos;
  for (const auto& g : pres.generators())
    if (g.origin != GeneratorOrigin::upsilon && g.weight > 0) pos.push_back(&g);

  std::vector<Poly> out;
  std::vector<int> exps(pos.size(), 0);
  // Exponent vectors of weight exactly `target`, larger exponents on earlier
  // generators first.
  auto emit = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k == pos.size()) {
      if (remaining != 0) return;
      Poly p = a.constant(Rational(1));
      for (std::size_t j = 0; j < pos.size(); ++j) p *= pos[j]->element.pow(static_cast<unsigned>(exps[j]));
      out.push_back(a.reduce(p));
      return;
    }
    for (int e = remaining / pos[k]->weight; e >= 0; --e) {
      exps[k] = e;
      self(self, k + 1, remaining - e * pos[k]->weight);
    }
    exps[k] = 0;
  };
  for (int target = 0; target <= n; ++target) emit(emit, 0, target);
  return out;
}

std::vector<Poly> kernel_generators(const ReesPresentation& pres) {
  std::vector<Poly> out;
  for (const auto& g : pres.generators())
    if (g.origin != GeneratorOrigin::upsilon && g.weight == 0) out.push_back(g.element);
  return out;
}

ReesPresentation prune_generators(const ReesPresentation& pres) {
  const auto& options = pres.relations().options();
  std::vector<GradedGenerator> gens;
  for (const auto& g : pres.generators()) {
    bool dup = false;
    for (const auto& h : gens)
      if (h.weight == g.weight && h.element == g.element) dup = true;
    if (!dup) gens.push_back(g);
  }

  const RingPtr au = pres.membership().ambient();
  for (std::size_t k = gens.size(); k-- > 0;) {
    if (gens[k].origin == GeneratorOrigin::upsilon) continue;
    std::vector<GradedGenerator> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    auto membership = rees_membership(pres.derivation(), rest, options);
    const std::size_t ups = au->require_index(kUpsilonLabel);
    Poly target = gens[k].element.in_ring(au).times_term(
        Monomial::variable(au->size(), ups, static_cast<unsigned>(gens[k].weight)), Rational(1));
    if (membership->contains(target)) gens = std::move(rest);
  }

  ReesPresentation pruned(pres.derivation(), gens, options);
  for (const auto& image : pres.membership().generators())
    if (!pruned.membership().contains(image.in_ring(pruned.membership().ambient())))
      throw InconsistencyError("pruning changed the generated subalgebra");
  return pruned;
}

std::string proj_report(const ReesPresentation& pres) {
  std::ostringstream os;
  std::vector<std::string> base, coords;
  std::vector<int> weights;
  for (const auto& g : pres.generators()) {
    if (g.weight == 0) {
      base.push_back(g.label);
    } else {
      coords.push_back(g.label + ":" + std::to_string(g.weight));
      weights.push_back(g.weight);
    }
  }
  os << "ambient: P(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ") over k[";
  for (std::size_t i = 0; i < base.size(); ++i) os << (i ? ", " : "") << base[i];
  os << "]\n";
  os << "coordinates:";
  for (const auto& c : coords) os << " " << c;
  os << "\n";

  auto print_ideal = [&](const std::vector<Poly>& gens) {
    if (gens.empty()) os << "  0\n";
    for (const auto& g : gens) os << "  " << g.to_string() << "\n";
  };
  os << "relations:\n";
  print_ideal(pres.relations().groebner_basis());
  GradedAlgebra gr = associated_graded(pres);
  os << "boundary (upsilon = 0):\n";
  print_ideal(gr.relations.groebner_basis());
  UpsilonOneChart chart = specialize_upsilon_one(pres);
  os << "chart (upsilon = 1):\n";
  print_ideal(chart.relations.groebner_basis());
  return os.str();
}

}  // namespace rees
