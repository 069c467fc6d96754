#include "rees/modification.hpp"

#include <set>

#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

namespace rees {

namespace {

Ideal center_ideal(const ModificationInput& input) {
  const auto& a = input.derivation.algebra();
  std::vector<Poly> gens = input.ideal;
  for (const auto& r : a.relations()) gens.push_back(r);
  return Ideal(a.ring(), std::move(gens), a.options());
}

std::vector<std::string> fresh_names(const Ring& ring, std::string stem, std::size_t count) {
  for (;;) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= count; ++i) {
      names.push_back(stem + std::to_string(i));
      if (ring.has(names.back()) || names.back() == kUpsilonLabel) clash = true;
    }
    if (!clash) return names;
    stem += stem.front();
  }
}

RingPtr numbered_ring(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return Ring::make(std::move(names));
}

// A[z]/(I_A, z·f − 1), plus υ when requested.
QuotientAlgebra localized(const QuotientAlgebra& a, const Poly& f, const std::string& z, bool with_upsilon) {
  std::vector<std::string> extra{z};
  if (with_upsilon) extra.push_back(kUpsilonLabel);
  QuotientAlgebra base = a.adjoin(extra);
  std::vector<Poly> rels = base.relations();
  rels.push_back(Poly::variable(base.ring(), z) * f.in_ring(base.ring()) - Poly::constant(base.ring(), Rational(1)));
  return QuotientAlgebra(base.ring(), std::move(rels), a.options());
}

}  // namespace

InvariantReport check_invariants(const ModificationInput& input) {
  InvariantReport report;
  const Derivation& d = input.derivation;
  const auto& a = d.algebra();
  Ideal ideal = center_ideal(input);
  if (!ideal.contains(input.divisor)) {
    report.divisor_in_ideal = false;
    report.messages.push_back("divisor " + input.divisor.to_string() + " is not in the center ideal");
  }
  if (!a.is_zero(d.apply(input.divisor))) {
    report.divisor_invariant = false;
    report.messages.push_back("divisor " + input.divisor.to_string() + " is not invariant: derivative " +
                              d.apply(input.divisor).to_string());
  }
  for (std::size_t i = 0; i < input.ideal.size(); ++i) {
    Poly image = d.apply(input.ideal[i]);
    if (!ideal.contains(image)) {
      report.non_invariant_generators.push_back(i);
      report.messages.push_back("derivative " + image.to_string() + " of generator " + input.ideal[i].to_string() +
                                " leaves the center ideal");
    }
  }
  report.ok = report.divisor_in_ideal && report.divisor_invariant && report.non_invariant_generators.empty();
  return report;
}

ModificationOutput modify(const ModificationInput& input, const ModifyOptions& options) {
  InvariantReport report = check_invariants(input);
  if (!report.ok) throw InvalidArgumentError(report.messages.front());
  const Derivation& d = input.derivation;
  const auto& a = d.algebra();
  const auto& aring = a.ring();
  const std::size_t n = aring->size(), r = input.ideal.size();

  std::vector<std::string> ts = fresh_names(*aring, "t", r);
  std::vector<std::string> names = aring->names();
  names.insert(names.end(), ts.begin(), ts.end());
  RingPtr source = Ring::make(names);

  QuotientAlgebra target = localized(a, input.divisor, fresh_name(*source, "z"), false);
  const auto& tring = target.ring();
  const Poly z = Poly::variable(tring, tring->size() - 1);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(tring, i));
  for (const auto& g : input.ideal) images.push_back(g.in_ring(tring) * z);
  Ideal kernel = ringmap_kernel(RingMap{source, tring, target.relations(), std::move(images)}, options.gb);
  QuotientAlgebra modified(source, kernel.groebner_basis(), options.gb);

  std::vector<Poly> lift_gens = input.ideal;
  for (const auto& rel : a.relations()) lift_gens.push_back(rel);
  std::vector<std::vector<Poly>> cofactors;
  std::vector<Poly> dimages;
  for (std::size_t i = 0; i < n; ++i) dimages.push_back(d.image(i).in_ring(source));
  for (std::size_t i = 0; i < r; ++i) {
    auto c = lift_combination(d.apply(input.ideal[i]), lift_gens, options.gb);
    if (!c) throw InconsistencyError("invariant generator has no lift");
    c->resize(r, Poly(aring));
    Poly image(source);
    for (std::size_t j = 0; j < r; ++j) image += (*c)[j].in_ring(source) * Poly::variable(source, n + j);
    dimages.push_back(image);
    cofactors.push_back(std::move(*c));
  }
  Derivation dd(modified, std::move(dimages));
  DerivationCheck check = check_derivation(dd);
  if (!check.well_defined)
    throw DerivationError("induced derivation does not preserve " + check.offending_relation->to_string());
  NilpotencyReport nil = is_locally_nilpotent(dd, options.bound);
  if (!nil.locally_nilpotent) {
    for (std::size_t i = 0; i < nil.variable_degrees.size(); ++i)
      if (!nil.variable_degrees[i]) throw NilpotencyError(source->name(i), options.bound);
  }
  return {std::move(modified), std::move(dd), std::move(ts), std::move(cofactors)};
}

bool localization_matches(const ModificationInput& input, const ModificationOutput& output, const GbOptions& options) {
  const auto& mod = output.algebra;
  QuotientAlgebra loc = localized(mod, input.divisor.in_ring(mod.ring()), fresh_name(*mod.ring(), "z"), false);
  const auto& ring = loc.ring();
  const auto& a = input.derivation.algebra();
  const Poly z = Poly::variable(ring, ring->size() - 1);
  std::vector<Poly> rhs;
  for (const auto& rel : a.relations()) rhs.push_back(rel.in_ring(ring));
  rhs.push_back(z * input.divisor.in_ring(ring) - Poly::constant(ring, Rational(1)));
  for (std::size_t i = 0; i < output.new_variables.size(); ++i)
    rhs.push_back(Poly::variable(ring, output.new_variables[i]) - input.ideal[i].in_ring(ring) * z);
  return ideal_equal(Ideal(ring, loc.relations(), options), Ideal(ring, std::move(rhs), options));
}

LemmaCheck verify_rees_modification(const ModificationInput& input, const ReesOptions& options) {
  LemmaCheck out;
  const Derivation& d = input.derivation;
  const auto& a = d.algebra();
  ModificationOutput mod = modify(input, {options.bound, options.gb});

  ReesResult base = rees_algorithm(d, options);
  if (base.status != ReesStatus::stabilized) throw NonTerminationError("Rees algorithm on A did not stabilize");
  ReesResult lifted = rees_algorithm(mod.derivation, options);
  if (lifted.status != ReesStatus::stabilized) throw NonTerminationError("Rees algorithm on A[I/f] did not stabilize");
  const ReesPresentation& r1 = *base.presentation;
  const ReesPresentation& r2 = *lifted.presentation;

  // J = I·R(A, ∂) = R ∩ I·A[υ], the preimage of I·A[υ] under the presentation.
  const RingPtr au = r1.membership().ambient();
  std::vector<Poly> quotient_rels;
  for (const auto& rel : a.relations()) quotient_rels.push_back(rel.in_ring(au));
  for (const auto& g : input.ideal) quotient_rels.push_back(g.in_ring(au));
  Ideal j_pre = ringmap_kernel(RingMap{r1.ring(), au, quotient_rels, r1.membership().generators()}, options.gb);
  for (const auto& g : j_pre.groebner_basis()) {
    Poly image = r1.evaluate(g);
    if (!image.is_zero()) out.center.push_back(image);
  }

  const std::string z = fresh_name(*mod.algebra.ring(), "z");
  QuotientAlgebra common = localized(a, input.divisor, z, true);
  const auto& cring = common.ring();
  const Poly zp = Poly::variable(cring, z);

  std::vector<Poly> s1;
  for (const auto& g : r1.membership().generators()) s1.push_back(g.in_ring(cring));
  for (const auto& c : out.center) s1.push_back(c.in_ring(cring) * zp);

  std::map<std::string, Poly> t_images;
  for (std::size_t i = 0; i < mod.new_variables.size(); ++i)
    t_images.emplace(mod.new_variables[i], input.ideal[i].in_ring(cring) * zp);
  std::vector<Poly> s2;
  for (const auto& g : r2.membership().generators()) s2.push_back(common.reduce(substitute(g, t_images, cring)));

  SubalgebraMembership m1(cring, common.relations(), s1, numbered_ring("s", s1.size()), options.gb);
  SubalgebraMembership m2(cring, common.relations(), s2, numbered_ring("s", s2.size()), options.gb);
  out.holds = true;
  for (std::size_t i = 0; i < s2.size(); ++i)
    if (!m1.contains(s2[i])) {
      out.holds = false;
      out.messages.push_back("generator " + r2.generators()[i].label + " of R(A[I/f]) is not in R(A)[J/f]");
    }
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (!m2.contains(s1[i])) {
      out.holds = false;
      out.messages.push_back("generator " + s1[i].to_string() + " of R(A)[J/f] is not in R(A[I/f])");
    }
  return out;
}

}  // namespace rees
