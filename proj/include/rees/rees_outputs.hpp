#pragma once

#include <string>
#include <vector>

#include "rees/rees_algorithm.hpp"

namespace rees {

// R/υR on the generators other than υ.
struct GradedAlgebra {
  RingPtr ring;
  Ideal relations;
  WeightVector weights;
  // gr(∂) of degree −1: images of the generators, as polynomials in `ring`.
  std::vector<Poly> derivation_images;
};

GradedAlgebra associated_graded(const ReesPresentation& pres);

struct UpsilonOneChart {
  RingPtr ring;
  Ideal relations;  // relations with υ ↦ 1
  bool isomorphic = false;
  std::vector<Poly> variable_witnesses;  // each A-variable in terms of the generators
};

// Sets υ = 1 and checks the result presents A: the specialized relations equal
// the kernel of X_i ↦ a_i and every variable of A lies in k[a_i].
UpsilonOneChart specialize_upsilon_one(const ReesPresentation& pres);

// Products of positive-weight generators (υ excluded) of total weight ≤ n,
// read in A; they generate F_n over F_0.
std::vector<Poly> degree_module_gens(const ReesPresentation& pres, int n);

std::vector<Poly> kernel_generators(const ReesPresentation& pres);

// Drops duplicates and every generator lying in the subalgebra generated by
// the rest, scanning from the last generator; υ is always kept.
ReesPresentation prune_generators(const ReesPresentation& pres);

std::string proj_report(const ReesPresentation& pres);

}  // namespace rees
