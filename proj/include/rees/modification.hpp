#pragma once

#include <string>
#include <vector>

#include "rees/rees_algorithm.hpp"

namespace rees {

// Center I = (g_1..g_r) and divisor f for an equivariant affine modification.
struct ModificationInput {
  Derivation derivation;
  std::vector<Poly> ideal;
  Poly divisor;
};

struct InvariantReport {
  bool ok = true;
  bool divisor_in_ideal = true;
  bool divisor_invariant = true;
  std::vector<std::size_t> non_invariant_generators;  // i with ∂(g_i) ∉ I
  std::vector<std::string> messages;
};

InvariantReport check_invariants(const ModificationInput& input);

struct ModifyOptions {
  int bound = kDefaultNilpotencyBound;
  GbOptions gb;
};

// A' = A[I/f] presented over k[A-variables, t_1..t_r] with t_i = g_i/f.
struct ModificationOutput {
  QuotientAlgebra algebra;
  Derivation derivation;
  std::vector<std::string> new_variables;  // t_1..t_r
  std::vector<std::vector<Poly>> cofactors;  // ∂(g_i) = Σ_j cofactors[i][j]·g_j
};

// Throws InvalidArgumentError when the invariants fail and DerivationError or
// NilpotencyError when ∂' cannot be validated.
ModificationOutput modify(const ModificationInput& input, const ModifyOptions& options = {});

// A'[1/f] = A[1/f], compared inside k[A-variables, t, z] with z·f = 1.
bool localization_matches(const ModificationInput& input, const ModificationOutput& output,
                          const GbOptions& options = {});

struct LemmaCheck {
  bool holds = false;
  std::vector<Poly> center;  // homogeneous generators of J = I·R(A, ∂) in A[υ]
  std::vector<std::string> messages;
};

// Realizes R(A', ∂') and R(A, ∂)[J/f] inside R(A, ∂)_f and compares them by
// mutual subalgebra membership. Throws NonTerminationError when either Rees
// run does not stabilize.
LemmaCheck verify_rees_modification(const ModificationInput& input, const ReesOptions& options = {});

}  // namespace rees
