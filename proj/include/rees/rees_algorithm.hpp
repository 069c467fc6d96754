#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/rees_presentation.hpp"

namespace rees {

struct ReesOptions {
  int max_iter = 32;  // iterations allowed to add generators
  int bound = kDefaultNilpotencyBound;
  GbOptions gb;
};

// σ(a, n) = ∂^n(a)/n! for a ∈ F_n; the image of a·υ^n in gr.
Poly sigma(const Derivation& d, const Poly& a, int n);

// φ^{-1}(υR) for φ: X_0 ↦ υ, X_i ↦ a_i·υ^{e(i)}, as the kernel of
// τ: X_0 ↦ 0, X_i ↦ σ(a_i, e(i))·w^{e(i)} into A[w]. `gens` must be sorted.
Ideal graded_kernel(const Derivation& d, const std::vector<GradedGenerator>& gens, const GbOptions& options = {});

enum class CandidateVerdict { zero, member, duplicate, added };

struct CandidateRecord {
  Poly q_polynomial;  // Q_j over the presentation ring
  Poly element;       // monic q_j in A (zero when discarded as zero)
  int weight = 0;     // nil-degree of q_j
  CandidateVerdict verdict = CandidateVerdict::zero;
  std::string label;  // set when added
};

struct ReesState {
  Derivation derivation;
  std::vector<GradedGenerator> generators;  // sorted
  std::size_t discovered = 0;
  ReesOptions options;
};

struct StepResult {
  std::vector<CandidateRecord> candidates;
  std::vector<GradedGenerator> added;
  // Membership for the generators at the start of the step.
  std::shared_ptr<const SubalgebraMembership> membership;
};

StepResult rees_step(const ReesState& state);

struct IterationRecord {
  std::vector<std::string> labels;  // generators at the start of the iteration
  std::vector<CandidateRecord> candidates;
  std::vector<GradedGenerator> added;
  bool stable = false;
};

struct AlgorithmTrace {
  std::vector<IterationRecord> iterations;
};

enum class ReesStatus { stabilized, not_terminated };

struct ReesResult {
  ReesStatus status = ReesStatus::not_terminated;
  std::optional<ReesPresentation> presentation;
  AlgorithmTrace trace;
  std::vector<GradedGenerator> last_generators;
};

// Initial generators x_i·υ^{nil_degree(x_i)} together with υ.
std::vector<GradedGenerator> initial_generators(const Derivation& d, int bound = kDefaultNilpotencyBound);

ReesResult rees_algorithm(const Derivation& d, const ReesOptions& options = {});

// Kernel of X_g ↦ g·υ^weight into A[υ]. `gens` must be sorted.
Ideal presentation_relations(const Derivation& d, const std::vector<GradedGenerator>& gens,
                             const GbOptions& options = {});

}  // namespace rees
