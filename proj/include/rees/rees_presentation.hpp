#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rees/derivation.hpp"
#include "rees/ring_map.hpp"

namespace rees {

inline constexpr const char* kUpsilonLabel = "upsilon";

enum class GeneratorOrigin { initial, discovered, upsilon };

// element·υ^weight, an element of R(A, ∂) ⊂ A[υ].
struct GradedGenerator {
  Poly element;
  int weight = 0;
  std::string label;
  GeneratorOrigin origin = GeneratorOrigin::initial;
  std::size_t index = 0;  // variable index for initial, discovery number for discovered
};

// Presentation order: by weight, then initial before discovered before υ,
// then index.
bool generator_before(const GradedGenerator& a, const GradedGenerator& b);
void sort_generators(std::vector<GradedGenerator>& gens);

GradedGenerator upsilon_generator(const RingPtr& algebra_ring);

// k[X_g : g ∈ gens] with variables named by label and the weighted deglex
// order for the generator weights. `gens` must already be sorted.
RingPtr presentation_ring(const std::vector<GradedGenerator>& gens);

// A[υ] with the relations of A.
QuotientAlgebra upsilon_algebra(const QuotientAlgebra& a);

// Membership in k[g·υ^weight : g ∈ gens] ⊂ A[υ], witnessed over
// presentation_ring(gens).
std::shared_ptr<const SubalgebraMembership> rees_membership(const Derivation& d,
                                                            const std::vector<GradedGenerator>& gens,
                                                            const GbOptions& options = {});

// Graded presentation k[X_0..X_m]/relations → R(A, ∂), X_i ↦ a_i·υ^{e(i)}.
class ReesPresentation {
 public:
  // Sorts `gens` and computes the relations.
  ReesPresentation(Derivation derivation, std::vector<GradedGenerator> gens, const GbOptions& options = {});
  ReesPresentation(Derivation derivation, std::vector<GradedGenerator> sorted_gens,
                   std::shared_ptr<const SubalgebraMembership> membership);

  const Derivation& derivation() const { return derivation_; }
  const QuotientAlgebra& algebra() const { return derivation_.algebra(); }
  const std::vector<GradedGenerator>& generators() const { return generators_; }
  const RingPtr& ring() const { return membership_->witness_ring(); }
  const Ideal& relations() const { return membership_->relations(); }
  WeightVector weights() const;
  std::size_t upsilon_index() const;
  const SubalgebraMembership& membership() const { return *membership_; }

  // Image of a presentation polynomial in A[υ].
  Poly evaluate(const Poly& p) const;

 private:
  Derivation derivation_;
  std::vector<GradedGenerator> generators_;
  std::shared_ptr<const SubalgebraMembership> membership_;
};

}  // namespace rees
