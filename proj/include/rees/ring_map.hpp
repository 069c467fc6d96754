#pragma once

#include <optional>
#include <vector>

#include "rees/ideal.hpp"
#include "rees/poly.hpp"

namespace rees {

// k[source] → k[target]/(target_relations), source variable i ↦ images[i].
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Poly> target_relations;
  std::vector<Poly> images;
};

Ideal ringmap_kernel(const RingMap& map, const GbOptions& options = {});

// Copies p into `target`, sending variable i to variable index_map[i].
Poly remap_variables(const Poly& p, const RingPtr& target, const std::vector<std::size_t>& index_map);

// Membership in the subalgebra k[g_1, ..., g_m] of k[ambient]/(relations).
// One Gröbner basis over the joint ring k[ambient, T_1..T_m] (ambient
// variables eliminated first, T_i − g_i adjoined) answers both questions:
// its ambient-free part is the relation ideal, and an element lies in the
// subalgebra exactly when its normal form is ambient-free, in which case that
// normal form is a witness.
class SubalgebraMembership {
 public:
  SubalgebraMembership(RingPtr ambient, std::vector<Poly> relations, std::vector<Poly> generators,
                       RingPtr witness_ring, const GbOptions& options = {});

  const RingPtr& ambient() const { return ambient_; }
  const RingPtr& witness_ring() const { return witness_ring_; }
  const std::vector<Poly>& generators() const { return generators_; }

  // Polynomial W over the witness ring with W(g) = element modulo relations.
  std::optional<Poly> express(const Poly& element) const;
  bool contains(const Poly& element) const { return express(element).has_value(); }

  // Kernel of T_i ↦ g_i, as an ideal of the witness ring.
  const Ideal& relations() const { return relations_; }

 private:
  RingPtr ambient_;
  RingPtr witness_ring_;
  std::vector<Poly> generators_;
  RingPtr joint_;
  std::vector<std::size_t> ambient_index_, witness_index_, back_index_;
  std::vector<Poly> basis_;
  Ideal relations_;
};

std::optional<Poly> subalgebra_member(const Poly& element, const std::vector<Poly>& generators,
                                      const std::vector<Poly>& relations, const RingPtr& witness_ring,
                                      const GbOptions& options = {});

}  // namespace rees
