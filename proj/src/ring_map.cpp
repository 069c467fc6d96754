#include "rees/ring_map.hpp"

#include "rees/errors.hpp"

namespace rees {

Poly remap_variables(const Poly& p, const RingPtr& target, const std::vector<std::size_t>& index_map) {
  std::vector<Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m.set(index_map.at(i), t.mono[i]);
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

SubalgebraMembership::SubalgebraMembership(RingPtr ambient, std::vector<Poly> relations,
                                           std::vector<Poly> generators, RingPtr witness_ring,
                                           const GbOptions& options)
    : ambient_(std::move(ambient)),
      witness_ring_(std::move(witness_ring)),
      generators_(std::move(generators)),
      relations_(witness_ring_) {
  if (generators_.size() != witness_ring_->size())
    throw InvalidArgumentError("witness ring needs one variable per subalgebra generator");
  const std::size_t na = ambient_->size(), m = witness_ring_->size();
  std::vector<std::string> names = ambient_->names();
  for (const auto& n : witness_ring_->names()) names.push_back("#" + n);
  for (std::size_t i = 0; i < na; ++i) ambient_index_.push_back(i);
  for (std::size_t i = 0; i < m; ++i) witness_index_.push_back(na + i);
  back_index_.assign(na + m, 0);
  for (std::size_t i = 0; i < m; ++i) back_index_[na + i] = i;

  auto blocks = ambient_->order().relabeled_blocks(ambient_index_);
  auto wblocks = witness_ring_->order().relabeled_blocks(witness_index_);
  blocks.insert(blocks.end(), wblocks.begin(), wblocks.end());
  joint_ = Ring::make(std::move(names), MonomialOrder(std::move(blocks)));

  std::vector<Poly> gens;
  for (const auto& r : relations) {
    if (!r.ring()->same_as(*ambient_)) throw RingMismatchError("relation lies outside the ambient ring");
    gens.push_back(remap_variables(r, joint_, ambient_index_));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!generators_[i].ring()->same_as(*ambient_))
      throw RingMismatchError("subalgebra generator lies outside the ambient ring");
    gens.push_back(Poly::variable(joint_, na + i) - remap_variables(generators_[i], joint_, ambient_index_));
  }
  basis_ = buchberger(gens, joint_, options);

  std::vector<Poly> kernel;
  for (const auto& g : basis_) {
    auto sup = g.support();
    bool ambient_free = true;
    for (std::size_t i = 0; i < na; ++i)
      if (sup[i]) ambient_free = false;
    if (ambient_free) kernel.push_back(remap_variables(g, witness_ring_, back_index_));
  }
  relations_ = Ideal(witness_ring_, std::move(kernel), options);
}

std::optional<Poly> SubalgebraMembership::express(const Poly& element) const {
  if (!element.ring()->same_as(*ambient_)) throw RingMismatchError("element lies outside the ambient ring");
  Poly nf = normal_form(remap_variables(element, joint_, ambient_index_), basis_);
  auto sup = nf.support();
  for (std::size_t i = 0; i < ambient_->size(); ++i)
    if (sup[i]) return std::nullopt;
  return remap_variables(nf, witness_ring_, back_index_);
}

Ideal ringmap_kernel(const RingMap& map, const GbOptions& options) {
  if (map.images.size() != map.source->size())
    throw InvalidArgumentError("ring map needs one image per source variable");
  SubalgebraMembership sub(map.target, map.target_relations, map.images, map.source, options);
  return sub.relations();
}

std::optional<Poly> subalgebra_member(const Poly& element, const std::vector<Poly>& generators,
                                      const std::vector<Poly>& relations, const RingPtr& witness_ring,
                                      const GbOptions& options) {
  SubalgebraMembership sub(element.ring(), relations, generators, witness_ring, options);
  return sub.express(element);
}

}  // namespace rees
