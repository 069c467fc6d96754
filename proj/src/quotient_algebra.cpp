#include "rees/quotient_algebra.hpp"

#include "rees/errors.hpp"

namespace rees {

QuotientAlgebra::QuotientAlgebra(RingPtr ring, std::vector<Poly> relations, GbOptions options)
    : ring_(ring), ideal_(std::move(ring), std::move(relations), options) {}

void QuotientAlgebra::set_weights(WeightVector w) {
  if (w.size() != ring_->size()) throw InvalidArgumentError("weight vector length differs from the number of variables");
  weights_ = std::move(w);
}

QuotientAlgebra QuotientAlgebra::adjoin(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = ring_->names();
  const std::size_t n = names.size();
  std::vector<std::size_t> old_index(n);
  for (std::size_t i = 0; i < n; ++i) old_index[i] = i;
  auto blocks = ring_->order().relabeled_blocks(old_index);
  MonomialOrder::Block tail;
  for (const auto& e : extra) {
    if (ring_->has(e)) throw InvalidArgumentError("variable '" + e + "' already exists");
    tail.vars.push_back(names.size());
    tail.weights.push_back(1);
    names.push_back(e);
  }
  if (!tail.vars.empty()) blocks.push_back(std::move(tail));
  auto ring = Ring::make(std::move(names), MonomialOrder(std::move(blocks)));
  std::vector<Poly> rels;
  for (const auto& r : relations()) rels.push_back(r.in_ring(ring));
  return QuotientAlgebra(ring, std::move(rels), options());
}

}  // namespace rees
