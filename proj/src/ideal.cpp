#include "rees/ideal.hpp"

#include <algorithm>

#include "rees/errors.hpp"

namespace rees {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators, GbOptions options)
    : ring_(std::move(ring)), options_(options), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatchError("ideal generator lies in another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(generators_, ring_, options_); });
  return cache_->basis;
}

Poly Ideal::normal_form(const Poly& p) const {
  if (!p.ring()->same_as(*ring_)) throw RingMismatchError("normal form of a polynomial from another ring");
  return rees::normal_form(p, groebner_basis());
}

bool Ideal::contains(const Poly& p) const { return normal_form(p).is_zero(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return generators_.empty(); }

Ideal Ideal::operator+(const Ideal& other) const {
  if (!other.ring_->same_as(*ring_)) throw RingMismatchError("sum of ideals in different rings");
  return with(other.generators_);
}

Ideal Ideal::with(const std::vector<Poly>& extra) const {
  std::vector<Poly> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens), options_);
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += generators_[k].to_string();
  }
  return out + ")";
}

bool ideal_member(const Poly& p, const Ideal& ideal) { return ideal.contains(p); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatchError("comparing ideals in different rings");
  return a.groebner_basis() == b.groebner_basis();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const Ring& ring = *ideal.ring();
  std::vector<bool> front(ring.size(), false);
  for (const auto& name : drop) front[ring.require_index(name)] = true;
  auto elim_ring = Ring::make(ring.names(), MonomialOrder::elimination(front, ring.order()));
  auto gb = buchberger(ideal.generators(), elim_ring, ideal.options());
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    auto sup = g.support();
    bool uses_dropped = false;
    for (std::size_t i = 0; i < sup.size(); ++i)
      if (sup[i] && front[i]) uses_dropped = true;
    if (!uses_dropped) kept.push_back(g.in_ring(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(kept), ideal.options());
}

}  // namespace rees
