#include "rees/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace rees {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  exps_[i] = e;
  refresh();
}

void Monomial::refresh() {
  mask_ = 0;
  degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) {
      mask_ |= std::uint64_t{1} << (i % 64);
      degree_ += exps_[i];
    }
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime_slow(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  assert(exps_.size() == other.exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  mask_ |= other.mask_;
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::quotient_of(const Monomial& dividend) const {
  Monomial r(dividend);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

}  // namespace rees
