#include "rees/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rees/errors.hpp"

namespace rees {

namespace {

// Merges two strictly decreasing term lists, scaling the second by `factor`.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, const MonomialOrder& order,
                              const Rational& factor) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, b[j].coeff * factor});
      ++j;
    } else {
      Rational s = a[i].coeff + b[j].coeff * factor;
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, b[j].coeff * factor});
  return out;
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InvalidArgumentError("variable index out of range");
  Poly p(ring);
  p.terms_.push_back({Monomial::variable(ring->size(), index), Rational(1)});
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Poly Poly::term(RingPtr ring, Monomial m, Rational c) {
  if (m.size() != ring->size()) throw InvalidArgumentError("monomial has the wrong number of variables");
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.size() != p.ring_->size()) throw InvalidArgumentError("monomial has the wrong number of variables");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  const auto& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Rational Poly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

void Poly::check_same_ring(const Poly& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatchError("polynomials over different variable registries");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  check_same_ring(other);
  Poly r(ring_);
  r.terms_ = merge_terms(terms_, other.terms_, ring_->order(), Rational(1));
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  check_same_ring(other);
  Poly r(ring_);
  r.terms_ = merge_terms(terms_, other.terms_, ring_->order(), Rational(-1));
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  check_same_ring(other);
  if (is_zero() || other.is_zero()) return Poly(ring_);
  if (other.terms_.size() == 1) return times_term(other.terms_[0].mono, other.terms_[0].coeff);
  if (terms_.size() == 1) return other.times_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prods));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

std::vector<bool> Poly::support() const {
  std::vector<bool> s(ring_->size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (t.mono[i] != 0) s[i] = true;
  return s;
}

Monomial::Exponent Poly::degree_in(std::size_t var) const {
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (ring_->same_as(*target)) {
    Poly r(*this);
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map(ring_->size(), target->size());
  auto used = support();
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto j = target->index_of(ring_->name(i));
    if (j) {
      map[i] = *j;
    } else if (used[i]) {
      throw RingMismatchError("variable '" + ring_->name(i) + "' does not exist in the target ring");
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (t.mono[i] != 0) m.set(map[i], t.mono[i]);
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (t.mono.is_one() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

}  // namespace rees
