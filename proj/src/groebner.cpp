#include "rees/groebner.hpp"

#include <algorithm>
#include <optional>

#include "rees/errors.hpp"

namespace rees {

namespace {

// h[from:] − c·m·g[1:], both strictly decreasing.
std::vector<Term> subtract_multiple(const std::vector<Term>& h, std::size_t from, const Poly& g, const Monomial& m,
                                    const Rational& c, const MonomialOrder& order) {
  auto gt = g.terms();
  std::vector<Term> out;
  out.reserve(h.size() - from + gt.size());
  std::size_t i = from, j = 1;
  while (i < h.size() && j < gt.size()) {
    Monomial mj = gt[j].mono * m;
    int cmp = order.compare(h[i].mono, mj);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(mj), -(gt[j].coeff * c)});
      ++j;
    } else {
      Rational s = h[i].coeff - gt[j].coeff * c;
      if (s != 0) out.push_back({h[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < gt.size(); ++j) out.push_back({gt[j].mono * m, -(gt[j].coeff * c)});
  return out;
}

const Poly* find_divisor(const Monomial& m, const std::vector<const Poly*>& divisors) {
  for (const Poly* g : divisors)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

Poly reduce(const Poly& p, const std::vector<const Poly*>& divisors) {
  const auto& order = p.ring()->order();
  std::vector<Term> h(p.terms().begin(), p.terms().end());
  std::vector<Term> rest;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& lt = h[pos];
    const Poly* g = find_divisor(lt.mono, divisors);
    if (!g) {
      rest.push_back(lt);
      ++pos;
      continue;
    }
    Monomial q = g->leading_monomial().quotient_of(lt.mono);
    Rational c = lt.coeff / g->leading_coeff();
    h = subtract_multiple(h, pos + 1, *g, q, c, order);
    pos = 0;
  }
  return Poly::from_terms(p.ring(), std::move(rest));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  auto da = a.lcm.total_degree(), db = b.lcm.total_degree();
  if (da != db) return da < db;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GbOptions& options) : ring_(std::move(ring)), options_(options) {}

  void add_generator(const Poly& g) {
    Poly h = reduce(g, active_divisors());
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      Pair p = std::move(*it);
      pairs_.erase(it);
      if (++processed > options_.max_pairs) throw ResourceBudgetError(options_.max_pairs);
      Poly h = reduce(s_polynomial(polys_[p.i], polys_[p.j]), active_divisors());
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      Poly lead = Poly::term(ring_, minimal[k].leading_monomial(), minimal[k].leading_coeff());
      Poly tail = reduce(minimal[k] - lead, others);
      out.push_back((lead + tail).monic());
    }
    const auto& order = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  std::vector<const Poly*> active_divisors() const {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer–Möller update for a new basis element h.
  void insert(Poly h) {
    const std::size_t hi = polys_.size();
    const Monomial hlm = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back(k);
    std::vector<Monomial> lcms;
    lcms.reserve(candidates.size());
    for (auto k : candidates) lcms.push_back(hlm.lcm(polys_[k].leading_monomial()));

    std::vector<std::size_t> kept;  // positions in `candidates`
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = hlm.coprime(polys_[candidates[a]].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (lcms[b].divides(lcms[a])) keep = false;
        for (std::size_t b : kept)
          if (keep && lcms[b].divides(lcms[a])) keep = false;
      }
      if (keep) kept.push_back(a);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = hlm.divides(p.lcm) && hlm.lcm(polys_[p.i].leading_monomial()) != p.lcm &&
                  hlm.lcm(polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto a : kept) {
      if (hlm.coprime(polys_[candidates[a]].leading_monomial())) continue;
      next.push_back({candidates[a], hi, lcms[a]});
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && hlm.divides(polys_[k].leading_monomial())) active_[k] = false;
    active_[hi] = true;
  }

  RingPtr ring_;
  GbOptions options_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
  if (!f.ring()->same_as(*g.ring())) throw RingMismatchError("S-polynomial of polynomials over different rings");
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly a = f.times_term(f.leading_monomial().quotient_of(l), Rational(1) / f.leading_coeff());
  Poly b = g.times_term(g.leading_monomial().quotient_of(l), Rational(1) / g.leading_coeff());
  return a - b;
}

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const RingPtr& ring, const GbOptions& options) {
  Buchberger engine(ring, options);
  for (const auto& g : gens) {
    Poly mapped = g.in_ring(ring);
    if (!mapped.is_zero()) engine.add_generator(mapped);
  }
  engine.run();
  return engine.reduced_basis();
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors) {
  std::vector<const Poly*> ptrs;
  ptrs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!d.ring()->same_as(*p.ring())) throw RingMismatchError("normal form against a basis over another ring");
    if (!d.is_zero()) ptrs.push_back(&d);
  }
  return reduce(p, ptrs);
}

bool is_groebner_basis(const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

namespace {

struct Tracked {
  Poly p;
  std::vector<Poly> cof;
};

void axpy(std::vector<Poly>& dst, const std::vector<Poly>& src, const Monomial& m, const Rational& c) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k].times_term(m, c);
}

// Full reduction of t by `basis`, keeping t.p = Σ t.cof[k]·gens[k].
void tracked_reduce(Tracked& t, const std::vector<Tracked>& basis) {
  Poly rest(t.p.ring());
  while (!t.p.is_zero()) {
    const Term lt = t.p.leading_term();
    const Tracked* div = nullptr;
    for (const auto& b : basis)
      if (b.p.leading_monomial().divides(lt.mono)) {
        div = &b;
        break;
      }
    if (!div) {
      Poly lead = Poly::term(t.p.ring(), lt.mono, lt.coeff);
      rest += lead;
      t.p -= lead;
      continue;
    }
    Monomial q = div->p.leading_monomial().quotient_of(lt.mono);
    Rational c = lt.coeff / div->p.leading_coeff();
    t.p -= div->p.times_term(q, c);
    axpy(t.cof, div->cof, q, c);
  }
  t.p = rest;
}

}  // namespace

std::optional<std::vector<Poly>> lift_combination(const Poly& p, const std::vector<Poly>& gens,
                                                  const GbOptions& options) {
  const RingPtr& ring = p.ring();
  const std::size_t n = gens.size();
  std::vector<Poly> zero(n, Poly(ring));
  std::vector<Tracked> basis;
  auto add = [&](Tracked t) {
    tracked_reduce(t, basis);
    if (t.p.is_zero()) return false;
    Rational inv = Rational(1) / t.p.leading_coeff();
    t.p = t.p.scaled(inv);
    for (auto& c : t.cof) c = c.scaled(inv);
    basis.push_back(std::move(t));
    return true;
  };
  for (std::size_t k = 0; k < n; ++k) {
    Tracked t{gens[k].in_ring(ring), zero};
    t.cof[k] = Poly::constant(ring, Rational(1));
    add(std::move(t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.erase(pairs.begin());
    if (++processed > options.max_pairs) throw ResourceBudgetError(options.max_pairs);
    const auto& f = basis[i];
    const auto& g = basis[j];
    if (f.p.leading_monomial().coprime(g.p.leading_monomial())) continue;
    Monomial l = f.p.leading_monomial().lcm(g.p.leading_monomial());
    Monomial mf = f.p.leading_monomial().quotient_of(l), mg = g.p.leading_monomial().quotient_of(l);
    Tracked s{f.p.times_term(mf, Rational(1)) - g.p.times_term(mg, Rational(1)), zero};
    axpy(s.cof, f.cof, mf, Rational(-1));
    axpy(s.cof, g.cof, mg, Rational(1));
    if (add(std::move(s))) {
      std::size_t k = basis.size() - 1;
      for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
    }
  }
  Tracked target{p, zero};
  tracked_reduce(target, basis);
  if (!target.p.is_zero()) return std::nullopt;
  // target.p started as p and ended at 0 after subtracting Σ cof·gens.
  std::vector<Poly> out;
  out.reserve(n);
  for (auto& c : target.cof) out.push_back(-c);
  return out;
}

}  // namespace rees
