#include "rees/monomial_order.hpp"

#include <algorithm>
#include <sstream>

#include "rees/errors.hpp"

namespace rees {

WeightVector::WeightVector(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (auto w : values_)
    if (w < 0) throw InvalidArgumentError("weights must be non-negative");
}

std::int64_t WeightVector::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) d += values_[i] * static_cast<std::int64_t>(m[i]);
  return d;
}

MonomialOrder::MonomialOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::vector<bool> seen;
  for (const auto& b : blocks_) {
    if (b.weights.size() != b.vars.size()) throw InvalidArgumentError("block weights do not match block variables");
    for (auto v : b.vars) {
      if (v >= seen.size()) seen.resize(v + 1, false);
      if (seen[v]) throw InvalidArgumentError("variable listed in two order blocks");
      seen[v] = true;
    }
  }
  nvars_ = seen.size();
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
    throw InvalidArgumentError("monomial order does not cover every variable");
}

namespace {

std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

int compare_block(const MonomialOrder::Block& b, const Monomial& x, const Monomial& y) {
  using Kind = MonomialOrder::Kind;
  if (b.kind != Kind::lex) {
    std::int64_t wx = 0, wy = 0;
    std::uint64_t tx = 0, ty = 0;
    for (std::size_t k = 0; k < b.vars.size(); ++k) {
      auto ex = x[b.vars[k]], ey = y[b.vars[k]];
      wx += b.weights[k] * ex;
      wy += b.weights[k] * ey;
      tx += ex;
      ty += ey;
    }
    if (wx != wy) return wx < wy ? -1 : 1;
    if (tx != ty) return tx < ty ? -1 : 1;
  }
  if (b.kind == Kind::weighted_degrevlex) {
    for (std::size_t k = b.vars.size(); k-- > 0;) {
      auto ex = x[b.vars[k]], ey = y[b.vars[k]];
      if (ex != ey) return ex < ey ? 1 : -1;
    }
    return 0;
  }
  for (auto v : b.vars) {
    if (x[v] != y[v]) return x[v] < y[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n) {
  return MonomialOrder({Block{iota_vars(n), Kind::lex, std::vector<std::int64_t>(n, 1)}});
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) { return weighted_degrevlex(WeightVector::ones(n)); }

MonomialOrder MonomialOrder::weighted_degrevlex(const WeightVector& w) {
  return MonomialOrder({Block{iota_vars(w.size()), Kind::weighted_degrevlex, w.values()}});
}

MonomialOrder MonomialOrder::weighted_deglex(const WeightVector& w) {
  return MonomialOrder({Block{iota_vars(w.size()), Kind::weighted_deglex, w.values()}});
}

MonomialOrder MonomialOrder::elimination(const std::vector<bool>& front, const MonomialOrder& inner) {
  if (front.size() != inner.num_vars()) throw InvalidArgumentError("elimination mask has the wrong length");
  std::vector<Block> head, tail;
  for (const auto& b : inner.blocks()) {
    Block f{{}, b.kind, {}}, r{{}, b.kind, {}};
    for (std::size_t k = 0; k < b.vars.size(); ++k) {
      Block& dst = front[b.vars[k]] ? f : r;
      dst.vars.push_back(b.vars[k]);
      dst.weights.push_back(b.weights[k]);
    }
    if (!f.vars.empty()) head.push_back(std::move(f));
    if (!r.vars.empty()) tail.push_back(std::move(r));
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return MonomialOrder(std::move(head));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    int c = compare_block(block, a, b);
    if (c != 0) return c;
  }
  return 0;
}

std::vector<MonomialOrder::Block> MonomialOrder::relabeled_blocks(const std::vector<std::size_t>& mapping) const {
  std::vector<Block> out = blocks_;
  for (auto& b : out)
    for (auto& v : b.vars) v = mapping.at(v);
  return out;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << " > ";
    const auto& b = blocks_[i];
    os << (b.kind == Kind::lex ? "lex" : b.kind == Kind::weighted_deglex ? "wdeglex" : "wdegrevlex") << "(";
    for (std::size_t k = 0; k < b.vars.size(); ++k) os << (k ? "," : "") << b.vars[k] << ":" << b.weights[k];
    os << ")";
  }
  return os.str();
}

}  // namespace rees
