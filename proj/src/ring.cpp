#include "rees/ring.hpp"

#include "rees/errors.hpp"

namespace rees {

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(std::move(order)) {
  if (order_.num_vars() != names_.size())
    throw InvalidArgumentError("monomial order covers " + std::to_string(order_.num_vars()) + " variables, ring has " +
                               std::to_string(names_.size()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgumentError("empty variable name");
    if (!index_.emplace(names_[i], i).second) throw InvalidArgumentError("duplicate variable '" + names_[i] + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

RingPtr Ring::make(std::vector<std::string> names) {
  auto n = names.size();
  return make(std::move(names), MonomialOrder::degrevlex(n));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InvalidArgumentError("unknown variable '" + std::string(name) + "'");
  return *i;
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
  if (!ring.has(stem)) return stem;
  for (int i = 1;; ++i) {
    auto candidate = stem + std::to_string(i);
    if (!ring.has(candidate)) return candidate;
  }
}

}  // namespace rees
