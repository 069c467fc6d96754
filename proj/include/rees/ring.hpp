#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/monomial_order.hpp"

namespace rees {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A variable registry together with the monomial order used to sort terms.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  static RingPtr make(std::vector<std::string> names, MonomialOrder order);
  // Degree-reverse-lexicographic ring.
  static RingPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }
  const MonomialOrder& order() const { return order_; }

  // Same names in the same positions and same order.
  bool same_as(const Ring& other) const {
    return this == &other || (names_ == other.names_ && order_ == other.order_);
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
  MonomialOrder order_;
};

// A name not already used in `ring`: `stem`, then stem1, stem2, ...
std::string fresh_name(const Ring& ring, const std::string& stem);

}  // namespace rees
