#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rees/groebner.hpp"
#include "rees/poly.hpp"

namespace rees {

// Ideal of a polynomial ring. The reduced Gröbner basis is computed on first
// use and shared between copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> generators = {}, GbOptions options = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const GbOptions& options() const { return options_; }

  const std::vector<Poly>& groebner_basis() const;
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const;
  bool is_unit() const;
  bool is_zero() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Poly>& extra) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  RingPtr ring_;
  std::vector<Poly> generators_;
  GbOptions options_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Poly& p, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);

// I ∩ k[kept variables], returned with generators in the original ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

}  // namespace rees
