#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/ideal.hpp"
#include "rees/monomial_order.hpp"

namespace rees {

// A = k[x_1..x_n]/I_A. Elements are represented by their normal forms.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(RingPtr ring, std::vector<Poly> relations = {}, GbOptions options = {});

  const RingPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Poly>& relations() const { return ideal_.generators(); }
  const GbOptions& options() const { return ideal_.options(); }

  const std::optional<WeightVector>& weights() const { return weights_; }
  void set_weights(WeightVector w);

  Poly reduce(const Poly& p) const { return ideal_.normal_form(p); }
  bool is_zero(const Poly& p) const { return reduce(p).is_zero(); }
  bool equal(const Poly& a, const Poly& b) const { return is_zero(a - b); }
  Poly variable(std::string_view name) const { return Poly::variable(ring_, name); }
  Poly constant(const Rational& c) const { return Poly::constant(ring_, c); }

  // A[extra]: the same relations over a ring with `extra` appended after the
  // existing variables. Existing variables keep their order as the first
  // block, so the reduced basis of I_A carries over unchanged.
  QuotientAlgebra adjoin(const std::vector<std::string>& extra) const;

 private:
  RingPtr ring_;
  Ideal ideal_;
  std::optional<WeightVector> weights_;
};

}  // namespace rees
