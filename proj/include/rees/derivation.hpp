#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/quotient_algebra.hpp"

namespace rees {

inline constexpr int kDefaultNilpotencyBound = 64;

// A k-derivation of A given by the images of the ring variables and extended
// by the Leibniz rule. Results are always reduced modulo I_A.
class Derivation {
 public:
  Derivation(QuotientAlgebra algebra, std::vector<Poly> images);
  static Derivation zero(QuotientAlgebra algebra);

  const QuotientAlgebra& algebra() const { return algebra_; }
  const RingPtr& ring() const { return algebra_.ring(); }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image(std::size_t var) const { return images_[var]; }

  Poly apply(const Poly& a) const;
  // ∂^k(a).
  Poly iterate(const Poly& a, unsigned k) const;

  // The same derivation on `bigger` (whose variables include ours); extra
  // variables are sent to zero.
  Derivation extend_to(const QuotientAlgebra& bigger) const;

 private:
  QuotientAlgebra algebra_;
  std::vector<Poly> images_;
};

struct DerivationCheck {
  bool well_defined = true;
  std::optional<Poly> offending_relation;
  std::optional<Poly> offending_image;  // ∂ of the offending relation, reduced
};

// ∂(g) ∈ I_A for every defining relation g.
DerivationCheck check_derivation(const Derivation& d);

// Minimal n with ∂^{n+1}(a) = 0. Throws NilpotencyError past `bound`.
int nil_degree(const Derivation& d, const Poly& a, int bound = kDefaultNilpotencyBound);

struct NilpotencyReport {
  bool locally_nilpotent = true;
  int bound = kDefaultNilpotencyBound;
  std::vector<std::optional<int>> variable_degrees;  // empty entry: bound exceeded
};

// Checks each ring variable; by the Leibniz rule this covers all of A.
NilpotencyReport is_locally_nilpotent(const Derivation& d, int bound = kDefaultNilpotencyBound);

bool in_filtration(const Derivation& d, const Poly& a, int n);

// ∂^i(a)/i!.
Poly divided_power(const Derivation& d, const Poly& a, unsigned i);

// Σ_i ∂^i(a)/i!·t^i as an element of A[t], where t is named `parameter`.
Poly exp_t(const Derivation& d, const Poly& a, const std::string& parameter = "t",
           int bound = kDefaultNilpotencyBound);

}  // namespace rees
