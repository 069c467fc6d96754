#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rees/poly.hpp"

namespace rees {

struct GbOptions {
  // Cap on processed S-pairs; exceeding it raises ResourceBudgetError.
  std::size_t max_pairs = 200000;
};

// Reduced Gröbner basis of the ideal generated by `gens` under the order of
// `ring` (every generator is mapped into `ring` by variable name).
//
// S-pairs are selected by minimal total degree of their lcm, ties broken by
// the (i, j) index pair; pairs are pruned with Buchberger's coprime criterion
// and the Gebauer–Möller chain criterion. Output elements are monic and
// sorted by increasing leading monomial, so identical input yields identical
// output.
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const RingPtr& ring, const GbOptions& options = {});

// Full reduction of p by `divisors` (same ring, nonzero). When `divisors` is a
// Gröbner basis the result is the unique normal form.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors);

Poly s_polynomial(const Poly& f, const Poly& g);

// Every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& basis);

// Cofactors c with p = Σ c[j]·gens[j], read off a cofactor-tracking
// Buchberger run and reduction trace. Returns nothing when p is not in the
// ideal.
std::optional<std::vector<Poly>> lift_combination(const Poly& p, const std::vector<Poly>& gens,
                                                  const GbOptions& options = {});

}  // namespace rees
