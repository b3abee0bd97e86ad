#pragma once

// The two rewriting engines behind the variance-basis formulas:
//  - symmetrize_pq rewrites a p<->q symmetric polynomial through the
//    elementary symmetric functions e1 = p + q and e2 = pq;
//  - reduce_mod_variance computes normal forms modulo s - p(1 - p), i.e.
//    exhaustively applies p^2 -> p - s.

#include "binmom/poly.hpp"

#include <cstdint>
#include <map>

namespace binmom {

/// A polynomial written as sum_j e1^j * C_j, where each C_j lives in
/// Q[n, s] and s stands for e2 = pq.
struct ElementaryForm {
    std::map<std::uint32_t, Poly> by_e1_power;

    /// Sum of the C_j, i.e. the value on p + q = 1.
    Poly at_unit_e1() const;

    /// Substitutes e1 -> p + q and s -> pq back, recovering the original.
    Poly expand() const;
};

/// Throws AsymmetryError if `a` is not fixed by p<->q, and
/// std::invalid_argument if `a` already contains s.
ElementaryForm symmetrize_pq(const Poly& a);

/// Normal form modulo the ideal (p^2 - p + s): no p exponent above 1.
Poly reduce_mod_variance(const Poly& a);

} // namespace binmom
