#pragma once

// Negative curves on del Pezzo lattices: (-1)-classes and (-2)-roots of the
// plane blown up at r <= 8 points.

#include <vector>

#include "bigsurf/picard.hpp"

namespace bigsurf {

struct NegativeClassTable {
    int r = 0;
    std::vector<DivisorClass> minus_one_classes;  // C^2 = -1, C.K = -1, degree >= 0
    std::vector<DivisorClass> minus_two_roots;    // a^2 = -2, a.K = 0, both signs

    bool operator==(const NegativeClassTable&) const = default;
};

// Largest |d| allowed by Cauchy-Schwarz for classes d l - sum m_i e_i with
// C.K = k_dot (so sum m_i = 3d + k_dot) and sum m_i^2 = d^2 - square: smallest
// D such that (3d + k_dot)^2 > r (d^2 - square) for all |d| > D. Requires r <= 8.
int degree_bound(int r, int square, int k_dot);

// Complete lists, ordered lexicographically by (d, m_1, ..., m_r). Throws
// DomainError for r outside [0, 8].
NegativeClassTable negative_classes(int r);

}  // namespace bigsurf
