#pragma once

// The Hirzebruch-blow-up family with big but not log del Pezzo anticanonical
// class: F_n blown up at a_i points on each of k fibers (away from the
// negative section), with sum 1/a_i < k - 2.

#include <optional>
#include <vector>

#include "bigsurf/picard.hpp"

namespace bigsurf {

struct FamilyParams {
    int n = 2;
    int k = 3;
    std::vector<int> a;

    bool operator==(const FamilyParams&) const = default;
};

// Sum of 1/a_i. Throws DomainError if some a_i <= 0.
Rational reciprocal_sum(const std::vector<int>& a);

// Throws DomainError naming the first violated constraint.
void validate(const FamilyParams& params);

PicardLattice family_lattice(const FamilyParams& params);

struct ZariskiChecks {
    bool p_dot_sigma_zero = false;
    bool p_dot_fibers_zero = false;
    bool p_dot_n_zero = false;
    bool p_square_closed_form = false;
    bool n_effective = false;
    bool n_support_negative_definite = false;
    bool sum_is_minus_k = false;
    bool p_nonnegative_on_listed_curves = false;

    bool all() const {
        return p_dot_sigma_zero && p_dot_fibers_zero && p_dot_n_zero && p_square_closed_form &&
               n_effective && n_support_negative_definite && sum_is_minus_k &&
               p_nonnegative_on_listed_curves;
    }
    bool operator==(const ZariskiChecks&) const = default;
};

struct ZariskiReport {
    FamilyParams params;
    std::vector<std::string> labels;
    DivisorClass p;
    DivisorClass n;
    Rational p_squared;
    ZariskiChecks checks;
    Rational lc_coefficient;  // coefficient of the section in N
    bool log_canonical = false;

    bool operator==(const ZariskiReport&) const = default;
};

// -K = P + N with P = c s + (n+2-k) F + sum (c/a_i) F_i, c = (n+2-k)/(n - sum 1/a_i),
// and every certificate evaluated exactly.
ZariskiReport zariski_decompose(const FamilyParams& params);

struct LogCanonicalResult {
    bool log_canonical = false;
    // 2 - (n+2-k)/(n - sum 1/a_i); absent when n = sum 1/a_i.
    std::optional<Rational> coefficient;

    bool operator==(const LogCanonicalResult&) const = default;
};

// lc iff sum 1/a_i >= k - 2. Requires n >= 2, 3 <= k <= n+1, a_i >= 1, |a| = k,
// but not the family inequality.
LogCanonicalResult log_canonical_test(int n, int k, const std::vector<int>& a);

}  // namespace bigsurf
