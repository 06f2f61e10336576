#include "bigsurf/zariski.hpp"

namespace bigsurf {

Rational reciprocal_sum(const std::vector<int>& a) {
    Rational s = 0;
    for (int x : a) {
        if (x <= 0) throw DomainError("a_j must be positive integers");
        s += ratio(1, x);
    }
    return s;
}

namespace {

void validate_shape(int n, int k, const std::vector<int>& a) {
    if (n < 2) throw DomainError("n must satisfy n >= 2");
    if (k < 3 || k > n + 1) throw DomainError("k must satisfy 3 <= k <= n+1");
    if (a.size() != static_cast<std::size_t>(k)) throw DomainError("a must list exactly k point counts");
    for (int x : a)
        if (x < 1) throw DomainError("a_j must be positive integers");
}

}  // namespace

void validate(const FamilyParams& params) {
    validate_shape(params.n, params.k, params.a);
    if (reciprocal_sum(params.a) >= params.k - 2)
        throw DomainError("sum of 1/a_j must be < k-2");
}

PicardLattice family_lattice(const FamilyParams& params) {
    std::vector<FiberSpec> fibers;
    for (int x : params.a) fibers.push_back({x, false});
    return blowup_hirzebruch(params.n, std::move(fibers), 0);
}

ZariskiReport zariski_decompose(const FamilyParams& params) {
    validate(params);
    const PicardLattice lattice = family_lattice(params);
    const std::size_t k = params.a.size();

    const DivisorClass sigma = lattice.basis(0);  // no blown-up point lies on the section
    const DivisorClass fiber = lattice.basis(1);
    std::vector<DivisorClass> strict;
    for (std::size_t i = 0; i < k; ++i) strict.push_back(fiber_strict_transform(lattice, i));

    const Rational m = params.n + 2 - params.k;
    const Rational denom = params.n - reciprocal_sum(params.a);
    const Rational c = m / denom;

    ZariskiReport report;
    report.params = params;
    report.labels = lattice.labels();
    report.p = c * sigma + m * fiber;
    report.n = (2 - c) * sigma;
    std::vector<Rational> n_coeffs{2 - c};
    for (std::size_t i = 0; i < k; ++i) {
        const Rational ci = c / params.a[i];
        report.p += ci * strict[i];
        report.n += (1 - ci) * strict[i];
        n_coeffs.push_back(1 - ci);
    }
    report.p_squared = self_intersection(lattice, report.p);

    auto& checks = report.checks;
    checks.p_dot_sigma_zero = pair(lattice, report.p, sigma) == 0;
    checks.p_dot_fibers_zero = true;
    for (const auto& f : strict)
        if (pair(lattice, report.p, f) != 0) checks.p_dot_fibers_zero = false;
    checks.p_dot_n_zero = pair(lattice, report.p, report.n) == 0;
    checks.p_square_closed_form = report.p_squared == m * m / denom;
    checks.sum_is_minus_k = report.p + report.n == -lattice.canonical();

    checks.n_effective = true;
    std::vector<IntVector> support;
    for (std::size_t i = 0; i < n_coeffs.size(); ++i) {
        if (n_coeffs[i] < 0) checks.n_effective = false;
        if (n_coeffs[i] > 0) support.push_back((i == 0 ? sigma : strict[i - 1]).to_integers());
    }
    checks.n_support_negative_definite =
        inertia(gram_restrict(lattice.gram(), support)).negative_definite();

    std::vector<DivisorClass> curves{sigma, sigma_strict_transform(lattice), fiber};
    curves.insert(curves.end(), strict.begin(), strict.end());
    for (std::size_t i = 2; i < lattice.rank(); ++i) curves.push_back(lattice.basis(i));
    checks.p_nonnegative_on_listed_curves = report.p_squared > 0;
    for (const auto& curve : curves)
        if (pair(lattice, report.p, curve) < 0) checks.p_nonnegative_on_listed_curves = false;

    const auto lc = log_canonical_test(params.n, params.k, params.a);
    report.lc_coefficient = *lc.coefficient;
    report.log_canonical = lc.log_canonical;
    return report;
}

LogCanonicalResult log_canonical_test(int n, int k, const std::vector<int>& a) {
    validate_shape(n, k, a);
    const Rational s = reciprocal_sum(a);
    LogCanonicalResult result;
    result.log_canonical = s >= k - 2;
    if (s != n) result.coefficient = 2 - Rational(n + 2 - k) / (n - s);
    return result;
}

}  // namespace bigsurf
