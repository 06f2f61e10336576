#include "bigsurf/bigness.hpp"

namespace bigsurf {

OrthogonalComplement orthogonal_complement(const PicardLattice& lattice,
                                           const std::vector<DivisorClass>& classes) {
    const std::size_t n = lattice.rank();
    IntMatrix rows(classes.size(), n);
    for (std::size_t r = 0; r < classes.size(); ++r) {
        if (classes[r].size() != n) throw DomainError("orthogonal_complement: dimension mismatch");
        const IntVector c = classes[r].to_integers();
        for (std::size_t j = 0; j < n; ++j) {
            Integer s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (c[i] != 0) s += c[i] * lattice.gram()(i, j);
            rows(r, j) = s;
        }
    }
    OrthogonalComplement out;
    out.basis = classes.empty() ? std::vector<IntVector>{} : integer_kernel(rows);
    if (classes.empty())
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n, 0);
            e[i] = 1;
            out.basis.push_back(std::move(e));
        }
    out.gram = gram_restrict(lattice.gram(), out.basis);
    return out;
}

bool is_big_supported(const PicardLattice& lattice, const std::vector<DivisorClass>& classes) {
    return inertia(orthogonal_complement(lattice, classes).gram).negative_definite();
}

std::string to_string(BignessCase c) {
    switch (c) {
        case BignessCase::I: return "i";
        case BignessCase::II: return "ii";
        case BignessCase::III: return "iii";
    }
    return "?";
}

BignessCase case_from_string(const std::string& s) {
    if (s == "i") return BignessCase::I;
    if (s == "ii") return BignessCase::II;
    if (s == "iii") return BignessCase::III;
    throw DomainError("unknown case '" + s + "'");
}

namespace {

// Fills the inequality fields from the auxiliary vector; `product` is ab or
// a1 a2 a3 and v^2 must equal product^2 (1 - lhs).
void attach_vector(BignessVerdict& verdict, const PicardLattice& lattice, DivisorClass v,
                   const Rational& lhs, const Integer& product) {
    const Rational vv = self_intersection(lattice, v);
    if (vv != Rational(product * product) * (1 - lhs))
        throw InvariantError("auxiliary vector square disagrees with the closed form");
    verdict.inequality_lhs = lhs;
    verdict.big = lhs > 1;
    verdict.v = std::move(v);
    verdict.v_squared = vv;
}

}  // namespace

BignessVerdict classify_anticanonical(const PointConfiguration& config) {
    validate(config);
    BignessVerdict verdict;
    const PicardLattice lattice = model_lattice(config);

    if (const auto* g = std::get_if<Generic>(&config)) {
        verdict.which = BignessCase::I;
        verdict.big = g->r <= 8;
        // Cubics form a 10-dimensional space, so some cubic passes through any
        // nine points; from ten general points on there is none.
        verdict.effective = g->r <= 9;
        verdict.lattice_confirmed = is_big_supported(lattice, {lattice.canonical()}) == verdict.big;
        return verdict;
    }

    if (const auto* lc = std::get_if<LineConic>(&config)) {
        verdict.which = BignessCase::II;
        if (lc->a == 0 || lc->b == 0) {
            verdict.big = true;
        } else {
            const Integer a = lc->a, b = lc->b;
            DivisorClass v = DivisorClass::zero(lattice.rank());
            v[0] = a * b;
            std::size_t idx = 1;
            for (int i = 0; i < lc->a; ++i) v[idx++] = -b;
            for (int i = 0; i < lc->b; ++i) v[idx++] = -2 * a;
            const Rational lhs = ratio(1, lc->a) + ratio(4, lc->b);
            attach_vector(verdict, lattice, std::move(v), lhs, a * b);
        }
    } else {
        const auto& tl = std::get<ThreeLines>(config);
        verdict.which = BignessCase::III;
        const auto& a = tl.counts;
        if (a[0] == 0 || a[1] == 0 || a[2] == 0) {
            verdict.big = true;
        } else {
            const Integer product = Integer(a[0]) * a[1] * a[2];
            DivisorClass v = DivisorClass::zero(lattice.rank());
            v[0] = product;
            std::size_t idx = 1;
            for (int line = 0; line < 3; ++line)
                for (int j = 0; j < a[line]; ++j) v[idx++] = -product / a[line];
            const Rational lhs = ratio(1, a[0]) + ratio(1, a[1]) + ratio(1, a[2]);
            attach_vector(verdict, lattice, std::move(v), lhs, product);
        }
    }
    verdict.lattice_confirmed =
        is_big_supported(lattice, anticanonical_components(config)) == verdict.big;
    return verdict;
}

CrossCheckReport cross_check(const PointConfiguration& config) {
    if (std::holds_alternative<Generic>(config))
        throw DomainError("cross_check: requires a line_conic or three_lines configuration");
    CrossCheckReport report;
    report.verdict = classify_anticanonical(config);
    const PicardLattice lattice = model_lattice(config);
    const auto components = anticanonical_components(config);
    report.complement_inertia = inertia(orthogonal_complement(lattice, components).gram);
    report.lattice_big = report.complement_inertia.negative_definite();
    report.agree = report.lattice_big == report.verdict.big;
    if (report.verdict.v) {
        for (const auto& c : components)
            if (pair(lattice, *report.verdict.v, c) != 0) report.v_orthogonal = false;
        report.v_sign_matches = (*report.verdict.v_squared < 0) == (*report.verdict.inequality_lhs > 1);
    }
    return report;
}

}  // namespace bigsurf
