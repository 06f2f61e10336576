#include "bigsurf/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace bigsurf {

namespace {

// Replace columns (p, c) of both matrices by a unimodular combination that
// leaves gcd(a(row,p), a(row,c)) in column p and zero in column c.
void eliminate_columns(IntMatrix& a, IntMatrix& u, std::size_t row, std::size_t p, std::size_t c) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(row, p).get_mpz_t(),
               a(row, c).get_mpz_t());
    const Integer x = a(row, p) / g;
    const Integer y = a(row, c) / g;
    auto apply = [&](IntMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer vp = m(i, p);
            Integer vc = m(i, c);
            m(i, p) = s * vp + t * vc;
            m(i, c) = x * vc - y * vp;
        }
    };
    apply(a);
    apply(u);
}

void eliminate_rows(std::vector<IntVector>& rows, std::size_t col, std::size_t p, std::size_t c) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[p][col].get_mpz_t(),
               rows[c][col].get_mpz_t());
    const Integer x = rows[p][col] / g;
    const Integer y = rows[c][col] / g;
    for (std::size_t j = 0; j < rows[p].size(); ++j) {
        Integer vp = rows[p][j];
        Integer vc = rows[c][j];
        rows[p][j] = s * vp + t * vc;
        rows[c][j] = x * vc - y * vp;
    }
}

void hermite_normal_form(std::vector<IntVector>& rows) {
    if (rows.empty()) return;
    const std::size_t n = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        for (std::size_t i = pivot_row + 1; i < rows.size(); ++i)
            if (rows[i][col] != 0) eliminate_rows(rows, col, pivot_row, i);
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (auto& v : rows[pivot_row]) v = -v;
        const Integer& pivot = rows[pivot_row][col];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            if (rows[i][col] == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), pivot.get_mpz_t());
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
}

// Rows are the coefficient vectors; dimension n.
struct Enumerator {
    std::size_t n;
    std::vector<Rational> diag;           // D_i
    std::vector<std::vector<Rational>> mu;  // mu[i][j] for j > i
    Rational bound;
    IntVector x;
    std::vector<IntVector> out;

    void run(std::size_t level_plus_one, const Rational& used) {
        if (level_plus_one == 0) {
            if (used > 0) out.push_back(x);
            return;
        }
        const std::size_t i = level_plus_one - 1;
        Rational center = 0;
        for (std::size_t j = i + 1; j < n; ++j) center -= mu[i][j] * x[j];
        const Rational room = (bound - used) / diag[i];
        // floor(sqrt(room)) exactly: floor(isqrt(num * den) / den).
        Integer prod = room.get_num() * room.get_den();
        Integer root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        Integer radius;
        mpz_fdiv_q(radius.get_mpz_t(), root.get_mpz_t(), room.get_den().get_mpz_t());
        Integer lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
        lo -= radius + 1;
        hi += radius + 1;
        for (Integer v = lo; v <= hi; ++v) {
            const Rational d = Rational(v) - center;
            const Rational term = diag[i] * d * d;
            if (used + term > bound) continue;
            x[i] = v;
            run(i, used + term);
        }
        x[i] = 0;
    }
};

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < a.rows() && pivot < n; ++row) {
        for (std::size_t c = pivot + 1; c < n; ++c)
            if (a(row, c) != 0) eliminate_columns(a, u, row, pivot, c);
        if (a(row, pivot) != 0) ++pivot;
    }
    // u is unimodular, so its trailing columns span a saturated sublattice.
    std::vector<IntVector> basis;
    for (std::size_t c = pivot; c < n; ++c) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u(i, c);
        basis.push_back(std::move(v));
    }
    hermite_normal_form(basis);
    return basis;
}

std::size_t rank(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

Inertia inertia(const RatMatrix& g) {
    if (!g.symmetric()) throw DomainError("inertia: matrix is not symmetric");
    RatMatrix a = g;
    const std::size_t n = a.rows();
    Inertia result;
    auto swap_index = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0) ++p;
        if (p == n) {
            // Zero diagonal: look for an off-diagonal entry and fold it onto the
            // diagonal with the congruence e_i -> e_i + e_j.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                result.zero += n - k;
                break;
            }
            for (std::size_t j = 0; j < n; ++j) a(pi, j) += a(pj, j);
            for (std::size_t i = 0; i < n; ++i) a(i, pi) += a(i, pj);
            p = pi;
        }
        swap_index(p, k);
        const Rational& d = a(k, k);
        if (d > 0)
            ++result.positive;
        else
            ++result.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a(k, j) != 0) a(i, j) -= f * a(k, j);
            a(i, k) = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
    }
    return result;
}

Inertia inertia(const IntMatrix& g) { return inertia(to_rational(g)); }

Integer bilinear(const IntMatrix& g, std::span<const Integer> x, std::span<const Integer> y) {
    if (x.size() != g.rows() || y.size() != g.cols())
        throw DomainError("bilinear: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (y[j] != 0 && g(i, j) != 0) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

Rational bilinear(const IntMatrix& g, std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != g.rows() || y.size() != g.cols())
        throw DomainError("bilinear: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (y[j] != 0 && g(i, j) != 0) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

IntMatrix gram_restrict(const IntMatrix& g, std::span<const IntVector> basis) {
    if (!g.square()) throw DomainError("gram_restrict: Gram matrix is not square");
    for (const auto& b : basis)
        if (b.size() != g.rows()) throw DomainError("gram_restrict: dimension mismatch");
    const std::size_t k = basis.size();
    const std::size_t n = g.rows();
    std::vector<IntVector> images(k, IntVector(n));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (g(i, j) != 0 && basis[c][j] != 0) s += g(i, j) * basis[c][j];
            images[c][i] = std::move(s);
        }
    IntMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = r; c < k; ++c) {
            Integer s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[r][i] != 0) s += basis[r][i] * images[c][i];
            out(r, c) = s;
            out(c, r) = s;
        }
    return out;
}

std::vector<IntVector> short_vectors(const IntMatrix& g, const Integer& bound, bool with_negatives) {
    if (bound <= 0) throw DomainError("short_vectors: bound must be positive");
    if (!inertia(g).negative_definite())
        throw DomainError("short_vectors: form is not negative definite");
    const std::size_t n = g.rows();
    if (n == 0) return {};

    // -G = L D L^T with L unit lower triangular; mu[i][j] = L(j, i).
    RatMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = -g(i, j);
    Enumerator e{n, std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, RatVector(n)),
                 Rational(bound), IntVector(n, 0), {}};
    RatMatrix lower(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = q(i, i);
        for (std::size_t k = 0; k < i; ++k) d -= lower(i, k) * lower(i, k) * e.diag[k];
        e.diag[i] = d;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational s = q(j, i);
            for (std::size_t k = 0; k < i; ++k) s -= lower(j, k) * lower(i, k) * e.diag[k];
            lower(j, i) = s / d;
            e.mu[i][j] = lower(j, i);
        }
    }
    e.run(n, Rational(0));

    std::vector<IntVector> result;
    for (auto& v : e.out) {
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
        if (with_negatives || *first > 0) result.push_back(std::move(v));
    }
    std::sort(result.begin(), result.end(),
              [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    return result;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVector negated(std::span<const Integer> v) {
    IntVector out(v.begin(), v.end());
    for (auto& c : out) c = -c;
    return out;
}

IntVector combine(std::span<const IntVector> basis, std::span<const Integer> coeffs) {
    if (basis.size() != coeffs.size()) throw DomainError("combine: dimension mismatch");
    if (basis.empty()) return {};
    IntVector out(basis.front().size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * basis[i][j];
    }
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bigsurf
