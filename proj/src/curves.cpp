#include "bigsurf/curves.hpp"

#include <algorithm>
#include <cstdlib>

namespace bigsurf {

namespace {

bool cauchy_schwarz_allows(int r, int square, int k_dot, long d) {
    const long sum = 3 * d + k_dot;
    const long sumsq = d * d - square;
    if (sumsq < 0) return false;
    return sum * sum <= static_cast<long>(r) * sumsq;
}

// Fills m[i..] so that sum m = sum, sum m^2 = sumsq.
void fill_multiplicities(int i, int r, long sum, long sumsq, std::vector<long>& m,
                         std::vector<std::vector<long>>& out) {
    const int left = r - i;
    if (left == 0) {
        if (sum == 0 && sumsq == 0) out.push_back(m);
        return;
    }
    if (sumsq < 0 || sum * sum > static_cast<long>(left) * sumsq) return;
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= sumsq) ++bound;
    for (long v = -bound; v <= bound; ++v) {
        m[i] = v;
        fill_multiplicities(i + 1, r, sum - v, sumsq - v * v, m, out);
    }
    m[i] = 0;
}

std::vector<DivisorClass> enumerate(int r, int square, int k_dot, bool nonnegative_degree) {
    const int bound = degree_bound(r, square, k_dot);
    std::vector<std::vector<long>> keys;  // (d, m_1..m_r)
    for (long d = nonnegative_degree ? 0 : -bound; d <= bound; ++d) {
        std::vector<std::vector<long>> ms;
        std::vector<long> m(r, 0);
        fill_multiplicities(0, r, 3 * d + k_dot, d * d - square, m, ms);
        for (auto& row : ms) {
            row.insert(row.begin(), d);
            keys.push_back(std::move(row));
        }
    }
    std::sort(keys.begin(), keys.end());
    std::vector<DivisorClass> out;
    for (const auto& key : keys) {
        DivisorClass c = DivisorClass::zero(static_cast<std::size_t>(r) + 1);
        c[0] = key[0];
        for (int i = 1; i <= r; ++i) c[i] = -key[i];
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

int degree_bound(int r, int square, int k_dot) {
    if (r < 0 || r > 8) throw DomainError("degree_bound: requires 0 <= r <= 8");
    // (9 - r) d^2 + 6 k_dot d + k_dot^2 + r square <= 0 is a bounded interval
    // containing the vertex -3 k_dot / (9 - r), so scan outward from it.
    int best = -1;
    const long vertex_reach = std::labs(3L * k_dot) + 1;
    for (long d = 0;; ++d) {
        const bool hit = cauchy_schwarz_allows(r, square, k_dot, d) ||
                         cauchy_schwarz_allows(r, square, k_dot, -d);
        if (hit) best = static_cast<int>(d);
        if (!hit && d > vertex_reach) break;
    }
    return best;
}

NegativeClassTable negative_classes(int r) {
    if (r < 0 || r > 8)
        throw DomainError("negative_classes: requires 0 <= r <= 8 (K-perp must be negative definite)");
    NegativeClassTable table;
    table.r = r;
    table.minus_one_classes = enumerate(r, -1, -1, true);
    table.minus_two_roots = enumerate(r, -2, 0, false);
    return table;
}

}  // namespace bigsurf
