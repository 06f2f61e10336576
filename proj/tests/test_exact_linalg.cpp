#include "doctest.h"

#include <random>

#include "bigsurf/exact_linalg.hpp"
#include "oracles.hpp"

using namespace bigsurf;

namespace {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<IntVector> r;
    for (const auto& row : rows) {
        IntVector v;
        for (long x : row) v.push_back(x);
        r.push_back(v);
    }
    return IntMatrix::from_rows(r);
}

IntVector ivec(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.push_back(x);
    return v;
}

bool in_span(const std::vector<IntVector>& basis, const IntVector& v) {
    // v is in the rational span iff appending it does not raise the rank.
    std::vector<IntVector> rows = basis;
    const std::size_t before = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows));
    rows.push_back(v);
    return rank(IntMatrix::from_rows(rows)) == before;
}

}  // namespace

TEST_CASE("integer_kernel: small examples") {
    SUBCASE("single relation") {
        const auto k = integer_kernel(int_matrix({{1, 1}}));
        REQUIRE(k.size() == 1);
        CHECK((k[0] == ivec({1, -1}) || k[0] == ivec({-1, 1})));
    }
    SUBCASE("injective map") { CHECK(integer_kernel(IntMatrix::identity(3)).empty()); }
    SUBCASE("pairing against -K on three blow-ups") {
        const auto k = integer_kernel(int_matrix({{3, -1, -1, -1}}));
        CHECK(k.size() == 3);
        for (const auto& v : k) CHECK(3 * v[0] - v[1] - v[2] - v[3] == 0);
        CHECK(in_span(k, ivec({0, 1, -1, 0})));
        CHECK(in_span(k, ivec({1, 1, 1, 1})));
    }
    SUBCASE("zero matrix gives the standard basis") {
        const auto k = integer_kernel(IntMatrix(2, 3));
        REQUIRE(k.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("integer_kernel: kernel vectors annihilate every row and are saturated") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-4, 4), dims(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = dims(rng), cols = dims(rng) + 1;
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
        const auto k = integer_kernel(m);
        CHECK(k.size() + rank(m) == cols);
        for (const auto& v : k)
            for (std::size_t i = 0; i < rows; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
        // Saturation: every integer kernel vector in a small box is an integer
        // combination, i.e. solving for coordinates in the HNF basis stays integral.
        if (k.empty() || cols > 4) continue;
        IntVector x(cols);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
            if (j == cols) {
                for (std::size_t i = 0; i < rows; ++i) {
                    Integer s = 0;
                    for (std::size_t c = 0; c < cols; ++c) s += m(i, c) * x[c];
                    if (s != 0) return;
                }
                // Reduce x by the basis rows, pivot by pivot.
                IntVector rest = x;
                for (const auto& b : k) {
                    std::size_t p = 0;
                    while (b[p] == 0) ++p;
                    if (rest[p] % b[p] != 0) {
                        FAIL("kernel basis is not saturated");
                        return;
                    }
                    const Integer f = rest[p] / b[p];
                    for (std::size_t c = 0; c < cols; ++c) rest[c] -= f * b[c];
                }
                for (const auto& c : rest) CHECK(c == 0);
                return;
            }
            for (long v = -2; v <= 2; ++v) {
                x[j] = v;
                rec(j + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("inertia: small examples") {
    CHECK(inertia(int_matrix({{-2, 1}, {1, -2}})) == Inertia{0, 2, 0});
    CHECK(inertia(int_matrix({{-2, 1}, {1, -2}})).negative_definite());
    CHECK(inertia(int_matrix({{1, 0}, {0, -1}})) == Inertia{1, 1, 0});
    const Inertia zero = inertia(int_matrix({{0}}));
    CHECK(zero == Inertia{0, 0, 1});
    CHECK(zero.negative_semidefinite());
    CHECK_FALSE(zero.negative_definite());
    CHECK(inertia(int_matrix({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
    CHECK(inertia(IntMatrix()).negative_definite());
}

TEST_CASE("inertia: non-symmetric input is rejected") {
    CHECK_THROWS_AS(inertia(int_matrix({{1, 2}, {3, 4}})), DomainError);
    CHECK_THROWS_AS(inertia(int_matrix({{1, 2, 3}})), DomainError);
}

TEST_CASE("inertia agrees with Descartes' rule on the characteristic polynomial") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int trial = 0; trial < 400; ++trial) {
        IntMatrix g = oracle::random_symmetric(dims(rng), rng);
        // Force some degenerate cases.
        if (trial % 5 == 0 && g.rows() > 1)
            for (std::size_t j = 0; j < g.rows(); ++j) g(0, j) = g(j, 0) = g(1, j) = g(j, 1);
        CHECK(inertia(g) == oracle::descartes_inertia(to_rational(g)));
    }
}

TEST_CASE("inertia is invariant under unimodular congruence") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> dims(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = dims(rng);
        const IntMatrix g = oracle::random_symmetric(n, rng);
        const IntMatrix u = oracle::random_unimodular(n, rng);
        CHECK(inertia(oracle::transpose_times(u, g)) == inertia(g));
    }
}

TEST_CASE("gram_restrict") {
    const IntMatrix g = int_matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    const std::vector<IntVector> b{ivec({0, 1, -1})};
    CHECK(gram_restrict(g, b) == int_matrix({{-2}}));
    const auto empty = gram_restrict(g, std::vector<IntVector>{});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
    const IntMatrix g4 = int_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
    const std::vector<IntVector> b4{ivec({1, 1, 1, 1}), ivec({0, 1, -1, 0})};
    CHECK(gram_restrict(g4, b4) == int_matrix({{-2, 0}, {0, -2}}));
    const std::vector<IntVector> bad{ivec({1, 0})};
    CHECK_THROWS_AS(gram_restrict(g, bad), DomainError);
}

TEST_CASE("gram_restrict of a kernel basis is symmetric") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix g = oracle::random_symmetric(5, rng);
        IntMatrix rows(2, 5);
        std::uniform_int_distribution<int> dist(-3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 5; ++j) rows(i, j) = dist(rng);
        const auto k = integer_kernel(rows);
        const IntMatrix r = gram_restrict(g, k);
        CHECK(r.symmetric());
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < k.size(); ++j) CHECK(r(i, j) == oracle::form(g, k[i], k[j]));
    }
}

TEST_CASE("short_vectors: small examples") {
    const auto a1 = short_vectors(int_matrix({{-2}}), 2);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0] == ivec({1}));
    CHECK(short_vectors(int_matrix({{-2}}), 2, true).size() == 2);

    const IntMatrix a2 = int_matrix({{-2, 1}, {1, -2}});
    const auto roots = short_vectors(a2, 2, true);
    CHECK(roots.size() == 6);
    CHECK(std::set<IntVector>(roots.begin(), roots.end()) == oracle::box_short_vectors(a2, 2));

    CHECK(short_vectors(IntMatrix(), 2).empty());
}

TEST_CASE("short_vectors: E8 has 240 roots") {
    const IntMatrix e8 = oracle::e8_gram();
    const auto roots = short_vectors(e8, 2, true);
    CHECK(roots.size() == oracle::e8_root_count());
    CHECK(roots.size() == 240);
    for (const auto& r : roots) CHECK(oracle::form(e8, r, r) == -2);
    CHECK(std::set<IntVector>(roots.begin(), roots.end()).size() == roots.size());
}

TEST_CASE("short_vectors: rejects forms that are not negative definite") {
    CHECK_THROWS_AS(short_vectors(int_matrix({{1}}), 2), DomainError);
    CHECK_THROWS_AS(short_vectors(int_matrix({{0}}), 2), DomainError);
    CHECK_THROWS_AS(short_vectors(int_matrix({{-2, 2}, {2, -2}}), 2), DomainError);
}

TEST_CASE("short_vectors matches exhaustive box search in dimension <= 4") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> dims(1, 4), bounds(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
        const IntMatrix g = oracle::random_negative_definite(dims(rng), rng);
        const long bound = bounds(rng);
        const auto both = short_vectors(g, bound, true);
        CHECK(std::set<IntVector>(both.begin(), both.end()) == oracle::box_short_vectors(g, bound));

        const auto half = short_vectors(g, bound);
        CHECK(half.size() * 2 == both.size());
        for (const auto& v : half) {
            const Integer q = -oracle::form(g, v, v);
            CHECK(q > 0);
            CHECK(q <= bound);
            std::size_t p = 0;
            while (v[p] == 0) ++p;
            CHECK(v[p] > 0);
        }
        CHECK(std::is_sorted(half.begin(), half.end(),
                             [](const IntVector& a, const IntVector& b) { return lex_less(a, b); }));
        std::set<IntVector> set(both.begin(), both.end());
        for (const auto& v : both) CHECK(set.count(negated(v)) == 1);
    }
}
