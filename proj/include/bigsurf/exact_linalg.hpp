#pragma once

// Exact integer/rational linear algebra on small dense matrices.
//
// Everything here works over GMP integers and rationals; there is no
// floating-point path. Matrices are row-major and value-typed.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bigsurf/errors.hpp"

namespace bigsurf {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// n/d in lowest terms; mpq_class(n, d) alone does not canonicalize.
inline Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Rows must all have the same length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    bool symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// Signature of a symmetric form.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    std::size_t dimension() const { return positive + negative + zero; }
    // The empty form counts as negative definite.
    bool negative_definite() const { return positive == 0 && zero == 0; }
    bool negative_semidefinite() const { return positive == 0; }

    bool operator==(const Inertia&) const = default;
};

// Saturated integer basis of {v : M v = 0}, returned in row Hermite normal
// form (pivots positive, entries above each pivot reduced).
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

// Exact signature by symmetric elimination. Throws DomainError on a
// non-symmetric input.
Inertia inertia(const RatMatrix& g);
Inertia inertia(const IntMatrix& g);

// Entry (i, j) is basis[i]^T G basis[j].
IntMatrix gram_restrict(const IntMatrix& g, std::span<const IntVector> basis);

// x^T G y.
Integer bilinear(const IntMatrix& g, std::span<const Integer> x, std::span<const Integer> y);
Rational bilinear(const IntMatrix& g, std::span<const Rational> x, std::span<const Rational> y);

// All nonzero v with 0 < -v^T G v <= bound, G negative definite. One
// representative per +-pair (first nonzero coefficient positive) unless
// with_negatives is set. Output is sorted lexicographically.
std::vector<IntVector> short_vectors(const IntMatrix& g, const Integer& bound,
                                     bool with_negatives = false);

// Lexicographic comparison of equal-length integer vectors.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

// -v, and the combination sum_i coeffs[i] * basis[i].
IntVector negated(std::span<const Integer> v);
IntVector combine(std::span<const IntVector> basis, std::span<const Integer> coeffs);

std::string to_string(const Rational& q);

}  // namespace bigsurf
