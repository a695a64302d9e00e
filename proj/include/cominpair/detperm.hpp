#ifndef COMINPAIR_DETPERM_HPP
#define COMINPAIR_DETPERM_HPP

// Permanents, a symbolic determinant expander, and the local Taylor
// expansion of the determinant hypersurface around a rank-(n-1) point.
//
// The Taylor machinery works on the affine chart where the hypersurface is
// the graph of one coordinate over the tangent directions: a tangent vector
// is a triple (x, A, y) sitting in the bordered matrix [[Id + tA, ty],
// [tx, w]], and requiring the determinant to vanish solves the corner as
// w(t) = t^2 x (Id + tA)^{-1} y. Its Taylor coefficients come out as
// c_k = (-1)^k x A^{k-2} y; the sign is fixed by this normalization.

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cominpair/linalg.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/poly.hpp"
#include "cominpair/rational.hpp"
#include "cominpair/series.hpp"

namespace cominpair {

namespace detail {

template <typename T>
T permanent_rows(const Matrix<T>& m, int row, unsigned used) {
    const int n = m.rows();
    if (row == n) return T(1);
    T total(0);
    for (int j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        if (m(row, j) == T(0)) continue;
        total += m(row, j) * permanent_rows(m, row + 1, used | (1u << j));
    }
    return total;
}

}  // namespace detail

// Plain permutation sum, kept honest by a small size cap.
template <typename T>
T permanent_naive(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("permanent needs a square matrix");
    if (m.rows() > 10) throw std::runtime_error("naive permanent capped at 10 rows");
    return detail::permanent_rows(m, 0, 0u);
}

// Inclusion-exclusion over column subsets with Gray-code row-sum updates:
// perm(M) = sum over nonempty S of (-1)^(n-|S|) prod_i sum_{j in S} M_ij.
template <typename T>
T permanent_ryser(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("permanent needs a square matrix");
    const int n = m.rows();
    if (n > 20) throw std::runtime_error("permanent capped at 20 rows");
    if (n == 0) return T(1);
    std::vector<T> rowsum(n, T(0));
    T total(0);
    int size = 0;
    for (unsigned long long k = 1; k < (1ull << n); ++k) {
        const unsigned long long subset = k ^ (k >> 1);
        const int bit = std::countr_zero(k);
        const bool added = (subset >> bit) & 1ull;
        for (int i = 0; i < n; ++i) {
            if (added)
                rowsum[i] += m(i, bit);
            else
                rowsum[i] -= m(i, bit);
        }
        size += added ? 1 : -1;
        T prod(1);
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            if (rowsum[i] == T(0))
                zero = true;
            else
                prod *= rowsum[i];
        }
        if (zero) continue;
        if ((n - size) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

namespace detail {

inline MultiPoly det_symbolic_rows(const Matrix<MultiPoly>& m, const std::vector<int>& cols,
                                   int row, std::size_t vars) {
    if (cols.empty()) return MultiPoly::constant(vars, Rational(1));
    MultiPoly total(vars);
    for (std::size_t p = 0; p < cols.size(); ++p) {
        const MultiPoly& entry = m(row, cols[p]);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t q = 0; q < cols.size(); ++q)
            if (q != p) rest.push_back(cols[q]);
        MultiPoly sub = entry * det_symbolic_rows(m, rest, row + 1, vars);
        if (p % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

}  // namespace detail

// Fully expanded determinant of a matrix of polynomials, by first-row
// cofactor recursion. Division-free, so it stays inside the polynomial ring.
inline MultiPoly det_symbolic(const Matrix<MultiPoly>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("symbolic determinant needs a square matrix");
    if (m.rows() > 8) throw std::runtime_error("symbolic determinant capped at 8 rows");
    if (m.rows() == 0) return MultiPoly::constant(0, Rational(1));
    const std::size_t vars = m(0, 0).variables();
    std::vector<int> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    return detail::det_symbolic_rows(m, cols, 0, vars);
}

// A 5x5 matrix over Q[x1..x6] whose determinant collapses to the two cubic
// terms x1*x2*x3 and x4*x5*x6: each term threads one cycle through the
// off-diagonal variables while the leftover diagonal ones contribute 1.
inline Matrix<MultiPoly> product_sum_matrix() {
    const std::size_t vars = 6;
    Matrix<MultiPoly> m(5, 5, MultiPoly(vars));
    auto x = [vars](std::size_t i) { return MultiPoly::variable(vars, i - 1); };
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    m(0, 1) = x(1);
    m(0, 3) = x(4);
    m(1, 1) = one;
    m(1, 2) = x(2);
    m(2, 0) = x(3);
    m(2, 2) = one;
    m(3, 3) = one;
    m(3, 4) = x(5);
    m(4, 0) = x(6);
    m(4, 4) = one;
    return m;
}

inline MultiPoly product_sum_target() {
    const std::size_t vars = 6;
    auto x = [vars](std::size_t i) { return MultiPoly::variable(vars, i - 1); };
    return x(1) * x(2) * x(3) + x(4) * x(5) * x(6);
}

// Full symbolic expansion, not sampling: the difference must be the zero
// polynomial.
inline bool product_sum_verified() {
    return (det_symbolic(product_sum_matrix()) - product_sum_target()).is_zero();
}

// Tangent data at the rank-(n-1) point: a row x, a square block A, and a
// column y, all of matching size n-1.
struct TangentTriple {
    Matrix<Rational> x;
    Matrix<Rational> a;
    Matrix<Rational> y;

    TangentTriple(Matrix<Rational> x_in, Matrix<Rational> a_in, Matrix<Rational> y_in)
        : x(std::move(x_in)), a(std::move(a_in)), y(std::move(y_in)) {
        if (x.rows() != 1) throw std::invalid_argument("x must be a single row");
        if (y.cols() != 1) throw std::invalid_argument("y must be a single column");
        if (a.rows() != a.cols()) throw std::invalid_argument("A must be square");
        if (x.cols() != a.rows() || y.rows() != a.rows())
            throw std::invalid_argument("triple sizes disagree");
    }

    int size() const { return a.rows(); }
};

// Coefficients c_2..c_k of the solved graph w(t), computed two independent
// ways and compared exactly.
struct TaylorCoefficients {
    std::vector<Rational> graph;   // eliminating the bordered series matrix
    std::vector<Rational> powers;  // (-1)^k x A^(k-2) y directly
    bool agree = false;
};

inline TaylorCoefficients det_local_taylor(const TangentTriple& t, int k_max) {
    if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
    const int n = t.size();
    Matrix<Rational> shifted = Matrix<Rational>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shifted(i, j) += t.a(i, j);
    if (det_exact(shifted) == 0)
        throw std::invalid_argument("Id + A is singular, the graph has no expansion here");

    const std::size_t cutoff = static_cast<std::size_t>(k_max);
    TaylorCoefficients out;

    // Route one: border Id + tA with ty, tx and a zero corner, eliminate the
    // first n columns over truncated series (every pivot has constant term 1,
    // so the divisions stay in the ring), and read -w(t) off the corner.
    Matrix<TruncatedSeries> b(n + 1, n + 1, TruncatedSeries(cutoff));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b(i, j) = TruncatedSeries::monomial(cutoff, 1, t.a(i, j));
            if (i == j) b(i, j) += TruncatedSeries::constant(cutoff, Rational(1));
        }
    for (int i = 0; i < n; ++i) {
        b(i, n) = TruncatedSeries::monomial(cutoff, 1, t.y(i, 0));
        b(n, i) = TruncatedSeries::monomial(cutoff, 1, t.x(0, i));
    }
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i <= n; ++i) {
            if (b(i, k).is_zero()) continue;
            const TruncatedSeries factor = b(i, k) / b(k, k);
            for (int j = k; j <= n; ++j) b(i, j) -= factor * b(k, j);
        }
    const TruncatedSeries& corner = b(n, n);
    for (int k = 2; k <= k_max; ++k)
        out.graph.push_back(Rational(-corner.coeff(static_cast<std::size_t>(k))));

    // Route two: walk x A^(k-2) forward one power at a time.
    Matrix<Rational> row = t.x;
    for (int k = 2; k <= k_max; ++k) {
        Rational dot(0);
        for (int i = 0; i < n; ++i) dot += row(0, i) * t.y(i, 0);
        out.powers.push_back(k % 2 == 0 ? dot : Rational(-dot));
        row = row * t.a;
    }

    out.agree = out.graph == out.powers;
    return out;
}

}  // namespace cominpair

#endif
