#ifndef COMINPAIR_LINALG_HPP
#define COMINPAIR_LINALG_HPP

// Exact linear algebra: determinants (fraction-free Bareiss over cleared
// denominators), minors, Pfaffians by skew-symmetric elimination, principal
// sub-Pfaffians, and the index-sign / sign-twist maps that relate a skew
// matrix to its alternating twist.
//
// Pivot selection everywhere is "first nonzero in row-major order"; row or
// column exchanges track the sign change explicitly. Eliminations skip
// multiplications by unit pivots and terms with a zero operand: the values
// are unchanged and instrumented runs then report only essential work.

#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cominpair {

// Bareiss one-step division is exact over any integral domain; over a field
// it is ordinary division. Used both for the generic templated path and, via
// det_exact, on denominator-cleared integer matrices.
template <typename T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != T(0)) { r = i; break; }
            if (r < 0) return T(0);
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        const bool unit_prev = prev == T(1);
        const bool unit_piv = m(k, k) == T(1);
        for (int i = k + 1; i < n; ++i) {
            const T& mik = m(i, k);
            const bool row_hit = mik != T(0);
            for (int j = k + 1; j < n; ++j) {
                T num(0);
                if (m(i, j) != T(0)) num = unit_piv ? m(i, j) : m(i, j) * m(k, k);
                if (row_hit && m(k, j) != T(0)) {
                    T b = mik * m(k, j);
                    num = num == T(0) ? T(-b) : num - b;
                }
                m(i, j) = (unit_prev || num == T(0)) ? num : num / prev;
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    return negate ? T(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Clears denominators once for the whole matrix, runs integer Bareiss, then
// restores the scale: det(L*M) = L^n det(M).
inline Rational det_exact(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    BigInt scale(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den().get_mpz_t());
            scale = l;
        }
    Matrix<BigInt> z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational cleared = m(i, j) * Rational(scale);
            z(i, j) = cleared.get_num();
        }
    BigInt d = det_bareiss(std::move(z));
    BigInt denom(1);
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    Rational out(d, denom);
    out.canonicalize();
    return out;
}

// Minor on explicit row set I and column set S (both 1-based, |I| = |S|).
// The empty minor is 1 by convention.
inline Rational minor_det(const Matrix<Rational>& m, const IndexSubset& rows,
                          const IndexSubset& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs equally sized row and column sets");
    const int p = rows.size();
    Matrix<Rational> sub(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) sub(i, j) = m(rows[i] - 1, cols[j] - 1);
    return det_exact(sub);
}

// Pfaffian by congruence elimination on 2x2 pivot blocks. Each step pivots on
// the first nonzero entry of the current top row (swapping it into position
// k+1 flips the sign), multiplies it into the result, and applies the rank-2
// Schur update to the trailing submatrix. A fully zero top row means the
// matrix is singular and the Pfaffian vanishes.
template <typename T>
T pfaffian(const SkewMatrix<T>& z) {
    const int n = z.size();
    if (n == 0) return T(1);
    if (n % 2 == 1) return T(0);
    if (n == 2) return z.at(0, 1);
    if (n == 4)
        return z.at(0, 1) * z.at(2, 3) - z.at(0, 2) * z.at(1, 3) + z.at(0, 3) * z.at(1, 2);

    Matrix<T> m = z.to_full();
    T result(1);
    bool negate = false;
    std::vector<T> tau(n, T(0));
    for (int k = 0; k < n; k += 2) {
        int piv = -1;
        for (int j = k + 1; j < n; ++j)
            if (m(k, j) != T(0)) { piv = j; break; }
        if (piv < 0) return T(0);
        if (piv != k + 1) {
            for (int i = 0; i < n; ++i) std::swap(m(i, piv), m(i, k + 1));
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k + 1, j));
            negate = !negate;
        }
        const T p = m(k, k + 1);
        if (k == 0)
            result = p;
        else if (p != T(1))
            result *= p;
        if (k + 2 >= n) break;
        const bool unit_piv = p == T(1);
        for (int j = k + 2; j < n; ++j)
            tau[j] = m(k, j) == T(0) ? T(0) : (unit_piv ? m(k, j) : m(k, j) / p);
        for (int i = k + 2; i < n; ++i) {
            const T& vi = m(k + 1, i);
            if (vi == T(0) && tau[i] == T(0)) continue;
            for (int j = i + 1; j < n; ++j) {
                T delta(0);
                if (vi != T(0) && tau[j] != T(0)) delta = vi * tau[j];
                if (tau[i] != T(0) && m(k + 1, j) != T(0)) {
                    T b = tau[i] * m(k + 1, j);
                    delta = delta == T(0) ? T(-b) : delta - b;
                }
                if (delta != T(0)) {
                    m(i, j) = m(i, j) == T(0) ? delta : m(i, j) + delta;
                    m(j, i) = T(-m(i, j));
                }
            }
        }
    }
    return negate ? T(-result) : result;
}

// Pfaffian of the principal submatrix on an even-size index set (1-based).
template <typename T>
T sub_pfaffian(const SkewMatrix<T>& z, const IndexSubset& idx) {
    if (idx.size() % 2 == 1)
        throw std::domain_error("sub-Pfaffian index set must have even size");
    SkewMatrix<T> sub(idx.size());
    for (int a = 0; a < idx.size(); ++a)
        for (int b = a + 1; b < idx.size(); ++b) sub.set(a, b, z.at(idx[a] - 1, idx[b] - 1));
    return pfaffian(sub);
}

// (-1)^{sigma(I) + |I|/2} with sigma(I) the sum of the (1-based) indices.
inline int subset_sign(const IndexSubset& idx) {
    if (idx.size() % 2 == 1) throw std::domain_error("index sign needs an even-size set");
    long sigma = 0;
    for (int k = 0; k < idx.size(); ++k) sigma += idx[k];
    return (sigma + idx.size() / 2) % 2 == 0 ? 1 : -1;
}

// Entrywise alternating twist: out_ij = (-1)^{i+j+1} z_ij (1-based indices).
template <typename T>
SkewMatrix<T> sign_twist(const SkewMatrix<T>& z) {
    SkewMatrix<T> out(z.size());
    for (int i = 0; i < z.size(); ++i)
        for (int j = i + 1; j < z.size(); ++j) {
            const int s = ((i + 1) + (j + 1) + 1) % 2 == 0 ? 1 : -1;
            out.set(i, j, s > 0 ? z.at(i, j) : T(-z.at(i, j)));
        }
    return out;
}

// Exact rank by Gaussian elimination over the rationals.
inline int rank_exact(Matrix<Rational> m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j) std::swap(m(rank, j), m(piv, j));
        for (int i = rank + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(rank, col);
            for (int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace cominpair

#endif
