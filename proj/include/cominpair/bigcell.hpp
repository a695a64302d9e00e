#ifndef COMINPAIR_BIGCELL_HPP
#define COMINPAIR_BIGCELL_HPP

// Big-cell pairings for five families of minimally embedded homogeneous
// varieties. A cell point is a small parameter matrix; its expansion is the
// full coordinate vector of the embedded point (minors, sub-Pfaffians, or
// monomial products). The naive pairing contracts two expansions coordinate
// by coordinate; the fast pairing evaluates the same number as one small
// determinant or Pfaffian. Both are exact and must agree on the nose.
//
// Family conventions:
//   grassmannian(k,n): x,y are k x (n-k); keys (I ⊆ rows, S ⊆ cols), value
//     det x[I,S]; fast form det(Id + xᵀy).
//   spinor(n): x,y are n x n skew; keys even I ⊆ {1..n}, value Pf_I; the
//     naive pairing weights coordinate I by (-1)^{sigma(I)+|I|/2}; fast form
//     is the 2n x 2n Pfaffian of the twisted primal block coupled to the
//     negated dual block through an identity (interleaved basis).
//   lagrangian(n): x,y symmetric n x n; the redundant all-minors expansion of
//     grassmannian type on both index sets; fast form det(Id + xy).
//   segre(n,p): x,y are p x n, one column per factor; keys (S = factor set,
//     I = choice tuple in {1..p}^|S|), value the product of chosen entries;
//     fast form the n(p+1) block determinant with -x on the top blocks and y
//     on the left blocks.
//   veronese(n,p): x,y are length-p vectors; identical to segre with the
//     single column repeated across all n factors.

#include "cominpair/counting.hpp"
#include "cominpair/linalg.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"
#include "cominpair/subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cominpair {

enum class Family { grassmannian, spinor, lagrangian, segre, veronese };

struct PairingFamily {
    Family kind;
    int k = 0; // grassmannian subspace dimension
    int n = 0; // grassmannian/spinor/lagrangian size; segre factor count; veronese degree
    int p = 0; // segre/veronese slots per factor

    static PairingFamily grassmannian(int k, int n) {
        if (k < 1 || k >= n) throw std::invalid_argument("grassmannian needs 1 <= k < n");
        return {Family::grassmannian, k, n, 0};
    }
    static PairingFamily spinor(int n) {
        if (n < 2) throw std::invalid_argument("spinor needs n >= 2");
        return {Family::spinor, 0, n, 0};
    }
    static PairingFamily lagrangian(int n) {
        if (n < 1) throw std::invalid_argument("lagrangian needs n >= 1");
        return {Family::lagrangian, 0, n, 0};
    }
    static PairingFamily segre(int n, int p) {
        if (n < 1 || p < 1) throw std::invalid_argument("segre needs n, p >= 1");
        return {Family::segre, 0, n, p};
    }
    static PairingFamily veronese(int n, int p) {
        if (n < 1 || p < 1) throw std::invalid_argument("veronese needs n, p >= 1");
        return {Family::veronese, 0, n, p};
    }

    bool operator==(const PairingFamily& o) const {
        return kind == o.kind && k == o.k && n == o.n && p == o.p;
    }

    // Number of coordinates in the expansion used here.
    std::uint64_t expansion_dimension() const {
        switch (kind) {
            case Family::grassmannian: return binomial(n, k);
            case Family::spinor: return std::uint64_t(1) << (n - 1);
            case Family::lagrangian: return binomial(2 * n, n);
            case Family::segre:
            case Family::veronese: {
                std::uint64_t d = 1;
                for (int i = 0; i < n; ++i) d *= static_cast<std::uint64_t>(p) + 1;
                return d;
            }
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
            case Family::grassmannian: return "grassmannian";
            case Family::spinor: return "spinor";
            case Family::lagrangian: return "lagrangian";
            case Family::segre: return "segre";
            case Family::veronese: return "veronese";
        }
        return "";
    }
};

struct BigCellPoint {
    PairingFamily family;
    Matrix<Rational> coords;

    BigCellPoint(PairingFamily fam, Matrix<Rational> m) : family(fam), coords(std::move(m)) {
        validate();
    }

  private:
    void validate() const {
        switch (family.kind) {
            case Family::grassmannian:
                if (coords.rows() != family.k || coords.cols() != family.n - family.k)
                    throw std::invalid_argument("grassmannian point must be k x (n-k)");
                break;
            case Family::spinor:
                SkewMatrix<Rational>::from_full(coords); // shape + skewness
                if (coords.rows() != family.n)
                    throw std::invalid_argument("spinor point must be n x n");
                break;
            case Family::lagrangian:
                SymMatrix<Rational>::from_full(coords);
                if (coords.rows() != family.n)
                    throw std::invalid_argument("lagrangian point must be n x n");
                break;
            case Family::segre:
                if (coords.rows() != family.p || coords.cols() != family.n)
                    throw std::invalid_argument("segre point must be p x n");
                break;
            case Family::veronese:
                if (!(coords.rows() == family.p && coords.cols() == 1)
                    && !(coords.rows() == 1 && coords.cols() == family.p))
                    throw std::invalid_argument("veronese point must be a length-p vector");
                break;
        }
    }
};

// Key of one expansion coordinate. I and S are 1-based; their meaning is
// family specific (see header comment). Ordered by (|I|, I, S) so expansions
// list coordinates by degree.
struct IndexKey {
    std::vector<int> I, S;
    bool operator<(const IndexKey& o) const {
        const std::size_t a = I.size(), b = o.I.size();
        return std::tie(a, I, S) < std::tie(b, o.I, o.S);
    }
};

inline bool operator==(const IndexKey& a, const IndexKey& b) { return a.I == b.I && a.S == b.S; }

struct SparseVector {
    PairingFamily family;
    std::map<IndexKey, Rational> coords; // zero coordinates omitted
};

namespace detail {

// Veronese points enter the shared segre machinery as a p x n matrix with the
// vector repeated across all factor columns.
template <typename T>
Matrix<T> veronese_as_segre(const PairingFamily& fam, const Matrix<T>& v) {
    Matrix<T> m(fam.p, fam.n);
    for (int j = 0; j < fam.p; ++j) {
        const T& entry = v.rows() == 1 ? v(0, j) : v(j, 0);
        for (int s = 0; s < fam.n; ++s) m(j, s) = entry;
    }
    return m;
}

template <typename T>
SkewMatrix<T> skew_from_full(const Matrix<T>& m) {
    SkewMatrix<T> z(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) z.set(i, j, m(i, j));
    return z;
}

template <typename T>
std::map<IndexKey, T> expand_coords(const PairingFamily& fam, const Matrix<T>& x) {
    std::map<IndexKey, T> out;
    auto put = [&out](std::vector<int> I, std::vector<int> S, T v) {
        if (v != T(0)) out.emplace(IndexKey{std::move(I), std::move(S)}, std::move(v));
    };
    switch (fam.kind) {
        case Family::grassmannian:
        case Family::lagrangian: {
            const int rows = x.rows(), cols = x.cols();
            for (int q = 0; q <= std::min(rows, cols); ++q)
                for (const auto& I : subsets_of_size(rows, q))
                    for (const auto& S : subsets_of_size(cols, q)) {
                        Matrix<T> sub(q, q);
                        for (int a = 0; a < q; ++a)
                            for (int b = 0; b < q; ++b) sub(a, b) = x(I[a] - 1, S[b] - 1);
                        put(I, S, det_bareiss(std::move(sub)));
                    }
            break;
        }
        case Family::spinor: {
            auto z = skew_from_full(x);
            for (const auto& I : even_subsets(fam.n)) {
                SkewMatrix<T> sub(static_cast<int>(I.size()));
                for (std::size_t a = 0; a < I.size(); ++a)
                    for (std::size_t b = a + 1; b < I.size(); ++b)
                        sub.set(static_cast<int>(a), static_cast<int>(b),
                                z.at(I[a] - 1, I[b] - 1));
                put(I, {}, pfaffian(sub));
            }
            break;
        }
        case Family::segre:
        case Family::veronese: {
            Matrix<T> m = fam.kind == Family::veronese ? veronese_as_segre(fam, x) : x;
            for (int q = 0; q <= fam.n; ++q)
                for (const auto& S : subsets_of_size(fam.n, q))
                    for (const auto& I : tuples_of_length(fam.p, q)) {
                        T v(1);
                        for (int l = 0; l < q; ++l) v = v * m(I[l] - 1, S[l] - 1);
                        put(I, S, std::move(v));
                    }
            break;
        }
    }
    return out;
}

// Interleaved 2n x 2n pairing form for the spinor family: basis order
// (e_1, e^1, e_2, e^2, ...), twisted primal entries in the e-e block, the
// negated dual entries in the e^-e^ block, and +1 couplings on e_i ^ e^i.
// Its Pfaffian equals the weighted sub-Pfaffian contraction.
template <typename T>
T spinor_fast(int n, const Matrix<T>& x, const Matrix<T>& y) {
    auto zt = sign_twist(skew_from_full(x));
    SkewMatrix<T> m(2 * n);
    for (int i = 0; i < n; ++i) {
        m.set(2 * i, 2 * i + 1, T(1));
        for (int j = i + 1; j < n; ++j) {
            m.set(2 * i, 2 * j, zt.at(i, j));
            m.set(2 * i + 1, 2 * j + 1, T(-y(i, j)));
        }
    }
    return pfaffian(m);
}

template <typename T>
T fast_pair_impl(const PairingFamily& fam, const Matrix<T>& x, const Matrix<T>& y) {
    switch (fam.kind) {
        case Family::grassmannian: {
            Matrix<T> prod = x.transposed() * y;
            const int m = prod.rows();
            for (int i = 0; i < m; ++i) prod(i, i) += T(1);
            return det_bareiss(std::move(prod));
        }
        case Family::spinor:
            return spinor_fast(fam.n, x, y);
        case Family::lagrangian: {
            Matrix<T> prod = x * y;
            for (int i = 0; i < fam.n; ++i) prod(i, i) += T(1);
            return det_bareiss(std::move(prod));
        }
        case Family::segre:
        case Family::veronese: {
            Matrix<T> xs = fam.kind == Family::veronese ? veronese_as_segre(fam, x) : x;
            Matrix<T> ys = fam.kind == Family::veronese ? veronese_as_segre(fam, y) : y;
            const int n = fam.n, p = fam.p;
            Matrix<T> m = Matrix<T>::identity(n * (p + 1));
            for (int j = 0; j < p; ++j)
                for (int s = 0; s < n; ++s) {
                    m(s, n * (j + 1) + s) = -xs(j, s);
                    m(n * (j + 1) + s, s) = ys(j, s);
                }
            return det_bareiss(std::move(m));
        }
    }
    throw std::logic_error("unreachable family");
}

template <typename T>
Matrix<T> counted_matrix(const Matrix<Rational>& m, OpCounts* tally) {
    Matrix<T> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j), tally);
    return out;
}

} // namespace detail

inline SparseVector expand(const BigCellPoint& pt) {
    return {pt.family, detail::expand_coords(pt.family, pt.coords)};
}

// Dual expansions carry the same values under the same keys; the transpose
// bookkeeping of the dual minors cancels numerically, and the spinor sign
// weight is applied by the pairing itself.
inline SparseVector expand_dual(const BigCellPoint& pt) { return expand(pt); }

inline Rational naive_pair(const SparseVector& v, const SparseVector& dual) {
    if (!(v.family == dual.family))
        throw std::invalid_argument("cannot pair expansions of different families");
    const bool spinor_weight = v.family.kind == Family::spinor;
    const auto& small = v.coords.size() <= dual.coords.size() ? v.coords : dual.coords;
    const auto& large = v.coords.size() <= dual.coords.size() ? dual.coords : v.coords;
    Rational sum(0);
    for (const auto& [key, val] : small) {
        auto it = large.find(key);
        if (it == large.end()) continue;
        Rational term = val * it->second;
        if (spinor_weight && subset_sign(IndexSubset(key.I, v.family.n)) < 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

inline Rational fast_pair(const BigCellPoint& x, const BigCellPoint& y) {
    if (!(x.family == y.family))
        throw std::invalid_argument("cannot pair points of different families");
    return detail::fast_pair_impl(x.family, x.coords, y.coords);
}

// Exact arithmetic-operation tallies of one fast_pair call on the given
// inputs (divisions counted with multiplications).
inline OpCounts count_operations(const BigCellPoint& x, const BigCellPoint& y) {
    if (!(x.family == y.family))
        throw std::invalid_argument("cannot pair points of different families");
    OpCounts tally;
    using C = Counted<Rational>;
    detail::fast_pair_impl(x.family, detail::counted_matrix<C>(x.coords, &tally),
                           detail::counted_matrix<C>(y.coords, &tally));
    return tally;
}

// Same tally for the naive pipeline: both expansions plus the weighted dot
// product. Used to report how much work the fast form avoids.
inline OpCounts count_operations_naive(const BigCellPoint& x, const BigCellPoint& y) {
    if (!(x.family == y.family))
        throw std::invalid_argument("cannot pair points of different families");
    OpCounts tally;
    using C = Counted<Rational>;
    auto vx = detail::expand_coords(x.family, detail::counted_matrix<C>(x.coords, &tally));
    auto vy = detail::expand_coords(y.family, detail::counted_matrix<C>(y.coords, &tally));
    const bool spinor_weight = x.family.kind == Family::spinor;
    C sum(0);
    for (const auto& [key, val] : vx) {
        auto it = vy.find(key);
        if (it == vy.end()) continue;
        C term = val * it->second;
        if (spinor_weight && subset_sign(IndexSubset(key.I, x.family.n)) < 0)
            sum -= term;
        else
            sum += term;
    }
    return tally;
}

} // namespace cominpair

#endif
