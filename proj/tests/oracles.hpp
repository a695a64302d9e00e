#ifndef COMINPAIR_TESTS_ORACLES_HPP
#define COMINPAIR_TESTS_ORACLES_HPP

// Test-only reference implementations. These deliberately share no code with
// the elimination-based routines they check: the determinant is a first-row
// cofactor expansion, the Pfaffian is the signed sum over perfect matchings
// obtained by always pairing the lowest remaining index.

#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"

#include <vector>

namespace cominpair::testing {

inline Rational det_cofactor_oracle(const Matrix<Rational>& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Rational> sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(0, j) * det_cofactor_oracle(sub);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

// Pf(A) = sum_{j} (-1)^j a_{i0,j} Pf(A with i0 and j removed), i0 the lowest
// live index and the sign alternating with the number of live indices skipped.
inline Rational pfaffian_matchsum_oracle(const Matrix<Rational>& m, std::vector<int> live) {
    if (live.empty()) return Rational(1);
    const int i0 = live.front();
    Rational sum(0);
    int sign = 1;
    for (std::size_t k = 1; k < live.size(); ++k) {
        const int j = live[k];
        if (m(i0, j) != 0) {
            std::vector<int> rest;
            for (std::size_t t = 1; t < live.size(); ++t)
                if (t != k) rest.push_back(live[t]);
            const Rational term = m(i0, j) * pfaffian_matchsum_oracle(m, rest);
            if (sign > 0)
                sum += term;
            else
                sum -= term;
        }
        sign = -sign;
    }
    return sum;
}

inline Rational pfaffian_matchsum_oracle(const Matrix<Rational>& m) {
    if (m.rows() % 2 == 1) return Rational(0);
    std::vector<int> live(m.rows());
    for (int i = 0; i < m.rows(); ++i) live[i] = i;
    return pfaffian_matchsum_oracle(m, live);
}

} // namespace cominpair::testing

#endif
