#ifndef COMINPAIR_SERIES_HPP
#define COMINPAIR_SERIES_HPP

// Power series in one variable t, truncated at a fixed cutoff: arithmetic on
// the coefficients c_0..c_cutoff of sum c_i t^i, discarding everything past
// the cutoff. Division requires the divisor's constant term to be a unit,
// which is all Gaussian elimination over this ring ever needs.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cominpair/rational.hpp"

namespace cominpair {

class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t cutoff) : c_(cutoff + 1, Rational(0)) {}

    static TruncatedSeries constant(std::size_t cutoff, const Rational& value) {
        TruncatedSeries s(cutoff);
        s.c_[0] = value;
        return s;
    }

    // value * t^power, or the zero series when the power is past the cutoff.
    static TruncatedSeries monomial(std::size_t cutoff, std::size_t power,
                                    const Rational& value) {
        TruncatedSeries s(cutoff);
        if (power <= cutoff) s.c_[power] = value;
        return s;
    }

    std::size_t cutoff() const { return c_.size() - 1; }

    const Rational& coeff(std::size_t i) const {
        if (i >= c_.size()) throw std::invalid_argument("series coefficient past the cutoff");
        return c_[i];
    }

    bool is_zero() const {
        for (const Rational& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const TruncatedSeries& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const TruncatedSeries& rhs) const { return !(*this == rhs); }

    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (Rational& v : out.c_) v = -v;
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        check_cutoff(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        check_cutoff(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
        return *this;
    }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const {
        TruncatedSeries out = *this;
        out += rhs;
        return out;
    }
    TruncatedSeries operator-(const TruncatedSeries& rhs) const {
        TruncatedSeries out = *this;
        out -= rhs;
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const {
        check_cutoff(rhs);
        TruncatedSeries out(cutoff());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j) {
                if (rhs.c_[j] == 0) continue;
                out.c_[i + j] += c_[i] * rhs.c_[j];
            }
        }
        return out;
    }

    // Long division: peel off one coefficient of the quotient at a time.
    TruncatedSeries operator/(const TruncatedSeries& rhs) const {
        check_cutoff(rhs);
        if (rhs.c_[0] == 0)
            throw std::invalid_argument("series division by a non-unit (zero constant term)");
        TruncatedSeries q(cutoff());
        std::vector<Rational> rem = c_;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            q.c_[k] = rem[k] / rhs.c_[0];
            if (q.c_[k] == 0) continue;
            for (std::size_t j = 0; k + j < c_.size(); ++j) rem[k + j] -= q.c_[k] * rhs.c_[j];
        }
        return q;
    }

  private:
    void check_cutoff(const TruncatedSeries& rhs) const {
        if (c_.size() != rhs.c_.size())
            throw std::invalid_argument("series cutoffs disagree");
    }

    std::vector<Rational> c_;
};

}  // namespace cominpair

#endif
