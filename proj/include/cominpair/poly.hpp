#ifndef COMINPAIR_POLY_HPP
#define COMINPAIR_POLY_HPP

// Sparse multivariate polynomials over the rationals: just enough ring
// arithmetic to expand small symbolic determinants and compare the result
// against a hand-written polynomial, term by term.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cominpair/rational.hpp"

namespace cominpair {

class MultiPoly {
  public:
    // Exponent vector, one entry per variable.
    using Monomial = std::vector<unsigned>;

    explicit MultiPoly(std::size_t variables = 0) : vars_(variables) {}

    static MultiPoly constant(std::size_t variables, const Rational& c) {
        MultiPoly p(variables);
        if (c != 0) p.terms_.emplace(Monomial(variables, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t variables, std::size_t index) {
        if (index >= variables) throw std::invalid_argument("variable index out of range");
        MultiPoly p(variables);
        Monomial m(variables, 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    std::size_t variables() const { return vars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Largest exponent sum over the stored terms; 0 for the zero polynomial.
    unsigned total_degree() const {
        unsigned best = 0;
        for (const auto& [m, c] : terms_) {
            unsigned sum = 0;
            for (unsigned e : m) sum += e;
            best = std::max(best, sum);
        }
        return best;
    }

    bool operator==(const MultiPoly& rhs) const {
        return vars_ == rhs.vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& rhs) {
        check_ring(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& rhs) {
        check_ring(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }

    MultiPoly operator+(const MultiPoly& rhs) const {
        MultiPoly out = *this;
        out += rhs;
        return out;
    }
    MultiPoly operator-(const MultiPoly& rhs) const {
        MultiPoly out = *this;
        out -= rhs;
        return out;
    }

    MultiPoly operator*(const MultiPoly& rhs) const {
        check_ring(rhs);
        MultiPoly out(vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                Monomial m(vars_);
                for (std::size_t v = 0; v < vars_; ++v) m[v] = ma[v] + mb[v];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != vars_)
            throw std::invalid_argument("evaluation point has wrong number of coordinates");
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (std::size_t v = 0; v < vars_; ++v)
                for (unsigned e = 0; e < m[v]; ++e) term *= point[v];
            total += term;
        }
        return total;
    }

    // Terms in the map's exponent-lexicographic order, e.g. "1 - 2*x1*x3^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                out << (c < 0 ? "-" : "");
            else
                out << (c < 0 ? " - " : " + ");
            first = false;
            std::string factors;
            for (std::size_t v = 0; v < vars_; ++v) {
                if (m[v] == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += "x" + std::to_string(v + 1);
                if (m[v] > 1) factors += "^" + std::to_string(m[v]);
            }
            if (factors.empty())
                out << mag.get_str();
            else if (mag == 1)
                out << factors;
            else
                out << mag.get_str() << "*" << factors;
        }
        return out.str();
    }

  private:
    void check_ring(const MultiPoly& rhs) const {
        if (vars_ != rhs.vars_)
            throw std::invalid_argument("polynomials live in different variable sets");
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::size_t vars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace cominpair

#endif
