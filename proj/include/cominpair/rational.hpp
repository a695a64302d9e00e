#ifndef COMINPAIR_RATIONAL_HPP
#define COMINPAIR_RATIONAL_HPP

// Exact scalar layer. Every quantity in the library is an arbitrary-precision
// rational (GMP mpq_class, always kept in lowest terms with positive
// denominator) or an arbitrary-precision integer (mpz_class).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cominpair {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p" or "p/q" with q > 0 after canonicalization. Anything else
// (empty string, stray characters, zero denominator) is rejected.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("bad rational literal: " + text);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (mpq_denref(r.get_mpq_t())->_mp_size == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

// "p/q" for non-integers, plain "p" otherwise (mpq_class's canonical form).
inline std::string format_rational(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::domain_error("integer out of int64 range");
    return r.get_num().get_si();
}

} // namespace cominpair

#endif
