#ifndef VALCALC_SCALAR_HPP
#define VALCALC_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "errors.hpp"

namespace valcalc {

// Exact rational scalar. GMP-backed; kept canonical (reduced, positive
// denominator) by constructing through the (num, den) constructor, which
// canonicalizes, never through the raw string constructor, which does not.
using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Scalar make_scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    return Scalar(num, den);
}

// Accepts "p/q", "p", and an optional leading sign on either part.
inline Scalar parse_scalar(const std::string& s) {
    auto bad = [&]() -> validation_error {
        return validation_error("malformed rational literal '" + s + "'");
    };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Integer(s), Integer(1));
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        return make_scalar(Integer(num), Integer(den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

// Canonical "p/q" form, denominator always printed.
inline std::string scalar_to_string(const Scalar& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

inline int signum(const Scalar& x) { return x.sign(); }

inline Scalar abs_scalar(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

} // namespace valcalc

#endif
