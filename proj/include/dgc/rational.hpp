#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dgc {

// Exact rational coefficients. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0), which is the invariant Chain relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Formats as "p" for integers and "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace dgc
