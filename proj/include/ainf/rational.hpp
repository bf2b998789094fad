#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ainf {

// Exact rational scalar. All coefficient arithmetic in the library is done
// over Q so that operator identities are decidable by normalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "3/4".
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical text form: "n" when the denominator is 1, else "n/d".
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace ainf
