#pragma once
// Exact integer and rational arithmetic, GMP-backed.
#include <gmpxx.h>
#include <cstdint>
#include <string>
#include "errors.hpp"

namespace secular {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, r); zero when r < 0 or r > n; negative n rejected
inline BigInt binomial(long long n, long long r) {
    require(n >= 0, "binomial requires n >= 0");
    if (r < 0 || r > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

// extended convention C(n, r) = 0 for n < 0 (case-split formulas rely on
// vanishing terms below their range)
inline BigInt binomial_or_zero(long long n, long long r) {
    if (n < 0) return BigInt(0);
    return binomial(n, r);
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline long long pow_ll(long long base, unsigned e) {
    long long out = 1;
    while (e--) out *= base;
    return out;
}

// canonical rational: gcd(num, den) = 1, den > 0
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    require(den != 0, "rational denominator must be nonzero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out(1);
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
}

// rendered as "num/den" in canonical form ("5/1" keeps the slash: one
// unambiguous shape for every rational column)
inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// accepts "p/q" or a bare integer
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(s);
            return Rational(n);
        }
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw precondition_error("precondition violated: cannot parse rational '" + s + "'");
    }
}

inline BigInt from_u128(unsigned __int128 v) {
    BigInt hi(static_cast<unsigned long>(v >> 64));
    hi <<= 64;
    return hi + BigInt(static_cast<unsigned long>(v & ~0ull));
}

} // namespace secular
