#pragma once
// Dense polynomial arithmetic over the prime field Z/q. Coefficients are kept
// reduced to [0, q) with no leading zeros, so degree() is just size-1 and the
// zero polynomial has degree -1. Monic polynomials of degree d are encoded as
// base-q integers built from the d low coefficients, which makes a "short
// interval" (fixed high coefficients) a contiguous block of codes.
#include <string>
#include <utility>
#include <vector>
#include "errors.hpp"

namespace secular {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// inverse of a modulo prime q, via extended Euclid
inline int inv_mod(int a, int q) {
    a %= q;
    if (a < 0) a += q;
    require(a != 0, "zero has no modular inverse");
    int r0 = q, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int t = r0 / r1;
        r0 -= t * r1;
        std::swap(r0, r1);
        s0 -= t * s1;
        std::swap(s0, s1);
    }
    s0 %= q;
    if (s0 < 0) s0 += q;
    return s0;
}

struct FqPoly {
    int q = 0;
    std::vector<int> c; // c[i] multiplies t^i; no trailing zeros

    FqPoly() = default;
    FqPoly(int q_, std::vector<int> coeffs) : q(q_), c(std::move(coeffs)) {
        require(q >= 2 && is_prime(q), "coefficient field order must be prime");
        for (auto& v : c) {
            v %= q;
            if (v < 0) v += q;
        }
        trim();
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }

    bool operator==(const FqPoly& o) const { return q == o.q && c == o.c; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }
};

inline FqPoly fq_const(int q, int v) { return FqPoly(q, {v}); }

inline FqPoly fq_monomial(int q, int deg, int lead = 1) {
    std::vector<int> c(deg + 1, 0);
    c[deg] = lead;
    return FqPoly(q, std::move(c));
}

inline FqPoly fq_add(const FqPoly& a, const FqPoly& b) {
    require(a.q == b.q, "operands must share the coefficient field");
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.q;
    return FqPoly(a.q, std::move(c));
}

inline FqPoly fq_sub(const FqPoly& a, const FqPoly& b) {
    require(a.q == b.q, "operands must share the coefficient field");
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) - b.coeff(i) + a.q) % a.q;
    return FqPoly(a.q, std::move(c));
}

inline FqPoly fq_mul(const FqPoly& a, const FqPoly& b) {
    require(a.q == b.q, "operands must share the coefficient field");
    if (a.is_zero() || b.is_zero()) return FqPoly(a.q, {});
    std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % a.q;
    }
    return FqPoly(a.q, std::move(c));
}

// quotient and remainder with deg(rem) < deg(b); b must be nonzero
inline std::pair<FqPoly, FqPoly> fq_divmod(const FqPoly& a, const FqPoly& b) {
    require(a.q == b.q, "operands must share the coefficient field");
    require(!b.is_zero(), "division by the zero polynomial");
    const int q = a.q;
    std::vector<int> rem = a.c;
    int db = b.degree();
    if (a.degree() < db) return {FqPoly(q, {}), a};
    std::vector<int> quot(a.degree() - db + 1, 0);
    const int lead_inv = inv_mod(b.c[db], q);
    for (int i = a.degree(); i >= db; --i) {
        int coef = rem[i] % q;
        if (coef == 0) continue;
        int f = static_cast<int>((static_cast<long long>(coef) * lead_inv) % q);
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] - f * b.c[j]) % q;
    }
    return {FqPoly(q, std::move(quot)), FqPoly(q, std::move(rem))};
}

inline FqPoly fq_mod(const FqPoly& a, const FqPoly& b) { return fq_divmod(a, b).second; }

inline bool fq_divides(const FqPoly& d, const FqPoly& a) { return fq_mod(a, d).is_zero(); }

// monic greatest common divisor
inline FqPoly fq_gcd(FqPoly a, FqPoly b) {
    require(a.q == b.q, "operands must share the coefficient field");
    while (!b.is_zero()) {
        FqPoly r = fq_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.is_monic()) {
        int f = inv_mod(a.c.back(), a.q);
        for (auto& v : a.c) v = static_cast<int>((static_cast<long long>(v) * f) % a.q);
    }
    return a;
}

inline FqPoly fq_derivative(const FqPoly& a) {
    if (a.degree() <= 0) return FqPoly(a.q, {});
    std::vector<int> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = static_cast<int>((static_cast<long long>(a.c[i]) * (i % a.q)) % a.q);
    return FqPoly(a.q, std::move(c));
}

inline FqPoly fq_pow_mod(FqPoly base, long long e, const FqPoly& mod) {
    require(e >= 0, "exponent must be nonnegative");
    require(mod.degree() >= 1, "modulus must have positive degree");
    FqPoly acc = fq_const(base.q, 1);
    base = fq_mod(base, mod);
    while (e > 0) {
        if (e & 1) acc = fq_mod(fq_mul(acc, base), mod);
        base = fq_mod(fq_mul(base, base), mod);
        e >>= 1;
    }
    return acc;
}

inline int fq_eval(const FqPoly& a, int x) {
    x %= a.q;
    if (x < 0) x += a.q;
    long long acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = (acc * x + a.c[i]) % a.q;
    return static_cast<int>(acc);
}

// base-q code of a monic polynomial: the low deg(f) coefficients as digits
inline long long code_of_monic(const FqPoly& f) {
    require(f.is_monic(), "only monic polynomials are code-addressable");
    long long code = 0;
    for (int i = f.degree() - 1; i >= 0; --i) code = code * f.q + f.c[i];
    return code;
}

inline FqPoly monic_of_code(int q, int deg, long long code) {
    require(deg >= 0, "degree must be nonnegative");
    require(code >= 0, "code must be nonnegative");
    std::vector<int> c(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<int>(code % q);
        code /= q;
    }
    require(code == 0, "code exceeds the monic block for this degree");
    c[deg] = 1;
    return FqPoly(q, std::move(c));
}

// any residue of degree < deg_bound, coded the same way (no monic constraint)
inline FqPoly residue_of_code(int q, int deg_bound, long long code) {
    std::vector<int> c(deg_bound > 0 ? deg_bound : 0, 0);
    for (int i = 0; i < deg_bound; ++i) {
        c[i] = static_cast<int>(code % q);
        code /= q;
    }
    require(code == 0, "code exceeds the residue block for this degree bound");
    return FqPoly(q, std::move(c));
}

inline std::string fq_to_string(const FqPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        int v = f.c[i];
        if (v == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(v);
        } else {
            if (v != 1) out += std::to_string(v);
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

// squarefree test over Z/q: gcd(f, f') must be constant, and a vanishing
// derivative of a nonconstant f means f is a q-th power
inline bool fq_is_squarefree(const FqPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    FqPoly d = fq_derivative(f);
    if (d.is_zero()) return false;
    return fq_gcd(f, d).degree() == 0;
}

// distinct monic irreducible factors of a squarefree monic polynomial, by
// trial division in (degree, code) order; desk scale only
inline std::vector<FqPoly> fq_factor_squarefree(const FqPoly& f) {
    require(f.is_monic(), "factorization expects a monic polynomial");
    require(fq_is_squarefree(f), "modulus must be squarefree");
    std::vector<FqPoly> factors;
    FqPoly rest = f;
    for (int d = 1; rest.degree() >= 1 && d <= rest.degree(); ++d) {
        if (2 * d > rest.degree()) break;
        long long block = 1;
        for (int i = 0; i < d; ++i) block *= f.q;
        for (long long code = 0; code < block && rest.degree() >= 2 * d; ++code) {
            FqPoly cand = monic_of_code(f.q, d, code);
            if (fq_divides(cand, rest)) {
                factors.push_back(cand); // smallest divisor found so far: irreducible
                rest = fq_divmod(rest, cand).first;
            }
        }
    }
    if (rest.degree() >= 1) factors.push_back(rest);
    return factors;
}

// smallest generator of the multiplicative group of Z/q
inline int primitive_root(int q) {
    require(is_prime(q), "primitive root needs a prime modulus");
    if (q == 2) return 1;
    int m = q - 1;
    std::vector<int> prime_factors;
    int mm = m;
    for (int d = 2; d * d <= mm; ++d)
        if (mm % d == 0) {
            prime_factors.push_back(d);
            while (mm % d == 0) mm /= d;
        }
    if (mm > 1) prime_factors.push_back(mm);
    for (int g = 2; g < q; ++g) {
        bool ok = true;
        for (int p : prime_factors) {
            long long acc = 1, base = g, e = m / p;
            while (e > 0) {
                if (e & 1) acc = acc * base % q;
                base = base * base % q;
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    require_verified(false, "no primitive root found below the modulus");
    return 0;
}

} // namespace secular
