#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mh {

// Exact arbitrary-precision scalars. mpq_class keeps gcd(num,den)=1 and
// den >= 1 after canonicalize(), which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2), nonnegative.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Rational g(int_gcd(a.get_num(), b.get_num()), int_lcm(a.get_den(), b.get_den()));
    g.canonicalize();
    return abs(g);
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e > 0) return Rational(0);
        throw std::domain_error("rational_pow: zero base with negative exponent");
    }
    Rational b = base;
    if (e < 0) {
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::string rational_str(const Rational& a) { return a.get_str(); }

}  // namespace mh
