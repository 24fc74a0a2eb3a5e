#pragma once

// Exact arithmetic kernel: sparse bivariate polynomials in (q,t) over Q,
// canonical rational functions RatQT, their univariate analogues in the
// path parameter r, the eta(A|B) substitution t = r^A, q = r^B, and exact
// limit extraction at r = 1.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mh/rational.hpp"

namespace mh {

struct ExpQT {
    int q = 0;
    int t = 0;
    int total() const { return q + t; }
    friend bool operator==(const ExpQT&, const ExpQT&) = default;
};

// Lexicographic with q before t, descending, so map iteration is already in
// canonical print order (highest q-power first, ties by t-power).
struct LexDescQT {
    bool operator()(const ExpQT& a, const ExpQT& b) const {
        if (a.q != b.q) return a.q > b.q;
        return a.t > b.t;
    }
};

class PolyR;

class PolyQT {
public:
    using TermMap = std::map<ExpQT, Rational, LexDescQT>;

    PolyQT() = default;
    PolyQT(long c) { if (c != 0) terms_[{0, 0}] = Rational(c); }
    PolyQT(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }

    static PolyQT monomial(const Rational& c, int eq, int et);
    static PolyQT var_q() { return monomial(1, 1, 0); }
    static PolyQT var_t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int deg_q() const;
    int deg_t() const;
    int total_degree() const;
    const TermMap& terms() const { return terms_; }

    // Leading coefficient in lex descending order.
    const Rational& leading_coeff() const;

    void add_term(const ExpQT& e, const Rational& c);

    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    PolyQT operator-() const;
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
    PolyQT& operator*=(const PolyQT& o) { *this = *this * o; return *this; }
    PolyQT& operator*=(const Rational& c);

    friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.terms_ == b.terms_; }

    // gcd of all coefficients, positive (0 for the zero polynomial).
    Rational content() const;
    // this / content, leading coefficient made positive; zero stays zero.
    PolyQT primitive_positive() const;

    Rational eval_one() const;                 // q = t = 1
    Rational eval(const Rational& q0, const Rational& t0) const;
    PolyQT subst_q_to_t() const;               // q := t
    PolyR substitute_eta(int A, int B) const;  // t = r^A, q = r^B

    std::string to_string() const;

private:
    TermMap terms_;  // invariant: no zero coefficients stored
};

PolyQT poly_pow(const PolyQT& base, unsigned long e);

extern long g_gcd_calls, g_gcd_probe_hits, g_gcd_heu, g_gcd_prs;
extern double g_gcd_time;
extern double g_ph_convert, g_ph_prim, g_ph_probe, g_ph_heu, g_ph_cof, g_ph_final;

// Canonical gcd: primitive (integer content 1) with positive leading
// coefficient in lex order; poly_gcd(0, b) is b normalized the same way.
PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);

// Exact division; throws std::domain_error if not exact.
PolyQT poly_divexact(const PolyQT& a, const PolyQT& b);

// ---------------------------------------------------------------------------
// Univariate polynomials in the path parameter r.

class PolyR {
public:
    using TermMap = std::map<int, Rational, std::greater<int>>;

    PolyR() = default;
    PolyR(long c) { if (c != 0) terms_[0] = Rational(c); }
    PolyR(const Rational& c) { if (c != 0) terms_[0] = c; }
    static PolyR monomial(const Rational& c, int e);
    static PolyR var_r() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }
    const TermMap& terms() const { return terms_; }
    const Rational& leading_coeff() const;

    void add_term(int e, const Rational& c);

    PolyR& operator+=(const PolyR& o);
    PolyR& operator-=(const PolyR& o);
    PolyR operator-() const;
    friend PolyR operator+(PolyR a, const PolyR& b) { return a += b; }
    friend PolyR operator-(PolyR a, const PolyR& b) { return a -= b; }
    friend PolyR operator*(const PolyR& a, const PolyR& b);
    PolyR& operator*=(const Rational& c);
    friend bool operator==(const PolyR& a, const PolyR& b) { return a.terms_ == b.terms_; }

    Rational content() const;
    PolyR primitive_positive() const;
    Rational eval_one() const;  // r = 1

    // Multiplicity of the factor (1-r), with the cofactor after stripping.
    int order_at_one(PolyR* cofactor = nullptr) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

PolyR polyr_gcd(const PolyR& a, const PolyR& b);
PolyR polyr_divexact(const PolyR& a, const PolyR& b);

// ---------------------------------------------------------------------------
// Canonical rational functions in (q,t): gcd(num,den) = 1, integer
// coefficients with joint content 1, den's lex leading coefficient
// positive. Zero is 0/1.

class RatQT {
public:
    RatQT() : num_(), den_(1) {}
    RatQT(long c);
    RatQT(const Rational& c);
    RatQT(const PolyQT& p);
    RatQT(PolyQT num, PolyQT den);

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;  // requires is_constant()

    RatQT operator-() const;
    RatQT& operator+=(const RatQT& o);
    RatQT& operator-=(const RatQT& o);
    RatQT& operator*=(const RatQT& o);
    RatQT& operator/=(const RatQT& o);
    friend RatQT operator+(RatQT a, const RatQT& b) { return a += b; }
    friend RatQT operator-(RatQT a, const RatQT& b) { return a -= b; }
    friend RatQT operator*(RatQT a, const RatQT& b) { return a *= b; }
    friend RatQT operator/(RatQT a, const RatQT& b) { return a /= b; }
    friend bool operator==(const RatQT& a, const RatQT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatQT inverse() const;
    RatQT pow(long e) const;
    RatQT subst_q_to_t() const;

    std::string to_string() const;
    static RatQT parse(const std::string& s);

private:
    void canonicalize();
    PolyQT num_, den_;
};

// Univariate analogue in r.
class RatR {
public:
    RatR() : num_(), den_(1) {}
    RatR(long c);
    RatR(const Rational& c);
    RatR(const PolyR& p);
    RatR(PolyR num, PolyR den);

    const PolyR& num() const { return num_; }
    const PolyR& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatR operator-() const;
    RatR& operator+=(const RatR& o);
    RatR& operator*=(const RatR& o);
    friend RatR operator+(RatR a, const RatR& b) { return a += b; }
    friend RatR operator*(RatR a, const RatR& b) { return a *= b; }
    friend bool operator==(const RatR& a, const RatR& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void canonicalize();
    PolyR num_, den_;
};

// Accumulator for long sums of rational functions: terms are bucketed by
// their canonical denominator so most additions are plain polynomial adds,
// and the expensive cross-denominator reductions happen once per bucket.
class RatQTSum {
public:
    void add(const RatQT& v);
    void add_product(const RatQT& a, const RatQT& b);  // a*b without reducing
    RatQT total() const;

private:
    std::map<std::string, std::pair<PolyQT, PolyQT>> buckets_;  // den string -> (num, den)
};

// t = r^A, q = r^B applied to a rational function; A, B >= 1.
RatR substitute_eta(const RatQT& f, int A, int B);

// (multiplicity of (1-r) in num) - (multiplicity in den); g must be nonzero.
int eta_order(const RatR& g);

// lim_{r->1} g(r)/(1-r)^k; exact. Zero when eta_order(g) > k, throws on a pole.
Rational eta_limit(const RatR& g, int k);

}  // namespace mh
