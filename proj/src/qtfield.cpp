#include "mh/qtfield.hpp"

#include "mh/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>

namespace mh {

namespace {
int g_jobs = 1;
}
void set_jobs(int j) { g_jobs = j < 1 ? 1 : j; }
int jobs() { return g_jobs; }

// ===========================================================================
// PolyQT

PolyQT PolyQT::monomial(const Rational& c, int eq, int et) {
    PolyQT p;
    if (c != 0) p.terms_[{eq, et}] = c;
    return p;
}

bool PolyQT::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpQT{0, 0});
}

int PolyQT::deg_q() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
}

int PolyQT::deg_t() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

int PolyQT::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

const Rational& PolyQT::leading_coeff() const {
    static const Rational zero(0);
    return terms_.empty() ? zero : terms_.begin()->second;
}

void PolyQT::add_term(const ExpQT& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyQT PolyQT::operator-() const {
    PolyQT r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    PolyQT r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() * b.terms_.size() <= 64) {
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
        return r;
    }
    // dense accumulation; map insertion in key order afterwards
    int dq = a.deg_q() + b.deg_q(), dt = a.deg_t() + b.deg_t();
    auto all_integer = [](const PolyQT& p) {
        for (const auto& [e, c] : p.terms_)
            if (c.get_den() != 1) return false;
        return true;
    };
    if (all_integer(a) && all_integer(b)) {
        // canonical values carry integer coefficients; mpz is far cheaper
        std::vector<Integer> acc(static_cast<size_t>(dq + 1) * (dt + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                size_t idx = static_cast<size_t>(ea.q + eb.q) * (dt + 1) + (ea.t + eb.t);
                mpz_addmul(acc[idx].get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
            }
        for (int eq = dq; eq >= 0; --eq)
            for (int et = dt; et >= 0; --et) {
                Integer& c = acc[static_cast<size_t>(eq) * (dt + 1) + et];
                if (c != 0)
                    r.terms_.emplace_hint(r.terms_.end(), ExpQT{eq, et}, Rational(std::move(c)));
            }
        return r;
    }
    std::vector<Rational> acc(static_cast<size_t>(dq + 1) * (dt + 1));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            size_t idx = static_cast<size_t>(ea.q + eb.q) * (dt + 1) + (ea.t + eb.t);
            acc[idx] += ca * cb;
        }
    for (int eq = dq; eq >= 0; --eq)
        for (int et = dt; et >= 0; --et) {
            Rational& c = acc[static_cast<size_t>(eq) * (dt + 1) + et];
            if (c != 0) r.terms_.emplace_hint(r.terms_.end(), ExpQT{eq, et}, std::move(c));
        }
    return r;
}

PolyQT& PolyQT::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Rational PolyQT::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
    return g;
}

PolyQT PolyQT::primitive_positive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    PolyQT r = *this;
    for (auto& [e, v] : r.terms_) v /= c;
    return r;
}

Rational PolyQT::eval_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Rational PolyQT::eval(const Rational& q0, const Rational& t0) const {
    Rational s(0);
    for (const auto& [e, c] : terms_)
        s += c * rational_pow(q0, e.q) * rational_pow(t0, e.t);
    return s;
}

PolyQT PolyQT::subst_q_to_t() const {
    PolyQT r;
    for (const auto& [e, c] : terms_) r.add_term({0, e.q + e.t}, c);
    return r;
}

PolyR PolyQT::substitute_eta(int A, int B) const {
    if (A < 1 || B < 1) throw std::invalid_argument("substitute_eta: A, B must be >= 1");
    PolyR r;
    for (const auto& [e, c] : terms_) r.add_term(B * e.q + A * e.t, c);
    return r;
}

namespace {

void append_term(std::ostream& os, bool first, const Rational& c, const std::string& vars) {
    Rational mag = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (vars.empty()) {
        os << mag.get_str();
    } else if (mag == 1) {
        os << vars;
    } else {
        os << mag.get_str() << "*" << vars;
    }
}

std::string var_string(int eq, int et) {
    std::ostringstream v;
    bool need_star = false;
    if (eq > 0) {
        v << "q";
        if (eq > 1) v << "^" << eq;
        need_star = true;
    }
    if (et > 0) {
        if (need_star) v << "*";
        v << "t";
        if (et > 1) v << "^" << et;
    }
    return v.str();
}

}  // namespace

std::string PolyQT::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(os, first, c, var_string(e.q, e.t));
        first = false;
    }
    return os.str();
}

PolyQT poly_pow(const PolyQT& base, unsigned long e) {
    PolyQT acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

namespace {

PolyQT poly_divexact_map(const PolyQT& a, const PolyQT& b) {
    PolyQT rem = a, quot;
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms().begin();
        const auto& [eb, cb] = *b.terms().begin();
        if (er.q < eb.q || er.t < eb.t)
            throw std::domain_error("poly_divexact: not divisible");
        ExpQT eq{er.q - eb.q, er.t - eb.t};
        Rational cq = cr / cb;
        quot.add_term(eq, cq);
        rem -= b * PolyQT::monomial(cq, eq.q, eq.t);
    }
    return quot;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bivariate gcd: primitive PRS over (Z[aux])[main] with a univariate
// evaluation fast path for the (common) coprime case.

namespace {

using ZP = std::vector<Integer>;  // dense, index = exponent

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZP zmul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZP zscale(const ZP& a, const Integer& c) {
    if (c == 0) return {};
    ZP r = a;
    for (auto& x : r) x *= c;
    return r;
}

void zsub_inplace(ZP& a, const ZP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
}

Integer zcontent(const ZP& a) {
    Integer g(0);
    for (const auto& x : a) g = int_gcd(g, x);
    return g;
}

ZP zprimitive(const ZP& a) {
    if (a.empty()) return a;
    Integer g = zcontent(a);
    if (a.back() < 0) g = -g;
    ZP r = a;
    for (auto& x : r) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        x = q;
    }
    return r;
}

// Pseudo-remainder (up to content, which primitive PRS removes anyway).
ZP zprem(ZP a, const ZP& b) {
    const Integer& lb = b.back();
    int db = zdeg(b);
    while (!a.empty() && zdeg(a) >= db) {
        Integer la = a.back();
        int shift = zdeg(a) - db;
        ZP scaled = zscale(a, lb);
        ZP sub(shift, Integer(0));
        sub.insert(sub.end(), b.begin(), b.end());
        sub = zscale(sub, la);
        zsub_inplace(scaled, sub);
        a = std::move(scaled);
    }
    return a;
}

ZP zgcd(ZP a, ZP b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return zprimitive(b);
    if (b.empty()) return zprimitive(a);
    a = zprimitive(a);
    b = zprimitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZP r = zprem(a, b);
        a = std::move(b);
        b = zprimitive(r);
    }
    return zprimitive(a);
}

// Exact univariate division over Z, divisor primitive (Gauss ensures integrality).
ZP zdivexact(const ZP& a, const ZP& b) {
    if (b.empty()) throw std::domain_error("zdivexact: division by zero");
    ZP rem = a, quot;
    ztrim(rem);
    if (rem.empty()) return {};
    if (rem.size() < b.size()) throw std::domain_error("zdivexact: not divisible");
    quot.assign(rem.size() - b.size() + 1, Integer(0));
    while (!rem.empty() && zdeg(rem) >= zdeg(b)) {
        Integer c;
        if (!mpz_divisible_p(rem.back().get_mpz_t(), b.back().get_mpz_t()))
            throw std::domain_error("zdivexact: not divisible");
        mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        int shift = zdeg(rem) - zdeg(b);
        quot[shift] = c;
        ZP sub(shift, Integer(0));
        sub.insert(sub.end(), b.begin(), b.end());
        zsub_inplace(rem, zscale(sub, c));
    }
    if (!rem.empty()) throw std::domain_error("zdivexact: remainder nonzero");
    ztrim(quot);
    return quot;
}

bool heugcd_z(const ZP& a, const ZP& b, ZP& g);  // defined below

// gcd via the heuristic with PRS fallback
ZP zgcd_fast(const ZP& a, const ZP& b) {
    ZP ta = a, tb = b;
    ztrim(ta);
    ztrim(tb);
    if (ta.empty()) return zprimitive(tb);
    if (tb.empty()) return zprimitive(ta);
    if (zdeg(ta) == 0 || zdeg(tb) == 0) return {Integer(1)};
    ta = zprimitive(ta);
    tb = zprimitive(tb);
    if (ta == tb) return ta;
    ZP g;
    if (heugcd_z(ta, tb, g)) return zprimitive(g);
    return zgcd(std::move(ta), std::move(tb));
}

Integer zeval(const ZP& a, long x) {
    Integer v(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
}

// Bivariate polynomial as dense coefficients over the main variable.
using BP = std::vector<ZP>;

int bdeg(const BP& p) { return static_cast<int>(p.size()) - 1; }

void btrim(BP& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

ZP bcontent(const BP& p) {
    // smallest rows first: the running gcd usually collapses immediately
    std::vector<const ZP*> rows;
    for (const auto& c : p)
        if (!c.empty()) rows.push_back(&c);
    std::sort(rows.begin(), rows.end(),
              [](const ZP* x, const ZP* y) { return x->size() < y->size(); });
    ZP g;
    for (const ZP* c : rows) {
        g = g.empty() ? zprimitive(*c) : zgcd_fast(g, *c);
        if (zdeg(g) == 0) return g;
    }
    return g;
}

BP bdiv_coeffs(const BP& p, const ZP& g) {
    BP r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].empty()) r[i] = zdivexact(p[i], g);
    return r;
}

BP bscale(const BP& a, const ZP& c) {
    BP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zmul(a[i], c);
    return r;
}

void bsub_inplace(BP& a, const BP& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        ZP tmp = a[i];
        zsub_inplace(tmp, b[i]);
        a[i] = std::move(tmp);
    }
    btrim(a);
}

BP bprem(BP a, const BP& b) {
    const ZP& lb = b.back();
    int db = bdeg(b);
    btrim(a);
    while (!a.empty() && bdeg(a) >= db) {
        ZP la = a.back();
        int shift = bdeg(a) - db;
        BP scaled = bscale(a, lb);
        BP sub(shift);
        for (const auto& c : b) sub.push_back(zmul(c, la));
        bsub_inplace(scaled, sub);
        a = std::move(scaled);
        btrim(a);
    }
    return a;
}

BP bprimitive(const BP& p, ZP* content_out = nullptr) {
    BP q = p;
    btrim(q);
    if (q.empty()) {
        if (content_out) content_out->clear();
        return q;
    }
    ZP g = bcontent(q);
    if (content_out) *content_out = g;
    return bdiv_coeffs(q, g);
}

// Coprimality probe over F_p: evaluate the aux variable at a point keeping
// both leading coefficients nonzero mod p; a constant gcd of the univariate
// images certifies gcd(primA,primB) = 1 (the gcd's leading coefficient
// divides both leading coefficients, so it survives the reduction).
constexpr unsigned long kProbePrime = 0x7fffffffffffffe7UL;  // 2^63 - 25, prime

unsigned long mulmod_p(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % kProbePrime);
}

unsigned long powmod_p(unsigned long a, unsigned long e) {
    unsigned long r = 1;
    while (e) {
        if (e & 1) r = mulmod_p(r, a);
        a = mulmod_p(a, a);
        e >>= 1;
    }
    return r;
}

unsigned long invmod_p(unsigned long a) { return powmod_p(a, kProbePrime - 2); }

unsigned long zmod_p(const Integer& v) {
    Integer m;
    mpz_mod_ui(m.get_mpz_t(), v.get_mpz_t(), kProbePrime);
    return m.get_ui();
}

unsigned long zeval_mod(const ZP& p, unsigned long x) {
    unsigned long v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = (mulmod_p(v, x) + zmod_p(*it)) % kProbePrime;
    return v;
}

int gcd_degree_mod(std::vector<unsigned long> a, std::vector<unsigned long> b) {
    auto trim = [](std::vector<unsigned long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        unsigned long inv = invmod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            unsigned long c = mulmod_p(a.back(), inv);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                unsigned long sub = mulmod_p(c, b[i]);
                a[shift + i] = (a[shift + i] + kProbePrime - sub) % kProbePrime;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

bool probably_coprime(const BP& a, const BP& b) {
    static const unsigned long points[] = {2, 3, 5, 7, 11, 13};
    for (unsigned long x : points) {
        if (zeval_mod(a.back(), x) == 0 || zeval_mod(b.back(), x) == 0) continue;
        std::vector<unsigned long> ea, eb;
        for (const auto& c : a) ea.push_back(zeval_mod(c, x));
        for (const auto& c : b) eb.push_back(zeval_mod(c, x));
        return gcd_degree_mod(std::move(ea), std::move(eb)) == 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Heuristic gcd (gcdheu): evaluate at a large integer, take the integer gcd,
// reconstruct symmetric base-xi digits, verify by exact division. Fast at
// these sizes; the caller falls back to the primitive PRS when it fails.

Integer max_abs_coeff(const BP& p) {
    Integer m(0);
    for (const auto& row : p)
        for (const auto& c : row)
            if (cmp(abs(c), m) > 0) m = abs(c);
    return m;
}

Integer zeval_big(const ZP& p, const Integer& x) {
    Integer v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

// Symmetric-range base-xi digits of an integer; empty when n == 0.
ZP genpoly_z(Integer n, const Integer& xi) {
    ZP digits;
    Integer half = xi / 2;
    while (n != 0) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        digits.push_back(r);
        n = (n - r) / xi;
    }
    return digits;
}

bool bp_is_zero(const BP& p) {
    for (const auto& row : p)
        if (!row.empty()) return false;
    return true;
}

// Long division over Z[aux] in the main variable; true when exact, with the
// quotient stored in *quot.
bool bdivide(const BP& big, const BP& small, BP* quot) {
    BP rem = big;
    btrim(rem);
    if (quot) quot->clear();
    if (bp_is_zero(rem)) return true;
    const ZP& ls = small.back();
    if (quot) quot->assign(std::max(0, bdeg(rem) - bdeg(small)) + 1, ZP{});
    while (!rem.empty() && bdeg(rem) >= bdeg(small)) {
        ZP q;
        try {
            q = zdivexact(rem.back(), ls);
        } catch (const std::domain_error&) {
            return false;
        }
        int shift = bdeg(rem) - bdeg(small);
        if (quot) (*quot)[shift] = q;
        BP sub(shift);
        for (const auto& c : small) sub.push_back(zmul(c, q));
        bsub_inplace(rem, sub);
        if (!rem.empty() && bdeg(rem) >= bdeg(small) + shift) return false;
    }
    return bp_is_zero(rem);
}

// Univariate heuristic gcd over Z: one integer gcd at a large evaluation
// point, digits reconstructed and verified by exact division.
bool heugcd_z(const ZP& a, const ZP& b, ZP& g) {
    Integer ca(0), cb(0);
    for (const auto& c : a)
        if (cmp(abs(c), ca) > 0) ca = abs(c);
    for (const auto& c : b)
        if (cmp(abs(c), cb) > 0) cb = abs(c);
    Integer xi = 2 * (cmp(ca, cb) < 0 ? ca : cb) + 2;
    if (xi < 100) xi = 100;
    for (int attempt = 0; attempt < 4; ++attempt, xi = xi * 73794 / 27011 + 1) {
        Integer A = zeval_big(a, xi), B = zeval_big(b, xi);
        if (A == 0 || B == 0) continue;
        Integer G = int_gcd(A, B);
        ZP cand = genpoly_z(G, xi);
        ztrim(cand);
        if (cand.empty()) continue;
        cand = zprimitive(cand);
        if (zdeg(cand) > zdeg(a) || zdeg(cand) > zdeg(b)) continue;
        try {
            zdivexact(a, cand);
            zdivexact(b, cand);
        } catch (const std::domain_error&) {
            continue;
        }
        g = std::move(cand);
        return true;
    }
    return false;
}

// Attempt heuristic gcd of primitive bivariate polynomials; returns false on
// failure. On success g holds a primitive nonconstant candidate verified to
// divide both inputs.
bool heugcd_bp(const BP& a, const BP& b, BP& g) {
    Integer ca = max_abs_coeff(a), cb = max_abs_coeff(b);
    Integer xi = 2 * (cmp(ca, cb) < 0 ? ca : cb) + 2;
    if (xi < 100) xi = 100;
    for (int attempt = 0; attempt < 4; ++attempt, xi = xi * 73794 / 27011 + 1) {
        ZP ua, ub;
        for (const auto& row : a) ua.push_back(zeval_big(row, xi));
        for (const auto& row : b) ub.push_back(zeval_big(row, xi));
        ztrim(ua);
        ztrim(ub);
        if (ua.empty() || ub.empty()) continue;
        ZP ug;
        if (!heugcd_z(ua, ub, ug)) ug = zgcd(ua, ub);
        if (zdeg(ug) <= 0) continue;  // heuristically coprime: leave to PRS
        BP cand(ug.size());
        for (size_t k = 0; k < ug.size(); ++k) cand[k] = genpoly_z(ug[k], xi);
        btrim(cand);
        if (bp_is_zero(cand)) continue;
        cand = bprimitive(cand);
        if (bdeg(cand) == 0 && zdeg(cand[0]) <= 0) continue;  // constant candidate
        if (bdeg(cand) > bdeg(a) || bdeg(cand) > bdeg(b)) continue;
        if (bdivide(a, cand, nullptr) && bdivide(b, cand, nullptr)) {
            g = std::move(cand);
            return true;
        }
    }
    return false;
}

BP prs_gcd(BP A, BP B) {
    if (bdeg(A) < bdeg(B)) std::swap(A, B);
    while (!B.empty()) {
        BP r = bprem(A, B);
        A = std::move(B);
        B = bprimitive(r);
    }
    return bprimitive(A);
}

// Conversions. main_is_q selects which exponent indexes the outer vector.
BP to_bp(const PolyQT& p, bool main_is_q, const Integer& denom_lcm) {
    BP r;
    for (const auto& [e, c] : p.terms()) {
        int em = main_is_q ? e.q : e.t;
        int ea = main_is_q ? e.t : e.q;
        if (static_cast<int>(r.size()) <= em) r.resize(em + 1);
        ZP& row = r[em];
        if (static_cast<int>(row.size()) <= ea) row.resize(ea + 1, Integer(0));
        Integer scaled = c.get_num() * (denom_lcm / c.get_den());
        row[ea] += scaled;
    }
    for (auto& row : r) ztrim(row);
    btrim(r);
    return r;
}

Integer denom_lcm_of(const PolyQT& p) {
    Integer l(1);
    for (const auto& [e, c] : p.terms()) l = int_lcm(l, c.get_den());
    return l;
}

PolyQT from_bp(const BP& p, bool main_is_q) {
    PolyQT r;
    for (size_t em = 0; em < p.size(); ++em)
        for (size_t ea = 0; ea < p[em].size(); ++ea)
            if (p[em][ea] != 0) {
                int eq = main_is_q ? static_cast<int>(em) : static_cast<int>(ea);
                int et = main_is_q ? static_cast<int>(ea) : static_cast<int>(em);
                r.add_term({eq, et}, Rational(p[em][ea]));
            }
    return r;
}

PolyQT from_zp_aux(const ZP& p, bool main_is_q) {
    PolyQT r;
    for (size_t ea = 0; ea < p.size(); ++ea)
        if (p[ea] != 0) {
            int eq = main_is_q ? 0 : static_cast<int>(ea);
            int et = main_is_q ? static_cast<int>(ea) : 0;
            r.add_term({eq, et}, Rational(p[ea]));
        }
    return r;
}

void min_exponents(const PolyQT& p, int& mq, int& mt) {
    mq = mt = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            mq = e.q;
            mt = e.t;
            first = false;
        } else {
            mq = std::min(mq, e.q);
            mt = std::min(mt, e.t);
        }
    }
}

PolyQT shift_down(const PolyQT& p, int mq, int mt) {
    PolyQT r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.q - mq, e.t - mt}, c);
    return r;
}

}  // namespace

PolyQT poly_divexact(const PolyQT& a, const PolyQT& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    if (a.is_zero()) return PolyQT();
    auto all_integer = [](const PolyQT& p) {
        for (const auto& [e, c] : p.terms())
            if (c.get_den() != 1) return false;
        return true;
    };
    if (a.terms().size() > 8 && all_integer(a) && all_integer(b)) {
        bool main_is_q = std::max(a.deg_q(), b.deg_q()) <= std::max(a.deg_t(), b.deg_t());
        BP A = to_bp(a, main_is_q, Integer(1));
        BP B = to_bp(b, main_is_q, Integer(1));
        BP Q;
        if (bdivide(A, B, &Q)) return from_bp(Q, main_is_q);
        // integer long division can fail on rational-content cases; fall back
    }
    return poly_divexact_map(a, b);
}

long g_gcd_calls = 0, g_gcd_probe_hits = 0, g_gcd_heu = 0, g_gcd_prs = 0;
double g_gcd_time = 0;
double g_ph_convert = 0, g_ph_prim = 0, g_ph_probe = 0, g_ph_heu = 0, g_ph_cof = 0, g_ph_final = 0;
namespace {
struct PhaseTimer {
    double& slot;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    explicit PhaseTimer(double& s) : slot(s) {}
    ~PhaseTimer() { slot += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};
}

PolyQT poly_gcd(const PolyQT& a, const PolyQT& b) {
    struct Timer {
        std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
        ~Timer() { g_gcd_time += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
    } timer;
    ++g_gcd_calls;
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    if (a == b) return a.primitive_positive();

    int aq, at, bq, bt;
    min_exponents(a, aq, at);
    min_exponents(b, bq, bt);
    int mq = std::min(aq, bq), mt = std::min(at, bt);
    PolyQT a0 = shift_down(a, aq, at);
    PolyQT b0 = shift_down(b, bq, bt);
    PolyQT common = PolyQT::monomial(1, mq, mt);

    if (a0.is_constant() || b0.is_constant()) return common.primitive_positive();

    bool main_is_q = std::max(a0.deg_q(), b0.deg_q()) <= std::max(a0.deg_t(), b0.deg_t());
    BP A, B;
    {
        PhaseTimer pt(g_ph_convert);
        A = to_bp(a0, main_is_q, denom_lcm_of(a0));
        B = to_bp(b0, main_is_q, denom_lcm_of(b0));
    }

    ZP contA, contB;
    ZP gcont;
    {
        PhaseTimer pt(g_ph_prim);
        A = bprimitive(A, &contA);
        B = bprimitive(B, &contB);
        gcont = zgcd_fast(contA, contB);
    }
    PolyQT result = common * from_zp_aux(gcont, main_is_q);

    if (bdeg(A) == 0 || bdeg(B) == 0) {
        // One argument has no main-variable dependence left; the primitive
        // parts are then coprime unless one is constant 1 anyway.
        if (bdeg(A) == 0 && A[0] == ZP{Integer(1)})
            return result.primitive_positive();
        if (bdeg(B) == 0 && B[0] == ZP{Integer(1)})
            return result.primitive_positive();
    }

    bool coprime;
    {
        PhaseTimer pt(g_ph_probe);
        coprime = probably_coprime(A, B);
    }
    if (coprime) { ++g_gcd_probe_hits; } else {
        BP g;
        bool heu_ok;
        {
            PhaseTimer pt(g_ph_heu);
            heu_ok = heugcd_bp(A, B, g);
        }
        if (heu_ok) { ++g_gcd_heu;
            PhaseTimer pt(g_ph_cof);
            // Certify maximality: the cofactors must be coprime; if the probe
            // cannot prove it, finish with the rigorous PRS on the cofactors
            // (gcd(A,B) = g * gcd(A/g, B/g) in a UFD).
            BP qa, qb;
            bdivide(A, g, &qa);
            bdivide(B, g, &qb);
            btrim(qa);
            btrim(qb);
            BP total = g;
            bool qa_triv = bdeg(qa) == 0 && zdeg(qa[0]) == 0;
            bool qb_triv = bdeg(qb) == 0 && zdeg(qb[0]) == 0;
            if (!qa_triv && !qb_triv && !probably_coprime(qa, qb)) {
                BP extra = prs_gcd(qa, qb);
                if (!(bdeg(extra) == 0 && zdeg(extra[0]) == 0)) {
                    BP combined;
                    // multiply total by extra
                    combined.assign(bdeg(total) + bdeg(extra) + 1, ZP{});
                    for (int i = 0; i <= bdeg(total); ++i)
                        for (int j = 0; j <= bdeg(extra); ++j) {
                            ZP prod = zmul(total[i], extra[j]);
                            ZP acc = combined[i + j];
                            for (size_t k = 0; k < prod.size(); ++k) {
                                if (acc.size() <= k) acc.resize(k + 1, Integer(0));
                                acc[k] += prod[k];
                            }
                            ztrim(acc);
                            combined[i + j] = std::move(acc);
                        }
                    btrim(combined);
                    total = std::move(combined);
                }
            } else if (qa_triv || qb_triv) {
                // one cofactor is +-1: g already is the gcd
            }
            result = result * from_bp(bprimitive(total), main_is_q);
        } else {
            ++g_gcd_prs;
            result = result * from_bp(prs_gcd(std::move(A), std::move(B)), main_is_q);
        }
    }
    return result.primitive_positive();
}

// ===========================================================================
// PolyR

PolyR PolyR::monomial(const Rational& c, int e) {
    PolyR p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

const Rational& PolyR::leading_coeff() const {
    static const Rational zero(0);
    return terms_.empty() ? zero : terms_.begin()->second;
}

void PolyR::add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyR& PolyR::operator+=(const PolyR& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyR& PolyR::operator-=(const PolyR& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyR PolyR::operator-() const {
    PolyR r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PolyR operator*(const PolyR& a, const PolyR& b) {
    PolyR r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

PolyR& PolyR::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Rational PolyR::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
    return g;
}

PolyR PolyR::primitive_positive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    PolyR r = *this;
    for (auto& [e, v] : r.terms_) v /= c;
    return r;
}

Rational PolyR::eval_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

PolyR polyr_divexact(const PolyR& a, const PolyR& b) {
    if (b.is_zero()) throw std::domain_error("polyr_divexact: division by zero");
    PolyR rem = a, quot;
    while (!rem.is_zero()) {
        int er = rem.degree(), eb = b.degree();
        if (er < eb) throw std::domain_error("polyr_divexact: not divisible");
        Rational cq = rem.leading_coeff() / b.leading_coeff();
        quot.add_term(er - eb, cq);
        rem -= b * PolyR::monomial(cq, er - eb);
    }
    return quot;
}

int PolyR::order_at_one(PolyR* cofactor) const {
    if (is_zero()) throw std::domain_error("order_at_one: zero polynomial");
    PolyR one_minus_r = PolyR(1) - PolyR::var_r();
    PolyR p = *this;
    int ord = 0;
    while (p.eval_one() == 0) {
        p = polyr_divexact(p, one_minus_r);
        ++ord;
    }
    if (cofactor) *cofactor = p;
    return ord;
}

PolyR polyr_gcd(const PolyR& a, const PolyR& b) {
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    // Strip the common power of r, then primitive PRS over Z.
    int ma = a.terms().rbegin()->first, mb = b.terms().rbegin()->first;
    int m = std::min(ma, mb);

    auto to_zp = [](const PolyR& p, int strip) {
        Integer l(1);
        for (const auto& [e, c] : p.terms()) l = int_lcm(l, c.get_den());
        ZP r(p.degree() - strip + 1, Integer(0));
        for (const auto& [e, c] : p.terms()) r[e - strip] = c.get_num() * (l / c.get_den());
        return r;
    };
    ZP g = zgcd_fast(to_zp(a, ma), to_zp(b, mb));
    PolyR res = PolyR::monomial(1, m);
    PolyR gp;
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) gp.add_term(static_cast<int>(i), Rational(g[i]));
    return (res * gp).primitive_positive();
}

std::string PolyR::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string vars;
        if (e > 0) vars = (e == 1) ? "r" : "r^" + std::to_string(e);
        append_term(os, first, c, vars);
        first = false;
    }
    return os.str();
}

// ===========================================================================
// RatQT

RatQT::RatQT(long c) : num_(c), den_(1) {}
RatQT::RatQT(const Rational& c) : num_(c), den_(1) { canonicalize(); }
RatQT::RatQT(const PolyQT& p) : num_(p), den_(1) { canonicalize(); }
RatQT::RatQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatQT: division by zero");
    PolyQT g = poly_gcd(num_, den_);
    if (!(g.is_constant() && !g.is_zero())) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    } else if (!num_.is_zero()) {
        // still possible that num and den share no polynomial factor
    }
    canonicalize();
}

// Integer scaling and sign; assumes gcd(num,den) = 1 already.
void RatQT::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatQT: division by zero");
    if (num_.is_zero()) {
        den_ = PolyQT(1);
        return;
    }
    Integer l = int_lcm(denom_lcm_of(num_), denom_lcm_of(den_));
    if (l != 1) {
        Rational s{l, 1};
        num_ *= s;
        den_ *= s;
    }
    Integer g(0);
    for (const auto& [e, c] : num_.terms()) g = int_gcd(g, c.get_num());
    for (const auto& [e, c] : den_.terms()) g = int_gcd(g, c.get_num());
    if (den_.leading_coeff() < 0) g = -g;
    if (g != 1) {
        Rational s{Integer(1), g};
        s.canonicalize();
        num_ *= s;
        den_ *= s;
    }
}

bool RatQT::is_one() const {
    return num_ == PolyQT(1) && den_ == PolyQT(1);
}

Rational RatQT::as_rational() const {
    if (!is_constant()) throw std::domain_error("as_rational: value is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.terms().begin()->second / den_.terms().begin()->second;
}

RatQT RatQT::operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
}

RatQT& RatQT::operator+=(const RatQT& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = PolyQT(1);
            return *this;
        }
        if (!den_.is_constant()) {
            PolyQT h = poly_gcd(num_, den_);
            if (!h.is_constant()) {
                num_ = poly_divexact(num_, h);
                den_ = poly_divexact(den_, h);
            }
        }
        canonicalize();
        return *this;
    }
    PolyQT g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        PolyQT bp = poly_divexact(den_, g);
        PolyQT dp = poly_divexact(o.den_, g);
        num_ = num_ * dp + o.num_ * bp;
        den_ = g * bp * dp;
        if (!num_.is_zero()) {
            PolyQT h = poly_gcd(num_, g);
            if (!h.is_constant()) {
                num_ = poly_divexact(num_, h);
                den_ = poly_divexact(den_, h);
            }
        }
    }
    canonicalize();
    return *this;
}

RatQT& RatQT::operator-=(const RatQT& o) { return *this += -o; }

RatQT& RatQT::operator*=(const RatQT& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatQT();
        return *this;
    }
    if (o.is_constant()) {
        num_ *= o.num_.terms().begin()->second / o.den_.terms().begin()->second;
        canonicalize();
        return *this;
    }
    if (is_constant()) {
        Rational c = num_.terms().begin()->second / den_.terms().begin()->second;
        *this = o;
        num_ *= c;
        canonicalize();
        return *this;
    }
    // Cross-cancel; the factors that remain are pairwise coprime.
    PolyQT g1 = poly_gcd(num_, o.den_);
    PolyQT g2 = poly_gcd(o.num_, den_);
    PolyQT n1 = g1.is_constant() ? num_ : poly_divexact(num_, g1);
    PolyQT d2 = g1.is_constant() ? o.den_ : poly_divexact(o.den_, g1);
    PolyQT n2 = g2.is_constant() ? o.num_ : poly_divexact(o.num_, g2);
    PolyQT d1 = g2.is_constant() ? den_ : poly_divexact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    canonicalize();
    return *this;
}

RatQT& RatQT::operator/=(const RatQT& o) {
    if (o.is_zero()) throw std::domain_error("RatQT: division by zero");
    return *this *= o.inverse();
}

RatQT RatQT::inverse() const {
    if (is_zero()) throw std::domain_error("RatQT: inverse of zero");
    RatQT r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

RatQT RatQT::pow(long e) const {
    if (e == 0) return RatQT(1);
    RatQT b = *this;
    if (e < 0) {
        b = inverse();
        e = -e;
    }
    RatQT acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

RatQT RatQT::subst_q_to_t() const {
    PolyQT d = den_.subst_q_to_t();
    if (d.is_zero()) throw std::domain_error("subst_q_to_t: denominator vanishes on q=t");
    return RatQT(num_.subst_q_to_t(), d);
}

std::string RatQT::to_string() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.to_string() + ")";
    if (!(den_ == PolyQT(1))) s += "/(" + den_.to_string() + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical grammar (bare polynomials also accepted).

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    // term := coeff [ '*' vars ] | vars ; vars := var ['^' int] ('*' var ['^' int])*
    PolyQT parse_term() {
        skip_ws();
        Rational coeff(1);
        int eq = 0, et = 0;
        bool saw_any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = Rational(parse_int());
            saw_any = true;
            if (!eat('*')) return PolyQT::monomial(coeff, 0, 0);
        }
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == 'q' || c == 't') {
                ++pos;
                long e = 1;
                if (eat('^')) e = parse_int().get_si();
                if (c == 'q')
                    eq += static_cast<int>(e);
                else
                    et += static_cast<int>(e);
                saw_any = true;
                if (!eat('*')) break;
            } else {
                if (!saw_any) fail("expected term");
                break;
            }
        }
        if (!saw_any) fail("expected term");
        return PolyQT::monomial(coeff, eq, et);
    }

    PolyQT parse_poly() {
        PolyQT p;
        skip_ws();
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        while (true) {
            PolyQT term = parse_term();
            if (sign < 0) term = -term;
            p += term;
            skip_ws();
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
        }
        return p;
    }

    PolyQT parse_paren_poly() {
        if (!eat('(')) fail("expected '('");
        PolyQT p = parse_poly();
        if (!eat(')')) fail("expected ')'");
        return p;
    }
};

}  // namespace

RatQT RatQT::parse(const std::string& str) {
    Parser p(str);
    p.skip_ws();
    if (p.pos < str.size() && str[p.pos] == '0') {
        size_t save = p.pos;
        ++p.pos;
        p.skip_ws();
        if (p.pos == str.size()) return RatQT();
        p.pos = save;
    }
    PolyQT num, den(1);
    p.skip_ws();
    if (p.pos < str.size() && str[p.pos] == '(') {
        num = p.parse_paren_poly();
        if (p.eat('/')) den = p.parse_paren_poly();
    } else {
        num = p.parse_poly();
    }
    p.skip_ws();
    if (p.pos != str.size()) p.fail("trailing input");
    return RatQT(std::move(num), std::move(den));
}

// ===========================================================================
// RatR

RatR::RatR(long c) : num_(c), den_(1) {}
RatR::RatR(const Rational& c) : num_(c), den_(1) { canonicalize(); }
RatR::RatR(const PolyR& p) : num_(p), den_(1) { canonicalize(); }
RatR::RatR(PolyR num, PolyR den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatR: division by zero");
    PolyR g = polyr_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = polyr_divexact(num_, g);
        den_ = polyr_divexact(den_, g);
    }
    canonicalize();
}

void RatR::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatR: division by zero");
    if (num_.is_zero()) {
        den_ = PolyR(1);
        return;
    }
    Integer l(1);
    for (const auto& [e, c] : num_.terms()) l = int_lcm(l, c.get_den());
    for (const auto& [e, c] : den_.terms()) l = int_lcm(l, c.get_den());
    if (l != 1) {
        Rational s{l, 1};
        num_ *= s;
        den_ *= s;
    }
    Integer g(0);
    for (const auto& [e, c] : num_.terms()) g = int_gcd(g, c.get_num());
    for (const auto& [e, c] : den_.terms()) g = int_gcd(g, c.get_num());
    if (den_.leading_coeff() < 0) g = -g;
    if (g != 1) {
        Rational s{Integer(1), g};
        s.canonicalize();
        num_ *= s;
        den_ *= s;
    }
}

RatR RatR::operator-() const {
    RatR r = *this;
    r.num_ = -r.num_;
    return r;
}

RatR& RatR::operator+=(const RatR& o) {
    *this = RatR(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatR& RatR::operator*=(const RatR& o) {
    *this = RatR(num_ * o.num_, den_ * o.den_);
    return *this;
}

std::string RatR::to_string() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.to_string() + ")";
    if (!(den_ == PolyR(1))) s += "/(" + den_.to_string() + ")";
    return s;
}

void RatQTSum::add(const RatQT& v) {
    if (v.is_zero()) return;
    std::string key = v.den().to_string();
    auto it = buckets_.find(key);
    if (it == buckets_.end())
        buckets_.emplace(std::move(key), std::make_pair(v.num(), v.den()));
    else
        it->second.first += v.num();
}

void RatQTSum::add_product(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return;
    // unreduced product; the bucket combine reduces once
    PolyQT den = a.den() * b.den();
    std::string key = den.to_string();
    auto it = buckets_.find(key);
    if (it == buckets_.end())
        buckets_.emplace(std::move(key), std::make_pair(a.num() * b.num(), std::move(den)));
    else
        it->second.first += a.num() * b.num();
}

RatQT RatQTSum::total() const {
    RatQT out;
    for (const auto& [key, bucket] : buckets_) {
        if (bucket.first.is_zero()) continue;
        out += RatQT(bucket.first, bucket.second);
    }
    return out;
}

RatR substitute_eta(const RatQT& f, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("substitute_eta: A, B must be >= 1");
    return RatR(f.num().substitute_eta(A, B), f.den().substitute_eta(A, B));
}

int eta_order(const RatR& g) {
    if (g.is_zero()) throw std::domain_error("eta_order: undefined for zero");
    return g.num().order_at_one() - g.den().order_at_one();
}

Rational eta_limit(const RatR& g, int k) {
    if (g.is_zero()) return Rational(0);
    PolyR n0, d0;
    int ord = g.num().order_at_one(&n0) - g.den().order_at_one(&d0);
    if (ord < k) throw std::domain_error("eta_limit: pole (order " + std::to_string(ord) +
                                         " < required " + std::to_string(k) + ")");
    if (ord > k) return Rational(0);
    return n0.eval_one() / d0.eval_one();
}

}  // namespace mh
