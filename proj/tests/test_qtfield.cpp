#include "doctest.h"

#include "mh/qtfield.hpp"
#include "test_util.hpp"

using namespace mh;

namespace {
const PolyQT one(1);
const PolyQT q = PolyQT::var_q();
const PolyQT t = PolyQT::var_t();
}  // namespace

TEST_CASE("ratqt basic cancellation") {
    // (1-q^2)/(1-q) canonicalizes to 1+q
    RatQT v(one - q * q, one - q);
    CHECK(v == RatQT(one + q));
    CHECK(v.to_string() == "(q + 1)");
}

TEST_CASE("ratqt additive and multiplicative inverses") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) {
        RatQT a = testutil::random_ratqt(rng);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
    RatQT x(one - t, one - q);
    RatQT y(one - q, one - t);
    CHECK((x * y).is_one());
}

TEST_CASE("ratqt field axioms on random triples") {
    std::mt19937 rng(987);
    for (int i = 0; i < 30; ++i) {
        RatQT a = testutil::random_ratqt(rng);
        RatQT b = testutil::random_ratqt(rng);
        RatQT c = testutil::random_ratqt(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("ratqt division by zero") {
    RatQT a(one + q);
    CHECK_THROWS_AS(a / RatQT(), std::domain_error);
    CHECK_THROWS_AS(RatQT(one, PolyQT()), std::domain_error);
}

TEST_CASE("canonical form uniqueness across construction orders") {
    std::mt19937 rng(55);
    for (int i = 0; i < 30; ++i) {
        RatQT a = testutil::random_ratqt(rng);
        RatQT b = testutil::random_ratqt(rng);
        RatQT c = testutil::random_ratqt(rng);
        CHECK(((a + b) * c).to_string() == (c * a + b * c).to_string());
    }
}

TEST_CASE("poly_gcd examples") {
    PolyQT g1 = poly_gcd(one - q * q, one - q);
    CHECK(g1 == (one - q).primitive_positive());

    PolyQT g2 = poly_gcd(one - q * t, one - q);
    CHECK(g2 == one);

    // gcd(1-qt, 1-q) = 1: cross-check by trial division
    CHECK_THROWS(poly_divexact(one - q * t, one - q));

    PolyQT three_one_minus_t = (one - t) * PolyQT(3);
    CHECK(poly_gcd(PolyQT(), three_one_minus_t) == (one - t).primitive_positive());
}

TEST_CASE("poly_gcd multiplicative property on random inputs") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 25; ++i) {
        PolyQT f = testutil::random_nonzero_poly(rng, 3, 2);
        PolyQT g = testutil::random_nonzero_poly(rng, 3, 2);
        PolyQT h = testutil::random_nonzero_poly(rng, 3, 2);
        PolyQT d = poly_gcd(f * h, g * h);
        // h divides gcd(fh, gh), and the gcd divides both products
        CHECK_NOTHROW(poly_divexact(d, h.primitive_positive()));
        CHECK_NOTHROW(poly_divexact(f * h, d));
        CHECK_NOTHROW(poly_divexact(g * h, d));
        CHECK(d == (poly_gcd(f, g) * h).primitive_positive());
    }
}

TEST_CASE("substitute_eta") {
    RatQT f(one - t, one - q);
    CHECK(substitute_eta(f, 1, 1) == RatR(1));

    RatR g = substitute_eta(f, 2, 1);  // (1-r^2)/(1-r) = 1+r
    CHECK(g == RatR(PolyR(1) + PolyR::var_r()));

    RatQT qt(q * t);
    CHECK(substitute_eta(qt, 2, 3) == RatR(PolyR::monomial(1, 5)));
}

TEST_CASE("eta_order") {
    PolyR r = PolyR::var_r();
    PolyR one_r(1);
    RatR g1((one_r - r) * (one_r - r), one_r + r);
    CHECK(eta_order(g1) == 2);

    for (int A = 1; A <= 4; ++A) {
        PolyR p = one_r - PolyR::monomial(1, A);  // 1 - r^A
        CHECK(eta_order(RatR(p)) == 1);
    }

    RatR g3(one_r, one_r - r);
    CHECK(eta_order(g3) == -1);

    CHECK_THROWS_AS(eta_order(RatR()), std::domain_error);
}

TEST_CASE("eta_limit") {
    PolyR r = PolyR::var_r();
    PolyR one_r(1);
    for (int A = 1; A <= 3; ++A)
        for (int B = 1; B <= 3; ++B) {
            RatR g(one_r - PolyR::monomial(1, A), one_r - PolyR::monomial(1, B));
            Rational expect(A, B);
            expect.canonicalize();
            CHECK(eta_limit(g, 0) == expect);
        }

    // j_{(1)} = (1-t)(1-q) at A=B=1 gives (1-r)^2; normalized limit is 1
    RatQT j1((one - t) * (one - q));
    CHECK(eta_limit(substitute_eta(j1, 1, 1), 2) == Rational(1));

    RatR cube((one_r - r) * (one_r - r) * (one_r - r));
    CHECK(eta_limit(cube, 2) == Rational(0));
    CHECK_THROWS_AS(eta_limit(cube, 4), std::domain_error);
}

TEST_CASE("eta_limit shift invariance") {
    std::mt19937 rng(777);
    PolyR one_minus_r = PolyR(1) - PolyR::var_r();
    for (int i = 0; i < 20; ++i) {
        RatQT f = testutil::random_nonzero_ratqt(rng);
        RatR g = substitute_eta(f, 2, 3);
        if (g.is_zero()) continue;
        int k = eta_order(g);
        Rational base = eta_limit(g, k);
        RatR shifted = g;
        for (int m = 1; m <= 3; ++m) {
            shifted *= RatR(one_minus_r);
            CHECK(eta_limit(shifted, k + m) == base);
        }
    }
}

TEST_CASE("eta_limit of a polynomial at order 0 is evaluation at (1,1)") {
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        PolyQT f = testutil::random_poly(rng);
        for (int A = 1; A <= 2; ++A)
            for (int B = 1; B <= 2; ++B)
                CHECK(eta_limit(substitute_eta(RatQT(f), A, B), 0) == f.eval_one());
    }
}

TEST_CASE("serialize canonical strings") {
    // (1/2)(1+q)(1-t)^2
    RatQT v = RatQT(Rational(1, 2)) * RatQT((one + q) * (one - t) * (one - t));
    CHECK(v.to_string() == "(q*t^2 - 2*q*t + q + t^2 - 2*t + 1)/(2)");

    CHECK(RatQT().to_string() == "0");
    CHECK(RatQT::parse("0").is_zero());
    CHECK(RatQT::parse(v.to_string()) == v);
}

TEST_CASE("serialize/parse round trip on random values") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        RatQT v = testutil::random_ratqt(rng);
        std::string s = v.to_string();
        RatQT back = RatQT::parse(s);
        CHECK(back == v);
        CHECK(back.to_string() == s);
    }
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(RatQT::parse("(q + )"), std::invalid_argument);
    CHECK_THROWS_AS(RatQT::parse("(q + 1"), std::invalid_argument);
    CHECK_THROWS_AS(RatQT::parse("(x + 1)"), std::invalid_argument);
    try {
        RatQT::parse("(q ++ 1)");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("den sign normalization") {
    // (1-t)/(1-q): canonical representative has positive leading den coefficient
    RatQT v(one - t, one - q);
    CHECK(v.to_string() == "(t - 1)/(q - 1)");
    CHECK(RatQT::parse("(t - 1)/(q - 1)") == v);
    CHECK(RatQT::parse("(-t + 1)/(-q + 1)") == v);
}
