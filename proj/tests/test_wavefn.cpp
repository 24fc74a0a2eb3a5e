#include "doctest.h"

#include "mh/wavefn.hpp"

using namespace mh;
namespace wv = mh::wave;
using cutjoin::HLaurent;

namespace {
const PolyQT one(1);
const PolyQT q = PolyQT::var_q();
const PolyQT t = PolyQT::var_t();
}  // namespace

TEST_CASE("initial value with no spectator sets is the hook-type closed form") {
    for (int d = 1; d <= 4; ++d) {
        wv::WaveSeries s = wv::phi(0, d, {}, 0, 0);
        RatQT unit(one - t, one - q);
        RatQT expect = unit.pow(d) * RatQT(Rational(1) / Rational(factorial(d)));
        int idx_ones = static_cast<int>(s.parts.size()) - 1;  // (1^d) is lex-last
        for (const auto& [key, value] : s.coeffs) {
            CHECK(key.second.size() == 1);
            CHECK(key.second[0] == idx_ones);  // all other coefficients vanish
            CHECK(value == HLaurent::monomial(expect, -2 * d));
        }
        CHECK(s.coeffs.size() == 1);
    }
}

TEST_CASE("initial value with one spectator set is the diagonal 1/z kernel") {
    for (int d = 1; d <= 4; ++d) {
        wv::WaveSeries s = wv::phi(0, d, {}, 1, 0);
        for (size_t g1 = 0; g1 < s.parts.size(); ++g1)
            for (size_t g = 0; g < s.parts.size(); ++g) {
                auto it = s.coeffs.find(
                    {std::vector<int>{}, std::vector<int>{(int)g1, (int)g}});
                if (g1 != g) {
                    CHECK(it == s.coeffs.end());
                } else {
                    REQUIRE(it != s.coeffs.end());
                    CHECK(it->second == HLaurent::monomial(z_qt(s.parts[g]).inverse(),
                                                           -2 * s.parts[g].length()));
                }
            }
    }
}

TEST_CASE("cauchy identity degree by degree") {
    for (int d = 1; d <= 4; ++d) CHECK(wv::verify_cauchy(d));
}

TEST_CASE("lambda-sum and MH-sum pipelines agree") {
    using P = Partition;
    CHECK(wv::phi(0, 2, {P::parse("2")}, 0, 2) == wv::phi_via_mh(0, 2, {P::parse("2")}, 0, 2));
    CHECK(wv::phi(0, 2, {P::parse("2"), P::parse("1,1")}, 1, 2) ==
          wv::phi_via_mh(0, 2, {P::parse("2"), P::parse("1,1")}, 1, 2));
    CHECK(wv::phi(1, 2, {P::parse("2")}, 0, 2) == wv::phi_via_mh(1, 2, {P::parse("2")}, 0, 2));
    CHECK(wv::phi(0, 3, {P::parse("2,1")}, 1, 1) ==
          wv::phi_via_mh(0, 3, {P::parse("2,1")}, 1, 1));
}

TEST_CASE("differential equations") {
    using P = Partition;
    wv::WaveSeries s1 = wv::phi(0, 2, {P::parse("2")}, 0, 2);
    CHECK(wv::verify_pde(s1, 0));

    wv::WaveSeries s2 = wv::phi(0, 2, {P::parse("2"), P::parse("1,1")}, 0, 2);
    CHECK(wv::verify_pde(s2, 0));
    CHECK(wv::verify_pde(s2, 1));

    wv::WaveSeries s3 = wv::phi(0, 3, {P::parse("2,1")}, 0, 2);
    CHECK(wv::verify_pde(s3, 0));

    wv::WaveSeries s4 = wv::phi(1, 2, {P::parse("1,1")}, 1, 2);
    CHECK(wv::verify_pde(s4, 0));

    CHECK_THROWS_AS(wv::verify_pde(s1, 5), std::invalid_argument);
}

TEST_CASE("exponential of operators matches the direct series") {
    using P = Partition;
    // no deltas: the exponential product is empty
    CHECK(wv::exp_action(0, 2, {}, 0, 0) == wv::phi(0, 2, {}, 0, 0));
    CHECK(wv::exp_action(0, 2, {P::parse("2")}, 0, 2) == wv::phi(0, 2, {P::parse("2")}, 0, 2));
    CHECK(wv::exp_action(0, 2, {P::parse("2"), P::parse("1,1")}, 1, 2) ==
          wv::phi(0, 2, {P::parse("2"), P::parse("1,1")}, 1, 2));
    CHECK(wv::exp_action(1, 3, {P::parse("2,1")}, 0, 2) ==
          wv::phi(1, 3, {P::parse("2,1")}, 0, 2));
}

TEST_CASE("operator order independence in the exponential product") {
    using P = Partition;
    for (int d = 2; d <= 3; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a + 1; b < parts.size(); ++b) {
                wv::WaveSeries fwd = wv::exp_action(0, d, {parts[a], parts[b]}, 0, 2);
                wv::WaveSeries rev = wv::exp_action(0, d, {parts[b], parts[a]}, 0, 2);
                // same coefficients with the two u slots swapped
                for (const auto& [key, value] : fwd.coeffs) {
                    std::vector<int> swapped{key.first[1], key.first[0]};
                    auto it = rev.coeffs.find({swapped, key.second});
                    REQUIRE(it != rev.coeffs.end());
                    CHECK(it->second == value);
                }
                CHECK(fwd.coeffs.size() == rev.coeffs.size());
            }
    }
}
