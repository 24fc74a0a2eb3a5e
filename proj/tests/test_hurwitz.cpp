#include "doctest.h"

#include <random>

#include "mh/hurwitz.hpp"

using namespace mh;
namespace hw = mh::hurwitz;
using hw::MHResult;
using hw::Profiles;

namespace {
const PolyQT one(1);
const PolyQT q = PolyQT::var_q();
const PolyQT t = PolyQT::var_t();

Profiles prof(std::initializer_list<const char*> strs) {
    Profiles out;
    for (const char* s : strs) out.push_back(Partition::parse(s));
    return out;
}
}  // namespace

TEST_CASE("genus from profile") {
    CHECK(hw::genus_from_profile(0, 1, prof({"1", "1"})) == 0);
    CHECK(!hw::genus_from_profile(0, 2, prof({"2"})).has_value());
    for (int d = 1; d <= 5; ++d) {
        Profiles ps(3, ones_partition(d));
        CHECK(hw::genus_from_profile(0, d, ps) == 1 - d);
    }
    // no branch points over the torus: g = 1
    CHECK(hw::genus_from_profile(1, 3, {}) == 1);
}

TEST_CASE("closed-form values") {
    RatQT expect1(one - t, one - q);
    CHECK(hw::mh(0, 1, prof({"1", "1"})).value == expect1);
    CHECK(hw::mh(0, 1, prof({"1"})).value == expect1);
    for (int d = 1; d <= 6; ++d) {
        Partition row(std::vector<int>{d});
        MHResult r = hw::mh(0, d, {row, row});
        CHECK(r.constraint_ok);
        CHECK(r.genus == 0);
        RatQT expect = RatQT(one - PolyQT::monomial(1, 0, d),
                             PolyQT(Rational(d)) * (one - PolyQT::monomial(1, d, 0)));
        CHECK(r.value == expect);
        CHECK(r.value == z_qt(row).inverse());
    }
}

TEST_CASE("zero conventions") {
    CHECK(hw::mh(0, 0, {}).value.is_zero());
    MHResult r = hw::mh(0, 2, prof({"2"}));
    CHECK(!r.constraint_ok);
    CHECK(r.value.is_zero());
    // require_nonneg_genus zeroes negative forced genus
    MHResult neg = hw::mh(0, 3, prof({"1,1,1"}));
    CHECK(neg.constraint_ok);
    CHECK(neg.genus == -2);
    CHECK(!neg.value.is_zero());
    CHECK(hw::mh(0, 3, prof({"1,1,1"}), true).value.is_zero());
    CHECK_THROWS_AS(hw::mh(0, 2, prof({"3"})), std::invalid_argument);
    CHECK_THROWS_AS(hw::mh(0, 2, {Partition()}), std::invalid_argument);
}

TEST_CASE("profile symmetry and dropping (1^d)") {
    std::mt19937 rng(11);
    for (int d = 2; d <= 4; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
        for (int rep = 0; rep < 5; ++rep) {
            Profiles ps{parts[pick(rng)], parts[pick(rng)], parts[pick(rng)]};
            Profiles shuffled = ps;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(hw::mh(0, d, ps).value == hw::mh(0, d, shuffled).value);
            // appending an unramified point never changes the value
            Profiles extended = ps;
            extended.push_back(ones_partition(d));
            CHECK(hw::mh(0, d, ps).value == hw::mh(0, d, extended).value);
            CHECK(hw::mh(1, d, ps).value == hw::mh(1, d, extended).value);
        }
    }
}

TEST_CASE("genus reduction theorem") {
    CHECK(hw::verify_genus_reduction(1, 2, {}));
    CHECK(hw::verify_genus_reduction(2, 2, {}));
    CHECK(hw::verify_genus_reduction(1, 3, prof({"2,1"})));
    CHECK(hw::verify_genus_reduction(1, 3, prof({"3", "2,1"})));
    CHECK(hw::verify_genus_reduction(2, 3, prof({"1,1,1"})));
}

TEST_CASE("cutting theorem") {
    // with two total-ramification points at d=2 the value is 1/z_(2)(q,t)
    Profiles two2 = prof({"2", "2"});
    CHECK(hw::verify_cutting(0, 0, 2, two2, 1));
    CHECK(hw::mh(0, 2, two2).value ==
          RatQT(one - t * t, PolyQT(Rational(2)) * (one - q * q)));

    CHECK(hw::verify_cutting(0, 0, 3, prof({"2,1", "3", "2,1"}), 2));
    CHECK(hw::verify_cutting(0, 0, 2, prof({"1,1", "2", "2"}), 1));
    CHECK(hw::verify_cutting(0, 1, 2, prof({"2", "2", "1,1"}), 1));
}

TEST_CASE("disconnected assembly") {
    // (1^d) with m = d unit components gives ((1-t)/(1-q))^d / d!
    RatQT unit(one - t, one - q);
    for (int d = 1; d <= 4; ++d) {
        RatQT expect = unit.pow(d) * RatQT(Rational(Integer(1), factorial(d)));
        CHECK(hw::mh_disconnected(0, d, {ones_partition(d)}, 1 - d) == expect);
    }

    // d=2 two-branch-point example: the two-component term is (1/2) unit^2,
    // and the connected m=1 term is excluded by g_1 >= 0.
    CHECK(hw::mh_disconnected(0, 2, prof({"1,1", "1,1"}), -1) ==
          unit * unit * RatQT(Rational(1, 2)));

    // m = 1 reproduces the connected value when the forced genus is >= 0
    for (int d = 2; d <= 3; ++d) {
        Partition row(std::vector<int>{d});
        CHECK(hw::mh_disconnected(0, d, {row, row}, 0, 1) == hw::mh(0, d, {row, row}).value);
    }
    // wrong total genus gives zero
    CHECK(hw::mh_disconnected(0, 2, prof({"1,1", "1,1"}), 0).is_zero());
}

TEST_CASE("q=t specialization matches the classical character Hurwitz number") {
    for (int d = 1; d <= 4; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (const auto& p1 : parts)
            for (const auto& p2 : parts) {
                Profiles ps{p1, p2};
                RatQT special = hw::mh(0, d, ps).value.subst_q_to_t();
                CHECK(special.is_constant());
                CHECK(special.as_rational() == hw::classical_mh(0, d, ps));
            }
        Profiles single{parts[0]};
        RatQT s1 = hw::mh(1, d, single).value.subst_q_to_t();
        CHECK(s1.is_constant());
        CHECK(s1.as_rational() == hw::classical_mh(1, d, single));
    }
}
