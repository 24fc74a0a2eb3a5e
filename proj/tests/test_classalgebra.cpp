#include "doctest.h"

#include <random>

#include "mh/classalgebra.hpp"
#include "test_util.hpp"

using namespace mh;
namespace alg = mh::algebra;
using alg::CentralElement;

namespace {
const PolyQT one(1);
const PolyQT q = PolyQT::var_q();
const PolyQT t = PolyQT::var_t();

CentralElement random_element(int d, std::mt19937& rng) {
    CentralElement x(d);
    for (const auto& p : enumerate_partitions(d)) x.set_coeff(p, testutil::random_ratqt(rng));
    return x;
}
}  // namespace

TEST_CASE("structure constants, degree 1") {
    auto table = alg::structure_table(1);
    CHECK(table->C[0][0][0] == RatQT(1));
}

TEST_CASE("structure constants specialize to the classical class algebra") {
    for (int d = 2; d <= 4; ++d) {
        auto table = alg::structure_table(d);
        size_t n = table->parts.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                auto classical = alg::brute_force_class_product(table->parts[i], table->parts[j], d);
                for (size_t k = 0; k < n; ++k) {
                    RatQT special = table->C[i][j][k].subst_q_to_t();
                    CHECK(special.is_constant());
                    long long expect = 0;
                    auto it = classical.find(table->parts[k]);
                    if (it != classical.end()) expect = it->second;
                    CHECK(special.as_rational() == Rational(static_cast<long>(expect)));
                }
            }
    }
}

TEST_CASE("brute-force class products") {
    auto s2 = alg::brute_force_class_product(Partition::parse("2"), Partition::parse("2"), 2);
    CHECK(s2.size() == 1);
    CHECK(s2.at(Partition::parse("1,1")) == 1);

    auto s3 = alg::brute_force_class_product(Partition::parse("3"), Partition::parse("3"), 3);
    CHECK(s3.at(Partition::parse("1,1,1")) == 2);
    CHECK(s3.at(Partition::parse("3")) == 1);
    CHECK(s3.find(Partition::parse("2,1")) == s3.end());

    // identity class is the unit
    for (int d = 2; d <= 4; ++d)
        for (const auto& p : enumerate_partitions(d)) {
            auto prod = alg::brute_force_class_product(ones_partition(d), p, d);
            CHECK(prod.size() == 1);
            CHECK(prod.at(p) == 1);
        }
    CHECK_THROWS_AS(alg::brute_force_class_product(Partition::parse("7"), Partition::parse("7"), 7),
                    std::invalid_argument);
}

TEST_CASE("unit law and commutativity") {
    std::mt19937 rng(5150);
    for (int d = 1; d <= 4; ++d) {
        CentralElement unit = CentralElement::basis(ones_partition(d));
        for (const auto& p : enumerate_partitions(d)) {
            CentralElement c = CentralElement::basis(p);
            CHECK(alg::circ(unit, c) == c);
            CHECK(alg::circ(c, unit) == c);
        }
        CentralElement x = random_element(d, rng), y = random_element(d, rng);
        CHECK(alg::circ(x, y) == alg::circ(y, x));
    }
    // associativity instance at d=2
    CentralElement c2 = CentralElement::basis(Partition::parse("2"));
    CHECK(alg::circ(alg::circ(c2, c2), c2) == alg::circ(c2, alg::circ(c2, c2)));
}

TEST_CASE("associativity on basis triples") {
    for (int d = 1; d <= 3; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    CentralElement ca = CentralElement::basis(a);
                    CentralElement cb = CentralElement::basis(b);
                    CentralElement cc = CentralElement::basis(c);
                    CHECK(alg::circ(alg::circ(ca, cb), cc) == alg::circ(ca, alg::circ(cb, cc)));
                }
    }
}

TEST_CASE("bilinear and trilinear forms") {
    CentralElement c1 = CentralElement::basis(Partition::parse("1"));
    RatQT expect(one - t, one - q);
    CHECK(alg::bilinear_qt(c1, c1) == expect);
    CHECK(alg::trilinear_qt(c1, c1, c1) == expect);

    // Frobenius compatibility on all basis triples
    for (int d = 1; d <= 3; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    CentralElement ca = CentralElement::basis(a);
                    CentralElement cb = CentralElement::basis(b);
                    CentralElement cc = CentralElement::basis(c);
                    RatQT tri = alg::trilinear_qt(ca, cb, cc);
                    CHECK(tri == alg::bilinear_qt(ca, alg::circ(cb, cc)));
                    CHECK(tri == alg::bilinear_qt(alg::circ(ca, cb), cc));
                }
    }
}

TEST_CASE("idempotents") {
    CHECK(alg::idempotent(Partition::parse("1")) == CentralElement::basis(Partition::parse("1")));

    for (int d = 1; d <= 4; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::vector<CentralElement> eps;
        for (const auto& lam : parts) eps.push_back(alg::idempotent(lam));

        CentralElement sum(d);
        for (size_t i = 0; i < parts.size(); ++i) {
            sum += eps[i];
            for (size_t j = i; j < parts.size(); ++j) {
                CentralElement prod = alg::circ(eps[i], eps[j]);
                if (i == j)
                    CHECK(prod == eps[i]);
                else
                    CHECK(prod.coeffs().empty());
                RatQT form = alg::bilinear_qt(eps[i], eps[j]);
                if (i == j) {
                    RatQT dim = dim_qt(parts[i]);
                    CHECK(form == dim * dim / j_norm(parts[i]));
                } else {
                    CHECK(form.is_zero());
                }
            }
        }
        CHECK(sum == CentralElement::basis(ones_partition(d)));
    }
}

TEST_CASE("eta structure constants at (1,1) are the classical ones") {
    for (int d = 1; d <= 4; ++d) {
        alg::EtaStructure es = alg::eta_structure(d, 1, 1);
        size_t n = es.parts.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                auto classical = alg::brute_force_class_product(es.parts[i], es.parts[j], d);
                for (size_t k = 0; k < n; ++k) {
                    long long expect = 0;
                    auto it = classical.find(es.parts[k]);
                    if (it != classical.end()) expect = it->second;
                    CHECK(es.C[i][j][k] == Rational(static_cast<long>(expect)));
                }
            }
    }
}

TEST_CASE("eta bilinear form") {
    for (int A = 1; A <= 3; ++A)
        for (int B = 1; B <= 3; ++B) {
            Rational expect(A, B);
            expect.canonicalize();
            CHECK(alg::eta_bilinear_CC(Partition::parse("1"), A, B) == expect);
        }
}

TEST_CASE("eta idempotent orthogonality (Lemma-62 normalization)") {
    const int grid[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}};
    for (int d = 1; d <= 3; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (auto [A, B] : grid) {
            std::vector<std::vector<Rational>> eps;
            for (const auto& lam : parts) eps.push_back(alg::eta_idempotent(lam, A, B));
            for (size_t l = 0; l < parts.size(); ++l)
                for (size_t m = l; m < parts.size(); ++m) {
                    Rational form(0);
                    for (size_t k = 0; k < parts.size(); ++k)
                        form += eps[l][k] * eps[m][k] * alg::eta_bilinear_CC(parts[k], A, B);
                    Rational expect =
                        (l == m) ? Rational(1) / j_AB(parts[l], A, B) : Rational(0);
                    CHECK(form == expect);
                }
        }
    }
}

TEST_CASE("cohomology isomorphism check") {
    CHECK(alg::verify_cohomology_iso(1, 1, 1));
    CHECK(alg::verify_cohomology_iso(1, 2, 3));
    CHECK(alg::verify_cohomology_iso(2, 1, 2));
    for (int d = 1; d <= 3; ++d) {
        CHECK(alg::verify_cohomology_iso(d, 1, 1));
        CHECK(alg::verify_cohomology_iso(d, 2, 3));
    }
}
