#include "doctest.h"

#include "mh/macdonald.hpp"

using namespace mh;

namespace {
const PolyQT one(1);
const PolyQT q = PolyQT::var_q();
const PolyQT t = PolyQT::var_t();
const RatQT half(Rational(1, 2));
}  // namespace

TEST_CASE("P at degree 1") {
    SymFunD p = macdonald_P(Partition::parse("1"));
    CHECK(p.coeff(Partition::parse("1")) == RatQT(1));
    CHECK(p.coeffs().size() == 1);
}

TEST_CASE("degree-2 integral table matches the known J expansion") {
    SymFunD j2 = integral_J(Partition::parse("2"));
    CHECK(j2.coeff(Partition::parse("1,1")) == half * RatQT((one + q) * (one - t) * (one - t)));
    CHECK(j2.coeff(Partition::parse("2")) == half * RatQT((one - q) * (one - t * t)));

    SymFunD j11 = integral_J(Partition::parse("1,1"));
    RatQT v = half * RatQT((one - t) * (one - t * t));
    CHECK(j11.coeff(Partition::parse("1,1")) == v);
    CHECK(j11.coeff(Partition::parse("2")) == -v);

    SymFunD j1 = integral_J(Partition::parse("1"));
    CHECK(j1.coeff(Partition::parse("1")) == RatQT(one - t));
}

TEST_CASE("P triangularity and orthogonality") {
    for (int d = 1; d <= 4; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::vector<SymFunD> ps;
        for (const auto& lam : parts) ps.push_back(macdonald_P(lam));
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK(ps[i].coeff(parts[i]) == RatQT(1));
            for (size_t j = 0; j < parts.size(); ++j) {
                RatQT c = ps[i].coeff(parts[j]);
                if (!c.is_zero() && i != j) {
                    CHECK(lex_cmp(parts[j], parts[i]) < 0);
                    // the lex solve must land inside the dominance ideal
                    CHECK(dominance_leq(parts[j], parts[i]));
                }
            }
            for (size_t j = i + 1; j < parts.size(); ++j)
                CHECK(inner_qt(ps[i], ps[j]).is_zero());
        }
    }
}

TEST_CASE("orthogonality of J with norm j") {
    for (int d = 1; d <= 4; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i; j < parts.size(); ++j) {
                RatQT v = inner_qt(integral_J(parts[i]), integral_J(parts[j]));
                if (i == j)
                    CHECK(v == j_norm(parts[i]));
                else
                    CHECK(v.is_zero());
            }
    }
}

TEST_CASE("coefficients and dim") {
    CHECK(coeff_a(Partition::parse("2"), Partition::parse("2")) ==
          half * RatQT((one - q) * (one - t * t)));
    CHECK(dim_qt(Partition::parse("1,1")) == half * RatQT((one - t) * (one - t * t)));
    CHECK(coeff_a(Partition::parse("1"), Partition::parse("1")) == RatQT(one - t));
    CHECK_THROWS_AS(coeff_a(Partition::parse("2"), Partition::parse("1")), std::invalid_argument);
    for (int d = 1; d <= 5; ++d)
        for (const auto& lam : enumerate_partitions(d)) CHECK(!dim_qt(lam).is_zero());
}

TEST_CASE("orthogonal lemmas for the a matrix") {
    for (int d = 1; d <= 4; ++d) {
        auto table = macdonald_table(d);
        auto dt = degree_tables(d);
        size_t n = table->parts.size();
        // first: sum_D a_l(D) z_D a_m(D) = delta j_l
        for (size_t l = 0; l < n; ++l)
            for (size_t m = l; m < n; ++m) {
                RatQT s;
                for (size_t k = 0; k < n; ++k)
                    s += table->a[l][k] * dt->z_qt_values[k] * table->a[m][k];
                CHECK(s == (l == m ? table->j_values[l] : RatQT()));
            }
        // second: sum_l a_l(D1) a_l(D2) / j_l = delta / z_{D1}
        for (size_t d1 = 0; d1 < n; ++d1)
            for (size_t d2 = d1; d2 < n; ++d2) {
                RatQT s;
                for (size_t l = 0; l < n; ++l)
                    s += table->a[l][d1] * table->a[l][d2] / table->j_values[l];
                CHECK(s == (d1 == d2 ? dt->z_qt_values[d1].inverse() : RatQT()));
            }
    }
}

TEST_CASE("Murnaghan-Nakayama characters") {
    CHECK(character_MN(Partition::parse("2,1"), Partition::parse("1,1,1")) == 2);
    for (int d = 1; d <= 6; ++d)
        for (const auto& delta : enumerate_partitions(d)) {
            // trivial representation
            CHECK(character_MN(Partition(std::vector<int>{d}), delta) == 1);
            // sign representation: parity of d - l(delta)
            long long sign = (d - delta.length()) % 2 ? -1 : 1;
            CHECK(character_MN(ones_partition(d), delta) == sign);
            // standard representation: fixed points minus one
            if (d >= 2) {
                Partition std_rep(std::vector<int>{d - 1, 1});
                CHECK(character_MN(std_rep, delta) == delta.multiplicity(1) - 1);
            }
        }
    // character orthogonality (rows)
    for (int d = 1; d <= 6; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                Rational s(0);
                for (const auto& delta : parts)
                    s += Rational(static_cast<long>(character_MN(lam, delta))) *
                         Rational(static_cast<long>(character_MN(mu, delta))) / z(delta);
                CHECK(s == Rational(lam == mu ? 1 : 0));
            }
    }
}

TEST_CASE("schur functions from characters") {
    SymFunD s1 = schur_in_p(Partition::parse("1"));
    CHECK(s1.coeff(Partition::parse("1")) == RatQT(1));

    SymFunD s2 = schur_in_p(Partition::parse("2"));
    CHECK(s2.coeff(Partition::parse("1,1")) == half);
    CHECK(s2.coeff(Partition::parse("2")) == half);
}

TEST_CASE("q=t reduction to hook-scaled Schur") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            RatQT hooks(hook_product_t(lam));
            SymFunD s = schur_in_p(lam);
            SymFunD j = integral_J(lam);
            for (const auto& delta : enumerate_partitions(d))
                CHECK(j.coeff(delta).subst_q_to_t() == hooks * s.coeff(delta));
            // dim at q=t: hook product times chi(1^d)/d!
            Rational fdim(static_cast<long>(character_MN(lam, ones_partition(d))));
            CHECK(dim_qt(lam).subst_q_to_t() ==
                  hooks * RatQT(fdim / Rational(factorial(d))));
        }
}

TEST_CASE("jack limits of J coefficients") {
    // At (A,B) = (1,1) the limits are the alpha = 1 Jack coefficients
    // hookprod * chi / z.
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            Rational hooks(1);
            for (const auto& c : cells(lam)) hooks *= Rational(c.hook());
            for (const auto& delta : enumerate_partitions(d)) {
                Rational expect = hooks * Rational(static_cast<long>(character_MN(lam, delta))) / z(delta);
                CHECK(jack_J_coeff(lam, delta, 1, 1) == expect);
            }
        }

    // Degree 2, general (A,B): J^(alpha)_(2) = p_1^2 + alpha p_2,
    // J^(alpha)_(1,1) = p_1^2 - p_2 with alpha = B/A.
    for (int A = 1; A <= 3; ++A)
        for (int B = 1; B <= 3; ++B) {
            Rational alpha(B, A);
            alpha.canonicalize();
            CHECK(jack_J_coeff(Partition::parse("2"), Partition::parse("1,1"), A, B) == 1);
            CHECK(jack_J_coeff(Partition::parse("2"), Partition::parse("2"), A, B) == alpha);
            CHECK(jack_J_coeff(Partition::parse("1,1"), Partition::parse("1,1"), A, B) == 1);
            CHECK(jack_J_coeff(Partition::parse("1,1"), Partition::parse("2"), A, B) == -1);
        }
}
