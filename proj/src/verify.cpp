#include "mh/verify.hpp"

#include <random>
#include <sstream>

#include "mh/parallel.hpp"

namespace mh {
namespace verify {

namespace {

using mh::parallel_for;

struct Failure {
    std::mutex mtx;
    bool any = false;
    std::string first;
    void note(const std::string& what) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!any) first = what;
        any = true;
    }
};

CheckResult make_result(const std::string& name, const Failure& f, long cases,
                        const std::string& note = "") {
    CheckResult r;
    r.name = name;
    r.ok = !f.any;
    r.cases = cases;
    r.detail = f.any ? f.first : note;
    return r;
}

RatQT half_qt() { return RatQT(Rational(1, 2)); }

}  // namespace

void set_jobs(int jobs) { mh::set_jobs(jobs); }
int jobs() { return mh::jobs(); }

CheckResult qtfield_axioms(unsigned seed, int samples) {
    std::mt19937 rng(seed);
    Failure f;
    long cases = 0;
    auto random_poly = [&rng]() {
        std::uniform_int_distribution<int> nterms(0, 4), exp(0, 3), coeff(-9, 9);
        PolyQT p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) p.add_term({exp(rng), exp(rng)}, Rational(coeff(rng)));
        return p;
    };
    auto random_rat = [&]() {
        PolyQT den;
        while (den.is_zero()) den = random_poly();
        return RatQT(random_poly(), den);
    };
    for (int i = 0; i < samples; ++i) {
        RatQT a = random_rat(), b = random_rat(), c = random_rat();
        bool ok = ((a + b) + c == a + (b + c)) && ((a * b) * c == a * (b * c)) &&
                  (a * (b + c) == a * b + a * c) && ((a + (-a)).is_zero());
        if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
        if (!ok) f.note("field axioms violated on a random triple (seed " +
                        std::to_string(seed) + ", sample " + std::to_string(i) + ")");
        cases += 5;
    }
    return make_result("qtfield/field-axioms", f, cases,
                       "seed " + std::to_string(seed));
}

CheckResult serialization_roundtrip(unsigned seed, int samples) {
    std::mt19937 rng(seed);
    Failure f;
    auto random_poly = [&rng]() {
        std::uniform_int_distribution<int> nterms(0, 4), exp(0, 3), coeff(-9, 9);
        PolyQT p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) p.add_term({exp(rng), exp(rng)}, Rational(coeff(rng)));
        return p;
    };
    for (int i = 0; i < samples; ++i) {
        PolyQT den;
        while (den.is_zero()) den = random_poly();
        RatQT v(random_poly(), den);
        if (!(RatQT::parse(v.to_string()) == v)) f.note("round trip failed on " + v.to_string());
    }
    return make_result("qtfield/serialize-parse-roundtrip", f, samples,
                       "seed " + std::to_string(seed));
}

CheckResult orthogonality_J(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        long n = static_cast<long>(parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t i = idx / n, j = idx % n;
            if (j < i) return;
            RatQT v = inner_qt(integral_J(parts[i]), integral_J(parts[j]));
            bool ok = (i == j) ? (v == j_norm(parts[i])) : v.is_zero();
            if (!ok)
                f.note("<J,J> mismatch at d=" + std::to_string(d) + " (" +
                       parts[i].to_string() + "),(" + parts[j].to_string() + ")");
            ++cases;
        });
    }
    return make_result("macdonald/orthogonality-J", f, cases.load());
}

CheckResult orthogonal_lemma_first(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        auto table = macdonald_table(d);
        auto dt = degree_tables(d);
        long n = static_cast<long>(table->parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t l = idx / n, m = idx % n;
            if (m < l) return;
            RatQT s;
            for (size_t k = 0; k < static_cast<size_t>(n); ++k)
                s += table->a[l][k] * dt->z_qt_values[k] * table->a[m][k];
            bool ok = (l == m) ? (s == table->j_values[l]) : s.is_zero();
            if (!ok) f.note("first orthogonal lemma fails at d=" + std::to_string(d));
            ++cases;
        });
    }
    return make_result("macdonald/first-orthogonal-lemma", f, cases.load());
}

CheckResult orthogonal_lemma_second(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        auto table = macdonald_table(d);
        auto dt = degree_tables(d);
        long n = static_cast<long>(table->parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t d1 = idx / n, d2 = idx % n;
            if (d2 < d1) return;
            RatQT s;
            for (size_t l = 0; l < static_cast<size_t>(n); ++l)
                s += table->a[l][d1] * table->a[l][d2] / table->j_values[l];
            bool ok = (d1 == d2) ? (s == dt->z_qt_values[d1].inverse()) : s.is_zero();
            if (!ok) f.note("second orthogonal lemma fails at d=" + std::to_string(d));
            ++cases;
        });
    }
    return make_result("macdonald/second-orthogonal-lemma", f, cases.load());
}

CheckResult mh_closed_forms(int max_degree) {
    Failure f;
    long cases = 0;
    const PolyQT one(1), q = PolyQT::var_q(), t = PolyQT::var_t();
    for (int d = 1; d <= max_degree; ++d) {
        Partition row(std::vector<int>{d});
        RatQT expect(one - PolyQT::monomial(1, 0, d),
                     PolyQT(Rational(d)) * (one - PolyQT::monomial(1, d, 0)));
        if (!(hurwitz::mh(0, d, {row, row}).value == expect))
            f.note("two-point closed form fails at d=" + std::to_string(d));
        ++cases;
    }
    if (!(hurwitz::mh(0, 1, {Partition::parse("1")}).value == RatQT(one - t, one - q)))
        f.note("one-point degree-1 value wrong");
    ++cases;
    return make_result("hurwitz/closed-forms", f, cases);
}

CheckResult genus_reduction_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::vector<hurwitz::Profiles> tuples;
        tuples.push_back({});
        for (const auto& p : parts) tuples.push_back({p});
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i; j < parts.size(); ++j) tuples.push_back({parts[i], parts[j]});
        for (int h : {1, 2}) {
            parallel_for(static_cast<long>(tuples.size()), [&](long idx) {
                if (!hurwitz::verify_genus_reduction(h, d, tuples[idx]))
                    f.note("genus reduction fails at h=" + std::to_string(h) +
                           ", d=" + std::to_string(d));
                ++cases;
            });
        }
    }
    return make_result("hurwitz/genus-reduction", f, cases.load());
}

CheckResult cutting_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        long n = static_cast<long>(parts.size());
        parallel_for(n * n * n, [&](long idx) {
            size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
            hurwitz::Profiles ps{parts[i], parts[j], parts[k]};
            for (int split : {1, 2}) {
                if (!hurwitz::verify_cutting(0, 0, d, ps, split))
                    f.note("cutting fails at d=" + std::to_string(d) + " split " +
                           std::to_string(split));
                ++cases;
            }
        });
    }
    return make_result("hurwitz/cutting", f, cases.load());
}

CheckResult eigen_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        long n = static_cast<long>(parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t i = idx / n, j = idx % n;
            if (!cutjoin::verify_eigen(parts[i], parts[j]))
                f.note("eigen identity fails at d=" + std::to_string(d) + " Delta=(" +
                       parts[i].to_string() + ") lambda=(" + parts[j].to_string() + ")");
            ++cases;
        });
    }
    return make_result("cutjoin/eigen", f, cases.load());
}

CheckResult closure_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        long n = static_cast<long>(parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t i = idx / n, j = idx % n;
            if (!cutjoin::verify_closure(parts[i], parts[j]))
                f.note("closure fails at d=" + std::to_string(d));
            if (!cutjoin::verify_normalized_commute(parts[i], parts[j]))
                f.note("normalized operators fail to commute at d=" + std::to_string(d));
            cases += 2;
        });
    }
    return make_result("cutjoin/closure", f, cases.load());
}

CheckResult qt_character_reduction(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        auto table = macdonald_table(d);
        long n = static_cast<long>(table->parts.size());
        parallel_for(n, [&](long li) {
            RatQT hooks(hook_product_t(table->parts[li]));
            for (long di = 0; di < n; ++di) {
                RatQT lhs = table->a[li][di].subst_q_to_t() * z_qt(table->parts[di]).subst_q_to_t();
                RatQT rhs = hooks * RatQT(Rational(static_cast<long>(
                                        character_MN(table->parts[li], table->parts[di]))));
                if (!(lhs == rhs))
                    f.note("a(t,t) character reduction fails at d=" + std::to_string(d));
                ++cases;
            }
        });
    }
    return make_result("macdonald/qt-character-reduction", f, cases.load());
}

CheckResult qt_structure_vs_brute_force(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        auto table = algebra::structure_table(d);
        long n = static_cast<long>(table->parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t i = idx / n, j = idx % n;
            if (j < i) return;
            auto classical = algebra::brute_force_class_product(table->parts[i],
                                                                table->parts[j], d);
            for (size_t k = 0; k < static_cast<size_t>(n); ++k) {
                RatQT special = table->C[i][j][k].subst_q_to_t();
                long long expect = 0;
                auto it = classical.find(table->parts[k]);
                if (it != classical.end()) expect = it->second;
                if (!special.is_constant() ||
                    special.as_rational() != Rational(static_cast<long>(expect)))
                    f.note("structure constant at q=t disagrees with S_d at d=" +
                           std::to_string(d));
                ++cases;
            }
        });
    }
    return make_result("algebra/qt-structure-vs-brute-force", f, cases.load());
}

CheckResult classical_cutjoin_ratio(int max_degree) {
    Failure f;
    long cases = 0;
    Rational kappa;
    bool kappa_set = false;
    for (int d = 2; d <= max_degree; ++d) {
        std::vector<int> dp{2};
        for (int i = 0; i < d - 2; ++i) dp.push_back(1);
        auto op = cutjoin::cut_and_join(Partition(dp), d);
        auto classical = cutjoin::classical_cut_and_join_matrix(d);
        size_t n = op->parts.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                RatQT special = op->entries[i][j].at_hbar_one().subst_q_to_t();
                if (!special.is_constant()) {
                    f.note("q=t entry not t-independent at d=" + std::to_string(d));
                    continue;
                }
                Rational v = special.as_rational();
                if (classical[i][j] == 0) {
                    if (v != 0) f.note("zero-pattern mismatch at d=" + std::to_string(d));
                } else if (!kappa_set) {
                    kappa = v / classical[i][j];
                    kappa_set = true;
                } else if (v != kappa * classical[i][j]) {
                    f.note("ratio to the classical operator is not constant at d=" +
                           std::to_string(d));
                }
                ++cases;
            }
    }
    if (!kappa_set || !(kappa == Rational(1, 2) || kappa == Rational(2)))
        f.note("global constant kappa not in {1/2, 2}");
    std::string note = kappa_set ? ("kappa = " + kappa.get_str()) : "";
    return make_result("cutjoin/classical-ratio", f, cases, note);
}

CheckResult jack_limit_degree2() {
    Failure f;
    long cases = 0;
    const int grid[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}};
    Partition two = Partition::parse("2"), oneone = Partition::parse("1,1");
    for (auto [A, B] : grid) {
        Rational alpha(B, A);
        alpha.canonicalize();
        bool ok = jack_J_coeff(two, oneone, A, B) == 1 &&
                  jack_J_coeff(two, two, A, B) == alpha &&
                  jack_J_coeff(oneone, oneone, A, B) == 1 &&
                  jack_J_coeff(oneone, two, A, B) == Rational(-1);
        if (!ok)
            f.note("degree-2 Jack limits mismatch at (A,B)=(" + std::to_string(A) + "," +
                   std::to_string(B) + ")");
        cases += 4;
    }
    return make_result("jack/degree2-limits", f, cases);
}

CheckResult jack_limit_j_products(int max_degree) {
    Failure f;
    long cases = 0;
    const int grid[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}};
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& lam : enumerate_partitions(d))
            for (auto [A, B] : grid) {
                try {
                    Rational viaLimit =
                        eta_limit(substitute_eta(j_norm(lam), A, B), 2 * lam.weight());
                    if (viaLimit != j_AB(lam, A, B))
                        f.note("j eta-limit disagrees with cell product for " + lam.to_string());
                } catch (const std::exception& e) {
                    f.note(std::string("j eta-limit threw: ") + e.what());
                }
                ++cases;
            }
    return make_result("jack/j-cell-products", f, cases);
}

CheckResult wave_initial_values(int max_degree) {
    Failure f;
    long cases = 0;
    const PolyQT one(1), q = PolyQT::var_q(), t = PolyQT::var_t();
    for (int d = 1; d <= max_degree; ++d) {
        wave::WaveSeries s0 = wave::phi(0, d, {}, 0, 0);
        RatQT expect = RatQT(one - t, one - q).pow(d) * RatQT(Rational(1) / Rational(factorial(d)));
        bool ok = s0.coeffs.size() == 1;
        if (ok) {
            const auto& [key, value] = *s0.coeffs.begin();
            ok = key.second[0] == static_cast<int>(s0.parts.size()) - 1 &&
                 value == cutjoin::HLaurent::monomial(expect, -2 * d);
        }
        if (!ok) f.note("k=0 initial value fails at d=" + std::to_string(d));
        ++cases;

        wave::WaveSeries s1 = wave::phi(0, d, {}, 1, 0);
        size_t n = s1.parts.size();
        for (size_t g1 = 0; g1 < n; ++g1)
            for (size_t g = 0; g < n; ++g) {
                auto it = s1.coeffs.find({std::vector<int>{}, {(int)g1, (int)g}});
                bool entry_ok;
                if (g1 != g) {
                    entry_ok = it == s1.coeffs.end();
                } else {
                    entry_ok = it != s1.coeffs.end() &&
                               it->second == cutjoin::HLaurent::monomial(
                                                 z_qt(s1.parts[g]).inverse(),
                                                 -2 * s1.parts[g].length());
                }
                if (!entry_ok) f.note("k=1 initial value fails at d=" + std::to_string(d));
                ++cases;
            }
    }
    return make_result("wavefn/initial-values", f, cases);
}

CheckResult cauchy_sweep(int max_degree) {
    Failure f;
    long cases = 0;
    for (int d = 1; d <= max_degree; ++d) {
        if (!wave::verify_cauchy(d)) f.note("Cauchy identity fails at d=" + std::to_string(d));
        ++cases;
    }
    return make_result("wavefn/cauchy", f, cases);
}

CheckResult pde_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::vector<std::vector<Partition>> delta_sets;
        for (const auto& p : parts) delta_sets.push_back({p});
        for (const auto& p1 : parts)
            for (const auto& p2 : parts) delta_sets.push_back({p1, p2});
        parallel_for(static_cast<long>(delta_sets.size()), [&](long idx) {
            wave::WaveSeries s = wave::phi(0, d, delta_sets[idx], 0, 2);
            for (int i = 0; i < static_cast<int>(delta_sets[idx].size()); ++i) {
                if (!wave::verify_pde(s, i)) f.note("PDE fails at d=" + std::to_string(d));
                ++cases;
            }
            // lambda-sum vs MH-sum consistency on the same series
            if (!(s == wave::phi_via_mh(0, d, delta_sets[idx], 0, 2)))
                f.note("phi pipelines disagree at d=" + std::to_string(d));
            ++cases;
        });
    }
    // one spectator set and one positive-h instance
    wave::WaveSeries s = wave::phi(1, 2, {Partition::parse("2")}, 1, 2);
    if (!wave::verify_pde(s, 0)) f.note("PDE fails at h=1, k=1");
    ++cases;
    return make_result("wavefn/pde", f, cases.load());
}

CheckResult exp_action_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        std::vector<std::vector<Partition>> delta_sets;
        delta_sets.push_back({});
        for (const auto& p : parts) delta_sets.push_back({p});
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i; j < parts.size(); ++j) delta_sets.push_back({parts[i], parts[j]});
        parallel_for(static_cast<long>(delta_sets.size()), [&](long idx) {
            int order = delta_sets[idx].empty() ? 0 : 2;
            if (!(wave::exp_action(0, d, delta_sets[idx], 0, order) ==
                  wave::phi(0, d, delta_sets[idx], 0, order)))
                f.note("exp-of-operators form disagrees with phi at d=" + std::to_string(d));
            ++cases;
        });
    }
    return make_result("wavefn/exp-action", f, cases.load());
}

CheckResult frobenius_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        long n = static_cast<long>(parts.size());
        algebra::structure_table(d);  // warm the table once
        parallel_for(n * n * n, [&](long idx) {
            size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
            auto ca = algebra::CentralElement::basis(parts[i]);
            auto cb = algebra::CentralElement::basis(parts[j]);
            auto cc = algebra::CentralElement::basis(parts[k]);
            RatQT tri = algebra::trilinear_qt(ca, cb, cc);
            bool ok = tri == algebra::bilinear_qt(ca, algebra::circ(cb, cc)) &&
                      tri == algebra::bilinear_qt(algebra::circ(ca, cb), cc);
            if (!ok) f.note("Frobenius compatibility fails at d=" + std::to_string(d));
            // associativity through the structure table
            if (!(algebra::circ(algebra::circ(ca, cb), cc) ==
                  algebra::circ(ca, algebra::circ(cb, cc))))
                f.note("associativity fails at d=" + std::to_string(d));
            cases += 2;
        });
        // unit law
        auto unit = algebra::CentralElement::basis(ones_partition(d));
        for (const auto& p : parts) {
            if (!(algebra::circ(unit, algebra::CentralElement::basis(p)) ==
                  algebra::CentralElement::basis(p)))
                f.note("unit law fails at d=" + std::to_string(d));
            ++cases;
        }
    }
    return make_result("algebra/frobenius", f, cases.load());
}

CheckResult idempotent_sweep(int max_degree) {
    Failure f;
    std::atomic<long> cases(0);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        algebra::structure_table(d);
        std::vector<algebra::CentralElement> eps;
        for (const auto& lam : parts) eps.push_back(algebra::idempotent(lam));
        long n = static_cast<long>(parts.size());
        parallel_for(n * n, [&](long idx) {
            size_t i = idx / n, j = idx % n;
            if (j < i) return;
            auto prod = algebra::circ(eps[i], eps[j]);
            bool ok = (i == j) ? (prod == eps[i]) : prod.coeffs().empty();
            if (!ok) f.note("idempotent product fails at d=" + std::to_string(d));
            RatQT form = algebra::bilinear_qt(eps[i], eps[j]);
            RatQT expect;
            if (i == j) {
                RatQT dim = dim_qt(parts[i]);
                expect = dim * dim / j_norm(parts[i]);
            }
            if (!(form == expect)) f.note("idempotent norm fails at d=" + std::to_string(d));
            cases += 2;
        });
        algebra::CentralElement sum(d);
        for (const auto& e : eps) sum += e;
        if (!(sum == algebra::CentralElement::basis(ones_partition(d))))
            f.note("idempotent resolution of identity fails at d=" + std::to_string(d));
        ++cases;
    }
    return make_result("algebra/idempotents", f, cases.load());
}

CheckResult eta_frobenius_sweep(int max_degree) {
    Failure f;
    long cases = 0;
    const int grid[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}};
    for (int d = 1; d <= max_degree; ++d) {
        const auto& parts = enumerate_partitions(d);
        for (auto [A, B] : grid) {
            // Lemma-62 normalized idempotents: orthogonality and norms 1/j(A|B)
            std::vector<std::vector<Rational>> eps;
            for (const auto& lam : parts) eps.push_back(algebra::eta_idempotent(lam, A, B));
            for (size_t l = 0; l < parts.size(); ++l)
                for (size_t m = l; m < parts.size(); ++m) {
                    Rational form(0);
                    for (size_t k = 0; k < parts.size(); ++k)
                        form += eps[l][k] * eps[m][k] * algebra::eta_bilinear_CC(parts[k], A, B);
                    Rational expect =
                        (l == m) ? Rational(1) / j_AB(parts[l], A, B) : Rational(0);
                    if (form != expect)
                        f.note("eta idempotent norm fails at d=" + std::to_string(d));
                    ++cases;
                }
            if (!algebra::verify_cohomology_iso(d, A, B))
                f.note("cohomology correspondence fails at d=" + std::to_string(d) + " (A,B)=(" +
                       std::to_string(A) + "," + std::to_string(B) + ")");
            ++cases;
        }
    }
    return make_result("algebra/eta-frobenius-iso", f, cases);
}

CheckResult disconnected_example(int max_degree) {
    Failure f;
    long cases = 0;
    const PolyQT one(1), q = PolyQT::var_q(), t = PolyQT::var_t();
    RatQT unit(one - t, one - q);
    for (int d = 1; d <= max_degree; ++d) {
        RatQT expect = unit.pow(d) * RatQT(Rational(Integer(1), factorial(d)));
        if (!(hurwitz::mh_disconnected(0, d, {ones_partition(d)}, 1 - d) == expect))
            f.note("disconnected (1^d) example fails at d=" + std::to_string(d));
        ++cases;
    }
    return make_result("hurwitz/disconnected-example", f, cases);
}

CheckResult exponential_relation_report(int max_degree) {
    // Compares the disconnected assembly with exp of the g>=0 connected
    // series, in the free p-ring graded by weight, with one branch point
    // (and the k=0 specialization inside it via empty profiles).
    long cases = 0;
    bool holds = true;
    using Series = std::map<Partition, RatQT>;  // keys of any weight <= max_degree
    auto mul = [&](const Series& x, const Series& y) {
        Series out;
        for (const auto& [px, vx] : x)
            for (const auto& [py, vy] : y) {
                if (px.weight() + py.weight() > max_degree) continue;
                Partition key = merge_parts(px, py);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, vx * vy);
                else
                    it->second += vx * vy;
            }
        return out;
    };

    Series connected;  // no constant term
    for (int e = 1; e <= max_degree; ++e)
        for (const auto& g : enumerate_partitions(e)) {
            RatQT v = hurwitz::mh(0, e, {g}, /*require_nonneg_genus=*/true).value;
            if (!v.is_zero()) connected[g] = v;
        }
    // exp(connected), truncated by weight
    Series expF{{Partition(), RatQT(1)}};
    Series power{{Partition(), RatQT(1)}};
    Rational mfact(1);
    for (int m = 1; m <= max_degree; ++m) {
        power = mul(power, connected);
        mfact *= Rational(m);
        for (const auto& [p, v] : power) {
            RatQT scaled = v * RatQT(Rational(1) / mfact);
            auto it = expF.find(p);
            if (it == expF.end())
                expF.emplace(p, scaled);
            else
                it->second += scaled;
        }
    }
    for (int e = 1; e <= max_degree; ++e)
        for (const auto& g : enumerate_partitions(e)) {
            auto forced = hurwitz::genus_from_profile(0, e, {g});
            RatQT disc = forced ? hurwitz::mh_disconnected(0, e, {g}, *forced) : RatQT();
            RatQT expd;
            auto it = expF.find(g);
            if (it != expF.end()) expd = it->second;
            if (!(disc == expd)) holds = false;
            ++cases;
        }

    CheckResult r;
    r.name = "hurwitz/disconnected-exponential-relation (reported)";
    r.ok = true;  // reported, not asserted
    r.cases = cases;
    r.detail = holds ? "relation holds on the tested range"
                     : "relation FAILS on the tested range";
    return r;
}

CheckResult macdonald_degree2_strings() {
    Failure f;
    long cases = 0;
    const PolyQT one(1), q = PolyQT::var_q(), t = PolyQT::var_t();
    auto table = macdonald_table(2);
    Partition two = Partition::parse("2"), oneone = Partition::parse("1,1");

    struct Item {
        RatQT actual;
        RatQT expected;
        const char* what;
    };
    std::vector<Item> items = {
        {coeff_a(two, oneone), half_qt() * RatQT((one + q) * (one - t) * (one - t)),
         "J_(2) coefficient of p_(1,1)"},
        {coeff_a(two, two), half_qt() * RatQT((one - q) * (one - t * t)),
         "J_(2) coefficient of p_(2)"},
        {coeff_a(oneone, oneone), half_qt() * RatQT((one - t) * (one - t * t)),
         "J_(1,1) coefficient of p_(1,1)"},
        {coeff_a(oneone, two), -(half_qt() * RatQT((one - t) * (one - t * t))),
         "J_(1,1) coefficient of p_(2)"},
        {j_norm(two), RatQT((one - t) * (one - q * t) * (one - q) * (one - q * q)), "j_(2)"},
        {j_norm(oneone), RatQT((one - t) * (one - t * t) * (one - q * t) * (one - q)),
         "j_(1,1)"},
    };
    for (const auto& item : items) {
        if (item.actual.to_string() != item.expected.to_string())
            f.note(std::string(item.what) + " string mismatch");
        ++cases;
    }
    // the fully expanded canonical form of the first coefficient is pinned
    if (coeff_a(two, oneone).to_string() != "(q*t^2 - 2*q*t + q + t^2 - 2*t + 1)/(2)")
        f.note("canonical string of J_(2) p_(1,1) coefficient changed");
    ++cases;
    return make_result("macdonald/degree2-verbatim", f, cases);
}

std::vector<std::string> suite_names() {
    return {"qtfield", "macdonald", "hurwitz", "cutjoin", "wavefn", "algebra", "jack", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_degree, unsigned seed) {
    auto cap = [&](int dflt) { return std::min(max_degree, dflt); };
    std::vector<CheckResult> out;
    bool all = suite == "all";
    if (all || suite == "qtfield") {
        out.push_back(qtfield_axioms(seed));
        out.push_back(serialization_roundtrip(seed + 1));
    }
    if (all || suite == "macdonald") {
        out.push_back(macdonald_degree2_strings());
        out.push_back(orthogonality_J(cap(6)));
        out.push_back(orthogonal_lemma_first(cap(6)));
        out.push_back(orthogonal_lemma_second(cap(6)));
        out.push_back(qt_character_reduction(cap(6)));
    }
    if (all || suite == "hurwitz") {
        out.push_back(mh_closed_forms(cap(6)));
        out.push_back(genus_reduction_sweep(cap(4)));
        out.push_back(cutting_sweep(cap(4)));
        out.push_back(disconnected_example(cap(4)));
        out.push_back(exponential_relation_report(cap(3)));
    }
    if (all || suite == "cutjoin") {
        out.push_back(eigen_sweep(cap(5)));
        out.push_back(closure_sweep(cap(4)));
        out.push_back(classical_cutjoin_ratio(cap(5)));
    }
    if (all || suite == "wavefn") {
        out.push_back(wave_initial_values(cap(5)));
        out.push_back(cauchy_sweep(cap(5)));
        out.push_back(pde_sweep(cap(3)));
        out.push_back(exp_action_sweep(cap(3)));
    }
    if (all || suite == "algebra") {
        out.push_back(frobenius_sweep(cap(4)));
        out.push_back(idempotent_sweep(cap(5)));
        out.push_back(qt_structure_vs_brute_force(cap(5)));
        out.push_back(eta_frobenius_sweep(cap(4)));
    }
    if (all || suite == "jack") {
        out.push_back(jack_limit_degree2());
        out.push_back(jack_limit_j_products(cap(5)));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

std::vector<CheckResult> acceptance() {
    std::vector<CheckResult> out;
    auto tag = [&out](int k, CheckResult r, const std::string& label) {
        r.name = "criterion-" + std::string(k < 10 ? "0" : "") + std::to_string(k) + " " + label +
                 " [" + r.name + "]";
        out.push_back(std::move(r));
    };

    tag(1, macdonald_degree2_strings(), "degree-2 table verbatim");

    {
        CheckResult a = orthogonality_J(6);
        CheckResult b = orthogonal_lemma_first(6);
        CheckResult c = orthogonal_lemma_second(6);
        CheckResult merged;
        merged.name = "macdonald/orthogonality(J)+both-lemmas d<=6";
        merged.ok = a.ok && b.ok && c.ok;
        merged.cases = a.cases + b.cases + c.cases;
        merged.detail = !a.ok ? a.detail : (!b.ok ? b.detail : c.detail);
        tag(2, merged, "orthogonality lemmas");
    }

    tag(3, mh_closed_forms(6), "MH closed forms");
    tag(4, genus_reduction_sweep(4), "genus reduction");
    tag(5, cutting_sweep(4), "cutting/associativity");
    tag(6, eigen_sweep(5), "eigen identity");
    tag(7, closure_sweep(4), "operator closure");

    {
        CheckResult a = qt_character_reduction(6);
        CheckResult b = qt_structure_vs_brute_force(5);
        CheckResult merged;
        merged.name = "q=t reductions d<=6 / d<=5";
        merged.ok = a.ok && b.ok;
        merged.cases = a.cases + b.cases;
        merged.detail = !a.ok ? a.detail : b.detail;
        tag(8, merged, "q=t classical reduction");
    }

    tag(9, classical_cutjoin_ratio(5), "classical cut-and-join ratio");

    {
        CheckResult a = jack_limit_degree2();
        CheckResult b = jack_limit_j_products(5);
        CheckResult merged;
        merged.name = "jack/degree2 + j cell products d<=5";
        merged.ok = a.ok && b.ok;
        merged.cases = a.cases + b.cases;
        merged.detail = !a.ok ? a.detail : b.detail;
        tag(10, merged, "Jack eta limits");
    }

    {
        CheckResult a = wave_initial_values(5);
        CheckResult b = cauchy_sweep(5);
        CheckResult merged;
        merged.name = "wavefn/initial-values + cauchy d<=5";
        merged.ok = a.ok && b.ok;
        merged.cases = a.cases + b.cases;
        merged.detail = !a.ok ? a.detail : b.detail;
        tag(11, merged, "initial values and Cauchy kernel");
    }

    {
        CheckResult a = pde_sweep(3);
        CheckResult b = exp_action_sweep(3);
        CheckResult merged;
        merged.name = "wavefn/pde + exp-action d<=3";
        merged.ok = a.ok && b.ok;
        merged.cases = a.cases + b.cases;
        merged.detail = !a.ok ? a.detail : b.detail;
        tag(12, merged, "wave differential equations");
    }

    {
        CheckResult a = idempotent_sweep(5);
        CheckResult b = frobenius_sweep(4);
        CheckResult c = eta_frobenius_sweep(4);
        CheckResult merged;
        merged.name = "algebra/idempotents d<=5 + frobenius d<=4 + eta d<=4";
        merged.ok = a.ok && b.ok && c.ok;
        merged.cases = a.cases + b.cases + c.cases;
        merged.detail = !a.ok ? a.detail : (!b.ok ? b.detail : c.detail);
        tag(13, merged, "Frobenius structure and idempotents");
    }

    {
        CheckResult a = disconnected_example(4);
        CheckResult b = exponential_relation_report(3);
        CheckResult merged;
        merged.name = "hurwitz/disconnected d<=4";
        merged.ok = a.ok;  // the relation part is reported, not asserted
        merged.cases = a.cases + b.cases;
        merged.detail = (a.ok ? "" : a.detail + "; ") + std::string("exp-relation: ") + b.detail;
        tag(14, merged, "disconnected assembly");
    }
    return out;
}

}  // namespace verify
}  // namespace mh
