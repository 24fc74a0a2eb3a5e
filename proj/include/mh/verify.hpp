#pragma once

// Identity-verification sweeps with degree budgets. The CLI verify command
// and the acceptance suite both run these; every check is exact.

#include <string>
#include <vector>

#include "mh/wavefn.hpp"

namespace mh {
namespace verify {

struct CheckResult {
    std::string name;
    bool ok = false;
    long cases = 0;       // number of identities checked
    std::string detail;   // first failure, or informational notes
};

void set_jobs(int jobs);  // parallelism for the sweeps (default 1)
int jobs();

CheckResult qtfield_axioms(unsigned seed, int samples = 40);
CheckResult serialization_roundtrip(unsigned seed, int samples = 100);
CheckResult orthogonality_J(int max_degree);          // <J,J> = delta j
CheckResult orthogonal_lemma_first(int max_degree);   // sum a z a = delta j
CheckResult orthogonal_lemma_second(int max_degree);  // sum a a / j = delta / z
CheckResult mh_closed_forms(int max_degree);
CheckResult genus_reduction_sweep(int max_degree);
CheckResult cutting_sweep(int max_degree);
CheckResult eigen_sweep(int max_degree);
CheckResult closure_sweep(int max_degree);
CheckResult qt_character_reduction(int max_degree);
CheckResult qt_structure_vs_brute_force(int max_degree);
CheckResult classical_cutjoin_ratio(int max_degree);
CheckResult jack_limit_degree2();
CheckResult jack_limit_j_products(int max_degree);
CheckResult wave_initial_values(int max_degree);
CheckResult cauchy_sweep(int max_degree);
CheckResult pde_sweep(int max_degree);
CheckResult exp_action_sweep(int max_degree);
CheckResult frobenius_sweep(int max_degree);
CheckResult idempotent_sweep(int max_degree);
CheckResult eta_frobenius_sweep(int max_degree);  // Lemma-62 norms + iso map
CheckResult disconnected_example(int max_degree);
CheckResult exponential_relation_report(int max_degree);  // reported, never fails
CheckResult macdonald_degree2_strings();

// Named suites for the CLI; max_degree caps each sweep's own budget.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, int max_degree, unsigned seed);

// The acceptance criteria at their pinned budgets, one labelled result per
// criterion (criterion 14's exponential-relation part is reported inside the
// detail string, not asserted).
std::vector<CheckResult> acceptance();

}  // namespace verify
}  // namespace mh
