#pragma once

// Macdonald polynomials P_lambda(q,t) via the triangular orthogonality solve,
// integral forms J_lambda = c_lambda P_lambda, the coefficient matrix
// a_lambda(Delta) of J in the power-sum basis, dim lambda = a_lambda(1^d),
// and the classical Murnaghan-Nakayama character oracle.

#include <functional>
#include <memory>

#include "mh/symfun.hpp"

namespace mh {

struct MacdonaldTable {
    int degree = 0;
    std::vector<Partition> parts;              // descending lex
    std::map<Partition, int> index;
    std::vector<std::vector<RatQT>> P_in_m;    // unit upper-triangular rows
    std::vector<std::vector<RatQT>> a;         // a[lambda][delta], J in p basis
    std::vector<RatQT> dim;                    // a[lambda][(1^d)]
    std::vector<RatQT> j_values;               // j_lambda(q,t)
};

using TableLoader = std::function<std::shared_ptr<const MacdonaldTable>(int)>;
using TableSaver = std::function<void(const MacdonaldTable&)>;

// Optional persistence hooks (wired up by the CLI cache).
void set_table_io(TableLoader loader, TableSaver saver);

std::shared_ptr<const MacdonaldTable> macdonald_table(int d);

SymFunD macdonald_P(const Partition& lambda);   // monomial basis
SymFunD integral_J(const Partition& lambda);    // power-sum basis

RatQT coeff_a(const Partition& lambda, const Partition& delta);
RatQT dim_qt(const Partition& lambda);

// Character of the S_d irreducible indexed by lambda on the class delta.
long long character_MN(const Partition& lambda, const Partition& delta);

// s_lambda in the p basis, built from characters: coeff of p_Delta is chi/z.
SymFunD schur_in_p(const Partition& lambda);

// prod over cells (1 - t^{hook}).
PolyQT hook_product_t(const Partition& lambda);

// Jack coefficient along eta(A|B), alpha = B/A: the plain eta-limit of
// a_lambda(Delta) with normalization (1-r)^{|lambda|} carries a factor
// A^{|lambda|} relative to J^{(alpha)}, which this helper divides out.
Rational jack_J_coeff(const Partition& lambda, const Partition& delta, int A, int B);

}  // namespace mh
