#pragma once

// Truncated generating wave functions Phi_h in several time-variable sets,
// their closed-form initial values, the u_i-differential equations, and the
// exponential-of-operators expression.

#include "mh/cutjoin.hpp"

namespace mh {
namespace wave {

using cutjoin::HLaurent;

// Coefficients are indexed by a u-multi-index (l_1..l_n, total <= max_u_order)
// and a tuple of k+1 partition indices (Gamma_1..Gamma_k, Gamma) into parts.
// The stored value multiplies prod_j u_j^{l_j} * prod_i p^{(i)}_{Gamma_i} * p_Gamma
// and already carries the 1/l_j! factors.
struct WaveSeries {
    int h = 0;
    int d = 1;
    int k = 0;
    int max_u_order = 0;
    std::vector<Partition> deltas;
    std::vector<Partition> parts;  // partitions of d, descending lex
    std::map<std::pair<std::vector<int>, std::vector<int>>, HLaurent> coeffs;

    friend bool operator==(const WaveSeries& a, const WaveSeries& b) {
        return a.h == b.h && a.d == b.d && a.k == b.k && a.max_u_order == b.max_u_order &&
               a.deltas == b.deltas && a.coeffs == b.coeffs;
    }
};

// Character-sum construction (the normative one).
WaveSeries phi(int h, int d, const std::vector<Partition>& deltas, int k, int max_u_order);

// Independent assembly through mh_character_sum calls, as a consistency oracle.
WaveSeries phi_via_mh(int h, int d, const std::vector<Partition>& deltas, int k,
                      int max_u_order);

// Degree-d slice of Pi(x,y;q,t): sum_lambda J(x)J(y)/j == sum_D p p / z.
bool verify_cauchy(int d);

// d/du_i Phi = D(Delta_i,hbar) Phi on the last variable set, up to truncation.
bool verify_pde(const WaveSeries& series, int i);

// Phi as prod_i exp(u_i D(Delta_i,hbar)) applied to the no-u initial value.
WaveSeries exp_action(int h, int d, const std::vector<Partition>& deltas, int k,
                      int max_u_order);

}  // namespace wave
}  // namespace mh
