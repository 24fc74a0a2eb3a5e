#pragma once

// Genus-expanded cut-and-join operators D(Delta,hbar) acting on the degree-d
// power-sum basis, genus-expanded integral Macdonald functions, the
// eigenvalue and closure theorems, and the classical operator cross-check.

#include <memory>

#include "mh/classalgebra.hpp"
#include "mh/hurwitz.hpp"

namespace mh {
namespace cutjoin {

// Laurent polynomial in hbar with RatQT coefficients.
class HLaurent {
public:
    HLaurent() = default;
    HLaurent(const RatQT& c) { if (!c.is_zero()) terms_[0] = c; }
    static HLaurent monomial(const RatQT& c, int e);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, RatQT>& terms() const { return terms_; }
    RatQT coeff(int e) const;
    RatQT at_hbar_one() const;

    void add_term(int e, const RatQT& c);
    HLaurent& operator+=(const HLaurent& o);
    friend HLaurent operator+(HLaurent a, const HLaurent& b) { return a += b; }
    friend HLaurent operator*(const HLaurent& a, const HLaurent& b);
    HLaurent& operator*=(const RatQT& s);
    HLaurent shifted(int e) const;  // multiply by hbar^e
    friend bool operator==(const HLaurent& a, const HLaurent& b) { return a.terms_ == b.terms_; }

private:
    std::map<int, RatQT> terms_;  // exponent (possibly negative) -> coefficient
};

// Matrix of the operator on the p basis: entries[i][j] is the coefficient of
// p_{parts[i]} in D applied to p_{parts[j]}.
struct OperatorD {
    int degree = 0;
    Partition delta;
    std::vector<Partition> parts;  // descending lex
    std::vector<std::vector<HLaurent>> entries;
};

std::shared_ptr<const OperatorD> cut_and_join(const Partition& delta, int d);

std::vector<HLaurent> apply(const OperatorD& op, const std::vector<HLaurent>& vec);

struct GenusExpandedJ {
    int degree = 0;
    Partition lambda;
    std::vector<Partition> parts;
    std::vector<HLaurent> coeffs;  // coefficient of p_Delta is hbar^{-d-l} a
};

GenusExpandedJ genus_expanded_J(const Partition& lambda);

// D(Delta,hbar) J_lambda = hbar^{d-l(Delta)} (a_lambda(Delta)/dim) J_lambda.
bool verify_eigen(const Partition& delta, const Partition& lambda);

// D(D1) D(D2) = sum_D3 hbar^{d-l(D1)-l(D2)+l(D3)} C_{D1 D2}^{D3} D(D3).
bool verify_closure(const Partition& delta1, const Partition& delta2);

// Normalized operators hbar^{-d+l(Delta)} D commute.
bool verify_normalized_commute(const Partition& delta1, const Partition& delta2);

// Degree-d matrix of sum_{k,l>=1} [ kl p_{k+l} d2/dp_k dp_l
//                                  + (k+l) p_k p_l d/dp_{k+l} ].
std::vector<std::vector<Rational>> classical_cut_and_join_matrix(int d);

}  // namespace cutjoin
}  // namespace mh
