#pragma once

// Fixed-degree symmetric functions over Q(q,t) in the power-sum and monomial
// bases, the transition matrices between them, and the (q,t) scalar product
// <p_lambda, p_mu> = delta * z_lambda(q,t).

#include <map>
#include <memory>
#include <vector>

#include "mh/partitions.hpp"
#include "mh/qtfield.hpp"

namespace mh {

enum class Basis { PowerSum, Monomial };

class SymFunD {
public:
    SymFunD(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, RatQT>& coeffs() const { return coeffs_; }

    RatQT coeff(const Partition& p) const;
    void set_coeff(const Partition& p, const RatQT& v);
    void add_coeff(const Partition& p, const RatQT& v);

    SymFunD& operator+=(const SymFunD& o);
    SymFunD& operator*=(const RatQT& s);
    friend SymFunD operator+(SymFunD a, const SymFunD& b) { return a += b; }
    friend SymFunD operator*(const RatQT& s, SymFunD f) { return f *= s; }
    friend bool operator==(const SymFunD& a, const SymFunD& b);

private:
    int degree_;
    Basis basis_;
    std::map<Partition, RatQT> coeffs_;  // keys of weight degree_, no zeros
};

// Per-degree transition data, built once and shared. Entries of p_to_m are
// nonnegative integers; m_to_p is its inverse over Q.
struct DegreeTables {
    int degree = 0;
    std::vector<Partition> parts;          // descending lex
    std::map<Partition, int> index;
    std::vector<std::vector<Rational>> p_to_m;  // row mu: p_mu = sum_l row[l] m_l
    std::vector<std::vector<Rational>> m_to_p;
    std::vector<RatQT> z_qt_values;
};

std::shared_ptr<const DegreeTables> degree_tables(int d);

SymFunD to_basis(const SymFunD& f, Basis target);

// <f, g>_{q,t}; degrees must agree.
RatQT inner_qt(const SymFunD& f, const SymFunD& g);

// Product in the power-sum basis: p_Delta * p_Gamma = p_{Delta u Gamma}.
SymFunD multiply_p(const SymFunD& f, const SymFunD& g);

}  // namespace mh
