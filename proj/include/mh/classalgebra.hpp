#pragma once

// The (q,t)-deformed product on the center of the group algebra of S_d:
// structure constants z_{D3}(q,t) MH(D1,D2,D3), the Frobenius bilinear and
// trilinear forms, idempotents, the eta(A|B) specialization, a brute-force
// S_d oracle, and the bilinear-form check against the equivariant-cohomology
// side data.

#include <map>
#include <memory>

#include "mh/hurwitz.hpp"

namespace mh {
namespace algebra {

struct StructureTable {
    int degree = 0;
    std::vector<Partition> parts;  // descending lex
    std::map<Partition, int> index;
    // C[i][j][k] = coefficient of C_{parts[k]} in C_{parts[i]} o C_{parts[j]}
    std::vector<std::vector<std::vector<RatQT>>> C;
};

std::shared_ptr<const StructureTable> structure_table(int d);

class CentralElement {
public:
    explicit CentralElement(int degree) : degree_(degree) {}
    static CentralElement basis(const Partition& delta);  // C_Delta

    int degree() const { return degree_; }
    const std::map<Partition, RatQT>& coeffs() const { return coeffs_; }
    RatQT coeff(const Partition& p) const;
    void set_coeff(const Partition& p, const RatQT& v);
    void add_coeff(const Partition& p, const RatQT& v);

    CentralElement& operator+=(const CentralElement& o);
    CentralElement& operator*=(const RatQT& s);
    friend bool operator==(const CentralElement& a, const CentralElement& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    int degree_;
    std::map<Partition, RatQT> coeffs_;
};

CentralElement circ(const CentralElement& x, const CentralElement& y);
RatQT bilinear_qt(const CentralElement& x, const CentralElement& y);
RatQT trilinear_qt(const CentralElement& x, const CentralElement& y, const CentralElement& z);

// eps_lambda = sum_Delta (dim/j) a_lambda(Delta) z_Delta(q,t) C_Delta.
CentralElement idempotent(const Partition& lambda);

// Exact connection coefficients of the classical class product by enumerating
// S_d; refuses d > 6.
std::map<Partition, long long> brute_force_class_product(const Partition& d1,
                                                         const Partition& d2, int d);

struct EtaStructure {
    int degree = 0;
    int A = 1, B = 1;
    std::vector<Partition> parts;
    std::vector<std::vector<std::vector<Rational>>> C;  // plain eta limits
};

EtaStructure eta_structure(int d, int A, int B);

// Idempotent coefficients along eta(A|B). The raw limit of eps_lambda(r^B,r^A)
// carries a factor A^{|lambda|} relative to the alpha-path normalization the
// norm formula <eps,eps>_{A|B} = delta/j(A|B) refers to, so it is divided out.
std::vector<Rational> eta_idempotent(const Partition& lambda, int A, int B);

// bilinear form on the eta side: <C_D, C_D>_{A|B} = 1/(z_D alpha^{l(D)}).
Rational eta_bilinear_CC(const Partition& delta, int A, int B);

// Checks the map to the equivariant side: the plain-limit idempotents satisfy
// the primitive-idempotent relations (so products are preserved onto the
// star product), and the normalized idempotents have norms delta/j(A|B),
// matching <[lambda]/c', [mu]/c'> on the target.
bool verify_cohomology_iso(int d, int A, int B);

}  // namespace algebra
}  // namespace mh
