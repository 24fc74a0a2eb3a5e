#pragma once

// Partition combinatorics and the per-partition scalar data: z, z(q,t),
// arm/leg/hook cells, the products c, c', j and their eta(A|B) limits.

#include <compare>
#include <string>
#include <vector>

#include "mh/qtfield.hpp"

namespace mh {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& s);  // "3,1,1"; "" is empty

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }  // 0-based
    int multiplicity(int value) const;

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of d in descending lexicographic order ((d) first, (1^d) last).
const std::vector<Partition>& enumerate_partitions(int d);

Partition ones_partition(int d);  // (1^d)

// lambda <= mu in dominance order; weights must agree.
bool dominance_leq(const Partition& lambda, const Partition& mu);
// -1, 0, +1 for the paper's lexicographic order; weights must agree.
int lex_cmp(const Partition& lambda, const Partition& mu);

struct CellData {
    int arm = 0;
    int leg = 0;
    int hook() const { return arm + leg + 1; }
};

std::vector<CellData> cells(const Partition& lambda);

Rational z(const Partition& lambda);        // prod i^{m_i} m_i!
RatQT z_qt(const Partition& lambda);        // z * prod (1-q^{l_i})/(1-t^{l_i})

RatQT c_factor(const Partition& lambda);        // prod (1 - q^{a} t^{l+1})
RatQT c_prime_factor(const Partition& lambda);  // prod (1 - q^{a+1} t^{l})
RatQT j_norm(const Partition& lambda);          // c * c'

// eta(A|B) limits; each value is computed both as the cell product and as
// eta_limit of the (q,t) product, and the two must agree.
Rational c_AB(const Partition& lambda, int A, int B);
Rational c_prime_AB(const Partition& lambda, int A, int B);
Rational j_AB(const Partition& lambda, int A, int B);

// Utility: partition from concatenating parts of two partitions.
Partition merge_parts(const Partition& a, const Partition& b);

}  // namespace mh
