#include "mh/cutjoin.hpp"

#include <mutex>

namespace mh {
namespace cutjoin {

HLaurent HLaurent::monomial(const RatQT& c, int e) {
    HLaurent h;
    if (!c.is_zero()) h.terms_[e] = c;
    return h;
}

RatQT HLaurent::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatQT() : it->second;
}

RatQT HLaurent::at_hbar_one() const {
    RatQT s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void HLaurent::add_term(int e, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HLaurent& HLaurent::operator+=(const HLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HLaurent operator*(const HLaurent& a, const HLaurent& b) {
    HLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

HLaurent& HLaurent::operator*=(const RatQT& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HLaurent HLaurent::shifted(int e) const {
    HLaurent r;
    for (const auto& [ee, c] : terms_) r.terms_.emplace(ee + e, c);
    return r;
}

std::shared_ptr<const OperatorD> cut_and_join(const Partition& delta, int d) {
    if (d < 1) throw std::invalid_argument("cut_and_join: d must be >= 1");
    if (delta.weight() != d) throw std::invalid_argument("cut_and_join: |Delta| != d");
    static std::mutex mtx;
    static std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const OperatorD>> cache;
    auto key = std::make_pair(d, delta.parts());
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto op = std::make_shared<OperatorD>();
    op->degree = d;
    op->delta = delta;
    op->parts = enumerate_partitions(d);
    size_t n = op->parts.size();
    op->entries.assign(n, std::vector<HLaurent>(n));
    int ld = delta.length();
    for (size_t j = 0; j < n; ++j) {      // column: p_{Gamma'}
        const Partition& gp = op->parts[j];
        RatQT zgp = z_qt(gp);
        for (size_t i = 0; i < n; ++i) {  // row: coefficient of p_Gamma
            const Partition& g = op->parts[i];
            RatQT v = zgp * hurwitz::mh_character_sum(0, d, {gp, delta, g});
            if (v.is_zero()) continue;
            int e = d + gp.length() - ld - g.length();
            op->entries[i][j] = HLaurent::monomial(v, e);
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(op));
    return it->second;
}

std::vector<HLaurent> apply(const OperatorD& op, const std::vector<HLaurent>& vec) {
    size_t n = op.parts.size();
    if (vec.size() != n) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<HLaurent> out(n);
    for (size_t i = 0; i < n; ++i) {
        std::map<int, RatQTSum> acc;
        for (size_t j = 0; j < n; ++j) {
            if (op.entries[i][j].is_zero() || vec[j].is_zero()) continue;
            for (const auto& [e1, c1] : op.entries[i][j].terms())
                for (const auto& [e2, c2] : vec[j].terms()) acc[e1 + e2].add_product(c1, c2);
        }
        for (const auto& [e, sum] : acc) out[i].add_term(e, sum.total());
    }
    return out;
}

GenusExpandedJ genus_expanded_J(const Partition& lambda) {
    int d = lambda.weight();
    auto table = macdonald_table(d);
    int li = table->index.at(lambda);
    GenusExpandedJ out;
    out.degree = d;
    out.lambda = lambda;
    out.parts = table->parts;
    out.coeffs.resize(table->parts.size());
    for (size_t k = 0; k < table->parts.size(); ++k)
        out.coeffs[k] =
            HLaurent::monomial(table->a[li][k], -d - table->parts[k].length());
    return out;
}

bool verify_eigen(const Partition& delta, const Partition& lambda) {
    if (delta.weight() != lambda.weight())
        throw std::invalid_argument("verify_eigen: |Delta| != |lambda|");
    int d = delta.weight();
    auto op = cut_and_join(delta, d);
    GenusExpandedJ j = genus_expanded_J(lambda);
    std::vector<HLaurent> lhs = cutjoin::apply(*op, j.coeffs);
    // the eigenvalue carried by the operator as defined is a_lambda(Delta)/dim
    RatQT eigen = coeff_a(lambda, delta) / dim_qt(lambda);
    int shift = d - delta.length();
    for (size_t i = 0; i < j.coeffs.size(); ++i) {
        HLaurent rhs = j.coeffs[i].shifted(shift);
        rhs *= eigen;
        if (!(lhs[i] == rhs)) return false;
    }
    return true;
}

bool verify_closure(const Partition& delta1, const Partition& delta2) {
    if (delta1.weight() != delta2.weight())
        throw std::invalid_argument("verify_closure: degree mismatch");
    int d = delta1.weight();
    auto op1 = cut_and_join(delta1, d);
    auto op2 = cut_and_join(delta2, d);
    auto ctable = algebra::structure_table(d);
    size_t n = op1->parts.size();
    int i1 = ctable->index.at(delta1), i2 = ctable->index.at(delta2);
    int shift_base = d - delta1.length() - delta2.length();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            HLaurent lhs;
            {
                std::map<int, RatQTSum> acc;
                for (size_t j = 0; j < n; ++j) {
                    if (op1->entries[i][j].is_zero() || op2->entries[j][k].is_zero()) continue;
                    for (const auto& [e1, c1] : op1->entries[i][j].terms())
                        for (const auto& [e2, c2] : op2->entries[j][k].terms())
                            acc[e1 + e2].add_product(c1, c2);
                }
                for (const auto& [e, sum] : acc) lhs.add_term(e, sum.total());
            }
            HLaurent rhs;
            for (size_t d3 = 0; d3 < n; ++d3) {
                const RatQT& c = ctable->C[i1][i2][d3];
                if (c.is_zero()) continue;
                auto op3 = cut_and_join(ctable->parts[d3], d);
                if (op3->entries[i][k].is_zero()) continue;
                HLaurent term = op3->entries[i][k].shifted(shift_base + ctable->parts[d3].length());
                term *= c;
                rhs += term;
            }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool verify_normalized_commute(const Partition& delta1, const Partition& delta2) {
    int d = delta1.weight();
    auto op1 = cut_and_join(delta1, d);
    auto op2 = cut_and_join(delta2, d);
    size_t n = op1->parts.size();
    // normalization by powers of hbar cancels in the commutator comparison
    int s1 = -d + delta1.length(), s2 = -d + delta2.length();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            HLaurent ab, ba;
            {
                std::map<int, RatQTSum> acc_ab, acc_ba;
                for (size_t j = 0; j < n; ++j) {
                    for (const auto& [e1, c1] : op1->entries[i][j].terms())
                        for (const auto& [e2, c2] : op2->entries[j][k].terms())
                            acc_ab[e1 + e2].add_product(c1, c2);
                    for (const auto& [e1, c1] : op2->entries[i][j].terms())
                        for (const auto& [e2, c2] : op1->entries[j][k].terms())
                            acc_ba[e1 + e2].add_product(c1, c2);
                }
                for (const auto& [e, sum] : acc_ab) ab.add_term(e, sum.total());
                for (const auto& [e, sum] : acc_ba) ba.add_term(e, sum.total());
            }
            if (!(ab.shifted(s1 + s2) == ba.shifted(s1 + s2))) return false;
        }
    return true;
}

std::vector<std::vector<Rational>> classical_cut_and_join_matrix(int d) {
    if (d < 2) throw std::invalid_argument("classical_cut_and_join_matrix: d must be >= 2");
    const auto& parts = enumerate_partitions(d);
    std::map<Partition, int> index;
    for (size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
    size_t n = parts.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));

    auto remove_part = [](std::vector<int> v, int value) {
        auto it = std::find(v.begin(), v.end(), value);
        v.erase(it);
        return v;
    };

    for (size_t j = 0; j < n; ++j) {
        const Partition& gp = parts[j];
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                // cut: kl p_{k+l} d^2/dp_k dp_l
                if (k + l <= d) {
                    long mult;
                    if (k != l)
                        mult = static_cast<long>(gp.multiplicity(k)) * gp.multiplicity(l);
                    else
                        mult = static_cast<long>(gp.multiplicity(k)) * (gp.multiplicity(k) - 1);
                    if (mult > 0) {
                        std::vector<int> v = remove_part(gp.parts(), k);
                        v = remove_part(v, l);
                        v.push_back(k + l);
                        std::sort(v.rbegin(), v.rend());
                        m[index.at(Partition(v))][j] += Rational(static_cast<long>(k) * l * mult);
                    }
                }
                // join: (k+l) p_k p_l d/dp_{k+l}
                if (k + l <= d && gp.multiplicity(k + l) > 0) {
                    std::vector<int> v = remove_part(gp.parts(), k + l);
                    v.push_back(k);
                    v.push_back(l);
                    std::sort(v.rbegin(), v.rend());
                    m[index.at(Partition(v))][j] +=
                        Rational(static_cast<long>(k + l) * gp.multiplicity(k + l));
                }
            }
    }
    return m;
}

}  // namespace cutjoin
}  // namespace mh
