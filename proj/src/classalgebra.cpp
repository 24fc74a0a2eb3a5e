#include "mh/classalgebra.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "mh/parallel.hpp"

namespace mh {
namespace algebra {

std::shared_ptr<const StructureTable> structure_table(int d) {
    if (d < 1) throw std::invalid_argument("structure_table: d must be >= 1");
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const StructureTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    auto table = std::make_shared<StructureTable>();
    table->degree = d;
    table->parts = enumerate_partitions(d);
    size_t n = table->parts.size();
    for (size_t i = 0; i < n; ++i) table->index[table->parts[i]] = static_cast<int>(i);
    table->C.assign(n, std::vector<std::vector<RatQT>>(n, std::vector<RatQT>(n)));
    std::vector<RatQT> zvals;
    zvals.reserve(n);
    for (const auto& p : table->parts) zvals.push_back(z_qt(p));
    macdonald_table(d);  // build once before the parallel region
    parallel_for(static_cast<long>(n * n), [&](long idx) {
        size_t i = idx / n, j = idx % n;
        if (j < i) return;
        for (size_t k = 0; k < n; ++k) {
            RatQT v = zvals[k] * hurwitz::mh_character_sum(
                                     0, d, {table->parts[i], table->parts[j], table->parts[k]});
            table->C[i][j][k] = v;
            if (i != j) table->C[j][i][k] = v;
        }
    });
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(d, std::move(table));
    return it->second;
}

CentralElement CentralElement::basis(const Partition& delta) {
    CentralElement e(delta.weight());
    e.set_coeff(delta, RatQT(1));
    return e;
}

RatQT CentralElement::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? RatQT() : it->second;
}

void CentralElement::set_coeff(const Partition& p, const RatQT& v) {
    if (p.weight() != degree_) throw std::invalid_argument("CentralElement: weight mismatch");
    if (v.is_zero())
        coeffs_.erase(p);
    else
        coeffs_[p] = v;
}

void CentralElement::add_coeff(const Partition& p, const RatQT& v) {
    if (v.is_zero()) return;
    if (p.weight() != degree_) throw std::invalid_argument("CentralElement: weight mismatch");
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_.emplace(p, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CentralElement& CentralElement::operator+=(const CentralElement& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("CentralElement: degree mismatch");
    for (const auto& [p, v] : o.coeffs_) add_coeff(p, v);
    return *this;
}

CentralElement& CentralElement::operator*=(const RatQT& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, v] : coeffs_) v *= s;
    return *this;
}

CentralElement circ(const CentralElement& x, const CentralElement& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("circ: degree mismatch");
    auto table = structure_table(x.degree());
    size_t n = table->parts.size();
    std::vector<RatQTSum> acc(n);
    for (const auto& [px, vx] : x.coeffs())
        for (const auto& [py, vy] : y.coeffs()) {
            RatQT f = vx * vy;
            if (f.is_zero()) continue;
            int i = table->index.at(px), j = table->index.at(py);
            for (size_t k = 0; k < n; ++k) {
                if (table->C[i][j][k].is_zero()) continue;
                acc[k].add_product(f, table->C[i][j][k]);
            }
        }
    CentralElement out(x.degree());
    for (size_t k = 0; k < n; ++k) out.set_coeff(table->parts[k], acc[k].total());
    return out;
}

RatQT bilinear_qt(const CentralElement& x, const CentralElement& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("bilinear_qt: degree mismatch");
    RatQT sum;
    for (const auto& [p, vx] : x.coeffs()) {
        auto it = y.coeffs().find(p);
        if (it == y.coeffs().end()) continue;
        sum += vx * it->second / z_qt(p);
    }
    return sum;
}

RatQT trilinear_qt(const CentralElement& x, const CentralElement& y, const CentralElement& z) {
    if (x.degree() != y.degree() || x.degree() != z.degree())
        throw std::invalid_argument("trilinear_qt: degree mismatch");
    RatQTSum sum;
    for (const auto& [px, vx] : x.coeffs())
        for (const auto& [py, vy] : y.coeffs())
            for (const auto& [pz, vz] : z.coeffs())
                sum.add_product(vx * vy * vz,
                                hurwitz::mh_character_sum(0, x.degree(), {px, py, pz}));
    return sum.total();
}

CentralElement idempotent(const Partition& lambda) {
    int d = lambda.weight();
    auto table = macdonald_table(d);
    int li = table->index.at(lambda);
    RatQT scale = table->dim[li] / table->j_values[li];
    CentralElement out(d);
    for (size_t k = 0; k < table->parts.size(); ++k)
        out.set_coeff(table->parts[k], scale * table->a[li][k] * z_qt(table->parts[k]));
    return out;
}

namespace {

Partition cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

}  // namespace

std::map<Partition, long long> brute_force_class_product(const Partition& d1,
                                                         const Partition& d2, int d) {
    if (d > 6) throw std::invalid_argument("brute_force_class_product: d > 6 refused");
    if (d1.weight() != d || d2.weight() != d)
        throw std::invalid_argument("brute_force_class_product: weight mismatch");
    std::vector<std::vector<int>> k1, k2;
    std::map<Partition, long long> class_sizes;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Partition type = cycle_type(perm);
        ++class_sizes[type];
        if (type == d1) k1.push_back(perm);
        if (type == d2) k2.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<Partition, long long> counts;
    std::vector<int> prod(d);
    for (const auto& s : k1)
        for (const auto& t : k2) {
            for (int x = 0; x < d; ++x) prod[x] = s[t[x]];
            ++counts[cycle_type(prod)];
        }
    std::map<Partition, long long> out;
    for (const auto& [type, cnt] : counts) {
        long long size = class_sizes.at(type);
        if (cnt % size != 0)
            throw std::logic_error("brute_force_class_product: non-central count");
        if (cnt != 0) out[type] = cnt / size;
    }
    return out;
}

EtaStructure eta_structure(int d, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("eta_structure: A, B must be >= 1");
    auto table = structure_table(d);
    EtaStructure out;
    out.degree = d;
    out.A = A;
    out.B = B;
    out.parts = table->parts;
    size_t n = table->parts.size();
    out.C.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!table->C[i][j][k].is_zero())
                    out.C[i][j][k] = eta_limit(substitute_eta(table->C[i][j][k], A, B), 0);
    return out;
}

std::vector<Rational> eta_idempotent(const Partition& lambda, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("eta_idempotent: A, B must be >= 1");
    CentralElement eps = idempotent(lambda);
    const auto& parts = enumerate_partitions(lambda.weight());
    Rational scale = rational_pow(Rational(A), lambda.weight());
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        RatQT c = eps.coeff(p);
        Rational lim = c.is_zero() ? Rational(0) : eta_limit(substitute_eta(c, A, B), 0);
        out.push_back(lim / scale);
    }
    return out;
}

Rational eta_bilinear_CC(const Partition& delta, int A, int B) {
    Rational alpha(B, A);
    alpha.canonicalize();
    return Rational(1) / (z(delta) * rational_pow(alpha, delta.length()));
}

bool verify_cohomology_iso(int d, int A, int B) {
    const auto& parts = enumerate_partitions(d);
    size_t n = parts.size();
    EtaStructure es = eta_structure(d, A, B);

    // plain-limit idempotents: E_lambda coefficients over the class basis
    Rational a_pow = rational_pow(Rational(A), d);
    std::vector<std::vector<Rational>> E(n);
    for (size_t l = 0; l < n; ++l) {
        E[l] = eta_idempotent(parts[l], A, B);
        for (auto& c : E[l]) c *= a_pow;
    }

    auto circ_ab = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> out(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                for (size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * es.C[i][j][k];
            }
        }
        return out;
    };

    // products: E_l o E_m = delta E_l, i.e. the map E_l -> [l]/c' intertwines
    // the two primitive-idempotent structures
    for (size_t l = 0; l < n; ++l)
        for (size_t m = l; m < n; ++m) {
            std::vector<Rational> prod = circ_ab(E[l], E[m]);
            for (size_t k = 0; k < n; ++k) {
                Rational expect = (l == m) ? E[l][k] : Rational(0);
                if (prod[k] != expect) return false;
            }
        }

    // bilinear forms: the Lemma-62-normalized idempotents have norms
    // delta/j(A|B), equal to <[l]/c', [m]/c'> on the cohomology side
    for (size_t l = 0; l < n; ++l)
        for (size_t m = l; m < n; ++m) {
            Rational form(0);
            for (size_t k = 0; k < n; ++k) {
                if (E[l][k] == 0 || E[m][k] == 0) continue;
                form += (E[l][k] / a_pow) * (E[m][k] / a_pow) * eta_bilinear_CC(parts[k], A, B);
            }
            Rational target = (l == m) ? Rational(1) / j_AB(parts[l], A, B) : Rational(0);
            Rational target_cc = (l == m)
                ? c_prime_AB(parts[l], A, B) / (c_AB(parts[l], A, B) *
                                                c_prime_AB(parts[l], A, B) *
                                                c_prime_AB(parts[l], A, B))
                : Rational(0);
            if (form != target || form != target_cc) return false;
        }
    return true;
}

}  // namespace algebra
}  // namespace mh
