#include "mh/symfun.hpp"

#include <mutex>
#include <stdexcept>

namespace mh {

RatQT SymFunD::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? RatQT() : it->second;
}

void SymFunD::set_coeff(const Partition& p, const RatQT& v) {
    if (p.weight() != degree_) throw std::invalid_argument("SymFunD: key weight != degree");
    if (v.is_zero())
        coeffs_.erase(p);
    else
        coeffs_[p] = v;
}

void SymFunD::add_coeff(const Partition& p, const RatQT& v) {
    if (v.is_zero()) return;
    if (p.weight() != degree_) throw std::invalid_argument("SymFunD: key weight != degree");
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_.emplace(p, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunD& SymFunD::operator+=(const SymFunD& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunD: degree/basis mismatch in addition");
    for (const auto& [p, v] : o.coeffs_) add_coeff(p, v);
    return *this;
}

SymFunD& SymFunD::operator*=(const RatQT& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, v] : coeffs_) v *= s;
    return *this;
}

bool operator==(const SymFunD& a, const SymFunD& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

namespace {

// Single-row rule: p_r * m_lambda expands over partitions mu obtained by
// adding r to one part value of lambda (or appending r), with coefficient
// equal to the multiplicity in mu of the grown part.
std::map<Partition, Rational> multiply_pr_m(int r, const Partition& lambda) {
    std::map<Partition, Rational> out;
    std::vector<int> values;  // distinct part values present, plus 0 for append
    values.push_back(0);
    for (int v : lambda.parts())
        if (values.back() != v) values.push_back(v);
    for (int a : values) {
        std::vector<int> parts = lambda.parts();
        if (a > 0) {
            auto it = std::find(parts.begin(), parts.end(), a);
            parts.erase(it);
        }
        parts.push_back(a + r);
        std::sort(parts.rbegin(), parts.rend());
        Partition mu(std::move(parts));
        out[mu] += Rational(mu.multiplicity(a + r));
    }
    return out;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> a = m, inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

std::shared_ptr<const DegreeTables> degree_tables(int d) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const DegreeTables>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    auto tables = std::make_shared<DegreeTables>();
    tables->degree = d;
    tables->parts = enumerate_partitions(d);
    size_t n = tables->parts.size();
    for (size_t i = 0; i < n; ++i) tables->index[tables->parts[i]] = static_cast<int>(i);

    tables->p_to_m.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t mu = 0; mu < n; ++mu) {
        // expand p_mu by multiplying rows one part at a time
        std::map<Partition, Rational> acc;
        acc[Partition()] = 1;
        for (int r : tables->parts[mu].parts()) {
            std::map<Partition, Rational> next;
            for (const auto& [lam, c] : acc)
                for (const auto& [m2, c2] : multiply_pr_m(r, lam)) next[m2] += c * c2;
            acc = std::move(next);
        }
        for (const auto& [lam, c] : acc) {
            if (c == 0) continue;
            tables->p_to_m[mu][tables->index.at(lam)] = c;
        }
    }
    tables->m_to_p = invert(tables->p_to_m);

    tables->z_qt_values.reserve(n);
    for (const auto& p : tables->parts) tables->z_qt_values.push_back(z_qt(p));

    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(d, std::move(tables));
    return it->second;
}

SymFunD to_basis(const SymFunD& f, Basis target) {
    if (f.basis() == target) return f;
    auto tables = degree_tables(f.degree());
    const auto& matrix = (f.basis() == Basis::PowerSum) ? tables->p_to_m : tables->m_to_p;
    SymFunD out(f.degree(), target);
    for (const auto& [p, v] : f.coeffs()) {
        const auto& row = matrix[tables->index.at(p)];
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) out.add_coeff(tables->parts[j], v * RatQT(row[j]));
    }
    return out;
}

RatQT inner_qt(const SymFunD& f, const SymFunD& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner_qt: degree mismatch");
    auto tables = degree_tables(f.degree());
    SymFunD fp = to_basis(f, Basis::PowerSum);
    SymFunD gp = to_basis(g, Basis::PowerSum);
    RatQT sum;
    for (const auto& [p, fv] : fp.coeffs()) {
        auto it = gp.coeffs().find(p);
        if (it == gp.coeffs().end()) continue;
        sum += fv * it->second * tables->z_qt_values[tables->index.at(p)];
    }
    return sum;
}

SymFunD multiply_p(const SymFunD& f, const SymFunD& g) {
    if (f.basis() != Basis::PowerSum || g.basis() != Basis::PowerSum)
        throw std::invalid_argument("multiply_p: both factors must be in the power-sum basis");
    SymFunD out(f.degree() + g.degree(), Basis::PowerSum);
    for (const auto& [pf, vf] : f.coeffs())
        for (const auto& [pg, vg] : g.coeffs())
            out.add_coeff(merge_parts(pf, pg), vf * vg);
    return out;
}

}  // namespace mh
