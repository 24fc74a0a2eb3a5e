#include "mh/macdonald.hpp"

#include <algorithm>
#include <mutex>

namespace mh {

namespace {

std::mutex io_mutex;
TableLoader table_loader;
TableSaver table_saver;

std::shared_ptr<const MacdonaldTable> build_table(int d) {
    auto dt = degree_tables(d);
    size_t n = dt->parts.size();
    auto table = std::make_shared<MacdonaldTable>();
    table->degree = d;
    table->parts = dt->parts;
    table->index = dt->index;
    if (d == 0) {
        table->a = {{RatQT(1)}};
        table->dim = {RatQT(1)};
        table->P_in_m = {{RatQT(1)}};
        table->j_values = {RatQT(1)};
        return table;
    }

    // Solve the orthogonality conditions <P_lambda, m_nu> = 0 (nu lex-below
    // lambda) by Gram-Schmidt against the already-built P_nu, working in
    // p-coordinates where the form is diagonal: <p_D, p_D> = z_D(q,t).
    // Processing lex-ascending makes every projection target available.
    std::vector<std::vector<RatQT>> P_in_p(n, std::vector<RatQT>(n));
    std::vector<RatQT> norms(n);
    auto pairing = [&](const std::vector<RatQT>& f, const std::vector<RatQT>& g) {
        RatQTSum s;
        for (size_t k = 0; k < n; ++k) {
            if (f[k].is_zero() || g[k].is_zero()) continue;
            s.add_product(f[k] * g[k], dt->z_qt_values[k]);
        }
        return s.total();
    };
    for (size_t li = n; li-- > 0;) {
        std::vector<RatQT> v(n);
        for (size_t k = 0; k < n; ++k)
            if (dt->m_to_p[li][k] != 0) v[k] = RatQT(dt->m_to_p[li][k]);
        for (size_t nu = li + 1; nu < n; ++nu) {
            RatQT coef = pairing(v, P_in_p[nu]) / norms[nu];
            if (coef.is_zero()) continue;
            for (size_t k = 0; k < n; ++k)
                if (!P_in_p[nu][k].is_zero()) v[k] -= coef * P_in_p[nu][k];
        }
        norms[li] = pairing(v, v);
        if (norms[li].is_zero())
            throw std::logic_error("macdonald: degenerate norm for " + table->parts[li].to_string());
        P_in_p[li] = std::move(v);
    }

    // Back to the monomial basis (unit triangular rows) and to J = c * P.
    table->P_in_m.assign(n, std::vector<RatQT>(n));
    for (size_t li = 0; li < n; ++li)
        for (size_t mu = 0; mu < n; ++mu) {
            RatQT s;
            for (size_t k = 0; k < n; ++k) {
                if (P_in_p[li][k].is_zero() || dt->p_to_m[k][mu] == 0) continue;
                s += P_in_p[li][k] * RatQT(dt->p_to_m[k][mu]);
            }
            table->P_in_m[li][mu] = s;
        }

    table->a.assign(n, std::vector<RatQT>(n));
    table->dim.resize(n);
    table->j_values.reserve(n);
    for (size_t li = 0; li < n; ++li) {
        RatQT c = c_factor(table->parts[li]);
        for (size_t delta = 0; delta < n; ++delta)
            table->a[li][delta] = c * P_in_p[li][delta];
        table->dim[li] = table->a[li][n - 1];
        if (table->dim[li].is_zero())
            throw std::logic_error("macdonald: dim vanishes for " + table->parts[li].to_string());
        table->j_values.push_back(j_norm(table->parts[li]));
    }
    return table;
}

}  // namespace

void set_table_io(TableLoader loader, TableSaver saver) {
    std::lock_guard<std::mutex> lock(io_mutex);
    table_loader = std::move(loader);
    table_saver = std::move(saver);
}

std::shared_ptr<const MacdonaldTable> macdonald_table(int d) {
    if (d < 0) throw std::invalid_argument("macdonald_table: d must be >= 0");
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const MacdonaldTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    TableLoader loader;
    TableSaver saver;
    {
        std::lock_guard<std::mutex> lock(io_mutex);
        loader = table_loader;
        saver = table_saver;
    }
    std::shared_ptr<const MacdonaldTable> table;
    if (loader) table = loader(d);
    bool fresh = !table;
    if (fresh) table = build_table(d);
    if (fresh && saver) saver(*table);
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(d, std::move(table));
    return it->second;
}

SymFunD macdonald_P(const Partition& lambda) {
    auto table = macdonald_table(lambda.weight());
    int li = table->index.at(lambda);
    SymFunD out(lambda.weight(), Basis::Monomial);
    for (size_t j = 0; j < table->parts.size(); ++j)
        out.set_coeff(table->parts[j], table->P_in_m[li][j]);
    return out;
}

SymFunD integral_J(const Partition& lambda) {
    auto table = macdonald_table(lambda.weight());
    int li = table->index.at(lambda);
    SymFunD out(lambda.weight(), Basis::PowerSum);
    for (size_t j = 0; j < table->parts.size(); ++j)
        out.set_coeff(table->parts[j], table->a[li][j]);
    return out;
}

RatQT coeff_a(const Partition& lambda, const Partition& delta) {
    if (lambda.weight() != delta.weight())
        throw std::invalid_argument("coeff_a: |lambda| != |Delta|");
    auto table = macdonald_table(lambda.weight());
    return table->a[table->index.at(lambda)][table->index.at(delta)];
}

RatQT dim_qt(const Partition& lambda) {
    auto table = macdonald_table(lambda.weight());
    return table->dim[table->index.at(lambda)];
}

namespace {

// Border-strip removal on beta numbers; sign is (-1)^(strip height).
long long chi_impl(std::vector<int> lam, std::vector<int> delta,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    if (lam.empty()) return 1;
    auto key = std::make_pair(lam, delta);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = delta.front();
    std::vector<int> rest(delta.begin() + 1, delta.end());

    int L = static_cast<int>(lam.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < L; ++j)
            if (beta[j] < beta[i] && beta[j] > target) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl(L);
        for (int k = 0; k < L; ++k) nl[k] = nb[k] - (L - 1 - k);
        while (!nl.empty() && nl.back() == 0) nl.pop_back();
        long long sub = chi_impl(nl, rest, memo);
        total += (height % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character_MN(const Partition& lambda, const Partition& delta) {
    if (lambda.weight() != delta.weight())
        throw std::invalid_argument("character_MN: |lambda| != |Delta|");
    static std::mutex mtx;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    std::lock_guard<std::mutex> lock(mtx);
    return chi_impl(lambda.parts(), delta.parts(), memo);
}

SymFunD schur_in_p(const Partition& lambda) {
    int d = lambda.weight();
    SymFunD out(d, Basis::PowerSum);
    for (const auto& delta : enumerate_partitions(d))
        out.set_coeff(delta, RatQT(Rational(static_cast<long>(character_MN(lambda, delta))) / z(delta)));
    return out;
}

PolyQT hook_product_t(const Partition& lambda) {
    PolyQT prod(1);
    const PolyQT one(1);
    for (const CellData& s : cells(lambda)) prod *= one - PolyQT::monomial(1, 0, s.hook());
    return prod;
}

Rational jack_J_coeff(const Partition& lambda, const Partition& delta, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("jack_J_coeff: A, B must be >= 1");
    RatQT a = coeff_a(lambda, delta);
    Rational lim = eta_limit(substitute_eta(a, A, B), lambda.weight());
    return lim / rational_pow(Rational(A), lambda.weight());
}

}  // namespace mh
