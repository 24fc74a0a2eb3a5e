#include "mh/wavefn.hpp"

namespace mh {
namespace wave {

namespace {

void multi_indices(int n, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        cur.push_back(v);
        multi_indices(n, budget - v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_tuples(size_t n, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int j = len - 1;
        while (j >= 0 && ++cur[j] == static_cast<int>(n)) cur[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

void validate(int h, int d, const std::vector<Partition>& deltas, int k, int max_u_order) {
    if (h < 0 || d < 1 || k < 0 || max_u_order < 0)
        throw std::invalid_argument("wave: bad arguments");
    for (const auto& p : deltas)
        if (p.weight() != d)
            throw std::invalid_argument("wave: delta " + p.to_string() +
                                        " is not a partition of " + std::to_string(d));
}

}  // namespace

WaveSeries phi(int h, int d, const std::vector<Partition>& deltas, int k, int max_u_order) {
    validate(h, d, deltas, k, max_u_order);
    int n = static_cast<int>(deltas.size());
    auto table = macdonald_table(d);
    size_t np = table->parts.size();

    WaveSeries out;
    out.h = h;
    out.d = d;
    out.k = k;
    out.max_u_order = max_u_order;
    out.deltas = deltas;
    out.parts = table->parts;

    std::vector<std::vector<int>> ls;
    {
        std::vector<int> cur;
        multi_indices(n, max_u_order, cur, ls);
    }
    std::vector<std::vector<int>> tuples = all_tuples(np, k + 1);

    // per-lambda data
    std::vector<RatQT> base(np);           // (dim^2/j)^{1-h}
    std::vector<std::vector<RatQT>> ratio(np, std::vector<RatQT>(np));  // a/dim
    for (size_t li = 0; li < np; ++li) {
        base[li] = (table->dim[li] * table->dim[li] / table->j_values[li]).pow(1 - h);
        for (size_t gi = 0; gi < np; ++gi)
            ratio[li][gi] = table->a[li][gi] / table->dim[li];
    }
    std::vector<int> delta_index(n);
    for (int j = 0; j < n; ++j) delta_index[j] = table->index.at(deltas[j]);

    for (const auto& l : ls) {
        Rational lfact(1);
        long l_ram = 0;
        for (int j = 0; j < n; ++j) {
            lfact *= Rational(factorial(l[j]));
            l_ram += static_cast<long>(l[j]) * (d - deltas[j].length());
        }
        // per-lambda u-part: prod_j (a(Delta_j)/dim)^{l_j}
        std::vector<RatQT> upart(np, RatQT(1));
        for (size_t li = 0; li < np; ++li)
            for (int j = 0; j < n; ++j)
                if (l[j] > 0) upart[li] *= ratio[li][delta_index[j]].pow(l[j]);

        for (const auto& tup : tuples) {
            long s = l_ram;
            for (int slot = 0; slot <= k; ++slot)
                s += d - table->parts[tup[slot]].length();
            int hbar_exp = static_cast<int>(s - static_cast<long>(2 - 2 * h) * d);
            RatQTSum acc2;
            for (size_t li = 0; li < np; ++li) {
                RatQT term = base[li] * upart[li];
                for (int slot = 0; slot <= k; ++slot) term *= ratio[li][tup[slot]];
                acc2.add(term);
            }
            RatQT sum = acc2.total();
            if (sum.is_zero()) continue;
            sum *= RatQT(Rational(1) / lfact);
            out.coeffs[{l, tup}] = HLaurent::monomial(sum, hbar_exp);
        }
    }
    return out;
}

WaveSeries phi_via_mh(int h, int d, const std::vector<Partition>& deltas, int k,
                      int max_u_order) {
    validate(h, d, deltas, k, max_u_order);
    int n = static_cast<int>(deltas.size());
    const auto& parts = enumerate_partitions(d);
    size_t np = parts.size();

    WaveSeries out;
    out.h = h;
    out.d = d;
    out.k = k;
    out.max_u_order = max_u_order;
    out.deltas = deltas;
    out.parts = parts;

    std::vector<std::vector<int>> ls;
    {
        std::vector<int> cur;
        multi_indices(n, max_u_order, cur, ls);
    }
    for (const auto& l : ls) {
        Rational lfact(1);
        hurwitz::Profiles prefix;
        for (int j = 0; j < n; ++j) {
            lfact *= Rational(factorial(l[j]));
            for (int c = 0; c < l[j]; ++c) prefix.push_back(deltas[j]);
        }
        for (const auto& tup : all_tuples(np, k + 1)) {
            hurwitz::Profiles profiles = prefix;
            long s = 0;
            for (const auto& p : profiles) s += d - p.length();
            for (int slot = 0; slot <= k; ++slot) {
                profiles.push_back(parts[tup[slot]]);
                s += d - parts[tup[slot]].length();
            }
            RatQT value = hurwitz::mh_character_sum(h, d, profiles);
            if (value.is_zero()) continue;
            value *= RatQT(Rational(1) / lfact);
            int hbar_exp = static_cast<int>(s - static_cast<long>(2 - 2 * h) * d);
            out.coeffs[{l, tup}] = HLaurent::monomial(value, hbar_exp);
        }
    }
    return out;
}

bool verify_cauchy(int d) {
    if (d < 1) throw std::invalid_argument("verify_cauchy: d must be >= 1");
    auto table = macdonald_table(d);
    auto dt = degree_tables(d);
    size_t n = table->parts.size();
    for (size_t d1 = 0; d1 < n; ++d1)
        for (size_t d2 = d1; d2 < n; ++d2) {
            RatQT lhs;
            for (size_t li = 0; li < n; ++li)
                lhs += table->a[li][d1] * table->a[li][d2] / table->j_values[li];
            RatQT rhs = (d1 == d2) ? dt->z_qt_values[d1].inverse() : RatQT();
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool verify_pde(const WaveSeries& series, int i) {
    if (i < 0 || i >= static_cast<int>(series.deltas.size()))
        throw std::invalid_argument("verify_pde: index out of range");
    if (series.max_u_order < 1)
        throw std::invalid_argument("verify_pde: series must carry at least one u order");
    auto op = cutjoin::cut_and_join(series.deltas[i], series.d);
    size_t np = series.parts.size();
    int n = static_cast<int>(series.deltas.size());

    std::vector<std::vector<int>> ls;
    {
        std::vector<int> cur;
        multi_indices(n, series.max_u_order - 1, cur, ls);
    }
    for (const auto& l : ls) {
        for (const auto& tup : all_tuples(np, series.k + 1)) {
            // d/du_i: (l_i + 1) * coefficient at l + e_i
            std::vector<int> lup = l;
            ++lup[i];
            HLaurent lhs;
            auto it = series.coeffs.find({lup, tup});
            if (it != series.coeffs.end()) {
                lhs = it->second;
                lhs *= RatQT(Rational(l[i] + 1));
            }
            // D acting on the last slot
            HLaurent rhs;
            for (size_t gp = 0; gp < np; ++gp) {
                if (op->entries[tup.back()][gp].is_zero()) continue;
                std::vector<int> src = tup;
                src.back() = static_cast<int>(gp);
                auto jt = series.coeffs.find({l, src});
                if (jt == series.coeffs.end()) continue;
                rhs += op->entries[tup.back()][gp] * jt->second;
            }
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

WaveSeries exp_action(int h, int d, const std::vector<Partition>& deltas, int k,
                      int max_u_order) {
    validate(h, d, deltas, k, max_u_order);
    int n = static_cast<int>(deltas.size());
    WaveSeries initial = phi(h, d, {}, k, 0);
    size_t np = initial.parts.size();

    WaveSeries out;
    out.h = h;
    out.d = d;
    out.k = k;
    out.max_u_order = max_u_order;
    out.deltas = deltas;
    out.parts = initial.parts;
    for (const auto& [key, value] : initial.coeffs)
        out.coeffs[{std::vector<int>(n, 0), key.second}] = value;

    for (int i = 0; i < n; ++i) {
        auto op = cutjoin::cut_and_join(deltas[i], d);
        std::map<std::pair<std::vector<int>, std::vector<int>>, HLaurent> next;
        for (const auto& [key, value] : out.coeffs) {
            const auto& [l, tup] = key;
            int used = 0;
            for (int v : l) used += v;
            next[{l, tup}] += value;
            // apply D^m/m! for m >= 1
            std::vector<HLaurent> vec(np);
            vec[tup.back()] = value;
            Rational mfact(1);
            for (int m = 1; used + m <= max_u_order; ++m) {
                vec = cutjoin::apply(*op, vec);
                mfact *= Rational(m);
                std::vector<int> lup = l;
                lup[i] += m;
                RatQT scale{Rational(1) / mfact};
                for (size_t g = 0; g < np; ++g) {
                    if (vec[g].is_zero()) continue;
                    std::vector<int> tt = tup;
                    tt.back() = static_cast<int>(g);
                    HLaurent contrib = vec[g];
                    contrib *= scale;
                    next[{lup, tt}] += contrib;
                }
            }
        }
        // drop exact zeros so comparisons with phi stay canonical
        out.coeffs.clear();
        for (auto& [key, value] : next)
            if (!value.is_zero()) out.coeffs[key] = value;
    }
    return out;
}

}  // namespace wave
}  // namespace mh
