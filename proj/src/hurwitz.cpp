#include "mh/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mh {
namespace hurwitz {

namespace {

void validate_profiles(int d, const Profiles& profiles, const char* who) {
    for (const auto& p : profiles) {
        if (p.empty())
            throw std::invalid_argument(std::string(who) + ": empty profile");
        if (p.weight() != d)
            throw std::invalid_argument(std::string(who) + ": profile " + p.to_string() +
                                        " is not a partition of " + std::to_string(d));
    }
}

long ramification_sum(int d, const Profiles& profiles) {
    long s = 0;
    for (const auto& p : profiles) s += d - p.length();
    return s;
}

}  // namespace

std::optional<long> genus_from_profile(int h, int d, const Profiles& profiles) {
    long s = ramification_sum(d, profiles);
    if (s % 2 != 0) return std::nullopt;
    return 1 - static_cast<long>(1 - h) * d + s / 2;
}

RatQT mh_character_sum(int h, int d, const Profiles& profiles) {
    if (h < 0) throw std::invalid_argument("mh: h must be >= 0");
    if (d < 0) throw std::invalid_argument("mh: d must be >= 0");
    if (d == 0) return RatQT();
    validate_profiles(d, profiles, "mh");

    // memoized on (h, d, sorted profiles); the sum is profile-symmetric
    std::vector<std::vector<int>> key_profiles;
    for (const auto& p : profiles) key_profiles.push_back(p.parts());
    std::sort(key_profiles.begin(), key_profiles.end());
    auto key = std::make_tuple(h, d, std::move(key_profiles));

    static std::mutex mtx;
    static std::map<decltype(key), RatQT> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    auto table = macdonald_table(d);
    size_t n = table->parts.size();
    RatQTSum acc;
    for (size_t li = 0; li < n; ++li) {
        RatQT ratio = (table->dim[li] * table->dim[li] / table->j_values[li]).pow(1 - h);
        RatQT term = ratio;
        for (const auto& p : profiles)
            term *= table->a[li][table->index.at(p)] / table->dim[li];
        acc.add(term);
    }
    RatQT sum = acc.total();

    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), sum);
    return sum;
}

MHResult mh(int h, int d, const Profiles& profiles, bool require_nonneg_genus) {
    if (h < 0) throw std::invalid_argument("mh: h must be >= 0");
    if (d < 0) throw std::invalid_argument("mh: d must be >= 0");
    if (d == 0) {
        MHResult r;
        auto g = genus_from_profile(h, 0, profiles);
        r.constraint_ok = g.has_value();
        r.genus = g.value_or(0);
        return r;  // MH at degree 0 is 0 by convention
    }
    validate_profiles(d, profiles, "mh");

    auto g = genus_from_profile(h, d, profiles);
    if (!g) return MHResult{};
    if (require_nonneg_genus && *g < 0) return MHResult{RatQT(), *g, true};
    return MHResult{mh_character_sum(h, d, profiles), *g, true};
}

namespace {

// All ways to split delta into an ordered m-tuple of sub-partitions with
// prescribed weights; tuples are distinguished by content only (runs of equal
// parts are assigned with non-decreasing component index).
void enumerate_splits(const std::vector<int>& parts, size_t pos, int prev_part, int prev_comp,
                      std::vector<int>& remaining, std::vector<std::vector<int>>& current,
                      std::vector<std::vector<Partition>>& out) {
    if (pos == parts.size()) {
        for (int w : remaining)
            if (w != 0) return;
        std::vector<Partition> tuple;
        tuple.reserve(current.size());
        for (const auto& sub : current) tuple.push_back(Partition(sub));
        out.push_back(std::move(tuple));
        return;
    }
    int part = parts[pos];
    int start = (part == prev_part) ? prev_comp : 0;
    for (size_t c = start; c < remaining.size(); ++c) {
        if (remaining[c] < part) continue;
        remaining[c] -= part;
        current[c].push_back(part);
        enumerate_splits(parts, pos + 1, part, static_cast<int>(c), remaining, current, out);
        current[c].pop_back();
        remaining[c] += part;
    }
}

std::vector<std::vector<Partition>> splits_of(const Partition& delta,
                                              const std::vector<int>& degrees) {
    std::vector<std::vector<Partition>> out;
    std::vector<int> remaining = degrees;
    std::vector<std::vector<int>> current(degrees.size());
    enumerate_splits(delta.parts(), 0, -1, 0, remaining, current, out);
    return out;
}

void compositions(int d, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 1) {
        if (d >= 1) {
            cur.push_back(d);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= d - (m - 1); ++first) {
        cur.push_back(first);
        compositions(d - first, m - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

RatQT mh_disconnected(int h, int d, const Profiles& profiles, long g, int max_components) {
    if (d < 1) throw std::invalid_argument("mh_disconnected: d must be >= 1");
    validate_profiles(d, profiles, "mh_disconnected");
    auto forced = genus_from_profile(h, d, profiles);
    if (!forced || *forced != g) return RatQT();

    int mmax = max_components > 0 ? std::min(max_components, d) : d;
    size_t k = profiles.size();
    RatQT total;
    for (int m = 1; m <= mmax; ++m) {
        std::vector<std::vector<int>> degree_tuples;
        std::vector<int> cur;
        compositions(d, m, cur, degree_tuples);
        RatQT m_sum;
        for (const auto& degrees : degree_tuples) {
            // independent split choices per branch point
            std::vector<std::vector<std::vector<Partition>>> choices(k);
            bool feasible = true;
            for (size_t j = 0; j < k && feasible; ++j) {
                choices[j] = splits_of(profiles[j], degrees);
                feasible = !choices[j].empty();
            }
            if (!feasible) continue;
            std::vector<size_t> idx(k, 0);
            while (true) {
                RatQT term(1);
                for (int c = 0; c < m && !term.is_zero(); ++c) {
                    Profiles comp_profiles;
                    comp_profiles.reserve(k);
                    for (size_t j = 0; j < k; ++j) comp_profiles.push_back(choices[j][idx[j]][c]);
                    term *= mh(h, degrees[c], comp_profiles, /*require_nonneg_genus=*/true).value;
                }
                m_sum += term;
                size_t j = 0;
                while (j < k && ++idx[j] == choices[j].size()) {
                    idx[j] = 0;
                    ++j;
                }
                if (j == k) break;  // includes k == 0: single empty choice
            }
        }
        total += m_sum * RatQT(Rational(Integer(1), factorial(m)));
    }
    return total;
}

bool verify_genus_reduction(int h, int d, const Profiles& profiles) {
    if (h < 1) throw std::invalid_argument("verify_genus_reduction: h must be >= 1");
    RatQT lhs = mh_character_sum(h, d, profiles);
    RatQT rhs;
    for (const auto& delta : enumerate_partitions(d)) {
        Profiles extended = profiles;
        extended.push_back(delta);
        extended.push_back(delta);
        rhs += mh_character_sum(h - 1, d, extended) * z_qt(delta);
    }
    return lhs == rhs;
}

bool verify_cutting(int h1, int h2, int d, const Profiles& profiles, int split_at) {
    if (split_at < 1 || split_at >= static_cast<int>(profiles.size()))
        throw std::invalid_argument("verify_cutting: bad split position");
    RatQT lhs = mh_character_sum(h1 + h2, d, profiles);
    Profiles left(profiles.begin(), profiles.begin() + split_at);
    Profiles right(profiles.begin() + split_at, profiles.end());
    RatQT rhs;
    for (const auto& delta : enumerate_partitions(d)) {
        Profiles l = left;
        l.push_back(delta);
        Profiles r;
        r.push_back(delta);
        r.insert(r.end(), right.begin(), right.end());
        rhs += mh_character_sum(h1, d, l) * z_qt(delta) * mh_character_sum(h2, d, r);
    }
    return lhs == rhs;
}

Rational classical_mh(int h, int d, const Profiles& profiles) {
    if (d < 1) throw std::invalid_argument("classical_mh: d must be >= 1");
    validate_profiles(d, profiles, "classical_mh");
    if (!genus_from_profile(h, d, profiles)) return Rational(0);
    Rational dfact(factorial(d));
    Rational sum(0);
    for (const auto& lam : enumerate_partitions(d)) {
        Rational f(static_cast<long>(character_MN(lam, ones_partition(d))));
        Rational term = rational_pow(f / dfact, 2 * (1 - h));
        for (const auto& p : profiles)
            term *= Rational(static_cast<long>(character_MN(lam, p))) * dfact / (z(p) * f);
        sum += term;
    }
    return sum;
}

}  // namespace hurwitz
}  // namespace mh
