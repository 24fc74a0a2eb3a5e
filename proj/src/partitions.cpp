#include "mh/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    if (s.empty()) return Partition();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t idx = 0;
        int v = std::stoi(item, &idx);
        while (idx < item.size() && std::isspace(static_cast<unsigned char>(item[idx]))) ++idx;
        if (idx != item.size()) throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
    int m = 0;
    for (int p : parts_) m += (p == value);
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int col = 0; col < parts_[0]; ++col)
        for (int p : parts_) conj[col] += (p > col);
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void gen_desc_lex(int remaining, int max_part, std::vector<int>& cur,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_desc_lex(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
    static std::mutex mtx;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_desc_lex(d, d == 0 ? 1 : d, cur, out);
    return cache.emplace(d, std::move(out)).first->second;
}

Partition ones_partition(int d) { return Partition(std::vector<int>(d, 1)); }

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("dominance_leq: weights differ");
    long sl = 0, sm = 0;
    size_t n = std::max(lambda.parts().size(), mu.parts().size());
    for (size_t i = 0; i < n; ++i) {
        sl += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        sm += i < mu.parts().size() ? mu.parts()[i] : 0;
        if (sl > sm) return false;
    }
    return true;
}

int lex_cmp(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("lex_cmp: weights differ");
    size_t n = std::max(lambda.parts().size(), mu.parts().size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < lambda.parts().size() ? lambda.parts()[i] : 0;
        int b = i < mu.parts().size() ? mu.parts()[i] : 0;
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

std::vector<CellData> cells(const Partition& lambda) {
    std::vector<CellData> out;
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 1; j <= parts[i]; ++j) {
            CellData c;
            c.arm = parts[i] - j;
            c.leg = conj.parts()[j - 1] - static_cast<int>(i) - 1;
            out.push_back(c);
        }
    return out;
}

Rational z(const Partition& lambda) {
    Rational v(1);
    int prev = -1, mult = 0;
    auto flush = [&](int value, int m) {
        for (int i = 1; i <= m; ++i) v *= Rational(value) * Rational(i);
    };
    for (int p : lambda.parts()) {
        if (p == prev) {
            ++mult;
        } else {
            flush(prev, mult);
            prev = p;
            mult = 1;
        }
    }
    flush(prev, mult);
    return v;
}

RatQT z_qt(const Partition& lambda) {
    PolyQT num(1), den(1);
    const PolyQT one(1);
    for (int p : lambda.parts()) {
        num *= one - PolyQT::monomial(1, p, 0);
        den *= one - PolyQT::monomial(1, 0, p);
    }
    return RatQT(z(lambda)) * RatQT(std::move(num), std::move(den));
}

RatQT c_factor(const Partition& lambda) {
    PolyQT prod(1);
    const PolyQT one(1);
    for (const CellData& s : cells(lambda))
        prod *= one - PolyQT::monomial(1, s.arm, s.leg + 1);
    return RatQT(prod);
}

RatQT c_prime_factor(const Partition& lambda) {
    PolyQT prod(1);
    const PolyQT one(1);
    for (const CellData& s : cells(lambda))
        prod *= one - PolyQT::monomial(1, s.arm + 1, s.leg);
    return RatQT(prod);
}

RatQT j_norm(const Partition& lambda) { return c_factor(lambda) * c_prime_factor(lambda); }

namespace {

Rational eta_cell_value(const Partition& lambda, int A, int B, bool prime,
                        const RatQT& qt_value, int normalization) {
    Rational product(1);
    for (const CellData& s : cells(lambda)) {
        long factor = prime ? (static_cast<long>(A) * s.leg + static_cast<long>(B) * (s.arm + 1))
                            : (static_cast<long>(A) * (s.leg + 1) + static_cast<long>(B) * s.arm);
        product *= Rational(factor);
    }
    Rational limit = eta_limit(substitute_eta(qt_value, A, B), normalization);
    if (limit != product)
        throw std::logic_error("eta cell product and eta limit disagree for partition " +
                               lambda.to_string());
    return product;
}

}  // namespace

Rational c_AB(const Partition& lambda, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("c_AB: A, B must be >= 1");
    return eta_cell_value(lambda, A, B, false, c_factor(lambda), lambda.weight());
}

Rational c_prime_AB(const Partition& lambda, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("c_prime_AB: A, B must be >= 1");
    return eta_cell_value(lambda, A, B, true, c_prime_factor(lambda), lambda.weight());
}

Rational j_AB(const Partition& lambda, int A, int B) {
    if (A < 1 || B < 1) throw std::invalid_argument("j_AB: A, B must be >= 1");
    Rational product = Rational(1);
    for (const CellData& s : cells(lambda)) {
        long f1 = static_cast<long>(A) * (s.leg + 1) + static_cast<long>(B) * s.arm;
        long f2 = static_cast<long>(A) * s.leg + static_cast<long>(B) * (s.arm + 1);
        product *= Rational(f1) * Rational(f2);
    }
    Rational limit = eta_limit(substitute_eta(j_norm(lambda), A, B), 2 * lambda.weight());
    if (limit != product)
        throw std::logic_error("j_AB cell product and eta limit disagree for partition " +
                               lambda.to_string());
    return product;
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace mh
