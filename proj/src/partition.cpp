#include "hyperoct/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace hyperoct {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

namespace {

// Weakly decreasing sequences with all parts <= cap, emitted in ascending
// lexicographic order of the part sequence.
void gen_partitions(int n, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        std::vector<int> parts(acc.rbegin(), acc.rend());
        out.emplace_back(std::move(parts));
        return;
    }
    for (int first = 1; first <= std::min(n, cap); ++first) {
        acc.push_back(first);
        gen_partitions(n - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int i = 0; i < p.rows(); ++i) {
        if (i + 1 == p.rows() || p.parts[i + 1] < p.parts[i])
            out.push_back({i + 1, p.parts[i]});
    }
    return out;
}

std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int i = 0; i < p.rows(); ++i) {
        if (i == 0 || p.parts[i - 1] > p.parts[i]) out.push_back({i + 1, p.parts[i] + 1});
    }
    out.push_back({p.rows() + 1, 1});
    return out;
}

Partition remove_box(const Partition& p, const Box& b) {
    std::vector<int> q = p.parts;
    int i = b.row - 1;
    if (i < 0 || i >= p.rows() || p.parts[i] != b.col)
        throw std::invalid_argument("remove_box: not a removable box");
    if (--q[i] == 0) q.erase(q.begin() + i);
    return Partition(q);
}

Partition add_box(const Partition& p, const Box& b) {
    std::vector<int> q = p.parts;
    int i = b.row - 1;
    if (i == p.rows())
        q.push_back(1);
    else if (i >= 0 && i < p.rows() && p.parts[i] + 1 == b.col)
        ++q[i];
    else
        throw std::invalid_argument("add_box: not an addable box");
    return Partition(q);
}

Partition conjugate(const Partition& p) {
    std::vector<int> q;
    for (int j = 0; j < p.first(); ++j) {
        int count = 0;
        for (int part : p.parts)
            if (part > j) ++count;
        q.push_back(count);
    }
    return Partition(q);
}

BigInt syt_count(const Partition& p) {
    if (p.empty()) return 1;
    Partition conj = conjugate(p);
    BigInt hooks = 1;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.parts[i]; ++j)
            hooks *= (p.parts[i] - j) + (conj.parts[j] - i) - 1;
    return exact_div(factorial(p.sum()), hooks);
}

bool Bipartition::operator<(const Bipartition& o) const {
    int bs = beta.sum(), obs = o.beta.sum();
    if (bs != obs) return bs < obs;
    if (alpha != o.alpha) return alpha < o.alpha;
    return beta < o.beta;
}

std::string Bipartition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < alpha.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha.parts[i]);
    }
    s += "|";
    for (size_t i = 0; i < beta.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(beta.parts[i]);
    }
    return s + "]";
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_bipartitions: n < 0");
    std::vector<Bipartition> out;
    for (int bsize = 0; bsize <= n; ++bsize) {
        auto alphas = enumerate_partitions(n - bsize);
        auto betas = enumerate_partitions(bsize);
        for (const auto& a : alphas)
            for (const auto& b : betas) out.emplace_back(a, b);
    }
    return out;
}

BigInt dim_irrep(const Bipartition& b) {
    return binomial(b.n(), b.alpha.sum()) * syt_count(b.alpha) * syt_count(b.beta);
}

EpsParity epsilon_parity(const Bipartition& b) {
    return b.beta.sum() % 2 == 0 ? EpsParity::Even : EpsParity::Odd;
}

}  // namespace hyperoct
