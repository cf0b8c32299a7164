// Independent brute-force oracles used to pin expected values. These stay
// deliberately naive and share no code path with the library implementations
// they check.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "hyperoct/partition.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct::testing {

// All partitions of |p|-1 contained in p componentwise: one-box removals.
inline std::set<Partition> sub_diagrams(const Partition& p) {
    std::set<Partition> out;
    if (p.sum() == 0) return out;
    for (const auto& q : enumerate_partitions(p.sum() - 1)) {
        bool inside = q.rows() <= p.rows();
        for (int i = 0; inside && i < q.rows(); ++i) inside = q.parts[i] <= p.parts[i];
        if (inside) out.insert(q);
    }
    return out;
}

// All partitions of |p|+1 containing p componentwise: one-box additions.
inline std::set<Partition> super_diagrams(const Partition& p) {
    std::set<Partition> out;
    for (const auto& q : enumerate_partitions(p.sum() + 1)) {
        bool inside = p.rows() <= q.rows();
        for (int i = 0; inside && i < p.rows(); ++i) inside = p.parts[i] <= q.parts[i];
        if (inside) out.insert(q);
    }
    return out;
}

// Standard Young tableaux counted as removal chains down to the empty shape.
inline long long syt_count_chains(const Partition& p) {
    if (p.sum() == 0) return 1;
    long long total = 0;
    for (const auto& q : sub_diagrams(p)) total += syt_count_chains(q);
    return total;
}

// Conjugation orbit sizes over the whole group, keyed by signed cycle type.
inline std::map<SignedCycleType, long long> orbit_sizes(int n) {
    auto group = enumerate_group(n);
    std::map<SignedCycleType, std::set<SignedPermutation>> orbits;
    for (const auto& g : group) {
        auto type = signed_cycle_type(g);
        if (orbits.count(type)) continue;
        std::set<SignedPermutation> orbit;
        for (const auto& h : group) orbit.insert(compose(compose(h, g), inverse(h)));
        orbits[type] = std::move(orbit);
    }
    std::map<SignedCycleType, long long> sizes;
    for (const auto& [type, orbit] : orbits) sizes[type] = static_cast<long long>(orbit.size());
    return sizes;
}

// Surjections [n] -> [j] with even fibres, counted one function at a time.
inline long long even_surjections_by_enumeration(int n, int j) {
    if (j == 0) return n == 0 ? 1 : 0;
    std::vector<int> f(n, 0);
    long long count = 0;
    while (true) {
        std::vector<int> fibre(j, 0);
        for (int v : f) ++fibre[v];
        bool good = true;
        for (int c : fibre) good = good && c > 0 && c % 2 == 0;
        if (good) ++count;
        int pos = n - 1;
        while (pos >= 0 && f[pos] == j - 1) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
    }
    return count;
}

}  // namespace hyperoct::testing
