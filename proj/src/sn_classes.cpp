#include "hyperoct/sn_classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyperoct/errors.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

std::vector<SnClassDatum> sn_class_data(int n) {
    if (n < 1) throw std::invalid_argument("sn_class_data: n < 1");
    std::vector<SnClassDatum> out;
    for (const auto& p : enumerate_partitions(n)) {
        SnClassDatum d;
        d.cycle_type = p.parts;
        std::map<int, int> mult;
        for (int k : p.parts) ++mult[k];
        BigInt centralizer = 1;
        for (auto [k, m] : mult) centralizer *= int_pow(k, m) * factorial(m);
        d.size = exact_div(factorial(n), centralizer);
        d.sign = 1;
        for (int k : p.parts)
            if (k % 2 == 0) d.sign = -d.sign;
        d.fixed_points = mult.count(1) ? mult[1] : 0;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_permutations(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_permutations: n < 1");
    if (n > 8) throw capacity_error("enumerate_permutations: N! too large for N > 8");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int count_fixed_points(const std::vector<int>& sigma) {
    int f = 0;
    for (int x = 1; x <= static_cast<int>(sigma.size()); ++x)
        if (sigma[x - 1] == x) ++f;
    return f;
}

}  // namespace hyperoct
