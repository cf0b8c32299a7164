#pragma once

#include <vector>

#include "hyperoct/numeric.hpp"

namespace hyperoct {

/// Conjugacy class of S_N: cycle type, size, sign and fixed-point count.
struct SnClassDatum {
    std::vector<int> cycle_type;  // partition of N, weakly decreasing
    BigInt size;
    int sign = 1;
    int fixed_points = 0;
};

/// One datum per partition of N, ordered by ascending part sequence.
/// Sizes come from the centralizer formula N! / prod_k k^{m_k} m_k!.
std::vector<SnClassDatum> sn_class_data(int n);

/// All N! permutations as image lists, lexicographic order. Guarded at N <= 8.
std::vector<std::vector<int>> enumerate_permutations(int n);

int count_fixed_points(const std::vector<int>& sigma);

}  // namespace hyperoct
