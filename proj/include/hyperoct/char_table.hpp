#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperoct/numeric.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/tensor_graph.hpp"

namespace hyperoct {

/// Class function on B_N, keyed by signed cycle type.
using ClassFunction = std::map<SignedCycleType, long long>;

/// Exact character table; the B_2 and B_3 instances are fixture data.
struct CharacterTable {
    int n = 0;
    std::vector<std::pair<SignedCycleType, BigInt>> classes;
    std::vector<std::pair<Bipartition, std::vector<long long>>> irreps;

    BigInt group_order() const;
    const std::vector<long long>& row(const Bipartition& b) const;
    ClassFunction row_class_function(const Bipartition& b) const;
};

/// The tabulated character table of B_2 or B_3; other N are unsupported.
CharacterTable load_table(int n);

struct OrthogonalityReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Row orthonormality, column orthogonality, class equation and Burnside sum.
OrthogonalityReport orthogonality_check(const CharacterTable& t);

/// Multiplicities of V^t by class-weighted inner products against each row.
MultiplicityVector decompose_power(int n, int t);

/// (1/|B_N|) sum over every group element of chi_V(g)^t target(class(g)).
/// Whole-group summation; guarded at N <= 6.
Rational inner_product_brute(int n, int t, const ClassFunction& target);

ClassFunction sgn_class_function(int n);
ClassFunction trivial_class_function(int n);

std::string pretty_table(const CharacterTable& t);

}  // namespace hyperoct
