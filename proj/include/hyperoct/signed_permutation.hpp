#pragma once

#include <string>
#include <vector>

#include "hyperoct/int_matrix.hpp"
#include "hyperoct/numeric.hpp"

namespace hyperoct {

/// Element (sigma, epsilon) of B_N. sigma holds the image list (sigma[x-1] is
/// the image of x, values 1..N); epsilon holds the signs (+1/-1).
struct SignedPermutation {
    std::vector<int> sigma;
    std::vector<int> epsilon;

    SignedPermutation() = default;
    SignedPermutation(std::vector<int> s, std::vector<int> e);

    static SignedPermutation identity(int n);

    int degree() const { return static_cast<int>(sigma.size()); }
    bool is_identity() const;
    bool permutation_is_identity() const;

    bool operator==(const SignedPermutation&) const = default;
    bool operator<(const SignedPermutation& o) const;
};

/// Group law: (sigma,eps)(tau,delta) = (sigma tau, x -> eps_{tau(x)} delta_x).
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

/// N x N matrix with column x equal to eps_x times the basis vector sigma(x).
IntMatrix natural_matrix(const SignedPermutation& g);

/// Character of the natural representation: sum of eps_x over fixed points.
int chi_v(const SignedPermutation& g);

/// Sign of the underlying permutation sigma.
int permutation_sign(const std::vector<int>& sigma);

/// Signed word "w_1 ... w_N" with w_x = eps_x * sigma(x).
std::string to_signed_word(const SignedPermutation& g);
SignedPermutation from_signed_word(const std::string& word);

/// All 2^N N! elements, in a fixed deterministic order. Guarded at N <= 7.
std::vector<SignedPermutation> enumerate_group(int n);

/// Conjugacy class label: cycle lengths split by the sign product over each
/// cycle, each multiset kept weakly decreasing.
struct SignedCycleType {
    std::vector<int> positive;
    std::vector<int> negative;

    int degree() const;

    auto operator<=>(const SignedCycleType&) const = default;

    std::string to_string() const;  // "(+1)^2(-1)", "(-3)", ...
};

SignedCycleType signed_cycle_type(const SignedPermutation& g);

/// Class size from the centralizer order prod_k (2k)^{a_k} a_k! (2k)^{b_k} b_k!.
BigInt class_size(const SignedCycleType& t, int n);

/// All signed cycle types of B_N, in a fixed deterministic order.
std::vector<SignedCycleType> all_signed_cycle_types(int n);

/// sgn(sigma) of any element in the class: prod (-1)^(k-1) over cycle lengths k.
int class_permutation_sign(const SignedCycleType& t);

/// prod_i eps_i of any element in the class: (-1)^(number of negative cycles).
int class_epsilon_product(const SignedCycleType& t);

/// chi_V on the class: (positive 1-cycles) - (negative 1-cycles).
int class_chi_v(const SignedCycleType& t);

}  // namespace hyperoct
