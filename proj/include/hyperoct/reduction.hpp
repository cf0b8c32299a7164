#pragma once

#include "hyperoct/int_matrix.hpp"
#include "hyperoct/moments.hpp"
#include "hyperoct/numeric.hpp"

namespace hyperoct {

/// Multiplicity of sgn(sigma) in V^{2m} over B_N, together with the raw
/// signed sum over S_N before dividing by N!.
struct ReductionReport {
    int n = 0;
    int m = 0;
    BigInt raw_sum;
    BigInt multiplicity;
};

/// Coefficient of x^f is sum of sgn(sigma) over sigma in S_N with f fixed
/// points; computed by expanding the closed form (x-1)^(N-1) (x+N-1).
IntPolynomial signed_genfun(int n);

/// The same polynomial by summation over all N! permutations. Guarded N <= 8.
IntPolynomial signed_genfun_brute(int n);

/// (1/N!) sum over S_N of sgn(sigma) p_m(f(sigma)), evaluated over conjugacy
/// classes and cross-checked against the generating-function route.
ReductionReport reduction_inner_product(int n, int m);

struct FirstAppearance {
    int t = 0;
    BigInt multiplicity;
};

/// First tensor power containing sgn(sigma) and its multiplicity. Also
/// re-verifies the vanishing of all lower even powers.
FirstAppearance first_appearance(int n);

/// (1/N!) sum of sgn(sigma) f(sigma)^j: multiplicity of sgn in perm^j over S_N.
BigInt sgn_perm_power(int n, int j);

/// Multiplicity of sgn in std^k over S_N, via chi_std = chi_perm - 1.
BigInt sgn_std_power(int n, int k);

/// Matrix of sigma on the quotient basis {e_i - e_N} of the standard rep.
IntMatrix std_matrix(const std::vector<int>& sigma);

/// det(std(sigma)) == sgn(sigma) for every sigma in S_N; exhaustive, 2<=N<=7.
bool std_det_check(int n);

}  // namespace hyperoct
