#include "hyperoct/reduction.hpp"

#include <stdexcept>

#include "hyperoct/errors.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/sn_classes.hpp"

namespace hyperoct {

IntPolynomial signed_genfun(int n) {
    if (n < 1) throw std::invalid_argument("signed_genfun: n < 1");
    IntPolynomial p(std::vector<BigInt>{1});
    IntPolynomial x_minus_1(std::vector<BigInt>{-1, 1});
    for (int i = 0; i < n - 1; ++i) p = p * x_minus_1;
    return p * IntPolynomial(std::vector<BigInt>{n - 1, 1});
}

IntPolynomial signed_genfun_brute(int n) {
    std::vector<BigInt> coeffs(n + 1, 0);
    for (const auto& sigma : enumerate_permutations(n))
        coeffs[count_fixed_points(sigma)] += permutation_sign(sigma);
    return IntPolynomial(std::move(coeffs));
}

ReductionReport reduction_inner_product(int n, int m) {
    if (n < 2) throw std::invalid_argument("reduction_inner_product: n < 2");
    if (m < 1) throw std::invalid_argument("reduction_inner_product: m < 1");
    IntPolynomial pm = moment_poly(m);

    BigInt class_sum = 0;
    for (const auto& cls : sn_class_data(n))
        class_sum += cls.size * cls.sign * pm.eval(cls.fixed_points);

    BigInt genfun_sum = 0;
    IntPolynomial gf = signed_genfun(n);
    for (int f = 0; f <= n; ++f) genfun_sum += gf.coeff(f) * pm.eval(f);

    if (class_sum != genfun_sum)
        throw std::logic_error("reduction_inner_product: class and genfun routes disagree");

    ReductionReport rep;
    rep.n = n;
    rep.m = m;
    rep.raw_sum = class_sum;
    rep.multiplicity = exact_div(class_sum, factorial(n));
    if (rep.multiplicity < 0)
        throw std::logic_error("reduction_inner_product: negative multiplicity");
    return rep;
}

FirstAppearance first_appearance(int n) {
    if (n < 2) throw std::invalid_argument("first_appearance: n < 2");
    for (int m = 1; m < n - 1; ++m) {
        if (reduction_inner_product(n, m).multiplicity != 0)
            throw std::logic_error("first_appearance: nonzero multiplicity below the wall");
    }
    FirstAppearance fa;
    fa.t = 2 * (n - 1);
    fa.multiplicity = reduction_inner_product(n, n - 1).multiplicity;
    return fa;
}

BigInt sgn_perm_power(int n, int j) {
    if (n < 2 || j < 0) throw std::invalid_argument("sgn_perm_power: bad arguments");
    BigInt sum = 0;
    for (const auto& cls : sn_class_data(n))
        sum += cls.size * cls.sign * int_pow(cls.fixed_points, static_cast<unsigned>(j));
    return exact_div(sum, factorial(n));
}

BigInt sgn_std_power(int n, int k) {
    if (n < 2 || k < 0) throw std::invalid_argument("sgn_std_power: bad arguments");
    BigInt sum = 0;
    for (const auto& cls : sn_class_data(n))
        sum += cls.size * cls.sign * int_pow(cls.fixed_points - 1, static_cast<unsigned>(k));
    return exact_div(sum, factorial(n));
}

IntMatrix std_matrix(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    IntMatrix m(n - 1, n - 1);
    // sigma . (e_i - e_N) = (e_{sigma(i)} - e_N) - (e_{sigma(N)} - e_N)
    for (int i = 1; i <= n - 1; ++i) {
        if (sigma[i - 1] != n) m.at(sigma[i - 1] - 1, i - 1) += 1;
        if (sigma[n - 1] != n) m.at(sigma[n - 1] - 1, i - 1) -= 1;
    }
    return m;
}

bool std_det_check(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("std_det_check: need 2 <= n <= 7");
    for (const auto& sigma : enumerate_permutations(n)) {
        if (det_bareiss(std_matrix(sigma)) != permutation_sign(sigma)) return false;
    }
    return true;
}

}  // namespace hyperoct
