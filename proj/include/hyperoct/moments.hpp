#pragma once

#include <vector>

#include "hyperoct/numeric.hpp"

namespace hyperoct {

/// Dense integer polynomial; coeffs[k] is the coefficient of x^k. Normalized:
/// no trailing zero coefficients (the zero polynomial has empty coeffs).
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }
    IntPolynomial(std::initializer_list<BigInt> c) : coeffs(c) { normalize(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt coeff(int k) const;
    BigInt leading() const { return coeffs.empty() ? BigInt(0) : coeffs.back(); }
    BigInt eval(const BigInt& x) const;

    void normalize();

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o);

    bool operator==(const IntPolynomial&) const = default;
};

/// Surjections [n] -> [j] in which every fibre has even cardinality.
/// Inclusion-exclusion over unused labels on top of the cosh^j count.
BigInt even_surjection_count(int n, int j);

/// p_m(f) = E[(X_1 + ... + X_f)^{2m}] for iid Rademacher X_i, as a polynomial
/// in f of degree m with leading coefficient (2m-1)!! and zero constant term.
IntPolynomial moment_poly(int m);

/// The same expectation by direct enumeration of all 2^f sign vectors.
/// Independent of moment_poly; guarded at f <= 24.
BigInt rademacher_oracle(int m, int f);

}  // namespace hyperoct
