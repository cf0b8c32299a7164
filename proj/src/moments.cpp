#include "hyperoct/moments.hpp"

#include <bit>
#include <stdexcept>

#include "hyperoct/errors.hpp"

namespace hyperoct {

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[k];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size());
    for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return IntPolynomial{};
    std::vector<BigInt> c(coeffs.size() + o.coeffs.size() - 1, 0);
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return IntPolynomial(std::move(c));
}

namespace {

// Functions [n] -> [l] with every fibre even: n! [x^n] cosh(x)^l
// = 2^-l sum_k C(l,k) (2k-l)^n.
BigInt even_fiber_function_count(int n, int l) {
    if (l == 0) return n == 0 ? 1 : 0;
    BigInt sum = 0;
    for (int k = 0; k <= l; ++k) sum += binomial(l, k) * int_pow(2 * k - l, n);
    return exact_div(sum, int_pow(2, l));
}

}  // namespace

BigInt even_surjection_count(int n, int j) {
    if (n < 0 || j < 0) throw std::invalid_argument("even_surjection_count: negative argument");
    BigInt sum = 0;
    for (int i = 0; i <= j; ++i) {
        BigInt term = binomial(j, i) * even_fiber_function_count(n, j - i);
        sum += i % 2 == 0 ? term : -term;
    }
    return sum;
}

IntPolynomial moment_poly(int m) {
    if (m < 1) throw std::invalid_argument("moment_poly: m < 1");
    IntPolynomial p;
    for (int j = 1; j <= m; ++j) {
        // S_even(2m,j)/j! counts partitions of [2m] into j even blocks, so the
        // division is exact and C(f,j) contributes the falling factorial only.
        BigInt blocks = exact_div(even_surjection_count(2 * m, j), factorial(j));
        IntPolynomial falling(std::vector<BigInt>{1});
        for (int i = 0; i < j; ++i)
            falling = falling * IntPolynomial(std::vector<BigInt>{-i, 1});
        for (auto& c : falling.coeffs) c *= blocks;
        p += falling;
    }
    return p;
}

BigInt rademacher_oracle(int m, int f) {
    if (m < 1 || f < 0) throw std::invalid_argument("rademacher_oracle: bad arguments");
    if (f > 24) throw capacity_error("rademacher_oracle: 2^f enumeration too large for f > 24");
    // Power table indexed by the signed sum s = f - 2*popcount in [-f, f].
    std::vector<BigInt> pw(2 * f + 1);
    for (int s = -f; s <= f; ++s)
        pw[s + f] = int_pow(BigInt(s), static_cast<unsigned>(2 * m));
    BigInt sum = 0;
    for (unsigned long long mask = 0; mask < (1ull << f); ++mask) {
        int s = f - 2 * std::popcount(mask);
        sum += pw[s + f];
    }
    return exact_div(sum, int_pow(2, f));
}

}  // namespace hyperoct
