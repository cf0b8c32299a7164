#include "hyperoct/numeric.hpp"

#include <stdexcept>

namespace hyperoct {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt double_factorial_odd(int n) {
    BigInt r = 1;
    for (int i = n % 2 == 0 ? n - 1 : n; i >= 3; i -= 2) r *= i;
    return r;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("exact_div: remainder nonzero");
    return q;
}

std::string rational_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hyperoct
