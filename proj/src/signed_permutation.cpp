#include "hyperoct/signed_permutation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hyperoct/errors.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

SignedPermutation::SignedPermutation(std::vector<int> s, std::vector<int> e)
    : sigma(std::move(s)), epsilon(std::move(e)) {
    if (sigma.size() != epsilon.size())
        throw std::invalid_argument("SignedPermutation: sigma/epsilon length mismatch");
    std::vector<char> seen(sigma.size(), 0);
    for (int v : sigma) {
        if (v < 1 || v > degree() || seen[v - 1])
            throw std::invalid_argument("SignedPermutation: sigma is not a bijection of 1..N");
        seen[v - 1] = 1;
    }
    for (int e_x : epsilon)
        if (e_x != 1 && e_x != -1)
            throw std::invalid_argument("SignedPermutation: signs must be +-1");
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> s(n), e(n, 1);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    return SignedPermutation(std::move(s), std::move(e));
}

bool SignedPermutation::permutation_is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (sigma[x - 1] != x) return false;
    return true;
}

bool SignedPermutation::is_identity() const {
    if (!permutation_is_identity()) return false;
    return std::all_of(epsilon.begin(), epsilon.end(), [](int e) { return e == 1; });
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return epsilon < o.epsilon;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
    int n = g.degree();
    if (n != h.degree()) throw dimension_error("compose: elements of different B_N");
    std::vector<int> s(n), e(n);
    for (int x = 1; x <= n; ++x) {
        int tx = h.sigma[x - 1];
        s[x - 1] = g.sigma[tx - 1];
        e[x - 1] = g.epsilon[tx - 1] * h.epsilon[x - 1];
    }
    return SignedPermutation(std::move(s), std::move(e));
}

SignedPermutation inverse(const SignedPermutation& g) {
    int n = g.degree();
    std::vector<int> s(n), e(n);
    for (int x = 1; x <= n; ++x) s[g.sigma[x - 1] - 1] = x;
    for (int y = 1; y <= n; ++y) e[y - 1] = g.epsilon[s[y - 1] - 1];
    return SignedPermutation(std::move(s), std::move(e));
}

IntMatrix natural_matrix(const SignedPermutation& g) {
    int n = g.degree();
    IntMatrix m(n, n);
    for (int x = 1; x <= n; ++x) m.at(g.sigma[x - 1] - 1, x - 1) = g.epsilon[x - 1];
    return m;
}

int chi_v(const SignedPermutation& g) {
    int t = 0;
    for (int x = 1; x <= g.degree(); ++x)
        if (g.sigma[x - 1] == x) t += g.epsilon[x - 1];
    return t;
}

int permutation_sign(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    int sign = 1;
    for (int x = 1; x <= n; ++x) {
        if (seen[x - 1]) continue;
        int len = 0;
        for (int y = x; !seen[y - 1]; y = sigma[y - 1]) {
            seen[y - 1] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::string to_signed_word(const SignedPermutation& g) {
    std::string s;
    for (int x = 1; x <= g.degree(); ++x) {
        if (x > 1) s += " ";
        s += std::to_string(g.epsilon[x - 1] * g.sigma[x - 1]);
    }
    return s;
}

SignedPermutation from_signed_word(const std::string& word) {
    std::istringstream in(word);
    std::vector<int> s, e;
    int w;
    while (in >> w) {
        if (w == 0) throw std::invalid_argument("signed word: zero letter");
        s.push_back(std::abs(w));
        e.push_back(w > 0 ? 1 : -1);
    }
    if (!in.eof()) throw std::invalid_argument("signed word: trailing garbage");
    if (s.empty()) throw std::invalid_argument("signed word: empty");
    return SignedPermutation(std::move(s), std::move(e));
}

std::vector<SignedPermutation> enumerate_group(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_group: n < 1");
    if (n > 7) throw capacity_error("enumerate_group: |B_N| too large for N > 7");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> eps(n);
            for (int x = 0; x < n; ++x) eps[x] = (mask >> x) & 1u ? -1 : 1;
            out.emplace_back(perm, std::move(eps));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int SignedCycleType::degree() const {
    int d = 0;
    for (int k : positive) d += k;
    for (int k : negative) d += k;
    return d;
}

std::string SignedCycleType::to_string() const {
    std::string s;
    auto emit = [&s](const std::vector<int>& lens, char sign) {
        for (size_t i = 0; i < lens.size();) {
            size_t j = i;
            while (j < lens.size() && lens[j] == lens[i]) ++j;
            s += "(";
            s += sign;
            s += std::to_string(lens[i]);
            s += ")";
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
    };
    emit(positive, '+');
    emit(negative, '-');
    return s;
}

SignedCycleType signed_cycle_type(const SignedPermutation& g) {
    int n = g.degree();
    std::vector<char> seen(n, 0);
    SignedCycleType t;
    for (int x = 1; x <= n; ++x) {
        if (seen[x - 1]) continue;
        int len = 0, sign = 1;
        for (int y = x; !seen[y - 1]; y = g.sigma[y - 1]) {
            seen[y - 1] = 1;
            sign *= g.epsilon[y - 1];
            ++len;
        }
        (sign > 0 ? t.positive : t.negative).push_back(len);
    }
    auto desc = [](std::vector<int>& v) { std::sort(v.rbegin(), v.rend()); };
    desc(t.positive);
    desc(t.negative);
    return t;
}

BigInt class_size(const SignedCycleType& t, int n) {
    if (t.degree() != n) throw dimension_error("class_size: type does not fit B_N");
    std::map<int, int> pos_mult, neg_mult;
    for (int k : t.positive) ++pos_mult[k];
    for (int k : t.negative) ++neg_mult[k];
    BigInt centralizer = 1;
    for (auto [k, a] : pos_mult) centralizer *= int_pow(2 * k, a) * factorial(a);
    for (auto [k, b] : neg_mult) centralizer *= int_pow(2 * k, b) * factorial(b);
    return exact_div(int_pow(2, n) * factorial(n), centralizer);
}

std::vector<SignedCycleType> all_signed_cycle_types(int n) {
    std::vector<SignedCycleType> out;
    for (const auto& b : enumerate_bipartitions(n))
        out.push_back({b.alpha.parts, b.beta.parts});
    return out;
}

int class_permutation_sign(const SignedCycleType& t) {
    int sign = 1;
    for (int k : t.positive)
        if (k % 2 == 0) sign = -sign;
    for (int k : t.negative)
        if (k % 2 == 0) sign = -sign;
    return sign;
}

int class_epsilon_product(const SignedCycleType& t) {
    return t.negative.size() % 2 == 0 ? 1 : -1;
}

int class_chi_v(const SignedCycleType& t) {
    auto ones = [](const std::vector<int>& v) {
        return static_cast<int>(std::count(v.begin(), v.end(), 1));
    };
    return ones(t.positive) - ones(t.negative);
}

}  // namespace hyperoct
