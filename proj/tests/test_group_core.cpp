#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperoct/errors.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/sn_classes.hpp"
#include "test_oracles.hpp"

using namespace hyperoct;

namespace {
SignedPermutation sp(std::vector<int> s, std::vector<int> e) {
    return {std::move(s), std::move(e)};
}
}  // namespace

TEST_CASE("group law") {
    auto id2 = SignedPermutation::identity(2);
    auto swap_pp = sp({2, 1}, {1, 1});
    CHECK(compose(swap_pp, id2) == swap_pp);
    CHECK(compose(id2, swap_pp) == swap_pp);
    CHECK(compose(swap_pp, swap_pp) == id2);

    // (id,(+,-)) * ((12),(+,+)) = ((12),(-,+)), and the same product in matrices
    auto g = sp({1, 2}, {1, -1});
    auto h = sp({2, 1}, {1, 1});
    auto product = compose(g, h);
    CHECK(product == sp({2, 1}, {-1, 1}));
    CHECK(natural_matrix(product) == natural_matrix(g) * natural_matrix(h));

    CHECK_THROWS_AS(compose(id2, SignedPermutation::identity(3)), dimension_error);
}

TEST_CASE("natural matrices") {
    IntMatrix eye = IntMatrix::identity(2);
    CHECK(natural_matrix(SignedPermutation::identity(2)) == eye);

    IntMatrix diag = natural_matrix(sp({1, 2}, {-1, 1}));
    CHECK(diag.at(0, 0) == -1);
    CHECK(diag.at(1, 1) == 1);
    CHECK(diag.at(0, 1) == 0);

    IntMatrix rot = natural_matrix(sp({2, 1}, {1, -1}));
    CHECK(rot.at(0, 0) == 0);
    CHECK(rot.at(0, 1) == -1);
    CHECK(rot.at(1, 0) == 1);
    CHECK(rot.at(1, 1) == 0);
}

TEST_CASE("homomorphism and unitarity, exhaustive over B_3") {
    auto group = enumerate_group(3);
    IntMatrix eye = IntMatrix::identity(3);
    for (const auto& g : group) {
        CHECK(natural_matrix(g).transposed() * natural_matrix(g) == eye);
        CHECK(natural_matrix(compose(g, inverse(g))) == eye);
    }
    for (const auto& g : group)
        for (const auto& h : group)
            CHECK(natural_matrix(compose(g, h)) == natural_matrix(g) * natural_matrix(h));
}

TEST_CASE("faithfulness, N <= 4") {
    for (int n = 1; n <= 4; ++n) {
        IntMatrix eye = IntMatrix::identity(n);
        for (const auto& g : enumerate_group(n)) {
            if (natural_matrix(g) == eye) CHECK(g.is_identity());
        }
    }
}

TEST_CASE("natural character") {
    for (int n = 1; n <= 5; ++n) CHECK(chi_v(SignedPermutation::identity(n)) == n);
    // class (+2)(-1) in B_3: one negative fixed point
    auto g = sp({2, 1, 3}, {1, 1, -1});
    CHECK(signed_cycle_type(g) == SignedCycleType{{2}, {1}});
    CHECK(chi_v(g) == -1);
}

TEST_CASE("character parity and class invariance, B_4") {
    for (const auto& g : enumerate_group(4)) {
        std::vector<int> flipped = g.epsilon;
        for (int& e : flipped) e = -e;
        CHECK(chi_v({g.sigma, flipped}) == -chi_v(g));
        CHECK(chi_v(g) == class_chi_v(signed_cycle_type(g)));
        CHECK(chi_v(g) == natural_matrix(g).trace());
    }
}

TEST_CASE("signed words") {
    auto g = sp({2, 1}, {1, -1});
    CHECK(to_signed_word(g) == "2 -1");
    CHECK(from_signed_word("2 -1") == g);
    CHECK_THROWS_AS(from_signed_word("2 2"), std::invalid_argument);
    CHECK_THROWS_AS(from_signed_word("0 1"), std::invalid_argument);
    for (const auto& h : enumerate_group(3)) CHECK(from_signed_word(to_signed_word(h)) == h);
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(1).size() == 2);
    CHECK(enumerate_group(2).size() == 8);
    CHECK(enumerate_group(3).size() == 48);
    CHECK_THROWS_AS(enumerate_group(8), capacity_error);
}

TEST_CASE("signed cycle types and class sizes") {
    CHECK(signed_cycle_type(sp({1, 2}, {1, -1})) == SignedCycleType{{1}, {1}});
    CHECK(class_size({{1}, {1}}, 2) == 2);
    CHECK(class_size({{}, {3}}, 3) == 8);
    CHECK(SignedCycleType{{1, 1}, {1}}.to_string() == "(+1)^2(-1)");
    CHECK(SignedCycleType{{}, {3}}.to_string() == "(-3)");
}

TEST_CASE("class type is conjugation-invariant and sizes match orbits, N <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto sizes = testing::orbit_sizes(n);
        for (const auto& [type, size] : sizes) CHECK(class_size(type, n) == size);
        auto group = enumerate_group(n);
        auto h = group[group.size() / 3];
        for (const auto& g : group)
            CHECK(signed_cycle_type(compose(compose(h, g), inverse(h))) == signed_cycle_type(g));
    }
}

TEST_CASE("class equation, N <= 10") {
    for (int n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto& type : all_signed_cycle_types(n)) total += class_size(type, n);
        CHECK(total == int_pow(2, n) * factorial(n));
    }
}

TEST_CASE("S_N class data") {
    auto s4 = sn_class_data(4);
    REQUIRE(s4.size() == 5);
    auto find = [&s4](std::vector<int> type) {
        for (const auto& d : s4)
            if (d.cycle_type == type) return d;
        FAIL("missing class");
        return s4[0];
    };
    CHECK(find({1, 1, 1, 1}).size == 1);
    CHECK(find({1, 1, 1, 1}).sign == 1);
    CHECK(find({1, 1, 1, 1}).fixed_points == 4);
    CHECK(find({2, 1, 1}).size == 6);
    CHECK(find({2, 1, 1}).sign == -1);
    CHECK(find({2, 1, 1}).fixed_points == 2);
    CHECK(find({3, 1}).size == 8);
    CHECK(find({3, 1}).sign == 1);
    CHECK(find({3, 1}).fixed_points == 1);
    CHECK(find({4}).size == 6);
    CHECK(find({4}).sign == -1);
    CHECK(find({2, 2}).size == 3);
    CHECK(find({2, 2}).sign == 1);
    CHECK(find({2, 2}).fixed_points == 0);

    auto s6 = sn_class_data(6);
    CHECK(s6.size() == 11);
    BigInt total = 0;
    for (const auto& d : s6) total += d.size;
    CHECK(total == 720);

    auto s1 = sn_class_data(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].size == 1);
    CHECK(s1[0].sign == 1);
    CHECK(s1[0].fixed_points == 1);
}

TEST_CASE("S_N class sizes sum to N!, N <= 10") {
    for (int n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto& d : sn_class_data(n)) total += d.size;
        CHECK(total == factorial(n));
    }
}
