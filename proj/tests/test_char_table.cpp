#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperoct/char_table.hpp"
#include "hyperoct/errors.hpp"
#include "hyperoct/reduction.hpp"

using namespace hyperoct;

namespace {
Bipartition bp(std::vector<int> a, std::vector<int> b) {
    return {Partition(std::move(a)), Partition(std::move(b))};
}
}  // namespace

TEST_CASE("fixture rows and class sizes") {
    CharacterTable b2 = load_table(2);
    CHECK(b2.row(bp({1}, {1})) == std::vector<long long>{2, -2, 0, 0, 0});
    CHECK(b2.group_order() == 8);

    CharacterTable b3 = load_table(3);
    CHECK(b3.row(bp({2}, {1})) == std::vector<long long>{3, 1, -1, -3, 1, -1, 1, -1, 0, 0});
    std::vector<BigInt> sizes;
    for (const auto& [type, size] : b3.classes) sizes.push_back(size);
    CHECK(sizes == std::vector<BigInt>{1, 3, 3, 1, 6, 6, 6, 6, 8, 8});

    CHECK_THROWS_AS(load_table(4), unsupported_error);
    CHECK_THROWS_AS(b2.row(bp({3}, {})), std::out_of_range);
}

TEST_CASE("tabulated characters agree with the class functions of the group") {
    for (int n = 2; n <= 3; ++n) {
        CharacterTable t = load_table(n);
        auto natural = t.row_class_function(natural_bipartition(n));
        auto sgn_row = t.row_class_function(sign_bipartition(n));
        auto eps_row = t.row_class_function(bp({}, {n}));
        for (const auto& [type, size] : t.classes) {
            CHECK(natural.at(type) == class_chi_v(type));
            CHECK(sgn_row.at(type) == class_permutation_sign(type));
            CHECK(eps_row.at(type) == class_epsilon_product(type));
        }
    }
}

TEST_CASE("orthogonality") {
    CHECK(orthogonality_check(load_table(2)).pass);
    CHECK(orthogonality_check(load_table(3)).pass);

    CharacterTable corrupted = load_table(2);
    corrupted.irreps[4].second[0] = 3;
    OrthogonalityReport rep = orthogonality_check(corrupted);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("symmetry relations of the B_3 table") {
    CharacterTable t = load_table(3);
    auto product_matches = [&t](Bipartition out, Bipartition x, Bipartition y) {
        const auto& rows = t.row(out);
        const auto& left = t.row(x);
        const auto& right = t.row(y);
        for (size_t c = 0; c < rows.size(); ++c)
            if (rows[c] != left[c] * right[c]) return false;
        return true;
    };
    CHECK(product_matches(bp({1, 1}, {1}), bp({1, 1, 1}, {}), bp({2}, {1})));
    CHECK(product_matches(bp({1}, {2}), bp({}, {3}), bp({2}, {1})));
    CHECK(product_matches(bp({1}, {1, 1}), bp({1, 1, 1}, {}), bp({1}, {2})));
    CHECK(product_matches(bp({}, {2, 1}), bp({}, {3}), bp({2, 1}, {})));
    CHECK(product_matches(bp({}, {1, 1, 1}), bp({}, {3}), bp({1, 1, 1}, {})));
}

TEST_CASE("tensor power decomposition from the table") {
    MultiplicityVector b2_square = decompose_power(2, 2);
    CHECK(b2_square.entries == std::map<Bipartition, BigInt>{{bp({2}, {}), 1},
                                                             {bp({1, 1}, {}), 1},
                                                             {bp({}, {2}), 1},
                                                             {bp({}, {1, 1}), 1}});
    MultiplicityVector b3_cube = decompose_power(3, 3);
    CHECK(b3_cube.entries == std::map<Bipartition, BigInt>{{bp({2}, {1}), 4},
                                                           {bp({1, 1}, {1}), 3},
                                                           {bp({}, {3}), 1},
                                                           {bp({}, {2, 1}), 2},
                                                           {bp({}, {1, 1, 1}), 1}});
    CHECK(decompose_power(3, 4).entries.at(bp({1, 1, 1}, {})) == 3);
}

TEST_CASE("table route equals box-transfer route, N in {2,3}, t <= 6") {
    for (int n = 2; n <= 3; ++n)
        for (int t = 1; t <= 6; ++t)
            CHECK(decompose_power(n, t).entries == multiplicity_evolution(n, t).entries);
}

TEST_CASE("whole-group inner products") {
    CHECK(inner_product_brute(3, 4, sgn_class_function(3)) == 3);
    CharacterTable b2 = load_table(2);
    CHECK(inner_product_brute(2, 2, b2.row_class_function(bp({1}, {1}))) == 0);
    CHECK(inner_product_brute(5, 8, sgn_class_function(5)) == 105);
    CHECK(inner_product_brute(5, 8, sgn_class_function(5)) ==
          Rational(reduction_inner_product(5, 4).multiplicity));
    CHECK_THROWS_AS(inner_product_brute(7, 2, sgn_class_function(7)), capacity_error);
}

TEST_CASE("three routes agree on the sign multiplicity, N <= 5") {
    for (int n = 2; n <= 5; ++n) {
        ClassFunction sgn = sgn_class_function(n);
        for (int t = 1; t <= 2 * (n - 1); ++t) {
            Rational brute = inner_product_brute(n, t, sgn);
            MultiplicityVector evo = multiplicity_evolution(n, t);
            BigInt pieri = evo.entries.count(sign_bipartition(n))
                               ? evo.entries.at(sign_bipartition(n))
                               : BigInt(0);
            CHECK(brute == Rational(pieri));
            if (t % 2 == 0)
                CHECK(brute == Rational(reduction_inner_product(n, t / 2).multiplicity));
            else
                CHECK(brute == 0);
        }
    }
}

TEST_CASE("pretty printer emits every row") {
    std::string text = pretty_table(load_table(2));
    CHECK(text.find("(+1)^2") != std::string::npos);
    CHECK(text.find("[1|1]") != std::string::npos);
    CHECK(text.find("-2") != std::string::npos);
}
