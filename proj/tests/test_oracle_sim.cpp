#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperoct/errors.hpp"
#include "hyperoct/oracle_sim.hpp"
#include "hyperoct/tensor_graph.hpp"

using namespace hyperoct;

namespace {

// Two signed queries on B_3 interleaved with a fixed rotation; used to probe
// the decomposed rewrite away from the B_2 special cases.
OracleAlgorithm make_b3_probe() {
    OracleAlgorithm alg;
    alg.n = 3;
    alg.query_dim = 3;
    alg.ancilla_dim = 1;
    Eigen::VectorXcd start(3);
    start << 1.0 / std::sqrt(14.0), 2.0 / std::sqrt(14.0), 3.0 / std::sqrt(14.0);
    alg.steps.push_back(PrepareStep{start});
    alg.steps.push_back(OracleStep{OracleKind::Signed});
    double c = std::cos(0.7), s = std::sin(0.7);
    Eigen::MatrixXcd rot = Eigen::MatrixXcd::Identity(3, 3);
    rot(0, 0) = c;
    rot(0, 1) = -s;
    rot(1, 0) = s;
    rot(1, 1) = c;
    alg.steps.push_back(UnitaryStep{rot});
    alg.steps.push_back(OracleStep{OracleKind::SignedAdjoint});
    alg.measurement = {{"1", "2", "3"}, Eigen::MatrixXcd::Identity(3, 3)};
    return alg;
}

OracleAlgorithm make_three_query_variant() {
    OracleAlgorithm alg = make_bell_algorithm();
    alg.steps.push_back(OracleStep{OracleKind::Signed});
    alg.steps.push_back(OracleStep{OracleKind::SignedAdjoint});
    return alg;
}

}  // namespace

TEST_CASE("modified negative-fixed-point function") {
    CHECK(mod_nfp(from_signed_word("1 -2")) == 1);
    CHECK(mod_nfp(from_signed_word("-1 -2")) == 0);
    CHECK(mod_nfp(from_signed_word("-2 -1")) == 0);
    CHECK_THROWS_AS(mod_nfp(from_signed_word("-1")), unsupported_error);
    for (const auto& g : enumerate_group(3)) {
        std::vector<int> flipped = g.epsilon;
        for (int& e : flipped) e = -e;
        CHECK(mod_nfp(g) == mod_nfp({g.sigma, flipped}));
    }
}

TEST_CASE("one-query Bell probe reproduces the truth table") {
    struct Row {
        const char* word;
        double p;
    };
    const Row rows[] = {{"1 2", 0},  {"1 -2", 1},  {"-1 2", 1},  {"-1 -2", 0},
                        {"2 1", 0},  {"2 -1", 0},  {"-2 1", 0},  {"-2 -1", 0}};
    for (const auto& row : rows) {
        SignedPermutation g = from_signed_word(row.word);
        BellOutcome out = bell_algorithm(g);
        CHECK(std::abs(out.p_out1 - row.p) <= 1e-12);
        CHECK(out.decision == mod_nfp(g));
        RunResult run = run_algorithm(make_bell_algorithm(), g);
        CHECK(run.signed_queries == 1);
        CHECK(std::abs(run.final_state.norm() - 1.0) <= 1e-12);
        double total = 0;
        for (const auto& [label, p] : run.distribution) total += p;
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("two-query decomposed algorithm reproduces the truth table") {
    struct Row {
        const char* word;
        int b1, b2;
    };
    const Row rows[] = {{"1 2", 0, 0},  {"1 -2", 1, 0},  {"-1 2", 1, 0},  {"-1 -2", 0, 0},
                        {"2 1", 0, 1},  {"2 -1", 1, 1},  {"-2 1", 1, 1},  {"-2 -1", 0, 1}};
    for (const auto& row : rows) {
        SignedPermutation g = from_signed_word(row.word);
        DecomposedOutcome out = decomposed_algorithm(g);
        CHECK(out.b1 == row.b1);
        CHECK(out.b2 == row.b2);
        CHECK(out.decision == (row.b1 == 1 && row.b2 == 0 ? 1 : 0));
        CHECK(out.decision == mod_nfp(g));
        CHECK(run_algorithm(make_diag_probe(), g).decomposed_queries == 1);
        CHECK(run_algorithm(make_perm_probe(), g).decomposed_queries == 1);
    }
}

TEST_CASE("global phase invisibility") {
    CHECK(global_phase_check(make_bell_algorithm(), 2).pass);
    CHECK(global_phase_check(make_three_query_variant(), 2).pass);
    CHECK(global_phase_check(make_b3_probe(), 3).pass);

    OracleAlgorithm no_query = make_bell_algorithm();
    no_query.steps.erase(no_query.steps.begin() + 1);  // drop the oracle slot
    PhaseCheckReport rep = global_phase_check(no_query, 2);
    CHECK(rep.pass);
    CHECK(rep.max_deviation == 0);
}

TEST_CASE("decomposed rewrite is exact on B_2") {
    OracleAlgorithm bell = make_bell_algorithm();
    OracleAlgorithm rewritten = factor2_simulate(bell);
    for (const auto& g : enumerate_group(2)) {
        RunResult a = run_algorithm(bell, g);
        RunResult b = run_algorithm(rewritten, g);
        CHECK((a.final_state - b.final_state).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(b.decomposed_queries == 2 * a.signed_queries);
        CHECK(b.signed_queries == 0);
    }
}

TEST_CASE("decomposed rewrite is exact on the B_3 probe") {
    OracleAlgorithm probe = make_b3_probe();
    OracleAlgorithm rewritten = factor2_simulate(probe);
    for (const auto& g : enumerate_group(3)) {
        RunResult a = run_algorithm(probe, g);
        RunResult b = run_algorithm(rewritten, g);
        CHECK(a.signed_queries == 2);
        CHECK(b.decomposed_queries == 4);
        CHECK((a.final_state - b.final_state).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("zero-query algorithm rewrites to itself") {
    OracleAlgorithm no_query = make_bell_algorithm();
    no_query.steps.erase(no_query.steps.begin() + 1);
    OracleAlgorithm rewritten = factor2_simulate(no_query);
    for (const auto& g : enumerate_group(2)) {
        RunResult a = run_algorithm(no_query, g);
        RunResult b = run_algorithm(rewritten, g);
        CHECK(a.signed_queries == 0);
        CHECK(b.decomposed_queries == 0);
        CHECK((a.final_state - b.final_state).cwiseAbs().maxCoeff() == 0);
    }
}

TEST_CASE("confusable pairs in the single-oracle models") {
    auto nfp = [](const SignedPermutation& g) { return mod_nfp(g); };
    auto p_pairs = confusable_pairs(OracleKind::Perm, 2, nfp);
    auto d_pairs = confusable_pairs(OracleKind::Diag, 2, nfp);
    CHECK_FALSE(p_pairs.empty());
    CHECK_FALSE(d_pairs.empty());

    auto contains = [](const auto& pairs, const char* w1, const char* w2) {
        SignedPermutation a = from_signed_word(w1), b = from_signed_word(w2);
        for (const auto& [x, y] : pairs)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    CHECK(contains(p_pairs, "1 2", "1 -2"));
    CHECK(contains(d_pairs, "1 -2", "2 -1"));

    auto constant = [](const SignedPermutation&) { return 0; };
    CHECK(confusable_pairs(OracleKind::Diag, 2, constant).empty());
    CHECK_THROWS_AS(confusable_pairs(OracleKind::Perm, 5, nfp), capacity_error);
    CHECK_THROWS_AS(confusable_pairs(OracleKind::Signed, 2, nfp), unsupported_error);
}

TEST_CASE("pairs found by the scan really share the oracle operator") {
    auto nfp = [](const SignedPermutation& g) { return mod_nfp(g); };
    for (auto kind : {OracleKind::Perm, OracleKind::Diag}) {
        for (const auto& [a, b] : confusable_pairs(kind, 2, nfp)) {
            CHECK(oracle_matrix(kind, a) == oracle_matrix(kind, b));
            CHECK(mod_nfp(a) != mod_nfp(b));
        }
    }
}

TEST_CASE("oracle difference matrix spectrum") {
    auto eig2 = delta_spectrum(2);
    auto counts2 = count_near(eig2, {-1.0, 0.0, 1.0}, 1e-9);
    CHECK(counts2[1.0] == 2);
    CHECK(counts2[-1.0] == 2);
    CHECK(counts2[0.0] == 12);
    CHECK(counts2[1.0] + counts2[-1.0] + counts2[0.0] == 16);

    auto eig3 = delta_spectrum(3);
    auto counts3 = count_near(eig3, {-1.0, 0.0, 1.0}, 1e-9);
    CHECK(counts3[1.0] == 3);
    CHECK(counts3[-1.0] == 3);
    CHECK(counts3[0.0] == 138);
    CHECK(counts3[1.0] + counts3[-1.0] + counts3[0.0] == 144);

    CHECK_THROWS_AS(delta_spectrum(4), capacity_error);
}

TEST_CASE("oracle difference matrix is exactly symmetric with zero diagonal blocks") {
    for (int n = 2; n <= 3; ++n) {
        DeltaMatrix delta = oracle_difference_matrix(n);
        CHECK(delta.matrix == delta.matrix.transposed());
        CHECK(delta.matrix.trace() == 0);
        int count = static_cast<int>(delta.elements.size());
        for (int a = 0; a < count; ++a)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(delta.matrix.at(a * n + i, a * n + j) == 0);
    }
}

TEST_CASE("weighted Schur products") {
    CHECK(schur_hermiticity_check(Eigen::MatrixXcd::Ones(8, 8), 2));

    Eigen::MatrixXcd weights(8, 8);
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int a = 0; a < 8; ++a) {
        weights(a, a) = unif(rng);
        for (int b = a + 1; b < 8; ++b) {
            weights(a, b) = std::complex<double>(unif(rng), unif(rng));
            weights(b, a) = std::conj(weights(a, b));
        }
    }
    CHECK(schur_hermiticity_check(weights, 2));

    weights(2, 5) += std::complex<double>(0.0, 1.0);
    CHECK_FALSE(schur_hermiticity_check(weights, 2));
}

TEST_CASE("near-complete identification probability") {
    CHECK(plancherel_gap(3) == Rational(47, 48));
    CHECK(plancherel_gap(4) == Rational(383, 384));
    for (int n = 3; n <= 5; ++n) CHECK(plancherel_gap(n) == p_opt(n, 2 * n - 3));
    CHECK_THROWS_AS(plancherel_gap(2), unsupported_error);
}
