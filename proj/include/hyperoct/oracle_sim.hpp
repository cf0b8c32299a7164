#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hyperoct/int_matrix.hpp"
#include "hyperoct/numeric.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

enum class OracleKind { Signed, SignedAdjoint, Perm, PermInverse, Diag };

/// Steps of a query algorithm, kept as data so the decomposed simulation is a
/// step-for-step rewrite rather than a reimplementation.
struct PrepareStep {
    Eigen::VectorXcd state;  // full query x ancilla register
};
struct UnitaryStep {
    Eigen::MatrixXcd matrix;  // fixed, element-independent, on the full register
};
struct OracleStep {
    OracleKind kind = OracleKind::Signed;  // acts on the query register only
};
using AlgorithmStep = std::variant<PrepareStep, UnitaryStep, OracleStep>;

/// Final projective measurement: orthonormal basis columns with outcome labels.
struct MeasurementBasis {
    std::vector<std::string> labels;
    Eigen::MatrixXcd states;
};

struct OracleAlgorithm {
    int n = 0;  // degree of the group the oracles come from
    int query_dim = 0;
    int ancilla_dim = 1;
    std::vector<AlgorithmStep> steps;
    MeasurementBasis measurement;

    int dim() const { return query_dim * ancilla_dim; }
};

struct RunResult {
    std::map<std::string, double> distribution;
    Eigen::VectorXcd final_state;
    int signed_queries = 0;
    int decomposed_queries = 0;
};

Eigen::MatrixXcd oracle_matrix(OracleKind kind, const SignedPermutation& g);

RunResult run_algorithm(const OracleAlgorithm& alg, const SignedPermutation& g);

/// 1 iff sigma = id and the sign vector has mixed signs; N >= 2 only.
int mod_nfp(const SignedPermutation& g);

OracleAlgorithm make_bell_algorithm();

struct BellOutcome {
    double p_out1 = 0;
    int decision = 0;
};
/// One signed query on B_2: Bell-state probe measuring |Phi->.
BellOutcome bell_algorithm(const SignedPermutation& g);

/// The two single-query circuits of the decomposed algorithm on B_2.
OracleAlgorithm make_diag_probe();
OracleAlgorithm make_perm_probe();

struct DecomposedOutcome {
    int b1 = 0;
    int b2 = 0;
    int decision = 0;
};
/// One D query plus one P query on B_2; decision = b1 and not b2.
DecomposedOutcome decomposed_algorithm(const SignedPermutation& g);

struct PhaseCheckReport {
    bool pass = true;
    double max_deviation = 0;
    int elements_checked = 0;
};

/// Output distributions on (sigma, eps) and (sigma, -eps) agree for every
/// element of B_N, within tolerance.
PhaseCheckReport global_phase_check(const OracleAlgorithm& alg, int n, double tol = 1e-12);

/// Replace each signed oracle slot by the (Diag, Perm) pair and each adjoint
/// slot by the (PermInverse, Diag) pair.
OracleAlgorithm factor2_simulate(const OracleAlgorithm& alg);

/// Pairs of elements with identical single-kind oracle operators but different
/// target values. kind must be Perm or Diag; guarded at N <= 4.
std::vector<std::pair<SignedPermutation, SignedPermutation>> confusable_pairs(
    OracleKind kind, int n, const std::function<int(const SignedPermutation&)>& target);

/// Unnormalized oracle difference matrix: block (g,h) is I - rho(g)^T rho(h),
/// over integer entries. Guarded at N <= 3.
struct DeltaMatrix {
    int n = 0;
    std::vector<SignedPermutation> elements;
    IntMatrix matrix;
};

DeltaMatrix oracle_difference_matrix(int n);

/// Ascending eigenvalues of the normalized oracle difference matrix.
std::vector<double> delta_spectrum(int n);

/// Count eigenvalues within tol of each of the given targets; the remainder
/// must also be within tol of some target or the count map omits them.
std::map<double, int> count_near(const std::vector<double>& values,
                                 const std::vector<double>& targets, double tol);

/// Blockwise Schur product with a weight matrix; true iff the result is
/// Hermitian within tolerance.
bool schur_hermiticity_check(const Eigen::MatrixXcd& weights, int n, double tol = 1e-12);

/// 1 - 1/(2^N N!), the success probability at one query before full
/// identification; defined for N >= 3.
Rational plancherel_gap(int n);

}  // namespace hyperoct
