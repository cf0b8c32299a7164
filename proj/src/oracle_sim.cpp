#include "hyperoct/oracle_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperoct/errors.hpp"

namespace hyperoct {

namespace {

Eigen::MatrixXcd to_complex(const IntMatrix& m) {
    Eigen::MatrixXcd out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = static_cast<double>(m.at(i, j));
    return out;
}

Eigen::MatrixXcd kron_with_identity(const Eigen::MatrixXcd& a, int ancilla_dim) {
    int n = static_cast<int>(a.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n * ancilla_dim, n * ancilla_dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < ancilla_dim; ++k)
                out(i * ancilla_dim + k, j * ancilla_dim + k) = a(i, j);
    return out;
}

}  // namespace

Eigen::MatrixXcd oracle_matrix(OracleKind kind, const SignedPermutation& g) {
    int n = g.degree();
    std::vector<int> id_eps(n, 1);
    std::vector<int> id_sigma(n);
    for (int i = 0; i < n; ++i) id_sigma[i] = i + 1;
    switch (kind) {
        case OracleKind::Signed:
            return to_complex(natural_matrix(g));
        case OracleKind::SignedAdjoint:
            return to_complex(natural_matrix(inverse(g)));
        case OracleKind::Perm:
            return to_complex(natural_matrix({g.sigma, id_eps}));
        case OracleKind::PermInverse:
            return to_complex(natural_matrix(inverse({g.sigma, id_eps})));
        case OracleKind::Diag:
            return to_complex(natural_matrix({id_sigma, g.epsilon}));
    }
    throw std::logic_error("oracle_matrix: unreachable");
}

RunResult run_algorithm(const OracleAlgorithm& alg, const SignedPermutation& g) {
    if (g.degree() != alg.n) throw dimension_error("run_algorithm: element degree mismatch");
    RunResult res;
    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(alg.dim());
    for (const auto& step : alg.steps) {
        if (const auto* prep = std::get_if<PrepareStep>(&step)) {
            if (prep->state.size() != alg.dim())
                throw dimension_error("run_algorithm: prepared state has wrong dimension");
            state = prep->state;
        } else if (const auto* unitary = std::get_if<UnitaryStep>(&step)) {
            state = unitary->matrix * state;
        } else {
            OracleKind kind = std::get<OracleStep>(step).kind;
            state = kron_with_identity(oracle_matrix(kind, g), alg.ancilla_dim) * state;
            if (kind == OracleKind::Signed || kind == OracleKind::SignedAdjoint)
                ++res.signed_queries;
            else
                ++res.decomposed_queries;
        }
    }
    res.final_state = state;
    for (size_t i = 0; i < alg.measurement.labels.size(); ++i) {
        std::complex<double> amp = alg.measurement.states.col(i).dot(state);
        res.distribution[alg.measurement.labels[i]] = std::norm(amp);
    }
    return res;
}

int mod_nfp(const SignedPermutation& g) {
    if (g.degree() < 2) throw unsupported_error("mod_nfp: needs N >= 2");
    if (!g.permutation_is_identity()) return 0;
    bool has_plus = false, has_minus = false;
    for (int e : g.epsilon) (e > 0 ? has_plus : has_minus) = true;
    return has_plus && has_minus ? 1 : 0;
}

OracleAlgorithm make_bell_algorithm() {
    const double s = 1.0 / std::sqrt(2.0);
    OracleAlgorithm alg;
    alg.n = 2;
    alg.query_dim = 2;
    alg.ancilla_dim = 2;
    Eigen::VectorXcd phi_plus = Eigen::VectorXcd::Zero(4);
    phi_plus(0) = s;
    phi_plus(3) = s;
    alg.steps.push_back(PrepareStep{phi_plus});
    alg.steps.push_back(OracleStep{OracleKind::Signed});
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(4, 4);
    basis(0, 0) = s;  basis(3, 0) = -s;  // phi-
    basis(0, 1) = s;  basis(3, 1) = s;   // phi+
    basis(1, 2) = s;  basis(2, 2) = s;   // psi+
    basis(1, 3) = s;  basis(2, 3) = -s;  // psi-
    alg.measurement = {{"phi-", "phi+", "psi+", "psi-"}, basis};
    return alg;
}

BellOutcome bell_algorithm(const SignedPermutation& g) {
    if (g.degree() != 2) throw dimension_error("bell_algorithm: defined on B_2");
    RunResult run = run_algorithm(make_bell_algorithm(), g);
    BellOutcome out;
    out.p_out1 = run.distribution.at("phi-");
    out.decision = out.p_out1 > 0.5 ? 1 : 0;
    return out;
}

OracleAlgorithm make_diag_probe() {
    const double s = 1.0 / std::sqrt(2.0);
    OracleAlgorithm alg;
    alg.n = 2;
    alg.query_dim = 2;
    alg.ancilla_dim = 1;
    Eigen::VectorXcd plus(2);
    plus << s, s;
    alg.steps.push_back(PrepareStep{plus});
    alg.steps.push_back(OracleStep{OracleKind::Diag});
    Eigen::MatrixXcd hadamard(2, 2);
    hadamard << s, s, s, -s;
    alg.steps.push_back(UnitaryStep{hadamard});
    alg.measurement = {{"0", "1"}, Eigen::MatrixXcd::Identity(2, 2)};
    return alg;
}

OracleAlgorithm make_perm_probe() {
    OracleAlgorithm alg;
    alg.n = 2;
    alg.query_dim = 2;
    alg.ancilla_dim = 1;
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(2);
    e1(0) = 1;
    alg.steps.push_back(PrepareStep{e1});
    alg.steps.push_back(OracleStep{OracleKind::Perm});
    alg.measurement = {{"1", "2"}, Eigen::MatrixXcd::Identity(2, 2)};
    return alg;
}

DecomposedOutcome decomposed_algorithm(const SignedPermutation& g) {
    if (g.degree() != 2) throw dimension_error("decomposed_algorithm: defined on B_2");
    RunResult run1 = run_algorithm(make_diag_probe(), g);
    RunResult run2 = run_algorithm(make_perm_probe(), g);
    DecomposedOutcome out;
    out.b1 = run1.distribution.at("1") > 0.5 ? 1 : 0;
    out.b2 = run2.distribution.at("2") > 0.5 ? 1 : 0;  // |1> -> 0, |2> -> 1
    out.decision = out.b1 == 1 && out.b2 == 0 ? 1 : 0;
    return out;
}

PhaseCheckReport global_phase_check(const OracleAlgorithm& alg, int n, double tol) {
    if (alg.n != n) throw dimension_error("global_phase_check: algorithm degree mismatch");
    PhaseCheckReport rep;
    for (const auto& g : enumerate_group(n)) {
        std::vector<int> flipped = g.epsilon;
        for (int& e : flipped) e = -e;
        SignedPermutation g_flip(g.sigma, flipped);
        RunResult a = run_algorithm(alg, g);
        RunResult b = run_algorithm(alg, g_flip);
        for (const auto& [label, p] : a.distribution)
            rep.max_deviation = std::max(rep.max_deviation, std::abs(p - b.distribution.at(label)));
        ++rep.elements_checked;
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

OracleAlgorithm factor2_simulate(const OracleAlgorithm& alg) {
    OracleAlgorithm out = alg;
    out.steps.clear();
    for (const auto& step : alg.steps) {
        const auto* oracle = std::get_if<OracleStep>(&step);
        if (oracle && oracle->kind == OracleKind::Signed) {
            out.steps.push_back(OracleStep{OracleKind::Diag});
            out.steps.push_back(OracleStep{OracleKind::Perm});
        } else if (oracle && oracle->kind == OracleKind::SignedAdjoint) {
            out.steps.push_back(OracleStep{OracleKind::PermInverse});
            out.steps.push_back(OracleStep{OracleKind::Diag});
        } else {
            out.steps.push_back(step);
        }
    }
    return out;
}

std::vector<std::pair<SignedPermutation, SignedPermutation>> confusable_pairs(
    OracleKind kind, int n, const std::function<int(const SignedPermutation&)>& target) {
    if (kind != OracleKind::Perm && kind != OracleKind::Diag)
        throw unsupported_error("confusable_pairs: kind must be Perm or Diag");
    if (n > 4) throw capacity_error("confusable_pairs: pair scan too large for N > 4");
    auto group = enumerate_group(n);
    std::vector<std::pair<SignedPermutation, SignedPermutation>> out;
    for (size_t i = 0; i < group.size(); ++i) {
        for (size_t j = i + 1; j < group.size(); ++j) {
            bool same_oracle = kind == OracleKind::Perm ? group[i].sigma == group[j].sigma
                                                        : group[i].epsilon == group[j].epsilon;
            if (same_oracle && target(group[i]) != target(group[j]))
                out.emplace_back(group[i], group[j]);
        }
    }
    return out;
}

DeltaMatrix oracle_difference_matrix(int n) {
    if (n < 1) throw std::invalid_argument("oracle_difference_matrix: n < 1");
    if (n > 3) throw capacity_error("oracle_difference_matrix: matrix side too large for N > 3");
    DeltaMatrix delta;
    delta.n = n;
    delta.elements = enumerate_group(n);
    int count = static_cast<int>(delta.elements.size());
    delta.matrix = IntMatrix(count * n, count * n);
    IntMatrix eye = IntMatrix::identity(n);
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            // rho(g)^dagger rho(h) = rho(g^-1 h), exactly over the integers
            IntMatrix prod = natural_matrix(compose(inverse(delta.elements[a]), delta.elements[b]));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    delta.matrix.at(a * n + i, b * n + j) = eye.at(i, j) - prod.at(i, j);
        }
    }
    return delta;
}

std::vector<double> delta_spectrum(int n) {
    DeltaMatrix delta = oracle_difference_matrix(n);
    double order = static_cast<double>(delta.elements.size());
    int side = delta.matrix.rows;
    Eigen::MatrixXcd normalized(side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            normalized(i, j) = static_cast<double>(delta.matrix.at(i, j)) / order;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(normalized);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("delta_spectrum: eigendecomposition failed");
    std::vector<double> eigenvalues(solver.eigenvalues().data(),
                                    solver.eigenvalues().data() + side);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

std::map<double, int> count_near(const std::vector<double>& values,
                                 const std::vector<double>& targets, double tol) {
    std::map<double, int> counts;
    for (double target : targets) counts[target] = 0;
    for (double v : values)
        for (double target : targets)
            if (std::abs(v - target) <= tol) ++counts[target];
    return counts;
}

bool schur_hermiticity_check(const Eigen::MatrixXcd& weights, int n, double tol) {
    DeltaMatrix delta = oracle_difference_matrix(n);
    int count = static_cast<int>(delta.elements.size());
    if (weights.rows() != count || weights.cols() != count)
        throw dimension_error("schur_hermiticity_check: weight matrix must be |B_N| x |B_N|");
    int side = delta.matrix.rows;
    Eigen::MatrixXcd scaled(side, side);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    scaled(a * n + i, b * n + j) =
                        weights(a, b) * static_cast<double>(delta.matrix.at(a * n + i, b * n + j));
    return (scaled - scaled.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Rational plancherel_gap(int n) {
    if (n < 3)
        throw unsupported_error("plancherel_gap: single-bottleneck formula needs N >= 3");
    BigInt order = int_pow(2, n) * factorial(n);
    return Rational(order - 1, order);
}

}  // namespace hyperoct
