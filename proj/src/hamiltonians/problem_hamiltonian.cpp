// Copyright 2026 The raqprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raqprep/hamiltonians/problem_hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <Eigen/Eigenvalues>

#include "raqprep/sampling/haar.hpp"
#include "raqprep/sampling/pool.hpp"

namespace raqprep {

namespace {

GroundEnergy lowest_with_multiplicity(const Eigen::VectorXd &values) {
    const double e = values.minCoeff();
    const double tol = ProblemHamiltonian::kDegeneracyTolerance * std::max(1.0, std::abs(e));
    int count = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) count += values[i] <= e + tol;
    return {e, count};
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
T parse_number(const std::string &text, const std::string &what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidInput("cannot parse " + what + " from '" + text + "'");
    }
    return value;
}

}  // namespace

std::string to_string(HamiltonianForm form) {
    switch (form) {
        case HamiltonianForm::ising_diagonal:
            return "ising_diagonal";
        case HamiltonianForm::projector:
            return "projector";
        case HamiltonianForm::dense:
            return "dense";
    }
    return "unknown";
}

void ProblemHamiltonian::cache_spectrum(const Eigen::VectorXd &eigenvalues) {
    const GroundEnergy g = lowest_with_multiplicity(eigenvalues);
    ground_energy_ = g.energy;
    ground_degeneracy_ = g.degeneracy;
    spectral_norm_ = eigenvalues.cwiseAbs().maxCoeff();
}

ProblemHamiltonian ProblemHamiltonian::from_diagonal(int n_qubits, Eigen::VectorXd diagonal) {
    require_qubit_count(n_qubits);
    if (static_cast<std::size_t>(diagonal.size()) != dimension_of(n_qubits)) {
        throw InvalidInput("diagonal length does not match 2^n");
    }
    ProblemHamiltonian h;
    h.form_ = HamiltonianForm::ising_diagonal;
    h.n_qubits_ = n_qubits;
    h.diagonal_ = std::move(diagonal);
    h.cache_spectrum(h.diagonal_);
    return h;
}

ProblemHamiltonian ProblemHamiltonian::projector(const StateVector &target, int n_ancilla) {
    if (n_ancilla < 0) {
        throw InvalidInput("ancilla count must be nonnegative");
    }
    require_qubit_count(target.n_qubits() + n_ancilla);
    if (std::abs(target.norm() - 1.0) > StateVector::kNormTolerance) {
        throw InvalidInput("projector target is not normalized");
    }
    ProblemHamiltonian h;
    h.form_ = HamiltonianForm::projector;
    h.n_qubits_ = target.n_qubits() + n_ancilla;
    h.target_ = target;
    h.n_ancilla_ = n_ancilla;
    // Eigenvalue 0 on target (x) anything, 1 on the complement.
    h.ground_energy_ = 0.0;
    h.ground_degeneracy_ = static_cast<int>(dimension_of(n_ancilla));
    h.spectral_norm_ = 1.0;
    return h;
}

ProblemHamiltonian ProblemHamiltonian::dense(int n_qubits, const CMatrix &matrix) {
    require_qubit_count(n_qubits);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    if (matrix.rows() != d || matrix.cols() != d) {
        throw InvalidInput("dense Hamiltonian has the wrong shape");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidInput("dense Hamiltonian is not Hermitian");
    }
    ProblemHamiltonian h;
    h.form_ = HamiltonianForm::dense;
    h.n_qubits_ = n_qubits;
    h.matrix_ = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix_);
    h.eigenvalues_ = es.eigenvalues();
    h.eigenvectors_ = es.eigenvectors();
    h.cache_spectrum(h.eigenvalues_);
    return h;
}

const Eigen::VectorXd &ProblemHamiltonian::diagonal() const {
    if (form_ != HamiltonianForm::ising_diagonal) {
        throw std::logic_error("diagonal() requires the ising form");
    }
    return diagonal_;
}

const StateVector &ProblemHamiltonian::target() const {
    if (form_ != HamiltonianForm::projector) {
        throw std::logic_error("target() requires the projector form");
    }
    return *target_;
}

CMatrix ProblemHamiltonian::apply(const CMatrix &m) const {
    if (static_cast<std::size_t>(m.rows()) != dim()) {
        throw InvalidInput("operand dimension does not match the Hamiltonian");
    }
    switch (form_) {
        case HamiltonianForm::ising_diagonal:
            return diagonal_.asDiagonal() * m;
        case HamiltonianForm::dense:
            return matrix_ * m;
        case HamiltonianForm::projector:
            break;
    }
    // Column c viewed as a d_A x d_S block B(a, s); (|t><t| (x) 1) B = (B conj(t)) t^T.
    const auto da = static_cast<Eigen::Index>(dimension_of(n_ancilla_));
    const auto ds = static_cast<Eigen::Index>(target_->dim());
    const CVector &t = target_->amplitudes();
    CMatrix out = m;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Map<const CMatrix> block(m.col(c).data(), da, ds);
        Eigen::Map<CMatrix> dst(out.col(c).data(), da, ds);
        const CVector overlap = block * t.conjugate();
        dst.noalias() -= overlap * t.transpose();
    }
    return out;
}

CVector ProblemHamiltonian::apply(const CVector &v) const {
    return apply(CMatrix(v)).col(0);
}

CMatrix ProblemHamiltonian::to_matrix() const {
    const auto d = static_cast<Eigen::Index>(dim());
    return apply(CMatrix(CMatrix::Identity(d, d)));
}

double ProblemHamiltonian::expectation(const StateVector &psi) const {
    if (psi.n_qubits() != n_qubits_) {
        throw InvalidInput("state register does not match the Hamiltonian");
    }
    const CVector &a = psi.amplitudes();
    if (form_ == HamiltonianForm::ising_diagonal) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < a.size(); ++i) acc += std::norm(a[i]) * diagonal_[i];
        return acc;
    }
    return inner(a, apply(a)).real();
}

double ProblemHamiltonian::expectation(const CMatrix &rho) const {
    if (static_cast<std::size_t>(rho.rows()) != dim()) {
        throw InvalidInput("density matrix dimension does not match the Hamiltonian");
    }
    if (form_ == HamiltonianForm::ising_diagonal) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < rho.rows(); ++i) acc += rho(i, i).real() * diagonal_[i];
        return acc;
    }
    return apply(rho).trace().real();
}

double ProblemHamiltonian::variance(const StateVector &psi) const {
    const double mean = expectation(psi);
    const CVector hv = apply(psi.amplitudes());
    return hv.squaredNorm() - mean * mean;
}

MeasurementDistribution ProblemHamiltonian::measurement_distribution(const StateVector &psi) const {
    if (psi.n_qubits() != n_qubits_) {
        throw InvalidInput("state register does not match the Hamiltonian");
    }
    const CVector &a = psi.amplitudes();
    MeasurementDistribution out;
    switch (form_) {
        case HamiltonianForm::ising_diagonal:
            out.values.assign(diagonal_.data(), diagonal_.data() + diagonal_.size());
            out.probabilities.resize(out.values.size());
            for (Eigen::Index i = 0; i < a.size(); ++i) out.probabilities[static_cast<std::size_t>(i)] = std::norm(a[i]);
            break;
        case HamiltonianForm::projector: {
            const double p_miss = std::clamp(expectation(psi), 0.0, 1.0);
            out.values = {0.0, 1.0};
            out.probabilities = {1.0 - p_miss, p_miss};
            break;
        }
        case HamiltonianForm::dense: {
            const CVector coeffs = eigenvectors_.adjoint() * a;
            out.values.assign(eigenvalues_.data(), eigenvalues_.data() + eigenvalues_.size());
            out.probabilities.resize(out.values.size());
            for (Eigen::Index i = 0; i < coeffs.size(); ++i) out.probabilities[static_cast<std::size_t>(i)] = std::norm(coeffs[i]);
            break;
        }
    }
    return out;
}

ProblemHamiltonian ising_from_graph(const Graph &g) {
    const int n = g.n_vertices();
    require_qubit_count(n);
    const std::size_t d = dimension_of(n);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t b = 0; b < d; ++b) {
        double e = 0.0;
        for (const Edge &edge : g.edges()) {
            const auto bu = (b >> index_bit_of_qubit(n, edge.u)) & 1;
            const auto bv = (b >> index_bit_of_qubit(n, edge.v)) & 1;
            e += bu == bv ? edge.weight : -edge.weight;
        }
        diag[static_cast<Eigen::Index>(b)] = e;
    }
    return ProblemHamiltonian::from_diagonal(n, std::move(diag));
}

ProblemHamiltonian projector_hamiltonian(const StateVector &target) {
    return ProblemHamiltonian::projector(target, 0);
}

GroundEnergy ground_energy_bruteforce(const ProblemHamiltonian &h) {
    if (h.form() == HamiltonianForm::ising_diagonal) {
        return lowest_with_multiplicity(h.diagonal());
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.to_matrix(), Eigen::EigenvaluesOnly);
    return lowest_with_multiplicity(es.eigenvalues());
}

double variance_of(const StateVector &psi, const ProblemHamiltonian &h) {
    return h.variance(psi);
}

double spectral_norm(const ProblemHamiltonian &h) {
    return h.spectral_norm();
}

double approximation_ratio(double j, double e_min) {
    if (e_min == 0.0) {
        throw InvalidInput("approximation ratio undefined for E_min = 0; use the fidelity 1 - J");
    }
    return j / e_min;
}

Graph graph_from_spec(const std::string &spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "complete") {
        if (parts.size() != 2) throw InvalidInput("expected complete:<n>, got '" + spec + "'");
        return Graph::complete(parse_number<int>(parts[1], "vertex count"));
    }
    if (parts[0] == "regular") {
        if (parts.size() != 4) throw InvalidInput("expected regular:<n>:<d>:<seed>, got '" + spec + "'");
        RngStream rng(parse_number<std::uint64_t>(parts[3], "graph seed"), 0);
        return random_regular_graph(parse_number<int>(parts[1], "vertex count"), parse_number<int>(parts[2], "degree"), rng);
    }
    std::ifstream in(spec);
    if (!in) {
        throw InvalidInput("graph spec '" + spec + "' is neither a builder nor a readable edge-list file");
    }
    return Graph::parse_edge_list(in);
}

StateVector target_from_spec(const std::string &spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "basis" && parts.size() == 2) {
        return StateVector::from_bits(parts[1]);
    }
    if (parts[0] == "plus" && parts.size() == 2) {
        return StateVector::plus(parse_number<int>(parts[1], "qubit count"));
    }
    if (parts[0] == "random" && parts.size() == 3) {
        RngStream rng(parse_number<std::uint64_t>(parts[2], "target seed"), 0);
        return random_state(parse_number<int>(parts[1], "qubit count"), rng);
    }
    throw InvalidInput("unknown target spec '" + spec + "' (basis:<bits>, plus:<n>, random:<n>:<seed>)");
}

}  // namespace raqprep
