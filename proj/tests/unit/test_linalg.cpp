#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raqprep/linalg/operations.hpp"

using namespace raqprep;

namespace {

CVector random_vector(std::size_t d, std::mt19937_64 &gen) {
    std::normal_distribution<double> nd;
    CVector v(static_cast<Eigen::Index>(d));
    for (auto &x : v) x = {nd(gen), nd(gen)};
    return v;
}

StateVector random_state(int n, std::mt19937_64 &gen) {
    return StateVector::normalized(n, random_vector(dimension_of(n), gen));
}

CMatrix random_density(int n, std::mt19937_64 &gen) {
    const auto d = static_cast<Eigen::Index>(dimension_of(n));
    CMatrix g(d, d);
    for (Eigen::Index j = 0; j < d; ++j) g.col(j) = random_vector(static_cast<std::size_t>(d), gen);
    CMatrix rho = g * g.adjoint();
    return rho / rho.trace();
}

}  // namespace

TEST(StateVector, RejectsWrongLengthAndNorm) {
    EXPECT_THROW(StateVector(2, CVector::Zero(3)), InvalidInput);
    CVector v = CVector::Zero(2);
    v[0] = 1.1;
    EXPECT_THROW(StateVector(1, v), InvalidInput);
    EXPECT_THROW(StateVector::normalized(1, CVector::Zero(2)), InvalidInput);
}

TEST(StateVector, BitLabelsPutQubitZeroLeftmost) {
    const StateVector s = StateVector::from_bits("01");
    const oracle::Vec expected = oracle::kron(oracle::Vec::Unit(2, 0), oracle::Vec::Unit(2, 1));
    EXPECT_NEAR((s.amplitudes() - expected).norm(), 0.0, 1e-15);
}

TEST(PauliString, MatrixMatchesKroneckerProduct) {
    for (const char *label : {"X", "Y", "Z", "XY", "ZI", "IYZ", "XYZX", "YYIZ"}) {
        const PauliString p(label);
        EXPECT_NEAR((p.to_matrix() - oracle::pauli_matrix(label)).norm(), 0.0, 1e-15) << label;
    }
}

TEST(PauliString, ApplyMatchesMatrix) {
    std::mt19937_64 gen(3);
    for (const char *label : {"XZY", "YYY", "IZX"}) {
        const PauliString p(label, -0.5);
        const CVector v = random_vector(8, gen);
        EXPECT_NEAR((p.apply(v) - (-0.5) * oracle::pauli_matrix(label) * v).norm(), 0.0, 1e-13);
    }
}

TEST(PauliString, AlgebraicInvariants) {
    for (const char *label : {"XYZ", "IIZ", "YIX", "III"}) {
        const PauliString p(label, 1.5);
        const CMatrix m = p.to_matrix();
        const auto d = m.rows();
        EXPECT_NEAR((m * m - 2.25 * CMatrix::Identity(d, d)).norm(), 0.0, 1e-12);
        EXPECT_DOUBLE_EQ(p.spectral_norm(), 1.5);
        EXPECT_NEAR(spectral_norm_hermitian(m), 1.5, 1e-12);
        if (!p.is_identity()) {
            EXPECT_NEAR(std::abs(m.trace()), 0.0, 1e-14);
            EXPECT_EQ(p.trace(), 0.0);
        } else {
            EXPECT_DOUBLE_EQ(p.trace(), 1.5 * 8);
        }
    }
}

TEST(PauliString, ProductsMatchMatrices) {
    const char *labels[] = {"XY", "ZZ", "YI", "IX", "XZ", "YY"};
    for (const char *a : labels) {
        for (const char *b : labels) {
            const PauliProduct prod = multiply(PauliString(a, 2.0), PauliString(b, -1.0));
            const CMatrix lhs = prod.phase * prod.string.to_matrix();
            const CMatrix rhs = -2.0 * oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
            EXPECT_NEAR((lhs - rhs).norm(), 0.0, 1e-13) << a << "*" << b;
            EXPECT_EQ(PauliString(a).commutes_with(PauliString(b)),
                      (oracle::pauli_matrix(a) * oracle::pauli_matrix(b) - oracle::pauli_matrix(b) * oracle::pauli_matrix(a)).norm() < 1e-12);
        }
    }
}

TEST(PauliString, LabelsAndWeights) {
    const PauliString p("X_Z");
    EXPECT_EQ(p.label(), "XIZ");
    EXPECT_EQ(p.weight(), 2);
    EXPECT_EQ(p.factor(0), Pauli::X);
    EXPECT_EQ(p.factor(1), Pauli::I);
    EXPECT_EQ(PauliString::single(3, 2, Pauli::Y).label(), "IIY");
    EXPECT_THROW(PauliString("XQ"), InvalidInput);
}

TEST(PauliRotation, ZeroAngleIsIdentity) {
    const StateVector out = apply_pauli_rotation(StateVector::basis(1, 0), PauliString("Z"), 0.0);
    EXPECT_NEAR((out.amplitudes() - StateVector::basis(1, 0).amplitudes()).norm(), 0.0, 1e-15);
}

TEST(PauliRotation, XByHalfPiGivesMinusIOne) {
    const StateVector out = apply_pauli_rotation(StateVector::basis(1, 0), PauliString("X"), M_PI / 2);
    EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out[1] - Complex(0, -1)), 0.0, 1e-15);
}

TEST(PauliRotation, YOnPlusGivesMinusSinOne) {
    const StateVector out = apply_pauli_rotation(StateVector::plus(1), PauliString("Y"), 0.5);
    EXPECT_NEAR(expectation(out, PauliString("Z")), -std::sin(1.0), 1e-14);
    EXPECT_NEAR(expectation(out, PauliString("Z")), -0.8415, 1e-4);
}

TEST(PauliRotation, MatchesMatrixExponential) {
    std::mt19937_64 gen(11);
    const StateVector psi = random_state(3, gen);
    const char *label = "YXZ";
    const StateVector out = apply_pauli_rotation(psi, PauliString(label), 0.37);
    const oracle::Vec ref = oracle::expm_hermitian(oracle::pauli_matrix(label), 0.37) * psi.amplitudes();
    EXPECT_NEAR((out.amplitudes() - ref).norm(), 0.0, 1e-12);
}

TEST(PauliRotation, RejectsMismatchAndScaledGenerator) {
    EXPECT_THROW(apply_pauli_rotation(StateVector::basis(1, 0), PauliString("XX"), 0.1), InvalidInput);
    EXPECT_THROW(apply_pauli_rotation(StateVector::basis(1, 0), PauliString("X", 2.0), 0.1), InvalidInput);
}

TEST(PauliRotation, Composition) {
    std::mt19937_64 gen(5);
    const StateVector psi = random_state(3, gen);
    const PauliString p("XZY");
    const StateVector ab = apply_pauli_rotation(apply_pauli_rotation(psi, p, 0.3), p, -1.1);
    const StateVector direct = apply_pauli_rotation(psi, p, 0.3 - 1.1);
    EXPECT_LE((ab.amplitudes() - direct.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PauliRotation, NormPreservedOverManyApplications) {
    std::mt19937_64 gen(7);
    StateVector psi = random_state(3, gen);
    const PauliString gens[] = {PauliString("XII"), PauliString("IYZ"), PauliString("ZZX")};
    const DenseOperator h3(3, oracle::kron(oracle::kron(oracle::Mat::Identity(2, 2), oracle::Mat::Identity(2, 2)),
                                           DenseOperator::hadamard().matrix()),
                           true);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int i = 0; i < 10000; ++i) {
        psi = apply_pauli_rotation(psi, gens[i % 3], angle(gen));
        if (i % 7 == 0) psi = apply_dense(psi, h3);
        ASSERT_LE(std::abs(psi.norm() - 1.0), 1e-12 * (1 + i));
    }
    EXPECT_LE(std::abs(psi.norm() - 1.0), 1e-9);
}

TEST(ApplyDense, IdentityAndHadamard) {
    const StateVector zero = StateVector::basis(1, 0);
    EXPECT_NEAR((apply_dense(zero, DenseOperator::identity(1)).amplitudes() - zero.amplitudes()).norm(), 0.0, 1e-15);
    EXPECT_NEAR((apply_dense(zero, DenseOperator::hadamard()).amplitudes() - StateVector::plus(1).amplitudes()).norm(), 0.0,
                1e-15);
}

TEST(ApplyDense, RejectsUnflaggedOrMismatched) {
    EXPECT_THROW(apply_dense(StateVector::basis(1, 0), DenseOperator(1, CMatrix::Identity(2, 2))), InvalidInput);
    EXPECT_THROW(apply_dense(StateVector::basis(2, 0), DenseOperator::hadamard()), InvalidInput);
    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 1) = 0.1;
    EXPECT_THROW(DenseOperator(1, bad, true), InvalidInput);
}

TEST(Expectation, SpecExamples) {
    EXPECT_DOUBLE_EQ(expectation(StateVector::basis(1, 0), PauliString("Z")), 1.0);
    EXPECT_NEAR(expectation(StateVector::plus(1), PauliString("Z")), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(expectation(StateVector::from_bits("01"), PauliString("ZZ")), -1.0);
}

TEST(Expectation, PauliSumAndDenseAgree) {
    std::mt19937_64 gen(9);
    const StateVector psi = random_state(2, gen);
    const PauliSum h(2, {PauliString("ZZ", 0.5), PauliString("XI", -1.25), PauliString("IY", 2.0)});
    const CMatrix ref = 0.5 * oracle::pauli_matrix("ZZ") - 1.25 * oracle::pauli_matrix("XI") + 2.0 * oracle::pauli_matrix("IY");
    EXPECT_NEAR(expectation(psi, h), oracle::expect(psi.amplitudes(), ref), 1e-13);
    EXPECT_NEAR(expectation(psi, DenseOperator(2, ref)), oracle::expect(psi.amplitudes(), ref), 1e-13);
}

TEST(Expectation, RejectsNonHermitian) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(expectation(StateVector::plus(1), DenseOperator(1, m)), InvalidInput);
}

TEST(CommutatorExpectation, SpecExamples) {
    EXPECT_NEAR(commutator_expectation(StateVector::plus(1), PauliString("Y"), PauliString("Z")), -2.0, 1e-15);
    EXPECT_NEAR(commutator_expectation(StateVector::basis(1, 0), PauliString("Y"), PauliString("Z")), 0.0, 1e-15);
    EXPECT_NEAR(commutator_expectation(StateVector::basis(1, 0), PauliString("X"), PauliString("Z")), 0.0, 1e-15);
}

TEST(CommutatorExpectation, AgreesWithNaiveAndIsAntisymmetric) {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 4;
        const StateVector psi = random_state(n, gen);
        std::string la, lb;
        std::uniform_int_distribution<int> sym(0, 3);
        for (int q = 0; q < n; ++q) {
            la += "IXYZ"[sym(gen)];
            lb += "IXYZ"[sym(gen)];
        }
        const PauliString a(la, 0.75);
        const CMatrix bm = random_density(n, gen);  // Hermitian, non-Pauli
        const DenseOperator b(n, bm);
        const double fast = commutator_expectation(psi, a, b);
        EXPECT_NEAR(fast, commutator_expectation_naive(psi, a, b), 1e-12);
        EXPECT_EQ(fast, -commutator_expectation(psi, b, a));
        const PauliString c(lb);
        EXPECT_EQ(commutator_expectation(psi, a, c), -commutator_expectation(psi, c, a));
        EXPECT_EQ(commutator_expectation_naive(psi, a, c), -commutator_expectation_naive(psi, c, a));
        // Oracle: i <psi|[A,B]|psi> straight from matrices.
        const oracle::Mat am = 0.75 * oracle::pauli_matrix(la);
        const Complex ref = Complex(0, 1) * (psi.amplitudes().adjoint() * (am * bm - bm * am) * psi.amplitudes())(0, 0);
        EXPECT_NEAR(fast, ref.real(), 1e-12);
    }
}

TEST(CommutatorExpectation, RejectsMismatch) {
    EXPECT_THROW(commutator_expectation(StateVector::plus(1), PauliString("XX"), PauliString("Z")), InvalidInput);
}

TEST(DensityMatrix, ValidatesInvariants) {
    CMatrix m = CMatrix::Identity(2, 2) * 0.5;
    EXPECT_NO_THROW(DensityMatrix::from_matrix(1, m));
    m(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix::from_matrix(1, m), InvalidInput);  // not Hermitian
    CMatrix t = CMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix::from_matrix(1, t), InvalidInput);  // trace 2
    CMatrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(1, neg), InvalidInput);  // negative eigenvalue
}

TEST(PartialTrace, ProductState) {
    const DensityMatrix rho = DensityMatrix::from_pure(StateVector::from_bits("00"));
    const DensityMatrix r = partial_trace(rho, {0});
    EXPECT_NEAR((r.matrix() - DensityMatrix::from_pure(StateVector::basis(1, 0)).matrix()).norm(), 0.0, 1e-15);
}

TEST(PartialTrace, BellStateIsMaximallyMixed) {
    CVector bell = CVector::Zero(4);
    bell[0] = bell[3] = M_SQRT1_2;
    const DensityMatrix rho = DensityMatrix::from_pure(StateVector(2, bell));
    for (int q : {0, 1}) {
        EXPECT_NEAR((partial_trace(rho, {q}).matrix() - 0.5 * CMatrix::Identity(2, 2)).norm(), 0.0, 1e-15);
    }
}

TEST(PartialTrace, SeparableFactorization) {
    std::mt19937_64 gen(17);
    const DensityMatrix rs = DensityMatrix::from_matrix(2, random_density(2, gen));
    const DensityMatrix ra = DensityMatrix::from_matrix(1, random_density(1, gen));
    const DensityMatrix joint = tensor(rs, ra);
    EXPECT_NEAR((joint.matrix() - oracle::kron(rs.matrix(), ra.matrix())).norm(), 0.0, 1e-15);
    EXPECT_LE((partial_trace(joint, {0, 1}).matrix() - rs.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((partial_trace(joint, {2}).matrix() - ra.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialTrace, TracesOutMiddleQubitLikeKroneckerOracle) {
    std::mt19937_64 gen(19);
    const CMatrix a = random_density(1, gen), b = random_density(1, gen), c = random_density(1, gen);
    const DensityMatrix rho = DensityMatrix::from_matrix(3, oracle::kron(oracle::kron(a, b), c));
    EXPECT_LE((partial_trace(rho, {0, 2}).matrix() - oracle::kron(a, c)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((partial_trace(rho, {2, 0}).matrix() - oracle::kron(a, c)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PartialTrace, PreservesTraceAndHermiticityOnRandomInputs) {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = DensityMatrix::from_matrix(3, random_density(3, gen));
        for (const std::vector<int> &keep : {std::vector<int>{0}, {1}, {0, 2}, {1, 2}}) {
            const DensityMatrix r = partial_trace(rho, keep);
            EXPECT_NEAR(r.trace(), 1.0, 1e-10);
            EXPECT_LE((r.matrix() - r.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-10);
            EXPECT_NO_THROW(r.validate());
        }
    }
}

TEST(PartialTrace, RejectsBadKeepSets) {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(partial_trace(rho, {}), InvalidInput);
    EXPECT_THROW(partial_trace(rho, {2}), InvalidInput);
    EXPECT_THROW(partial_trace(rho, {-1}), InvalidInput);
    EXPECT_THROW(partial_trace(rho, {0, 0}), InvalidInput);
}

TEST(SpectralNorm, Examples) {
    EXPECT_DOUBLE_EQ(spectral_norm(PauliString("XI")), 1.0);
    EXPECT_NEAR(spectral_norm(DenseOperator(2, oracle::pauli_matrix("ZZ"))), 1.0, 1e-12);
    CMatrix k4 = CMatrix::Zero(16, 16);
    for (const auto &l : {"ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ", "IIZZ"}) k4 += oracle::pauli_matrix(l);
    EXPECT_NEAR(spectral_norm(DenseOperator(4, k4)), 6.0, 1e-12);
}

TEST(DensityMatrix, PurityAndExpectation) {
    const DensityMatrix pure = DensityMatrix::from_pure(StateVector::plus(2));
    EXPECT_NEAR(pure.purity(), 1.0, 1e-14);
    EXPECT_NEAR(DensityMatrix::maximally_mixed(2).purity(), 0.25, 1e-15);
    EXPECT_NEAR(pure.expectation(oracle::pauli_matrix("XI")), 1.0, 1e-14);
    EXPECT_NEAR(pure.expectation(oracle::pauli_matrix("ZI")), 0.0, 1e-14);
}
