#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raqprep/bounds/bounds.hpp"
#include "raqprep/sampling/pool.hpp"

using namespace raqprep;

namespace {

std::shared_ptr<const ProblemHamiltonian> z_hamiltonian() {
    return std::make_shared<const ProblemHamiltonian>(ProblemHamiltonian::from_diagonal(1, Eigen::Vector2d(1, -1)));
}

StateVector plus1() {
    return StateVector::plus(1);
}

ProblemHamiltonian single_edge() {
    return ising_from_graph(Graph(2, {{0, 1, 1.0}}));
}

RandomizationStrategy haar_strategy() {
    return {};
}

RandomizationStrategy clifford_strategy() {
    RandomizationStrategy s;
    s.kind = StrategyKind::two_design;
    s.design.flavor = TwoDesignFlavor::clifford;
    return s;
}

// Dense improvement and gradient for one Pauli direction.
struct DenseStep {
    double gradient;
    double improvement;
};

DenseStep dense_step(const oracle::Vec &psi, const oracle::Mat &a, const oracle::Mat &hp, double norm_hp) {
    const oracle::Mat comm = a * hp - hp * a;
    const double g = (oracle::C{0, 1} * psi.dot(comm * psi)).real();
    const double theta = -g / (4 * norm_hp);
    return {g, oracle::expect(psi, hp) - oracle::rotated_cost(psi, a, hp, theta)};
}

}  // namespace

TEST(Lipschitz, Constants) {
    EXPECT_DOUBLE_EQ(lipschitz_constant(*z_hamiltonian(), PauliString("X")), 4.0);
    const ProblemHamiltonian k4 = ising_from_graph(Graph::complete(4));
    EXPECT_DOUBLE_EQ(lipschitz_constant(k4, PauliString("XIII")), 24.0);
    EXPECT_DOUBLE_EQ(lipschitz_constant(*z_hamiltonian(), PauliString("X", 0.5)), 1.0);
}

TEST(Lipschitz, DominatesSampledSlopes) {
    RngStream rng(5, 0);
    const BoundReport r = check_lipschitz(plus1(), Direction::pauli(PauliString("Y")), PauliString("Y"), *z_hamiltonian(),
                                          1000, rng);
    EXPECT_TRUE(r.satisfied());
    EXPECT_LE(r.rhs, 4.0);
    // J'(theta) = -2 cos(2 theta) here, so sampled slopes approach the constant.
    EXPECT_GT(r.rhs, 3.5);
    for (int n = 1; n <= 3; ++n) {
        RngStream rr(11, static_cast<std::uint64_t>(n));
        const StateVector psi = random_state(n, rr);
        const PauliString x0 = PauliString::single(n, 0, Pauli::X);
        const Direction d = Direction::conjugated(std::make_shared<const HaarUnitary>(HaarUnitary::sample(n, rr)), x0);
        const ProblemHamiltonian h = n == 1 ? *z_hamiltonian() : ising_from_graph(Graph::complete(n));
        EXPECT_TRUE(check_lipschitz(psi, d, x0, h, 1000, rr).satisfied()) << n;
    }
}

TEST(StepBound, ClosedFormStep) {
    RunConfig cfg;
    cfg.hamiltonian = z_hamiltonian();
    RngStream shots(0, 0);
    const StepResult s = step_along(plus1(), Direction::pauli(PauliString("Y")), cfg, shots, 0);
    const BoundReport r = check_step_bound(s.record, *cfg.hamiltonian);
    EXPECT_NEAR(r.lhs, std::sin(1.0), 1e-12);
    EXPECT_NEAR(r.rhs, 0.5, 1e-12);
    EXPECT_TRUE(r.satisfied());
    EXPECT_NEAR(r.margin, std::sin(1.0) - 0.5, 1e-12);

    const StepResult zero = step_along(StateVector::basis(1, 0), Direction::pauli(PauliString("Y")), cfg, shots, 0);
    const BoundReport z = check_step_bound(zero.record, *cfg.hamiltonian);
    EXPECT_EQ(z.lhs, 0.0);
    EXPECT_EQ(z.rhs, 0.0);
    EXPECT_TRUE(z.satisfied());
}

TEST(StepBound, RejectsShotAndManualGammaRecords) {
    StepRecord rec;
    rec.gradient_mode = GradientMode::shots;
    rec.auto_gamma = true;
    EXPECT_THROW(check_step_bound(rec, *z_hamiltonian()), InvalidInput);
    rec.gradient_mode = GradientMode::exact;
    rec.auto_gamma = false;
    EXPECT_THROW(check_step_bound(rec, *z_hamiltonian()), InvalidInput);
}

TEST(StepBound, EveryStepOfLongRunsForAllStrategies) {
    const auto hp = std::make_shared<const ProblemHamiltonian>(ising_from_graph(Graph::complete(4)));
    for (StrategyKind kind : {StrategyKind::haar, StrategyKind::two_design, StrategyKind::pool}) {
        RunConfig cfg;
        cfg.hamiltonian = hp;
        cfg.strategy.kind = kind;
        if (kind == StrategyKind::pool) cfg.strategy.pool = all_paulis(4);
        cfg.max_steps = 2000;
        cfg.seed = 31;
        const RunTrace t = run_trial(cfg, 0);
        const BoundReport r = check_trace_step_bounds(t, *hp);
        EXPECT_TRUE(r.satisfied()) << to_string(kind);
        EXPECT_EQ(r.details.at("violations"), 0);
        EXPECT_EQ(r.sample_count, 2000u);
    }
}

TEST(StepCountBound, SingleStepClosedForm) {
    RunConfig cfg;
    cfg.hamiltonian = z_hamiltonian();
    RngStream shots(0, 0);
    const StepResult s = step_along(plus1(), Direction::pauli(PauliString("Y")), cfg, shots, 0);
    RunTrace t;
    t.hamiltonian_norm = 1.0;
    t.ground_energy = -1.0;
    t.J = {s.record.J_before, s.record.J_after};
    t.gradients = {s.record.gradient};
    const double eps = 1.0 - std::sin(1.0);
    const BoundReport r = m_upper_bound(t, eps);
    EXPECT_DOUBLE_EQ(r.rhs, 1.0);
    EXPECT_NEAR(r.details.at("C_eps"), 8.0 * (0.0 - (-1.0 + eps)), 1e-12);
    EXPECT_NEAR(r.details.at("min_gradient_squared"), 4.0, 1e-12);
    EXPECT_NEAR(r.lhs, 2.0 * std::sin(1.0), 1e-12);
    EXPECT_TRUE(r.satisfied());
}

TEST(StepCountBound, SingleEdgeRunsSatisfyBound) {
    RunConfig cfg;
    cfg.hamiltonian = std::make_shared<const ProblemHamiltonian>(single_edge());
    cfg.max_steps = 5000;
    cfg.trials = 100;
    cfg.seed = 99;
    cfg.record_steps = false;
    const auto traces = run_trials(cfg);
    int satisfied = 0;
    for (const auto &t : traces) satisfied += m_upper_bound(t, 0.01).satisfied();
    EXPECT_EQ(satisfied, 100);
}

TEST(StepCountBound, InconclusiveCases) {
    RunTrace zero;
    zero.hamiltonian_norm = 1.0;
    zero.ground_energy = -1.0;
    zero.J = {0.0, 0.0, 0.0};
    zero.gradients = {0.0, 0.0};
    EXPECT_EQ(m_upper_bound(zero, 0.01).status, BoundStatus::inconclusive);
    // Reaches epsilon but only through a zero-gradient step record.
    RunTrace flat = zero;
    flat.J = {0.0, -0.995};
    flat.gradients = {0.0};
    EXPECT_EQ(m_upper_bound(flat, 0.01).status, BoundStatus::inconclusive);
    RunTrace there = zero;
    there.J = {-1.0};
    there.gradients = {};
    const BoundReport r = m_upper_bound(there, 0.01);
    EXPECT_TRUE(r.satisfied());
    EXPECT_EQ(r.rhs, 0.0);
}

TEST(TwoDesignBound, ClosedForms) {
    EXPECT_NEAR(two_design_expected_bound(PauliString("X"), *z_hamiltonian(), plus1()), 1.0 / 6.0, 1e-15);
    EXPECT_EQ(two_design_expected_bound(PauliString("X"), *z_hamiltonian(), StateVector::basis(1, 1)), 0.0);
    EXPECT_NEAR(two_design_expected_bound(PauliString("XI"), single_edge(), StateVector::plus(2)), 1.0 / 15.0, 1e-15);
    EXPECT_NEAR(gradient_second_moment(PauliString("X"), *z_hamiltonian(), plus1()), 4.0 / 3.0, 1e-15);
}

TEST(TwoDesignBound, ClosedFormMatchesDenseOracle) {
    RngStream rng(3, 3);
    for (int n = 1; n <= 3; ++n) {
        const StateVector psi = random_state(n, rng);
        const ProblemHamiltonian hp = projector_hamiltonian(random_state(n, rng));
        const PauliString h = PauliString::single(n, n - 1, Pauli::Y);
        const oracle::Mat hm = oracle::pauli_matrix(h.label());
        const oracle::Mat hpm = hp.to_matrix();
        const double d = static_cast<double>(h.dim());
        const double var = oracle::expect(psi.amplitudes(), hpm * hpm) - std::pow(oracle::expect(psi.amplitudes(), hpm), 2);
        const double norm = hpm.jacobiSvd().singularValues()(0);
        EXPECT_NEAR(two_design_expected_bound(h, hp, psi), (hm * hm).trace().real() / (4 * norm) * var / (d * d - 1),
                    1e-12);
    }
}

TEST(TwoDesignBound, RejectsNonUnitOrTracefulGenerators) {
    EXPECT_THROW(two_design_expected_bound(PauliString("X", 0.5), *z_hamiltonian(), plus1()), InvalidInput);
    EXPECT_THROW(two_design_expected_bound(PauliString("I"), *z_hamiltonian(), plus1()), InvalidInput);
    EXPECT_THROW(two_design_expected_bound(PauliString("XI"), *z_hamiltonian(), plus1()), InvalidInput);
    EXPECT_THROW(verify_two_design_bound_mc(PauliString("X"), *z_hamiltonian(), plus1(), 999, haar_strategy(),
                                            RngStream(1, 0)),
                 InvalidInput);
}

TEST(TwoDesignBound, MonteCarloReferencePoint) {
    for (const RandomizationStrategy &s : std::vector<RandomizationStrategy>{haar_strategy(), clifford_strategy()}) {
        const TwoDesignCheck c =
            verify_two_design_bound_mc(PauliString("X"), *z_hamiltonian(), plus1(), 10000, s, RngStream(8, 0));
        EXPECT_TRUE(c.expected_improvement.satisfied());
        EXPECT_NEAR(c.expected_improvement.rhs, 1.0 / 6.0, 1e-15);
        EXPECT_GT(c.expected_improvement.lhs, 1.0 / 6.0);
        EXPECT_TRUE(c.second_moment.satisfied()) << c.second_moment.lhs << " vs " << c.second_moment.rhs;
        EXPECT_NEAR(c.second_moment.rhs, 4.0 / 3.0, 1e-15);
        EXPECT_EQ(c.second_moment.sample_count, 10000u);
    }
}

TEST(TwoDesignBound, EigenstateHasNoGradient) {
    const TwoDesignCheck c = verify_two_design_bound_mc(PauliString("X"), *z_hamiltonian(), StateVector::basis(1, 0),
                                                        1000, haar_strategy(), RngStream(8, 1));
    EXPECT_NEAR(c.second_moment.lhs, 0.0, 1e-20);
    EXPECT_TRUE(c.second_moment.satisfied());
    EXPECT_TRUE(c.expected_improvement.satisfied());
}

TEST(TwoDesignBound, MonteCarloAcrossSizes) {
    RngStream rng(12, 0);
    for (int n = 1; n <= 2; ++n) {
        const StateVector psi = random_state(n, rng);
        const ProblemHamiltonian hp = n == 1 ? *z_hamiltonian() : single_edge();
        for (const RandomizationStrategy &s : std::vector<RandomizationStrategy>{haar_strategy(), clifford_strategy()}) {
            const TwoDesignCheck c = verify_two_design_bound_mc(PauliString::single(n, 0, Pauli::X), hp, psi, 10000, s,
                                                                RngStream(40, static_cast<std::uint64_t>(n)), 2);
            EXPECT_TRUE(c.expected_improvement.satisfied()) << n << " " << c.expected_improvement.name;
            EXPECT_TRUE(c.second_moment.satisfied()) << n << " " << c.second_moment.name;
        }
    }
}

TEST(TwoDesignBound, ParallelMatchesSerial) {
    const auto a = verify_two_design_bound_mc(PauliString("X"), *z_hamiltonian(), plus1(), 1000, haar_strategy(),
                                              RngStream(4, 0), 1);
    const auto b = verify_two_design_bound_mc(PauliString("X"), *z_hamiltonian(), plus1(), 1000, haar_strategy(),
                                              RngStream(4, 0), 3);
    EXPECT_EQ(a.second_moment.lhs, b.second_moment.lhs);
    EXPECT_EQ(a.expected_improvement.lhs, b.expected_improvement.lhs);
}

TEST(PoolBound, SingleQubitPool) {
    const std::vector<PauliString> pool{PauliString("X"), PauliString("Y"), PauliString("Z")};
    const BoundReport r = pool_average_bound(pool, plus1(), *z_hamiltonian());
    EXPECT_NEAR(r.lhs, std::sin(1.0) / 3.0, 1e-12);
    EXPECT_NEAR(r.rhs, 1.0 / 6.0, 1e-12);
    EXPECT_TRUE(r.satisfied());
    EXPECT_EQ(r.sample_count, 3u);

    const std::vector<PauliString> z{PauliString("Z")};
    const BoundReport c = pool_average_bound(z, plus1(), *z_hamiltonian());
    EXPECT_EQ(c.lhs, 0.0);
    EXPECT_EQ(c.rhs, 0.0);
    EXPECT_TRUE(c.satisfied());
    EXPECT_THROW(pool_average_bound(std::vector<PauliString>{}, plus1(), *z_hamiltonian()), InvalidInput);
}

TEST(PoolBound, FullTwoQubitPoolMatchesDenseEnumeration) {
    const auto pool = all_paulis(2);
    ASSERT_EQ(pool.size(), 15u);
    RngStream rng(20, 0);
    const ProblemHamiltonian hp = ising_from_graph(Graph(2, {{0, 1, 0.7}}));
    const oracle::Mat hpm = hp.to_matrix();
    for (int i = 0; i < 20; ++i) {
        const StateVector psi = random_state(2, rng);
        double imp = 0, g2 = 0;
        for (const auto &p : pool) {
            const DenseStep s = dense_step(psi.amplitudes(), oracle::pauli_matrix(p.label()), hpm, 0.7);
            imp += s.improvement;
            g2 += s.gradient * s.gradient;
        }
        const BoundReport r = pool_average_bound(pool, psi, hp);
        EXPECT_NEAR(r.lhs, imp / 15, 1e-10);
        EXPECT_NEAR(r.rhs, g2 / (8 * 0.7 * 15), 1e-10);
        EXPECT_TRUE(r.satisfied());
        EXPECT_GT(r.margin, 0.0);
    }
}

TEST(BoundReport, FinalizeSemantics) {
    BoundReport r;
    r.lhs = 1.0;
    r.rhs = 1.0 + 1e-11;
    r.tolerance = 1e-10;
    EXPECT_TRUE(finalize(r).satisfied());
    r.tolerance = 0;
    EXPECT_EQ(finalize(r).status, BoundStatus::violated);
    r.kind = BoundKind::identity;
    r.rhs = 0.5;
    r.tolerance = 0.49;
    EXPECT_FALSE(finalize(r).satisfied());
    r.tolerance = 0.5;
    EXPECT_TRUE(finalize(r).satisfied());
    EXPECT_EQ(to_string(BoundStatus::inconclusive), "inconclusive");
}
