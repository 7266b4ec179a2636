#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steering/errors.hpp"
#include "steering/nelder_mead.hpp"
#include "steering/rng.hpp"
#include "steering/search.hpp"
#include "steering/spectrum.hpp"
#include "steering/steering_op.hpp"
#include "test_helpers.hpp"

using namespace steering;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

MeasurementSettings zx_both() {
    return {{z_axis(), x_axis()}, {z_axis(), x_axis()}};
}

}  // namespace

TEST_CASE("exact state optimum comes from the operator spectrum") {
    const ViolationReport zx = max_over_all_states(zx_both());
    CHECK(zx.mu_max == doctest::Approx(kSqrt2).epsilon(1e-12));
    CHECK(zx.violable);
    CHECK(zx.witness_concurrence == doctest::Approx(1.0).epsilon(1e-9));

    const MeasurementSettings single({z_axis()}, {z_axis()});
    const ViolationReport one = max_over_all_states(single);
    CHECK(one.mu_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(one.violable);
    // the top eigenvalue is doubly degenerate: |00> and |11> span the cluster
    const SpectrumResult spec = hermitian_spectrum(build_steering_operator(single).matrix);
    REQUIRE(spec.clusters.size() == 2);
    CHECK(spec.clusters.back() == std::pair<std::size_t, std::size_t>{2, 4});

    const ViolationReport tilted =
        max_over_all_states({{z_axis(), UnitVector3(1.0, 0.0, 1.0)}, {z_axis(), x_axis()}});
    CHECK(tilted.mu_max == doctest::Approx(std::sqrt(1.0 + 1.0 / kSqrt2)).epsilon(1e-12));

    // spectrum (-sqrt3, 1/sqrt3, 1/sqrt3, 1/sqrt3): the magnitude maximum sits
    // at the negative end and is attained by the singlet
    const MeasurementSettings triad({x_axis(), y_axis(), z_axis()},
                                    {x_axis(), y_axis(), z_axis()});
    const ViolationReport swap_like = max_over_all_states(triad);
    CHECK(swap_like.mu_max == doctest::Approx(kSqrt3).epsilon(1e-12));
    CHECK(swap_like.violable);
    CHECK(swap_like.witness_concurrence == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(eval_fn(swap_like.witness_state, triad) - swap_like.mu_max) <= 1e-10);
}

TEST_CASE("witness state always reproduces the reported maximum") {
    RandomStream rng(401);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
        std::vector<UnitVector3> alice;
        std::vector<UnitVector3> bob;
        for (std::size_t k = 0; k < n; ++k) {
            alice.push_back(rng.unit_vector());
            bob.push_back(rng.unit_vector());
        }
        const MeasurementSettings s(alice, bob);
        const ViolationReport r = max_over_all_states(s);
        CHECK(std::abs(eval_fn(r.witness_state, s) - r.mu_max) <= 1e-10);
        CHECK(r.violable == (r.mu_max > 1.0 + 1e-9));
    }
}

TEST_CASE("simplex minimizer converges on standard objectives") {
    const auto quadratic = [](const std::vector<double>& x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 2.0) * (x[1] + 2.0);
    };
    const NelderMeadResult q = nelder_mead_minimize(quadratic, {0.0, 0.0}, {});
    CHECK(q.converged);
    CHECK(std::abs(q.x[0] - 1.0) <= 1e-6);
    CHECK(std::abs(q.x[1] + 2.0) <= 1e-6);
    CHECK(q.value <= 1e-10);
    CHECK(q.evaluations > 0);
    CHECK(q.value <= quadratic({0.0, 0.0}));

    const auto rosenbrock = [](const std::vector<double>& x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    NelderMeadOptions options;
    options.max_iterations = 5000;
    const NelderMeadResult r = nelder_mead_minimize(rosenbrock, {-1.2, 1.0}, options);
    CHECK(r.converged);
    CHECK(std::abs(r.x[0] - 1.0) <= 1e-4);
    CHECK(std::abs(r.x[1] - 1.0) <= 1e-4);

    NelderMeadOptions bad;
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(nelder_mead_minimize(quadratic, {0.0, 0.0}, bad), ConstraintError);
    CHECK_THROWS_AS(nelder_mead_minimize(quadratic, {}, {}), ConstraintError);
}

TEST_CASE("entangled-family search reaches the spectral optimum") {
    SearchConfig cfg;
    cfg.seed = 7;

    const MesOptimum zx = max_over_mes(zx_both(), cfg);
    CHECK(zx.value == doctest::Approx(kSqrt2).epsilon(1e-8));
    CHECK(zx.converged);
    CHECK(zx.converged_starts >= 1);

    const MesOptimum singlet = max_over_mes(
        {{x_axis(), y_axis(), z_axis()}, {-x_axis(), -y_axis(), -z_axis()}}, cfg);
    CHECK(singlet.value == doctest::Approx(kSqrt3).epsilon(1e-8));

    const MesOptimum one = max_over_mes({{z_axis()}, {z_axis()}}, cfg);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-9));

    // deterministic for a fixed config
    const MesOptimum again = max_over_mes(zx_both(), cfg);
    CHECK(again.value == zx.value);
    CHECK(again.xi == zx.xi);
    CHECK(again.converged_starts == zx.converged_starts);

    // the family is a subset of all states
    RandomStream rng(402);
    SearchConfig light = cfg;
    light.multistarts = 8;
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        std::vector<UnitVector3> alice;
        std::vector<UnitVector3> bob;
        for (std::size_t k = 0; k < n; ++k) {
            alice.push_back(rng.unit_vector());
            bob.push_back(rng.unit_vector());
        }
        const MeasurementSettings s(alice, bob);
        light.seed = 1000 + static_cast<std::uint64_t>(i);
        CHECK(max_over_mes(s, light).value <= max_over_all_states(s).mu_max + 1e-9);
    }

    SearchConfig bad;
    bad.convergence_tolerance = 0.0;
    CHECK_THROWS_AS(max_over_mes(zx_both(), bad), ConstraintError);
}

TEST_CASE("certifier accepts the commutator criterion on random trials") {
    const CertificationReport report = certify_violation_iff_noncommuting(60, 11);
    CHECK(report.trials == 60);
    CHECK(report.failures.empty());
    CHECK(report.max_abs_deviation <= 1e-9);

    const CertificationReport again = certify_violation_iff_noncommuting(60, 11);
    CHECK(again.max_abs_deviation == report.max_abs_deviation);
    CHECK(again.failures.size() == report.failures.size());

    CHECK_THROWS_AS(certify_violation_iff_noncommuting(0, 11), ConstraintError);
}

TEST_CASE("certifier confirms entangled states attain the maximum") {
    SearchConfig cfg;
    cfg.seed = 5;
    for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
        const CertificationReport report = certify_mes_optimality(n, 12, cfg);
        CHECK(report.trials == 12);
        CHECK(report.failures.empty());
        CHECK(report.max_abs_deviation <= 1e-6);
    }

    // the single-setting gap closes to eigensolver precision
    const CertificationReport one = certify_mes_optimality(1, 6, cfg);
    CHECK(one.max_abs_deviation <= 1e-9);

    const CertificationReport first = certify_mes_optimality(2, 10, cfg);
    const CertificationReport second = certify_mes_optimality(2, 10, cfg);
    CHECK(first.max_abs_deviation == second.max_abs_deviation);
    CHECK(first.escalations == second.escalations);

    CHECK_THROWS_AS(certify_mes_optimality(0, 5, cfg), ConstraintError);
    CHECK_THROWS_AS(certify_mes_optimality(2, 0, cfg), ConstraintError);
}

TEST_CASE("certifier confirms the steering and chsh verdicts agree") {
    const CertificationReport report = certify_steering_chsh_equivalence(60, 7);
    CHECK(report.trials == 60);
    CHECK(report.failures.empty());

    const CertificationReport again = certify_steering_chsh_equivalence(60, 7);
    CHECK(again.failures.size() == report.failures.size());
    CHECK(again.max_abs_deviation == report.max_abs_deviation);

    CHECK_THROWS_AS(certify_steering_chsh_equivalence(0, 7), ConstraintError);
}

TEST_CASE("alice-direction search attains the two-settings optimum") {
    SearchConfig cfg;
    cfg.seed = 3;

    const AliceOptimum zx = optimize_alice_directions({z_axis(), x_axis()}, cfg);
    CHECK(std::abs(zx.mu_best - kSqrt2) <= 1e-6);
    CHECK(std::abs(cross(zx.alice[0], zx.alice[1]).norm() - 1.0) <= 1e-5);

    const AliceOptimum xy = optimize_alice_directions({x_axis(), y_axis()}, cfg);
    CHECK(std::abs(xy.mu_best - kSqrt2) <= 1e-6);

    // a commuting pair evaluated directly sits strictly below the optimum
    const ViolationReport fixed =
        two_settings_violation_report({{z_axis(), z_axis()}, {z_axis(), x_axis()}});
    CHECK(fixed.mu_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fixed.mu_max < zx.mu_best);

    CHECK_THROWS_AS(optimize_alice_directions({z_axis(), UnitVector3(0.6, 0.0, 0.8)}, cfg),
                    ConstraintError);
}
