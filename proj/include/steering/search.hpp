#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steering/settings.hpp"
#include "steering/steering_op.hpp"

namespace steering {

// Shared knobs for the randomized searches and certifiers. Results are a pure
// function of the config: rerunning with identical fields reproduces every
// report bit for bit.
struct SearchConfig {
    int multistarts = 24;
    int max_iterations = 2000;
    double convergence_tolerance = 1e-10;
    std::uint64_t seed = 0;
};

// One certification trial that missed its contract.
struct TrialFailure {
    std::size_t trial = 0;
    MeasurementSettings settings;
    double observed = 0.0;
    double expected = 0.0;
    double margin = 0.0;
    std::string note;
};

struct CertificationReport {
    std::size_t trials = 0;
    std::vector<TrialFailure> failures;
    double max_abs_deviation = 0.0;
    std::uint64_t seed = 0;
    std::size_t escalations = 0;  // optimizer restarts with a widened budget
};

// Exact maximum of F_n over all states: extreme eigenvalue (by magnitude) of
// the steering operator plus the witness eigenvector that attains it.
ViolationReport max_over_all_states(const MeasurementSettings& s);

// Numeric maximum of |<O>| over the maximally entangled family, by multistart
// simplex descent over the three U(xi) angles. Starts are stratified over the
// 3-torus (Halton points plus a seeded rotation), so the search is
// deterministic per seed.
struct MesOptimum {
    double value = 0.0;
    std::array<double, 3> xi{};
    bool converged = false;
    int converged_starts = 0;
};

MesOptimum max_over_mes(const MeasurementSettings& s, const SearchConfig& cfg);

// Random-trial certificate that the maximally entangled family attains the
// all-states maximum: delta = mu_max - mes value must stay below 1e-6. Bob
// directions are drawn orthonormal for n <= 3 and unconstrained for n > 3.
// A non-converged search is retried once with four times the multistarts.
CertificationReport certify_mes_optimality(std::size_t n, std::size_t trials,
                                           const SearchConfig& cfg);

// Random-trial certificate of the two-settings criterion: commuting Alice
// pairs stay at mu_max = 1 within 1e-9, non-commuting pairs violate, and the
// eigenvalue agrees with the closed form sqrt(1 + |a1 x a2|) on every trial.
CertificationReport certify_violation_iff_noncommuting(std::size_t trials, std::uint64_t seed);

// Random-trial certificate that the steering and CHSH verdicts coincide for
// two settings with orthonormal Bob. Knife-edge draws (either margin within
// ten times its decision tolerance) are resampled.
CertificationReport certify_steering_chsh_equivalence(std::size_t trials, std::uint64_t seed);

// Maximizes mu_max over Alice's two directions (four spherical angles) for a
// fixed orthonormal Bob pair. The maximum sits on the orthogonal-pair
// manifold at sqrt(2).
struct AliceOptimum {
    double mu_best = 0.0;
    std::array<UnitVector3, 2> alice{z_axis(), x_axis()};
    bool converged = false;
};

AliceOptimum optimize_alice_directions(const std::array<UnitVector3, 2>& bob,
                                       const SearchConfig& cfg);

}  // namespace steering
