#include "steering/search.hpp"

#include <cmath>
#include <numbers>

#include "steering/errors.hpp"
#include "steering/nelder_mead.hpp"
#include "steering/rng.hpp"
#include "steering/spectrum.hpp"
#include "steering/tolerances.hpp"

namespace steering {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_config(const SearchConfig& cfg) {
    if (cfg.multistarts < 1) {
        throw ConstraintError("search config requires at least one start");
    }
    if (cfg.max_iterations < 1) {
        throw ConstraintError("search config requires a positive iteration budget");
    }
    if (cfg.convergence_tolerance <= 0.0) {
        throw ConstraintError("search config requires a positive convergence tolerance");
    }
}

double frac(double x) { return x - std::floor(x); }

// Stratified start points on the d-torus: Halton points under a seeded
// rotation. The rotation decorrelates seeds; the Halton base grid keeps the
// starts spread out for any count.
std::vector<std::vector<double>> torus_starts(int count, std::size_t dim, std::uint64_t seed) {
    static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13};
    RandomStream rng(seed);
    std::vector<double> shift(dim);
    for (double& s : shift) {
        s = rng.uniform();
    }
    std::vector<std::vector<double>> starts;
    starts.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        std::vector<double> x(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = kTwoPi * frac(halton(static_cast<std::uint64_t>(k) + 1, kBases[j]) + shift[j]);
        }
        starts.push_back(std::move(x));
    }
    return starts;
}

struct MultistartOutcome {
    NelderMeadResult best;
    int converged_starts = 0;
};

MultistartOutcome multistart_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::size_t dim, const SearchConfig& cfg,
                                      std::uint64_t start_seed) {
    const NelderMeadOptions options{cfg.max_iterations, cfg.convergence_tolerance, 0.5};
    MultistartOutcome outcome;
    bool have_best = false;
    for (const std::vector<double>& start : torus_starts(cfg.multistarts, dim, start_seed)) {
        NelderMeadResult r = nelder_mead_minimize(f, start, options);
        if (r.converged) {
            ++outcome.converged_starts;
        }
        if (!have_best || r.value < outcome.best.value ||
            (r.value == outcome.best.value && r.converged && !outcome.best.converged)) {
            outcome.best = std::move(r);
            have_best = true;
        }
    }
    return outcome;
}

MeasurementSettings random_settings(RandomStream& rng, std::size_t n) {
    std::vector<UnitVector3> alice;
    alice.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        alice.push_back(rng.unit_vector());
    }
    std::vector<UnitVector3> bob;
    if (n <= 3) {
        bob = random_orthonormal_set(rng, n);
    } else {
        bob.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            bob.push_back(rng.unit_vector());
        }
    }
    return {std::move(alice), std::move(bob)};
}

}  // namespace

ViolationReport max_over_all_states(const MeasurementSettings& s) {
    const SpectrumResult spec = hermitian_spectrum(build_steering_operator(s).matrix);
    const std::size_t pick = (-spec.eigenvalues.front() > spec.eigenvalues.back())
                                 ? 0
                                 : spec.eigenvalues.size() - 1;
    std::array<Complex, 4> amp{};
    for (std::size_t r = 0; r < 4; ++r) {
        amp[r] = spec.eigenvectors(r, pick);
    }
    ViolationReport report;
    report.mu_max = std::abs(spec.eigenvalues[pick]);
    report.violable = report.mu_max > 1.0 + tol::kDecision;
    report.witness_state = phase_normalized(PureTwoQubitState{amp});
    report.witness_concurrence = concurrence(report.witness_state);
    return report;
}

MesOptimum max_over_mes(const MeasurementSettings& s, const SearchConfig& cfg) {
    validate_config(cfg);
    const ComplexMatrix op = build_steering_operator(s).matrix;
    const auto objective = [&op](const std::vector<double>& x) {
        const PureTwoQubitState psi = mes_from_parameters({x[0], x[1], x[2]});
        return -std::abs(expectation_value(op, psi).real());
    };
    const MultistartOutcome outcome =
        multistart_minimize(objective, 3, cfg, substream_seed(cfg.seed, 0x6D6573));
    MesOptimum best;
    best.value = -outcome.best.value;
    best.xi = {outcome.best.x[0], outcome.best.x[1], outcome.best.x[2]};
    best.converged = outcome.best.converged;
    best.converged_starts = outcome.converged_starts;
    return best;
}

CertificationReport certify_mes_optimality(std::size_t n, std::size_t trials,
                                           const SearchConfig& cfg) {
    validate_config(cfg);
    if (n < 1 || trials < 1) {
        throw ConstraintError("certification requires n >= 1 and trials >= 1");
    }
    CertificationReport report;
    report.trials = trials;
    report.seed = cfg.seed;
    for (std::size_t t = 0; t < trials; ++t) {
        RandomStream rng(substream_seed(cfg.seed, t));
        const MeasurementSettings s = random_settings(rng, n);
        const double mu = max_over_all_states(s).mu_max;

        SearchConfig trial_cfg = cfg;
        trial_cfg.seed = substream_seed(cfg.seed, 0x100000 + t);
        MesOptimum mes = max_over_mes(s, trial_cfg);
        if (!mes.converged) {
            trial_cfg.multistarts *= 4;
            mes = max_over_mes(s, trial_cfg);
            ++report.escalations;
        }

        const double delta = mu - mes.value;
        report.max_abs_deviation = std::max(report.max_abs_deviation, delta);
        if (delta > tol::kOptimizerGap) {
            report.failures.push_back(
                {t, s, mes.value, mu, delta, "maximally entangled search fell short of mu_max"});
        }
    }
    return report;
}

CertificationReport certify_violation_iff_noncommuting(std::size_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw ConstraintError("certification requires trials >= 1");
    }
    CertificationReport report;
    report.trials = trials;
    report.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        RandomStream rng(substream_seed(seed, t));
        std::vector<UnitVector3> bob = random_orthonormal_set(rng, 2);

        const bool commuting = (t % 2 == 1);
        const UnitVector3 a1 = rng.unit_vector();
        UnitVector3 a2 = a1;
        if (commuting) {
            if (rng.uniform() < 0.5) {
                a2 = -a2;
            }
        } else {
            do {
                a2 = rng.unit_vector();
            } while (cross(a1, a2).norm() <= 1e-3);
        }

        const MeasurementSettings s{{a1, a2}, std::move(bob)};
        const ViolationReport vr = two_settings_violation_report(s);
        const double closed = mu_closed_form_f2(s);

        const double closed_dev = std::abs(vr.mu_max - closed);
        report.max_abs_deviation = std::max(report.max_abs_deviation, closed_dev);
        if (closed_dev > tol::kDecision) {
            report.failures.push_back(
                {t, s, vr.mu_max, closed, closed_dev, "eigenvalue disagrees with closed form"});
        }
        if (commuting) {
            const double dev = std::abs(vr.mu_max - 1.0);
            report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
            if (dev > tol::kDecision || vr.violable) {
                report.failures.push_back(
                    {t, s, vr.mu_max, 1.0, dev, "commuting pair must not violate"});
            }
        } else {
            const double shortfall = (1.0 + tol::kDecision) - vr.mu_max;
            if (shortfall > 0.0 || !vr.violable) {
                report.max_abs_deviation = std::max(report.max_abs_deviation, shortfall);
                report.failures.push_back({t, s, vr.mu_max, 1.0 + tol::kDecision, shortfall,
                                           "non-commuting pair must violate"});
            }
        }
    }
    return report;
}

CertificationReport certify_steering_chsh_equivalence(std::size_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw ConstraintError("certification requires trials >= 1");
    }
    CertificationReport report;
    report.trials = trials;
    report.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        RandomStream rng(substream_seed(seed, t));
        // Resample knife-edge draws: a verdict within ten times its decision
        // tolerance of the threshold would test fp luck, not the criterion.
        for (int attempt = 0; attempt < 100; ++attempt) {
            std::vector<UnitVector3> bob = random_orthonormal_set(rng, 2);
            const UnitVector3 a1 = rng.unit_vector();
            const UnitVector3 a2 = rng.unit_vector();
            const MeasurementSettings s{{a1, a2}, std::move(bob)};
            const SteeringChshVerdict v = steering_chsh_predicates(s);
            if (std::abs(v.mu_max - (1.0 + tol::kDecision)) < 10.0 * tol::kDecision ||
                std::abs(v.chsh_value - (2.0 + tol::kDecision)) < 10.0 * tol::kDecision) {
                continue;
            }
            if (v.steering_violable != v.chsh_violable) {
                report.max_abs_deviation = 1.0;
                report.failures.push_back({t, s, v.chsh_violable ? 1.0 : 0.0,
                                           v.steering_violable ? 1.0 : 0.0, 1.0,
                                           "steering and CHSH verdicts disagree"});
            }
            break;
        }
    }
    return report;
}

AliceOptimum optimize_alice_directions(const std::array<UnitVector3, 2>& bob,
                                       const SearchConfig& cfg) {
    validate_config(cfg);
    if (std::abs(dot(bob[0], bob[1])) >= tol::kOrthonormal) {
        throw ConstraintError("alice-direction search requires an orthonormal bob pair");
    }
    const std::vector<UnitVector3> bob_list{bob[0], bob[1]};
    const auto objective = [&bob_list](const std::vector<double>& x) {
        const MeasurementSettings s{{from_spherical(x[0], x[1]), from_spherical(x[2], x[3])},
                                    bob_list};
        return -max_over_all_states(s).mu_max;
    };
    const MultistartOutcome outcome =
        multistart_minimize(objective, 4, cfg, substream_seed(cfg.seed, 0xA11CE));
    AliceOptimum best;
    best.mu_best = -outcome.best.value;
    best.alice = {from_spherical(outcome.best.x[0], outcome.best.x[1]),
                  from_spherical(outcome.best.x[2], outcome.best.x[3])};
    best.converged = outcome.best.converged;
    return best;
}

}  // namespace steering
