#include "steering/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "steering/errors.hpp"
#include "steering/io.hpp"
#include "steering/search.hpp"
#include "steering/spectrum.hpp"
#include "steering/tolerances.hpp"

namespace steering::cli {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void write_direction_list(std::ostream& out, const std::vector<UnitVector3>& list) {
    out << "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << "[" << io::format_double(list[i].x()) << ", " << io::format_double(list[i].y())
            << ", " << io::format_double(list[i].z()) << "]";
    }
    out << "]";
}

int cmd_eval(const std::string& state_path, const std::string& preset_name,
             const std::string& settings_path, std::ostream& out) {
    const io::SettingsDocument sd = io::load_settings(settings_path);
    const io::StateInput state =
        preset_name.empty() ? io::load_state(state_path) : io::preset_state(preset_name);
    const double f =
        std::visit([&sd](const auto& st) { return eval_fn(st, sd.settings); }, state);
    const ViolationReport vr = max_over_all_states(sd.settings);

    out << "{\"n\": " << sd.settings.count() << ", \"F_n\": " << io::format_double(f)
        << ", \"violated\": " << bool_str(f > 1.0 + tol::kDecision)
        << ", \"mu_max\": " << io::format_double(vr.mu_max)
        << ", \"witness_concurrence\": " << io::format_double(vr.witness_concurrence) << "}\n";
    return 0;
}

int cmd_spectrum(const std::string& settings_path, std::ostream& out) {
    const io::SettingsDocument sd = io::load_settings(settings_path);
    const SpectrumResult spec =
        hermitian_spectrum(build_steering_operator(sd.settings).matrix);
    const double mu =
        std::max(spec.eigenvalues.back(), -spec.eigenvalues.front());

    out << "{\"n\": " << sd.settings.count() << ", \"eigenvalues\": [";
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << io::format_double(spec.eigenvalues[i]);
    }
    out << "], \"mu_max\": " << io::format_double(mu);
    if (sd.settings.count() == 2 && sd.settings.bob_orthonormal()) {
        const double closed = mu_closed_form_f2(sd.settings);
        out << ", \"closed_form\": " << io::format_double(closed)
            << ", \"closed_form_diff\": " << io::format_double(std::abs(closed - mu));
    }
    out << "}\n";
    return 0;
}

void write_report(std::ostream& out, const std::string& target, const CertificationReport& report,
                  std::size_t n, const char* bob_sampling) {
    out << "{\"target\": \"" << target << "\", \"trials\": " << report.trials
        << ", \"seed\": " << report.seed;
    if (n > 0) {
        out << ", \"n\": " << n << ", \"bob_sampling\": \"" << bob_sampling << "\"";
    }
    out << ", \"failure_count\": " << report.failures.size()
        << ", \"max_abs_deviation\": " << io::format_double(report.max_abs_deviation)
        << ", \"escalations\": " << report.escalations << ", \"failures\": [";
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
        const TrialFailure& f = report.failures[i];
        if (i > 0) {
            out << ", ";
        }
        out << "{\"trial\": " << f.trial << ", \"observed\": " << io::format_double(f.observed)
            << ", \"expected\": " << io::format_double(f.expected)
            << ", \"margin\": " << io::format_double(f.margin) << ", \"note\": \"" << f.note
            << "\", \"alice\": ";
        write_direction_list(out, f.settings.alice());
        out << ", \"bob\": ";
        write_direction_list(out, f.settings.bob());
        out << "}";
    }
    out << "]}\n";
}

int cmd_verify(const std::string& target, std::size_t trials, std::size_t n, std::uint64_t seed,
               std::ostream& out) {
    CertificationReport report;
    const char* bob_sampling = "";
    if (target == "1") {
        report = certify_violation_iff_noncommuting(trials, seed);
        n = 0;
    } else if (target == "2") {
        SearchConfig cfg;
        cfg.seed = seed;
        report = certify_mes_optimality(n, trials, cfg);
        bob_sampling = n <= 3 ? "orthonormal" : "unconstrained";
    } else {
        report = certify_steering_chsh_equivalence(trials, seed);
        n = 0;
    }
    write_report(out, target, report, n, bob_sampling);
    return report.failures.empty() ? 0 : 1;
}

int cmd_sweep_alpha(const std::string& settings_path, std::size_t steps,
                    const std::string& out_path, std::ostream& out) {
    const io::SettingsDocument sd = io::load_settings(settings_path);
    const AlphaScanResult scan = alpha_argmax_scan(sd.angles, steps);

    std::ofstream file(out_path);
    if (!file) {
        throw ParseError("cannot open output file for writing: " + out_path);
    }
    file << "alpha,F_signed,F_abs\n";
    const double span = std::numbers::pi / 2.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const double alpha = span * static_cast<double>(i) / static_cast<double>(steps - 1);
        const double f = closed_form_fn(alpha, sd.angles);
        const double m = matrix_form_fn(alpha, sd.angles);
        if (std::abs(f - m) > tol::kCrossCheck) {
            throw std::logic_error("closed form and matrix path disagree during sweep");
        }
        file << io::format_double(alpha) << "," << io::format_double(f) << ","
             << io::format_double(std::abs(f)) << "\n";
    }
    const bool caveat = scan.k2 < 0.0 && !scan.flat;
    file << "# K1=" << io::format_double(scan.k1) << " K2=" << io::format_double(scan.k2)
         << " alpha_star=" << io::format_double(scan.alpha_star);
    if (caveat) {
        file << " sign_caveat=K2_negative_signed_max_at_alpha_0";
    }
    file << "\n";
    file.flush();
    if (!file.good()) {
        throw ParseError("failed while writing output file: " + out_path);
    }

    out << "{\"out\": \"" << out_path << "\", \"steps\": " << steps
        << ", \"K1\": " << io::format_double(scan.k1)
        << ", \"K2\": " << io::format_double(scan.k2)
        << ", \"alpha_star\": " << io::format_double(scan.alpha_star)
        << ", \"sign_caveat\": " << bool_str(caveat) << "}\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"n-settings linear steering operators for two-qubit systems"};
    app.name("steer");
    app.require_subcommand(1);

    std::string state_path;
    std::string preset_name;
    std::string settings_path;
    std::string target;
    std::string out_path;
    std::size_t trials = 0;
    std::size_t n_settings = 0;
    std::size_t steps = 0;
    std::uint64_t seed = 0;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate F_n for a state against settings");
    eval->add_option("--state", state_path, "state JSON file");
    eval->add_option("--preset", preset_name, "preset state name");
    eval->add_option("--settings", settings_path, "settings JSON file")->required();

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues of the steering operator");
    spectrum->add_option("--settings", settings_path, "settings JSON file")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run a randomized certification");
    verify->add_option("target", target, "certification target: 1, 2 or corollary2")
        ->required()
        ->check(CLI::IsMember({"1", "2", "corollary2"}));
    verify->add_option("--trials", trials, "number of random trials")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed")->required();
    verify->add_option("--n", n_settings, "settings count (target 2 only)")
        ->check(CLI::PositiveNumber);

    CLI::App* sweep =
        app.add_subcommand("sweep-alpha", "Tabulate the closed form over the Schmidt angle");
    sweep->add_option("--settings", settings_path, "settings JSON file")->required();
    sweep->add_option("--steps", steps, "grid size over [0, pi/2]")
        ->required()
        ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()));
    sweep->add_option("--out", out_path, "output CSV path")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("steer");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) {
            if (state_path.empty() == preset_name.empty()) {
                err << "error: eval needs exactly one of --state or --preset\n";
                return 2;
            }
            return cmd_eval(state_path, preset_name, settings_path, out);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(settings_path, out);
        }
        if (verify->parsed()) {
            if (target == "2" && n_settings == 0) {
                err << "error: verify 2 requires --n\n";
                return 2;
            }
            return cmd_verify(target, trials, n_settings, seed, out);
        }
        return cmd_sweep_alpha(settings_path, steps, out_path, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace steering::cli
