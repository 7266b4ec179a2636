#include "steering/io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "steering/angles.hpp"
#include "steering/errors.hpp"

namespace steering::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

double number_at(const json& j, const std::string& context) {
    if (!j.is_number()) {
        throw ParseError(context + " must be a number");
    }
    return j.get<double>();
}

UnitVector3 parse_direction(const json& j, const std::string& context) {
    if (!j.is_array() || j.size() != 3) {
        throw ParseError(context + " must be an array of 3 numbers");
    }
    return {number_at(j[0], context), number_at(j[1], context), number_at(j[2], context)};
}

std::vector<UnitVector3> parse_direction_list(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("'" + key + "' must be a non-empty array of 3-vectors");
    }
    std::vector<UnitVector3> out;
    out.reserve(j.size());
    for (const json& v : j) {
        out.push_back(parse_direction(v, "'" + key + "' entry"));
    }
    return out;
}

std::vector<ObservableAngles> parse_angle_list(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("'" + key + "' must be a non-empty array of {theta, phi} objects");
    }
    std::vector<ObservableAngles> out;
    out.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_object() || !v.contains("theta") || !v.contains("phi")) {
            throw ParseError("'" + key + "' entries must be objects with 'theta' and 'phi'");
        }
        out.push_back({number_at(v["theta"], "'theta'"), number_at(v["phi"], "'phi'")});
    }
    return out;
}

Complex parse_complex(const json& j, const std::string& context) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(context + " must be a [re, im] pair");
    }
    return {number_at(j[0], context), number_at(j[1], context)};
}

}  // namespace

SettingsDocument load_settings(const std::string& path) {
    const json doc = load_json(path);
    if (!doc.is_object()) {
        throw ParseError("settings document must be a JSON object");
    }
    const bool vector_form = doc.contains("alice") || doc.contains("bob");
    const bool angle_form = doc.contains("alice_angles") || doc.contains("bob_angles");
    if (vector_form == angle_form) {
        throw ParseError(
            "settings must use exactly one form: alice/bob vectors or "
            "alice_angles/bob_angles");
    }

    const OrthogonalTriad& triad = canonical_triad();
    std::vector<UnitVector3> alice;
    std::vector<UnitVector3> bob;
    AngleSettings angles;
    if (vector_form) {
        if (!doc.contains("alice") || !doc.contains("bob")) {
            throw ParseError("vector-form settings need both 'alice' and 'bob'");
        }
        alice = parse_direction_list(doc["alice"], "alice");
        bob = parse_direction_list(doc["bob"], "bob");
        for (const UnitVector3& v : alice) {
            angles.alice.push_back(angles_from_direction(v, triad));
        }
        for (const UnitVector3& v : bob) {
            angles.bob.push_back(angles_from_direction(v, triad));
        }
    } else {
        if (!doc.contains("alice_angles") || !doc.contains("bob_angles")) {
            throw ParseError("angle-form settings need both 'alice_angles' and 'bob_angles'");
        }
        angles.alice = parse_angle_list(doc["alice_angles"], "alice_angles");
        angles.bob = parse_angle_list(doc["bob_angles"], "bob_angles");
        for (const ObservableAngles& a : angles.alice) {
            alice.push_back(direction_from_angles(a, triad));
        }
        for (const ObservableAngles& a : angles.bob) {
            bob.push_back(direction_from_angles(a, triad));
        }
    }

    SettingsDocument out{MeasurementSettings{std::move(alice), std::move(bob)}, std::move(angles),
                         false};

    if (doc.contains("bob_orthonormal")) {
        if (!doc["bob_orthonormal"].is_boolean()) {
            throw ParseError("'bob_orthonormal' must be a boolean");
        }
        out.orthonormal_requested = doc["bob_orthonormal"].get<bool>();
    }
    if (out.orthonormal_requested) {
        if (out.settings.count() > 3) {
            throw ConstraintError(
                "orthonormal Bob directions were requested, but no orthonormal set exists "
                "for n > 3");
        }
        if (!out.settings.bob_orthonormal()) {
            throw ConstraintError(
                "orthonormal Bob directions were requested, but the supplied set has max "
                "|dot| = " +
                std::to_string(out.settings.bob_max_pair_dot()));
        }
    }
    return out;
}

StateInput load_state(const std::string& path) {
    const json doc = load_json(path);
    if (!doc.is_object() || !doc.contains("kind")) {
        throw ParseError("state document must be an object with a 'kind' key");
    }
    const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";

    if (kind == "pure") {
        if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array() ||
            doc["amplitudes"].size() != 4) {
            throw ParseError("pure state needs 'amplitudes': 4 [re, im] pairs");
        }
        std::array<Complex, 4> amp{};
        for (std::size_t i = 0; i < 4; ++i) {
            amp[i] = parse_complex(doc["amplitudes"][i], "'amplitudes' entry");
        }
        return PureTwoQubitState{amp};
    }
    if (kind == "schmidt") {
        if (!doc.contains("alpha")) {
            throw ParseError("schmidt state needs 'alpha'");
        }
        const double alpha = number_at(doc["alpha"], "'alpha'");
        if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2.0)) {
            throw ConstraintError("schmidt 'alpha' must lie in [0, pi/2]");
        }
        return PureTwoQubitState::schmidt_state(alpha);
    }
    if (kind == "density") {
        if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != 4) {
            throw ParseError("density state needs 'matrix': 4 rows of 4 [re, im] pairs");
        }
        ComplexMatrix rho(4);
        for (std::size_t r = 0; r < 4; ++r) {
            const json& row = doc["matrix"][r];
            if (!row.is_array() || row.size() != 4) {
                throw ParseError("density 'matrix' rows must hold 4 [re, im] pairs");
            }
            for (std::size_t c = 0; c < 4; ++c) {
                rho(r, c) = parse_complex(row[c], "'matrix' entry");
            }
        }
        return rho;
    }
    if (kind == "preset") {
        if (!doc.contains("name") || !doc["name"].is_string()) {
            throw ParseError("preset state needs a 'name' string");
        }
        return preset_state(doc["name"].get<std::string>());
    }
    throw ParseError("unknown state kind: '" + kind + "'");
}

StateInput preset_state(const std::string& name) {
    if (name == "phi_plus") {
        return PureTwoQubitState::phi_plus();
    }
    if (name == "phi_minus") {
        return PureTwoQubitState::phi_minus();
    }
    if (name == "psi_plus") {
        return PureTwoQubitState::psi_plus();
    }
    if (name == "psi_minus") {
        return PureTwoQubitState::psi_minus();
    }
    if (name == "zero_zero") {
        return PureTwoQubitState::zero_zero();
    }
    throw ParseError("unknown preset state: '" + name + "'");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace steering::io
