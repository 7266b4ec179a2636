#pragma once

#include <optional>
#include <string>
#include <variant>

#include "steering/complex_matrix.hpp"
#include "steering/settings.hpp"
#include "steering/steering_op.hpp"
#include "steering/two_qubit.hpp"

namespace steering::io {

// Parsed settings document. Directions are always available in both forms:
// a vector-form file gets its angles derived against the canonical triad and
// vice versa, so downstream commands treat the two forms identically.
struct SettingsDocument {
    MeasurementSettings settings;
    AngleSettings angles;
    bool orthonormal_requested = false;
};

SettingsDocument load_settings(const std::string& path);

// A state input is either a pure state or a density matrix (validated later
// at evaluation time).
using StateInput = std::variant<PureTwoQubitState, ComplexMatrix>;

StateInput load_state(const std::string& path);
StateInput preset_state(const std::string& name);

// Fixed-precision formatting for result documents: 17 significant digits,
// enough for an exact double round-trip.
std::string format_double(double v);

}  // namespace steering::io
