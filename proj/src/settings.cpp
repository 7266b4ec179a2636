#include "steering/settings.hpp"

#include <cmath>

#include "steering/errors.hpp"
#include "steering/tolerances.hpp"

namespace steering {

MeasurementSettings::MeasurementSettings(std::vector<UnitVector3> alice,
                                         std::vector<UnitVector3> bob)
    : alice_(std::move(alice)), bob_(std::move(bob)) {
    if (alice_.empty()) {
        throw ConstraintError("measurement settings require at least one direction pair");
    }
    if (alice_.size() != bob_.size()) {
        throw ConstraintError("alice and bob direction lists must have equal length");
    }
    bob_max_pair_dot_ = 0.0;
    for (std::size_t i = 0; i < bob_.size(); ++i) {
        for (std::size_t j = i + 1; j < bob_.size(); ++j) {
            bob_max_pair_dot_ = std::max(bob_max_pair_dot_, std::abs(dot(bob_[i], bob_[j])));
        }
    }
    bob_orthonormal_ = bob_.size() <= 3 && bob_max_pair_dot_ < tol::kOrthonormal;
}

}  // namespace steering
