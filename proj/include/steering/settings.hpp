#pragma once

#include <cstddef>
#include <vector>

#include "steering/vec3.hpp"

namespace steering {

// Paired measurement directions: alice[i] with bob[i], equal lengths n >= 1.
// The Bob set is flagged orthonormal when n <= 3 and every pairwise dot
// product is below 1e-10 in magnitude; orthonormal sets cannot exist for
// n > 3, so the flag is false there.
class MeasurementSettings {
  public:
    MeasurementSettings(std::vector<UnitVector3> alice, std::vector<UnitVector3> bob);

    std::size_t count() const { return alice_.size(); }
    const std::vector<UnitVector3>& alice() const { return alice_; }
    const std::vector<UnitVector3>& bob() const { return bob_; }

    bool bob_orthonormal() const { return bob_orthonormal_; }
    // Largest |bob[i] . bob[j]| over i < j; 0 when n == 1.
    double bob_max_pair_dot() const { return bob_max_pair_dot_; }

  private:
    std::vector<UnitVector3> alice_;
    std::vector<UnitVector3> bob_;
    bool bob_orthonormal_;
    double bob_max_pair_dot_;
};

}  // namespace steering
