#pragma once

#include <functional>
#include <vector>

namespace steering {

// Derivative-free simplex minimizer (Nelder-Mead with standard coefficients:
// reflection 1, expansion 2, contraction 1/2, shrink 1/2).
struct NelderMeadOptions {
    int max_iterations = 2000;
    double tolerance = 1e-10;   // simplex diameter in the max norm
    double initial_step = 0.5;  // offset of the non-anchor vertices
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    int evaluations = 0;
};

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start,
                                      const NelderMeadOptions& options);

}  // namespace steering
