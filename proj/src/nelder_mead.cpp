#include "steering/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "steering/errors.hpp"

namespace steering {

namespace {

struct Vertex {
    std::vector<double> x;
    double value;
};

double diameter(const std::vector<Vertex>& simplex) {
    double worst = 0.0;
    const std::vector<double>& anchor = simplex.front().x;
    for (std::size_t v = 1; v < simplex.size(); ++v) {
        for (std::size_t i = 0; i < anchor.size(); ++i) {
            worst = std::max(worst, std::abs(simplex[v].x[i] - anchor[i]));
        }
    }
    return worst;
}

std::vector<double> blend(const std::vector<double>& a, double wa, const std::vector<double>& b,
                          double wb) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = wa * a[i] + wb * b[i];
    }
    return out;
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start,
                                      const NelderMeadOptions& options) {
    if (start.empty()) {
        throw ConstraintError("optimizer start point must be non-empty");
    }
    if (options.tolerance <= 0.0) {
        throw ConstraintError("optimizer tolerance must be positive");
    }
    const std::size_t dim = start.size();

    NelderMeadResult result;
    result.evaluations = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back({start, eval(start)});
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> x = start;
        x[i] += options.initial_step;
        simplex.push_back({x, eval(x)});
    }

    for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
        if (diameter(simplex) <= options.tolerance) {
            result.converged = true;
            break;
        }

        // Centroid of all vertices except the worst.
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t i = 0; i < dim; ++i) {
                centroid[i] += simplex[v].x[i];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(dim);
        }

        Vertex& worst = simplex.back();
        const std::vector<double> reflected = blend(centroid, 2.0, worst.x, -1.0);
        const double f_reflected = eval(reflected);

        if (f_reflected < simplex.front().value) {
            const std::vector<double> expanded = blend(centroid, 3.0, worst.x, -2.0);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                worst = {expanded, f_expanded};
            } else {
                worst = {reflected, f_reflected};
            }
            continue;
        }
        if (f_reflected < simplex[dim - 1].value) {
            worst = {reflected, f_reflected};
            continue;
        }

        if (f_reflected < worst.value) {
            const std::vector<double> outside = blend(centroid, 0.5, reflected, 0.5);
            const double f_outside = eval(outside);
            if (f_outside <= f_reflected) {
                worst = {outside, f_outside};
                continue;
            }
        } else {
            const std::vector<double> inside = blend(centroid, 0.5, worst.x, 0.5);
            const double f_inside = eval(inside);
            if (f_inside < worst.value) {
                worst = {inside, f_inside};
                continue;
            }
        }

        // Shrink toward the best vertex; it is never discarded, so the
        // best-so-far value is monotone over iterations.
        for (std::size_t v = 1; v <= dim; ++v) {
            simplex[v].x = blend(simplex.front().x, 0.5, simplex[v].x, 0.5);
            simplex[v].value = eval(simplex[v].x);
        }
    }

    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    if (!result.converged && diameter(simplex) <= options.tolerance) {
        result.converged = true;
    }
    result.x = simplex.front().x;
    result.value = simplex.front().value;
    return result;
}

}  // namespace steering
