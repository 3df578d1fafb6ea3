#ifndef CAROUSEL_GRID_SOLVER_HPP
#define CAROUSEL_GRID_SOLVER_HPP

#include <vector>

#include "phase_type.hpp"

namespace carousel {

/// Fixed point of the discretized stationary equation on x_j = j/M.
struct GridSolution {
    int grid_size = 0;             // M
    std::vector<double> density;   // f_j, j = 0..M
    double pi0 = 0.0;
    double mean_wait = 0.0;        // trapezoidal integral of x f(x)
    double throughput = 0.0;
    int iterations = 0;
    double final_change = 0.0;     // sup-norm change of f at the last sweep

    double density_at(double x) const;  // linear interpolation on the grid
};

/// Successive substitution with trapezoidal quadrature; pi0 is recomputed
/// from the normalisation every sweep. Throws on non-convergence.
GridSolution grid_solve(const PickTimeDistribution& dist, int grid_size,
                        double tolerance = 1e-12, int max_iterations = 10000);

/// Kernel-iterate expansion: term_sup[k-1] is the sup-norm of the k-th
/// iterate on the grid, partial[k-1] the partial sum scaled by the
/// fixed-point pi0.
struct SeriesTerms {
    int grid_size = 0;
    double pi0 = 0.0;
    std::vector<double> term_sup;
    std::vector<std::vector<double>> partial;
};

SeriesTerms series_partial_sums(const PickTimeDistribution& dist, int grid_size,
                                int terms);

}  // namespace carousel

#endif
