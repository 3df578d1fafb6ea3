#include "grid_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace carousel {

namespace {

struct Workspace {
    int m;
    std::vector<double> g;  // g[k] = G(1 - k/M) = G((M-k)/M)

    explicit Workspace(const PickTimeDistribution& dist, int grid_size) : m(grid_size) {
        g.resize(m + 1);
        for (int k = 0; k <= m; ++k)
            g[k] = dist.cdf(static_cast<double>(m - k) / static_cast<double>(m));
    }

    // out_j = (1/M) [ sum_{k=0}^{M-j} g_{j+k} h_k - (g_j h_0 + g_M h_{M-j}) / 2 ]
    void apply_kernel(const std::vector<double>& h, std::vector<double>& out) const {
        const double inv_m = 1.0 / static_cast<double>(m);
        for (int j = 0; j <= m; ++j) {
            const int len = m - j;
            const double* gp = g.data() + j;
            const double* hp = h.data();
            double acc = 0.0;
            for (int k = 0; k <= len; ++k) acc += gp[k] * hp[k];
            acc -= 0.5 * (g[j] * h[0] + g[m] * h[len]);
            out[j] = acc * inv_m;
        }
    }

    double trapezoid(const std::vector<double>& v) const {
        double s = 0.0;
        for (double x : v) s += x;
        s -= 0.5 * (v.front() + v.back());
        return s / static_cast<double>(m);
    }

    double trapezoid_x(const std::vector<double>& v) const {
        double s = 0.0;
        for (int j = 0; j <= m; ++j) s += v[j] * static_cast<double>(j);
        s -= 0.5 * (v.back() * static_cast<double>(m));
        return s / (static_cast<double>(m) * static_cast<double>(m));
    }
};

void check_grid_size(int grid_size) {
    if (grid_size < 100) throw std::invalid_argument("grid_solve: grid size must be >= 100");
}

}  // namespace

double GridSolution::density_at(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("density_at: x outside [0,1]");
    const double t = x * grid_size;
    const int j = std::min(static_cast<int>(t), grid_size - 1);
    const double w = t - j;
    return density[j] * (1.0 - w) + density[j + 1] * w;
}

GridSolution grid_solve(const PickTimeDistribution& dist, int grid_size,
                        double tolerance, int max_iterations) {
    check_grid_size(grid_size);
    const Workspace ws(dist, grid_size);
    const int m = grid_size;

    // iterate the unnormalised shape h = G(1-x) + K h; then pi0 = 1/(1 + int h)
    std::vector<double> h(m + 1, 0.0), kh(m + 1, 0.0);
    std::vector<double> f(m + 1, 0.0), f_prev(m + 1, 0.0);
    double change = 0.0, prev_change = 0.0;
    int it = 0;
    for (; it < max_iterations; ++it) {
        ws.apply_kernel(h, kh);
        for (int j = 0; j <= m; ++j) h[j] = ws.g[j] + kh[j];
        const double pi0 = 1.0 / (1.0 + ws.trapezoid(h));
        prev_change = change;
        change = 0.0;
        for (int j = 0; j <= m; ++j) {
            f[j] = pi0 * h[j];
            change = std::max(change, std::abs(f[j] - f_prev[j]));
        }
        std::swap(f, f_prev);
        if (it > 0 && change < tolerance) break;
    }
    if (it == max_iterations) {
        const double ratio = prev_change > 0.0 ? change / prev_change : 0.0;
        throw std::runtime_error(
            "grid_solve: no convergence in " + std::to_string(max_iterations) +
            " iterations (last change " + std::to_string(change) + ", ratio " +
            std::to_string(ratio) + ")");
    }

    GridSolution sol;
    sol.grid_size = m;
    sol.density = std::move(f_prev);
    sol.pi0 = 1.0 / (1.0 + ws.trapezoid(h));
    sol.mean_wait = ws.trapezoid_x(sol.density);
    sol.throughput = 1.0 / (sol.mean_wait + dist.moments().mean);
    sol.iterations = it + 1;
    sol.final_change = change;
    return sol;
}

SeriesTerms series_partial_sums(const PickTimeDistribution& dist, int grid_size,
                                int terms) {
    check_grid_size(grid_size);
    if (terms < 1 || terms > 60)
        throw std::invalid_argument("series_partial_sums: term count must be in [1,60]");
    const Workspace ws(dist, grid_size);
    const int m = grid_size;

    // pi0 of the converged fixed point scales the partial sums
    const double pi0 = grid_solve(dist, grid_size).pi0;

    SeriesTerms out;
    out.grid_size = m;
    out.pi0 = pi0;
    std::vector<double> term = ws.g;  // first iterate: G(1-x)
    std::vector<double> sum(m + 1, 0.0), next(m + 1, 0.0);
    for (int k = 1; k <= terms; ++k) {
        if (k > 1) {
            ws.apply_kernel(term, next);
            std::swap(term, next);
        }
        double sup = 0.0;
        for (int j = 0; j <= m; ++j) {
            sum[j] += term[j];
            sup = std::max(sup, std::abs(term[j]));
        }
        out.term_sup.push_back(sup);
        std::vector<double> partial(m + 1);
        for (int j = 0; j <= m; ++j) partial[j] = pi0 * sum[j];
        out.partial.push_back(std::move(partial));
    }
    return out;
}

}  // namespace carousel
