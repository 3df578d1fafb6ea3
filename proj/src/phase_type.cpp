#include "phase_type.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace carousel {

namespace {

void check_weights(const std::vector<double>& w, const char* what) {
    if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty");
    double sum = 0.0;
    for (double x : w) {
        if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative or NaN entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + ": entries must sum to 1 (got " +
                                    std::to_string(sum) + ")");
}

void check_rate(double mu, const char* what) {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument(std::string(what) + ": rate must be positive and finite");
}

std::vector<double> cumulative(const std::vector<double>& w) {
    std::vector<double> c(w.size());
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i];
        c[i] = s;
    }
    return c;
}

}  // namespace

PickTimeDistribution PickTimeDistribution::erlang_mixture(double mu,
                                                          std::vector<double> alpha) {
    check_rate(mu, "erlang_mixture");
    check_weights(alpha, "erlang_mixture weights");
    bool any = false;
    for (double a : alpha) any = any || a > 0.0;
    if (!any) throw std::invalid_argument("erlang_mixture: all weights zero");
    PickTimeDistribution d;
    d.kind_ = DistKind::erlang_mixture;
    d.mu_ = mu;
    d.alpha_ = std::move(alpha);
    d.cum_ = cumulative(d.alpha_);
    return d;
}

PickTimeDistribution PickTimeDistribution::hyperexponential(std::vector<double> p,
                                                            std::vector<double> mu) {
    check_weights(p, "hyperexponential probabilities");
    if (mu.size() != p.size())
        throw std::invalid_argument("hyperexponential: p and mu length mismatch");
    for (double m : mu) check_rate(m, "hyperexponential");
    PickTimeDistribution d;
    d.kind_ = DistKind::hyperexponential;
    d.p_ = std::move(p);
    d.branch_mu_ = std::move(mu);
    d.cum_ = cumulative(d.p_);
    return d;
}

int PickTimeDistribution::effective_phases() const {
    if (kind_ != DistKind::erlang_mixture)
        throw std::logic_error("effective_phases: not an Erlang mixture");
    for (int n = static_cast<int>(alpha_.size()); n >= 1; --n)
        if (alpha_[n - 1] > 0.0) return n;
    return 1;  // unreachable: construction requires a positive weight
}

double PickTimeDistribution::cdf(double x) const {
    if (!(x >= 0.0)) throw std::invalid_argument("cdf: x must be nonnegative");
    if (kind_ == DistKind::hyperexponential) {
        double g = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i)
            g += p_[i] * -std::expm1(-branch_mu_[i] * x);
        return g;
    }
    // G(x) = 1 - e^{-mu x} sum_j tail_j (mu x)^j / j!  with tail_j = sum_{n>j} alpha_n;
    // the Poisson terms are generated by the stable upward recurrence.
    const double mx = mu_ * x;
    double term = std::exp(-mx);  // Poisson(mx) pmf at 0
    double acc = 0.0;
    double tail = 1.0;
    const int N = static_cast<int>(alpha_.size());
    for (int j = 0; j < N; ++j) {
        if (j > 0) term *= mx / static_cast<double>(j);
        acc += tail * term;
        tail -= alpha_[j];
    }
    double g = 1.0 - acc;
    if (g < 0.0) g = 0.0;
    if (g > 1.0) g = 1.0;
    return g;
}

MomentSummary PickTimeDistribution::moments() const {
    double m1 = 0.0, m2 = 0.0;
    if (kind_ == DistKind::erlang_mixture) {
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            const double n = static_cast<double>(i + 1);
            m1 += alpha_[i] * n / mu_;
            m2 += alpha_[i] * n * (n + 1.0) / (mu_ * mu_);
        }
    } else {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            m1 += p_[i] / branch_mu_[i];
            m2 += 2.0 * p_[i] / (branch_mu_[i] * branch_mu_[i]);
        }
    }
    return {m1, (m2 - m1 * m1) / (m1 * m1)};
}

double PickTimeDistribution::sample(Rng& rng) const {
    const int branch = rng.categorical(cum_);
    if (kind_ == DistKind::erlang_mixture) return rng.erlang(branch + 1, mu_);
    return rng.exponential(branch_mu_[branch]);
}

std::string PickTimeDistribution::describe() const {
    std::ostringstream os;
    if (kind_ == DistKind::erlang_mixture) {
        os << "erlang_mixture(mu=" << mu_ << ", alpha=[";
        for (std::size_t i = 0; i < alpha_.size(); ++i)
            os << (i ? "," : "") << alpha_[i];
        os << "])";
    } else {
        os << "hyperexponential(p=[";
        for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
        os << "], mu=[";
        for (std::size_t i = 0; i < branch_mu_.size(); ++i)
            os << (i ? "," : "") << branch_mu_[i];
        os << "])";
    }
    return os.str();
}

PickTimeDistribution fit_mixed_erlang(const MomentSummary& target) {
    if (!(target.mean > 0.0))
        throw std::invalid_argument("fit_mixed_erlang: mean must be positive");
    if (!(target.scv > 0.0) || target.scv > 1.0)
        throw std::invalid_argument(
            "fit_mixed_erlang: requires 0 < scv <= 1; use the hyperexponential fit for scv > 1");
    if (target.scv == 1.0)
        return PickTimeDistribution::erlang_mixture(1.0 / target.mean, {1.0});
    // n chosen so that 1/n <= scv <= 1/(n-1); the boundary scv = 1/n takes the
    // smaller n, which makes p = 0 (a pure Erlang)
    int n = 2;
    while (1.0 / static_cast<double>(n) > target.scv) ++n;
    const double c2 = target.scv;
    const double nn = static_cast<double>(n);
    const double disc = nn * (1.0 + c2) - nn * nn * c2;
    const double p = (nn * c2 - std::sqrt(disc)) / (1.0 + c2);
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
        throw std::runtime_error("fit_mixed_erlang: weight outside [0,1] (p=" +
                                 std::to_string(p) + ")");
    const double mu = (nn - p) / target.mean;
    std::vector<double> alpha(n, 0.0);
    alpha[n - 2] = std::min(std::max(p, 0.0), 1.0);
    alpha[n - 1] = 1.0 - alpha[n - 2];
    return PickTimeDistribution::erlang_mixture(mu, std::move(alpha));
}

PickTimeDistribution fit_hyperexponential(const MomentSummary& target) {
    if (!(target.mean > 0.0))
        throw std::invalid_argument("fit_hyperexponential: mean must be positive");
    if (!(target.scv >= 1.0))
        throw std::invalid_argument(
            "fit_hyperexponential: requires scv >= 1; use the mixed-Erlang fit for scv < 1");
    const double c2 = target.scv;
    const double p1 = 0.5 * (1.0 + std::sqrt((c2 - 1.0) / (c2 + 1.0)));
    const double p2 = 1.0 - p1;
    return PickTimeDistribution::hyperexponential(
        {p1, p2}, {2.0 * p1 / target.mean, 2.0 * p2 / target.mean});
}

PickTimeDistribution fit_two_moment(const MomentSummary& target) {
    if (!(target.scv > 0.0))
        throw std::invalid_argument("fit_two_moment: scv must be positive");
    return target.scv <= 1.0 ? fit_mixed_erlang(target) : fit_hyperexponential(target);
}

}  // namespace carousel
