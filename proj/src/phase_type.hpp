#ifndef CAROUSEL_PHASE_TYPE_HPP
#define CAROUSEL_PHASE_TYPE_HPP

#include <string>
#include <vector>

#include "rng.hpp"

namespace carousel {

struct MomentSummary {
    double mean;  // time units (rotation time = 1)
    double scv;   // squared coefficient of variation
};

enum class DistKind { erlang_mixture, hyperexponential };

/// Pick-time law: either a common-rate Erlang mixture (weight alpha[i] on
/// i+1 phases) or a hyperexponential (branch probabilities p, branch rates mu).
/// Immutable after construction; all parameters validated up front.
class PickTimeDistribution {
public:
    static PickTimeDistribution erlang_mixture(double mu, std::vector<double> alpha);
    static PickTimeDistribution hyperexponential(std::vector<double> p,
                                                 std::vector<double> mu);

    DistKind kind() const { return kind_; }
    bool is_erlang_mixture() const { return kind_ == DistKind::erlang_mixture; }

    // Erlang-mixture accessors
    double rate() const { return mu_; }
    const std::vector<double>& alpha() const { return alpha_; }
    /// largest phase count with positive weight
    int effective_phases() const;

    // hyperexponential accessors
    const std::vector<double>& branch_p() const { return p_; }
    const std::vector<double>& branch_mu() const { return branch_mu_; }

    double cdf(double x) const;
    MomentSummary moments() const;
    double sample(Rng& rng) const;

    std::string describe() const;

private:
    PickTimeDistribution() = default;
    DistKind kind_ = DistKind::erlang_mixture;
    double mu_ = 0.0;                  // erlang mixture rate
    std::vector<double> alpha_;        // erlang mixture weights (phase i+1)
    std::vector<double> p_;            // hyperexponential branch probabilities
    std::vector<double> branch_mu_;    // hyperexponential branch rates
    std::vector<double> cum_;          // cumulative branch/phase weights for sampling
};

/// Two-moment fit to a mixture p Erl(mu,n-1) + (1-p) Erl(mu,n); requires scv <= 1.
PickTimeDistribution fit_mixed_erlang(const MomentSummary& target);
/// Balanced-means two-branch hyperexponential fit; requires scv >= 1.
PickTimeDistribution fit_hyperexponential(const MomentSummary& target);
/// Dispatch by the scv threshold: mixed Erlang for scv <= 1, else hyperexponential.
PickTimeDistribution fit_two_moment(const MomentSummary& target);

}  // namespace carousel

#endif
