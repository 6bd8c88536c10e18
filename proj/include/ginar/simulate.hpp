#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ginar/distributions.hpp"
#include "ginar/random.hpp"

namespace ginar {

using CountSeries = std::vector<std::int64_t>;

/// Z_t = sum_i (mu_i o Z_{t-i}) + eps_t, where mu_i o Z sums Z independent
/// draws from the lag-i counting distribution.
class GinarModel {
public:
    /// Throws ConfigError when counting is empty or the counting means
    /// violate stationarity.
    GinarModel(std::vector<CountDistributionSpec> counting, CountDistributionSpec innovation);

    std::size_t order() const noexcept { return counting_.size(); }
    const std::vector<CountDistributionSpec>& counting() const noexcept { return counting_; }
    const CountDistributionSpec& innovation() const noexcept { return innovation_; }

    /// (mu_1, ..., mu_p, mu_eps).
    std::vector<double> mean_vector() const;
    /// (sigma_1^2, ..., sigma_p^2, sigma_eps^2).
    std::vector<double> variance_vector() const;

private:
    std::vector<CountDistributionSpec> counting_;
    CountDistributionSpec innovation_;
};

struct SimConfig {
    std::size_t length = 0;
    std::size_t burn_in = 1000;
    std::uint64_t seed = 0;
};

/// For nonnegative means, 1 - mu_1 z - ... - mu_p z^p has no root in the
/// closed unit disk iff sum(mu) < 1, so the root condition reduces to a sum.
bool check_stationarity(std::span<const double> means);

/// Sum of `count` independent draws from spec; 0 when count is 0.
std::int64_t thin(const CountDistributionSpec& spec, std::int64_t count, RandomStream& rng);

/// Runs burn_in + length steps from p pre-sample values drawn from the
/// innovation law and returns the last `length` values. Throws ConfigError
/// when length < p + 2.
CountSeries simulate(const GinarModel& model, const SimConfig& config);

/// Same recursion driven by a caller-owned stream.
CountSeries simulate(const GinarModel& model, std::size_t length, std::size_t burn_in, RandomStream& rng);

}  // namespace ginar
