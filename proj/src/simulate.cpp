#include "ginar/simulate.hpp"

#include <numeric>
#include <sstream>

#include "ginar/errors.hpp"

namespace ginar {

GinarModel::GinarModel(std::vector<CountDistributionSpec> counting, CountDistributionSpec innovation)
    : counting_(std::move(counting)), innovation_(std::move(innovation)) {
    if (counting_.empty()) throw ConfigError("GINAR model needs at least one lag");
    std::vector<double> means;
    for (const auto& c : counting_) means.push_back(dist_mean(c));
    if (!check_stationarity(means)) {
        std::ostringstream msg;
        msg << "nonstationary GINAR model: counting means sum to "
            << std::accumulate(means.begin(), means.end(), 0.0) << " (must be < 1)";
        throw ConfigError(msg.str());
    }
}

std::vector<double> GinarModel::mean_vector() const {
    std::vector<double> out;
    for (const auto& c : counting_) out.push_back(dist_mean(c));
    out.push_back(dist_mean(innovation_));
    return out;
}

std::vector<double> GinarModel::variance_vector() const {
    std::vector<double> out;
    for (const auto& c : counting_) out.push_back(dist_variance(c));
    out.push_back(dist_variance(innovation_));
    return out;
}

bool check_stationarity(std::span<const double> means) {
    double sum = 0.0;
    for (double m : means) {
        if (!(m >= 0.0)) return false;
        sum += m;
    }
    return sum < 1.0;
}

std::int64_t thin(const CountDistributionSpec& spec, std::int64_t count, RandomStream& rng) {
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < count; ++j) total += dist_sample(spec, rng);
    return total;
}

CountSeries simulate(const GinarModel& model, std::size_t length, std::size_t burn_in, RandomStream& rng) {
    const std::size_t p = model.order();
    if (length < p + 2) {
        std::ostringstream msg;
        msg << "series length " << length << " too short for order " << p << " (need at least " << p + 2 << ")";
        throw ConfigError(msg.str());
    }
    const std::size_t total = p + burn_in + length;
    CountSeries path(total);
    for (std::size_t t = 0; t < p; ++t) path[t] = dist_sample(model.innovation(), rng);
    for (std::size_t t = p; t < total; ++t) {
        std::int64_t z = 0;
        for (std::size_t i = 0; i < p; ++i) z += thin(model.counting()[i], path[t - 1 - i], rng);
        path[t] = z + dist_sample(model.innovation(), rng);
    }
    return CountSeries(path.end() - static_cast<std::ptrdiff_t>(length), path.end());
}

CountSeries simulate(const GinarModel& model, const SimConfig& config) {
    RandomStream rng(config.seed);
    return simulate(model, config.length, config.burn_in, rng);
}

}  // namespace ginar
