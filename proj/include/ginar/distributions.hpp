#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ginar/random.hpp"

namespace ginar {

// Nonnegative-integer distributions used as counting sequences and
// innovations. Each alternative validates its parameters on construction,
// so a constructed value is always a valid distribution.

struct Bernoulli {
    explicit Bernoulli(double prob);
    double prob;
};

struct Poisson {
    explicit Poisson(double rate);
    double rate;
};

/// Number of failures before the r-th success; r may be non-integer.
struct NegBinomial {
    NegBinomial(double successes, double prob);
    double successes;
    double prob;
};

/// Number of failures before the first success: support {0, 1, 2, ...},
/// mean (1 - prob) / prob.
struct Geometric {
    explicit Geometric(double prob);
    double prob;
};

/// Zhu–Joe extended thinning distribution with mean mu and dispersion gamma.
/// Drawn as B * G with B Bernoulli and G geometric on {1, 2, ...}.
struct ZJExtended {
    ZJExtended(double mu, double gamma);
    double mu;
    double gamma;

    /// Success probability of the Bernoulli factor, (1 - g) m / (1 - g m).
    double bernoulli_prob() const;
    /// Success probability of the geometric factor on {1, 2, ...},
    /// (1 - g) / (1 - g m); its mean is the reciprocal.
    double shifted_geometric_prob() const;
};

/// Bernoulli(pi) + Geometric(1 / (1 + xi)) convolution; mean pi + xi.
struct BerG {
    BerG(double pi, double xi);
    double pi;
    double xi;
};

using CountDistributionSpec = std::variant<Bernoulli, Poisson, NegBinomial, Geometric, ZJExtended, BerG>;

double dist_mean(const CountDistributionSpec& spec);
double dist_variance(const CountDistributionSpec& spec);
std::int64_t dist_sample(const CountDistributionSpec& spec, RandomStream& rng);

/// Lowercase family name, e.g. "berg".
std::string_view family_name(const CountDistributionSpec& spec);

/// Canonical text form accepted by parse_distribution, e.g. "berg(pi=0.2,xi=0.1)".
std::string to_string(const CountDistributionSpec& spec);

/// Parses `family(param=value,...)`. Family and parameter names are
/// case-insensitive. Recognized forms:
///   bernoulli(p=)            poisson(rate=) | poisson(lambda=)
///   negbinomial(r=,p=)       geometric(p=)
///   zj(mu=,gamma=)           berg(pi=,xi=)
/// Aliases: nb/negbin, zjextended. Throws InputError naming the offending token.
CountDistributionSpec parse_distribution(std::string_view text);

namespace sampling {

std::int64_t bernoulli(double prob, RandomStream& rng);
/// Sequential-search inversion for rate <= 30, PTRS transformed rejection above.
std::int64_t poisson(double rate, RandomStream& rng);
/// Support {0, 1, ...}; log_fail = log(1 - success probability).
std::int64_t geometric_from_log_fail(double log_fail, RandomStream& rng);
std::int64_t geometric(double prob, RandomStream& rng);
/// Gamma–Poisson mixture.
std::int64_t negative_binomial(double successes, double prob, RandomStream& rng);

}  // namespace sampling

}  // namespace ginar
