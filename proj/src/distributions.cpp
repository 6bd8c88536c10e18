#include "ginar/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "ginar/errors.hpp"

namespace ginar {

namespace {

void require(bool ok, const char* family, const char* message) {
    if (!ok) throw ConfigError(std::string(family) + ": " + message);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

Bernoulli::Bernoulli(double p) : prob(p) {
    require(prob > 0.0 && prob < 1.0, "bernoulli", "p must lie in (0, 1)");
}

Poisson::Poisson(double r) : rate(r) {
    require(rate > 0.0 && std::isfinite(rate), "poisson", "rate must be positive and finite");
}

NegBinomial::NegBinomial(double r, double p) : successes(r), prob(p) {
    require(successes > 0.0 && std::isfinite(successes), "negbinomial", "r must be positive and finite");
    require(prob > 0.0 && prob < 1.0, "negbinomial", "p must lie in (0, 1)");
}

Geometric::Geometric(double p) : prob(p) {
    require(prob > 0.0 && prob < 1.0, "geometric", "p must lie in (0, 1)");
}

ZJExtended::ZJExtended(double m, double g) : mu(m), gamma(g) {
    require(mu >= 0.0 && mu <= 1.0, "zj", "mu must lie in [0, 1]");
    require(gamma >= 0.0 && gamma < 1.0, "zj", "gamma must lie in [0, 1)");
}

double ZJExtended::bernoulli_prob() const { return (1.0 - gamma) * mu / (1.0 - gamma * mu); }

double ZJExtended::shifted_geometric_prob() const { return (1.0 - gamma) / (1.0 - gamma * mu); }

BerG::BerG(double p, double x) : pi(p), xi(x) {
    require(pi > 0.0 && pi < 1.0, "berg", "pi must lie in (0, 1)");
    require(xi > 0.0 && std::isfinite(xi), "berg", "xi must be positive and finite");
}

double dist_mean(const CountDistributionSpec& spec) {
    return std::visit(
        overloaded{
            [](const Bernoulli& d) { return d.prob; },
            [](const Poisson& d) { return d.rate; },
            [](const NegBinomial& d) { return d.successes * (1.0 - d.prob) / d.prob; },
            [](const Geometric& d) { return (1.0 - d.prob) / d.prob; },
            [](const ZJExtended& d) { return d.mu; },
            [](const BerG& d) { return d.pi + d.xi; },
        },
        spec);
}

double dist_variance(const CountDistributionSpec& spec) {
    return std::visit(
        overloaded{
            [](const Bernoulli& d) { return d.prob * (1.0 - d.prob); },
            [](const Poisson& d) { return d.rate; },
            [](const NegBinomial& d) { return d.successes * (1.0 - d.prob) / (d.prob * d.prob); },
            [](const Geometric& d) { return (1.0 - d.prob) / (d.prob * d.prob); },
            [](const ZJExtended& d) { return d.mu * (1.0 - d.mu) * (1.0 + d.gamma) / (1.0 - d.gamma); },
            [](const BerG& d) {
                const double m = d.pi + d.xi;
                return m * (1.0 - m + 2.0 * d.xi);
            },
        },
        spec);
}

namespace sampling {

std::int64_t bernoulli(double prob, RandomStream& rng) { return rng.uniform() < prob ? 1 : 0; }

namespace {

std::int64_t poisson_inversion(double rate, RandomStream& rng) {
    const double u = rng.uniform();
    double term = std::exp(-rate);
    double cdf = term;
    std::int64_t k = 0;
    // The cdf saturates a few ulps below 1; past that point the tail mass is
    // negligible and the search stops.
    while (u >= cdf) {
        ++k;
        term *= rate / static_cast<double>(k);
        const double next = cdf + term;
        if (next == cdf) break;
        cdf = next;
    }
    return k;
}

// Hörmann (1993), transformed rejection with squeeze.
std::int64_t poisson_ptrs(double rate, RandomStream& rng) {
    const double slam = std::sqrt(rate);
    const double loglam = std::log(rate);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform_positive();
        const double us = 0.5 - std::fabs(u);
        const double k = std::floor((2.0 * a / us + b) * u + rate + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            -rate + k * loglam - std::lgamma(k + 1.0)) {
            return static_cast<std::int64_t>(k);
        }
    }
}

}  // namespace

std::int64_t poisson(double rate, RandomStream& rng) {
    if (rate <= 0.0) return 0;
    return rate <= 30.0 ? poisson_inversion(rate, rng) : poisson_ptrs(rate, rng);
}

std::int64_t geometric_from_log_fail(double log_fail, RandomStream& rng) {
    if (log_fail == -std::numeric_limits<double>::infinity()) return 0;
    return static_cast<std::int64_t>(std::floor(std::log(rng.uniform_positive()) / log_fail));
}

std::int64_t geometric(double prob, RandomStream& rng) { return geometric_from_log_fail(std::log1p(-prob), rng); }

std::int64_t negative_binomial(double successes, double prob, RandomStream& rng) {
    std::gamma_distribution<double> mixing(successes, (1.0 - prob) / prob);
    return poisson(mixing(rng), rng);
}

}  // namespace sampling

std::int64_t dist_sample(const CountDistributionSpec& spec, RandomStream& rng) {
    return std::visit(
        overloaded{
            [&](const Bernoulli& d) { return sampling::bernoulli(d.prob, rng); },
            [&](const Poisson& d) { return sampling::poisson(d.rate, rng); },
            [&](const NegBinomial& d) { return sampling::negative_binomial(d.successes, d.prob, rng); },
            [&](const Geometric& d) { return sampling::geometric(d.prob, rng); },
            [&](const ZJExtended& d) -> std::int64_t {
                // Draw both factors unconditionally so the stream advances the
                // same way on every call.
                const std::int64_t b = sampling::bernoulli(d.bernoulli_prob(), rng);
                const double s = d.shifted_geometric_prob();
                const std::int64_t g = 1 + sampling::geometric_from_log_fail(std::log1p(-s), rng);
                return b * g;
            },
            [&](const BerG& d) {
                // Failure probability of Geometric(1 / (1 + xi)) is xi / (1 + xi).
                const double log_fail = std::log(d.xi) - std::log1p(d.xi);
                return sampling::bernoulli(d.pi, rng) + sampling::geometric_from_log_fail(log_fail, rng);
            },
        },
        spec);
}

std::string_view family_name(const CountDistributionSpec& spec) {
    return std::visit(overloaded{
                          [](const Bernoulli&) { return std::string_view("bernoulli"); },
                          [](const Poisson&) { return std::string_view("poisson"); },
                          [](const NegBinomial&) { return std::string_view("negbinomial"); },
                          [](const Geometric&) { return std::string_view("geometric"); },
                          [](const ZJExtended&) { return std::string_view("zj"); },
                          [](const BerG&) { return std::string_view("berg"); },
                      },
                      spec);
}

namespace {

// Shortest text that parses back to the same double.
std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(const CountDistributionSpec& spec) {
    std::string out(family_name(spec));
    out += '(';
    std::visit(overloaded{
                   [&](const Bernoulli& d) { out += "p=" + shortest(d.prob); },
                   [&](const Poisson& d) { out += "rate=" + shortest(d.rate); },
                   [&](const NegBinomial& d) { out += "r=" + shortest(d.successes) + ",p=" + shortest(d.prob); },
                   [&](const Geometric& d) { out += "p=" + shortest(d.prob); },
                   [&](const ZJExtended& d) { out += "mu=" + shortest(d.mu) + ",gamma=" + shortest(d.gamma); },
                   [&](const BerG& d) { out += "pi=" + shortest(d.pi) + ",xi=" + shortest(d.xi); },
               },
               spec);
    out += ')';
    return out;
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view token, std::string_view context) {
    const std::string text(trim(token));
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) {
        throw InputError("invalid number '" + text + "' in '" + std::string(context) + "'");
    }
    return value;
}

class ParamTable {
public:
    ParamTable(std::string family, std::map<std::string, double> values, std::string context)
        : family_(std::move(family)), values_(std::move(values)), context_(std::move(context)) {}

    double take(std::initializer_list<const char*> names) {
        for (const char* name : names) {
            auto it = values_.find(name);
            if (it != values_.end()) {
                const double v = it->second;
                values_.erase(it);
                return v;
            }
        }
        throw InputError("missing parameter '" + std::string(*names.begin()) + "' for " + family_ + " in '" +
                         context_ + "'");
    }

    void expect_empty() const {
        if (!values_.empty()) {
            throw InputError("unknown parameter '" + values_.begin()->first + "' for " + family_ + " in '" +
                             context_ + "'");
        }
    }

private:
    std::string family_;
    std::map<std::string, double> values_;
    std::string context_;
};

}  // namespace

CountDistributionSpec parse_distribution(std::string_view text) {
    const std::string context(trim(text));
    const auto open = context.find('(');
    if (open == std::string::npos || context.back() != ')') {
        throw InputError("expected family(param=value,...) but got '" + context + "'");
    }
    const std::string family = lower(trim(std::string_view(context).substr(0, open)));
    const std::string_view body = std::string_view(context).substr(open + 1, context.size() - open - 2);

    std::map<std::string, double> params;
    if (!trim(body).empty()) {
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto comma = body.find(',', start);
            const std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw InputError("expected param=value but got '" + std::string(trim(item)) + "' in '" + context + "'");
            }
            const std::string name = lower(trim(item.substr(0, eq)));
            if (name.empty()) throw InputError("empty parameter name in '" + context + "'");
            if (params.count(name)) throw InputError("duplicate parameter '" + name + "' in '" + context + "'");
            params[name] = parse_real(item.substr(eq + 1), context);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }

    ParamTable table(family, std::move(params), context);
    auto finish = [&](CountDistributionSpec spec) {
        table.expect_empty();
        return spec;
    };
    try {
        if (family == "bernoulli") return finish(Bernoulli(table.take({"p", "prob"})));
        if (family == "poisson") return finish(Poisson(table.take({"rate", "lambda"})));
        if (family == "negbinomial" || family == "negbin" || family == "nb") {
            const double r = table.take({"r"});
            return finish(NegBinomial(r, table.take({"p", "prob"})));
        }
        if (family == "geometric") return finish(Geometric(table.take({"p", "prob"})));
        if (family == "zj" || family == "zjextended") {
            const double mu = table.take({"mu"});
            return finish(ZJExtended(mu, table.take({"gamma"})));
        }
        if (family == "berg") {
            const double pi = table.take({"pi"});
            return finish(BerG(pi, table.take({"xi"})));
        }
    } catch (const ConfigError& e) {
        throw InputError(std::string(e.what()) + " in '" + context + "'");
    }
    throw InputError("unknown distribution family '" + family + "' in '" + context + "'");
}

}  // namespace ginar
