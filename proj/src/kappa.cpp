#include "ginar/kappa.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ginar/errors.hpp"

namespace ginar {

KappaFamily KappaFamily::negative_binomial(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("negbinomial kappa: r must be positive and finite");
    return KappaFamily(Kind::NegBinomial, r);
}

bool KappaFamily::admits(double mu) const noexcept {
    switch (kind_) {
        case Kind::Bernoulli:
            return mu > 0.0 && mu < 1.0;
        case Kind::Poisson:
        case Kind::NegBinomial:
            return mu > 0.0 && std::isfinite(mu);
    }
    return false;
}

std::optional<std::string> KappaFamily::range_violation(double mu) const {
    if (admits(mu)) return std::nullopt;
    std::ostringstream msg;
    msg << name() << " kappa: mean " << mu << " outside admissible range "
        << (kind_ == Kind::Bernoulli ? "(0, 1)" : "(0, inf)");
    return msg.str();
}

double KappaFamily::value_unchecked(double mu) const noexcept {
    switch (kind_) {
        case Kind::Bernoulli:
            return mu * (1.0 - mu);
        case Kind::Poisson:
            return mu;
        case Kind::NegBinomial:
            return (mu + successes_) * mu / successes_;
    }
    return 0.0;
}

double KappaFamily::derivative_unchecked(double mu) const noexcept {
    switch (kind_) {
        case Kind::Bernoulli:
            return 1.0 - 2.0 * mu;
        case Kind::Poisson:
            return 1.0;
        case Kind::NegBinomial:
            return 2.0 * mu / successes_ + 1.0;
    }
    return 0.0;
}

std::string KappaFamily::name() const {
    switch (kind_) {
        case Kind::Bernoulli:
            return "bernoulli";
        case Kind::Poisson:
            return "poisson";
        case Kind::NegBinomial: {
            std::ostringstream out;
            out << "negbinomial(r=" << successes_ << ")";
            return out.str();
        }
    }
    return "?";
}

double kappa_eval(const KappaFamily& family, double mu) {
    if (auto bad = family.range_violation(mu)) throw std::domain_error(*bad);
    return family.value_unchecked(mu);
}

double kappa_derivative(const KappaFamily& family, double mu) {
    if (auto bad = family.range_violation(mu)) throw std::domain_error(*bad);
    return family.derivative_unchecked(mu);
}

namespace {

std::string normalize(std::string_view s) {
    std::string out;
    for (unsigned char c : s) {
        if (!std::isspace(c)) out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

}  // namespace

KappaFamily parse_kappa(std::string_view text) {
    const std::string token = normalize(text);
    if (token == "bernoulli" || token == "binomial") return KappaFamily::bernoulli();
    if (token == "poisson") return KappaFamily::poisson();
    for (const std::string prefix : {"negbinomial", "negbin", "nb"}) {
        if (token.rfind(prefix + "(", 0) == 0 && token.back() == ')') {
            std::string body = token.substr(prefix.size() + 1, token.size() - prefix.size() - 2);
            if (body.rfind("r=", 0) != 0) throw InputError("expected r=<value> in kappa family '" + std::string(text) + "'");
            body = body.substr(2);
            std::size_t used = 0;
            double r = 0.0;
            try {
                r = std::stod(body, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (body.empty() || used != body.size()) {
                throw InputError("invalid number '" + body + "' in kappa family '" + std::string(text) + "'");
            }
            try {
                return KappaFamily::negative_binomial(r);
            } catch (const ConfigError& e) {
                throw InputError(e.what());
            }
        }
    }
    throw InputError("unknown kappa family '" + std::string(text) + "'");
}

std::vector<KappaFamily> parse_kappa_list(std::string_view text) {
    std::vector<KappaFamily> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(parse_kappa(text.substr(start, i - start)));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return out;
}

}  // namespace ginar
