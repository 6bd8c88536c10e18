#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ginar {

/// A mean-to-variance map kappa together with its derivative. The variance
/// of a family member with mean m is kappa(m):
///   Bernoulli          m (1 - m)          on (0, 1)
///   Poisson            m                  on (0, inf)
///   NegBinomial(r)     (m + r) m / r      on (0, inf)
class KappaFamily {
public:
    enum class Kind { Bernoulli, Poisson, NegBinomial };

    static KappaFamily bernoulli() { return KappaFamily(Kind::Bernoulli, 0.0); }
    static KappaFamily poisson() { return KappaFamily(Kind::Poisson, 0.0); }
    /// r is a fixed, known constant; must be positive.
    static KappaFamily negative_binomial(double r);

    Kind kind() const noexcept { return kind_; }
    double successes() const noexcept { return successes_; }

    /// True when mu lies in the open admissible mean range.
    bool admits(double mu) const noexcept;

    /// Empty when mu is admissible, otherwise a message naming the bound.
    std::optional<std::string> range_violation(double mu) const;

    /// The formula value regardless of range.
    double value_unchecked(double mu) const noexcept;
    double derivative_unchecked(double mu) const noexcept;

    std::string name() const;

private:
    KappaFamily(Kind kind, double r) : kind_(kind), successes_(r) {}

    Kind kind_;
    double successes_;
};

/// kappa(mu); throws std::domain_error outside the admissible range.
double kappa_eval(const KappaFamily& family, double mu);
/// kappa'(mu); throws std::domain_error outside the admissible range.
double kappa_derivative(const KappaFamily& family, double mu);

/// Parses one family: `bernoulli`, `poisson`, `negbinomial(r=2)` (alias `nb`).
KappaFamily parse_kappa(std::string_view text);
/// Comma-separated list, commas inside parentheses do not split.
std::vector<KappaFamily> parse_kappa_list(std::string_view text);

}  // namespace ginar
