#pragma once

#include <iosfwd>

#include "ginar/cls.hpp"
#include "ginar/mv_test.hpp"

namespace ginar {

enum class ReportFormat { Text, Json };

/// Field names follow the struct members: mu_hat, theta_hat, n_eff,
/// warnings, then Jm, Jv, Im, Imv, Iv, V.
void write_fit_report(std::ostream& out, const CLSFit& fit, const MomentMatrices& moments, ReportFormat format);

/// statistic, df, p_value, reject, level, critical_value, tested,
/// discrepancy, W_hat, mu_hat, theta_hat, n_eff, warnings.
void write_test_report(std::ostream& out, const TestResult& result, ReportFormat format);

}  // namespace ginar
