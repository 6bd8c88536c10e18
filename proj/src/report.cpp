#include "ginar/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace ginar {

namespace {

using nlohmann::json;

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class Seq>
void put_list(std::ostream& out, const Seq& values) {
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ", ";
        out << v;
        first = false;
    }
}

void put_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
    if (warnings.empty()) {
        out << "warnings: none\n";
        return;
    }
    out << "warnings:\n";
    for (const auto& w : warnings) out << "  - " << w << '\n';
}

}  // namespace

void write_fit_report(std::ostream& out, const CLSFit& fit, const MomentMatrices& moments, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json j;
        j["mu_hat"] = fit.mu_hat;
        j["theta_hat"] = fit.theta_hat;
        j["n_eff"] = fit.n_eff;
        j["warnings"] = fit.warnings;
        j["Jm"] = to_json(moments.Jm);
        j["Jv"] = to_json(moments.Jv);
        j["Im"] = to_json(moments.Im);
        j["Imv"] = to_json(moments.Imv);
        j["Iv"] = to_json(moments.Iv);
        j["V"] = to_json(moments.V);
        out << std::setw(2) << j << '\n';
        return;
    }
    const auto saved = out.precision(6);
    out << "order: " << fit.mu_hat.size() - 1 << '\n';
    out << "n_eff: " << fit.n_eff << '\n';
    out << "mu_hat: ";
    put_list(out, fit.mu_hat);
    out << "\ntheta_hat: ";
    put_list(out, fit.theta_hat);
    out << '\n';
    put_warnings(out, fit.warnings);
    out << "Jm: " << moments.Jm << '\n';
    out << "Jv: " << moments.Jv << '\n';
    out << "Im: " << moments.Im << '\n';
    out << "Imv: " << moments.Imv << '\n';
    out << "Iv: " << moments.Iv << '\n';
    out << "V: " << moments.V << '\n';
    out.precision(saved);
}

void write_test_report(std::ostream& out, const TestResult& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json j;
        j["statistic"] = r.statistic;
        j["df"] = r.df;
        j["p_value"] = r.p_value;
        j["reject"] = r.reject;
        j["level"] = r.level;
        j["critical_value"] = r.critical_value;
        j["tested"] = r.tested;
        j["discrepancy"] = r.discrepancy;
        j["W_hat"] = to_json(r.W_hat);
        j["mu_hat"] = r.fit.mu_hat;
        j["theta_hat"] = r.fit.theta_hat;
        j["n_eff"] = r.fit.n_eff;
        j["warnings"] = r.warnings;
        out << std::setw(2) << j << '\n';
        return;
    }
    const auto saved = out.precision(6);
    out << "statistic: " << r.statistic << '\n';
    out << "df: " << r.df << '\n';
    out << "p_value: " << r.p_value << '\n';
    out << "reject: " << (r.reject ? "true" : "false") << '\n';
    out << "level: " << r.level << '\n';
    out << "critical_value: " << r.critical_value << '\n';
    out << "tested: ";
    put_list(out, r.tested);
    out << "\ndiscrepancy: ";
    put_list(out, r.discrepancy);
    out << "\nW_hat: " << r.W_hat << '\n';
    out << "mu_hat: ";
    put_list(out, r.fit.mu_hat);
    out << "\ntheta_hat: ";
    put_list(out, r.fit.theta_hat);
    out << "\nn_eff: " << r.fit.n_eff << '\n';
    put_warnings(out, r.warnings);
    out.precision(saved);
}

}  // namespace ginar
