#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ginar/cls.hpp"
#include "ginar/series_io.hpp"
#include "ginar/simulate.hpp"

namespace fs = std::filesystem;
using namespace ginar;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ginar_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& body) {
    const fs::path path = scratch(name);
    std::ofstream(path) << body;
    return path;
}

fs::path simulated_series(const std::string& name, std::size_t length, std::uint64_t seed) {
    const fs::path path = scratch(name);
    const Run r = run({"simulate", "--dist", "bernoulli(p=0.3)", "--dist", "poisson(rate=1)", "-n",
                       std::to_string(length), "--seed", std::to_string(seed), "-o", path.string()});
    REQUIRE(r.status == 0);
    return path;
}

}  // namespace

TEST_CASE("simulate writes a reproducible series", "[cli]") {
    const Run a = run({"simulate", "--dist", "bernoulli(p=0.3)", "--dist", "poisson(rate=1)", "--seed", "5"});
    const Run b = run({"simulate", "--dist", "bernoulli(p=0.3)", "--dist", "poisson(rate=1)", "--seed", "5"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    const CountSeries s = read_series(in);
    CHECK(s.size() == 500);
    CHECK(a.out.rfind("count\n", 0) == 0);

    const Run c = run({"simulate", "--dist", "bernoulli(p=0.3)", "--dist", "poisson(rate=1)", "--seed", "6"});
    CHECK(c.out != a.out);
}

TEST_CASE("simulate then ingest reproduces the in-memory series", "[cli]") {
    const fs::path path = simulated_series("round_trip.csv", 300, 21);
    const GinarModel model({Bernoulli(0.3)}, Poisson(1.0));
    CHECK(ingest_series(path) == simulate(model, SimConfig{300, 1000, 21}));
}

TEST_CASE("simulate refuses nonstationary and invalid models", "[cli]") {
    const Run sum = run({"simulate", "--dist", "bernoulli(p=0.6)", "--dist", "bernoulli(p=0.5)", "--dist",
                         "poisson(rate=1)"});
    CHECK(sum.status == cli::kInputError);
    CHECK_THAT(sum.err, Catch::Matchers::ContainsSubstring("stationar"));

    const Run berg = run({"simulate", "--dist", "berg(pi=0.5,xi=0.6)", "--dist", "poisson(rate=1)"});
    CHECK(berg.status == cli::kInputError);

    CHECK(run({"simulate", "--dist", "poisson(rate=1)"}).status == cli::kInputError);
    CHECK(run({"simulate", "--dist", "wobble(x=1)", "--dist", "poisson(rate=1)"}).status == cli::kInputError);
    CHECK(run({"simulate", "--dist", "bernoulli(p=0.3)", "--dist", "poisson(rate=1)", "-p", "2"}).status ==
          cli::kInputError);
}

TEST_CASE("fit report", "[cli]") {
    const fs::path path = simulated_series("fit.csv", 1000, 8);
    const Run text = run({"fit", "-i", path.string()});
    REQUIRE(text.status == 0);
    for (const char* field : {"mu_hat:", "theta_hat:", "n_eff: 999", "warnings:", "Jm:", "V:"})
        CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring(field));

    const Run json = run({"fit", "-i", path.string(), "--format", "json"});
    REQUIRE(json.status == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["mu_hat"].size() == 2);
    CHECK(doc["n_eff"] == 999);
    const auto fit = fit_cls(build_regressors(ingest_series(path), 1));
    CHECK(doc["mu_hat"][0].get<double>() == Catch::Approx(fit.mu_hat[0]).epsilon(1e-12));

    CHECK(run({"fit", "-i", path.string(), "--format", "xml"}).status == cli::kInputError);
}

TEST_CASE("fit recovers known parameters on a long path", "[cli]") {
    const fs::path path = simulated_series("long.csv", 100000, 44);
    const Run r = run({"fit", "-i", path.string(), "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const double n = doc["n_eff"].get<double>();
    const std::vector<double> truth{0.3, 1.0, 0.21, 1.0};
    for (std::size_t k = 0; k < 4; ++k) {
        const double est = k < 2 ? doc["mu_hat"][k].get<double>() : doc["theta_hat"][k - 2].get<double>();
        const double var = doc["V"][k][k].get<double>();
        CHECK(std::fabs(est - truth[k]) < 3 * std::sqrt(var / n));
    }
}

TEST_CASE("test report", "[cli]") {
    const fs::path path = simulated_series("test.csv", 2000, 9);
    const Run a = run({"test", "-i", path.string()});
    const Run b = run({"test", "-i", path.string(), "--null", "bernoulli,poisson"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    for (const char* field : {"statistic:", "df: 2", "p_value:", "reject:", "level: 0.05", "discrepancy:"})
        CHECK_THAT(a.out, Catch::Matchers::ContainsSubstring(field));

    const Run sub = run({"test", "-i", path.string(), "--subset", "1", "--format", "json"});
    REQUIRE(sub.status == 0);
    const auto doc = nlohmann::json::parse(sub.out);
    CHECK(doc["df"] == 1);
    CHECK(doc["tested"] == nlohmann::json::array({1}));

    // A rejection is a statistical outcome, not a process failure.
    const fs::path alt = scratch("alt.csv");
    REQUIRE(run({"simulate", "--dist", "berg(pi=0.3,xi=0.3)", "--dist", "poisson(rate=1)", "-n", "2000", "-o",
                 alt.string()})
                .status == 0);
    const Run rej = run({"test", "-i", alt.string(), "--format", "json"});
    CHECK(rej.status == 0);
    CHECK(nlohmann::json::parse(rej.out)["reject"] == true);
}

TEST_CASE("test input errors", "[cli]") {
    const fs::path path = simulated_series("errs.csv", 400, 2);
    CHECK(run({"test"}).status == cli::kInputError);
    CHECK(run({"test", "-i", "/nonexistent/file.csv"}).status == cli::kInputError);
    CHECK(run({"test", "-i", path.string(), "--null", "poisson"}).status == cli::kInputError);
    CHECK(run({"test", "-i", path.string(), "--null", "gamma,poisson"}).status == cli::kInputError);
    CHECK(run({"test", "-i", path.string(), "--subset", "3"}).status == cli::kInputError);
    CHECK(run({"test", "-i", path.string(), "--subset", "x"}).status == cli::kInputError);
    CHECK(run({"test", "-i", path.string(), "--level", "1.5"}).status == cli::kInputError);

    const fs::path bad = write_file("bad.csv", "count\n3\n2.5\n");
    const Run r = run({"fit", "-i", bad.string()});
    CHECK(r.status == cli::kInputError);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("line 3"));

    CHECK(run({"frobnicate"}).status == cli::kInputError);
    CHECK(run({}).status == cli::kInputError);
}

TEST_CASE("singular designs exit with the numerical status", "[cli]") {
    std::string body = "count\n";
    for (int i = 0; i < 30; ++i) body += "4\n";
    const fs::path constant = write_file("constant.csv", body);
    const Run fit = run({"fit", "-i", constant.string()});
    CHECK(fit.status == cli::kNumericalError);
    CHECK_FALSE(fit.err.empty());
    CHECK(run({"test", "-i", constant.string()}).status == cli::kNumericalError);
}

TEST_CASE("monte carlo commands", "[cli]") {
    const fs::path cfg = write_file("grid.cfg",
                                    "pi_values = 0.3\n"
                                    "xi_values = 0.2\n"
                                    "n_values = 200\n"
                                    "burn_in = 100\n");
    const Run size = run({"mc-size", "--config", cfg.string(), "-R", "20", "--seed", "3"});
    REQUIRE(size.status == 0);
    CHECK(size.out.rfind("pi,xi,n,rejections,failures,rate\n0.3,0,200,", 0) == 0);
    CHECK(size.out == run({"mc-size", "--config", cfg.string(), "-R", "20", "--seed", "3"}).out);

    const Run power = run({"mc-power", "--config", cfg.string(), "-R", "20", "--format", "table"});
    REQUIRE(power.status == 0);
    CHECK_THAT(power.out, Catch::Matchers::ContainsSubstring("0.2"));

    const fs::path bad = write_file("bad.cfg", "pi_values = 0.9\nxi_values = 0.2\n");
    CHECK(run({"mc-power", "--config", bad.string(), "-R", "5"}).status == cli::kInputError);
    CHECK(run({"mc-size", "--config", cfg.string(), "--format", "png"}).status == cli::kInputError);
}
