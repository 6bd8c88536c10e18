#include <catch_amalgamated.hpp>

#include <sstream>

#include "ginar/errors.hpp"
#include "ginar/mc_harness.hpp"

using namespace ginar;

namespace {

CellSpec cell(double pi, double xi, std::size_t n, std::size_t reps, std::uint64_t seed = 11) {
    return CellSpec{pi, xi, n, reps, 1000, 0.05, cell_seed(seed, pi, xi, n)};
}

ExperimentGrid small_grid() {
    ExperimentGrid g;
    g.pi_values = {0.2, 0.5};
    g.xi_values = {0.1, 0.3};
    g.n_values = {200, 400};
    g.replications = 100;
    g.burn_in = 200;
    g.master_seed = 42;
    return g;
}

}  // namespace

TEST_CASE("serial and parallel replication agree", "[mc]") {
    for (const auto& c : {cell(0.3, 0.0, 300, 64), cell(0.4, 0.2, 250, 50)}) {
        const auto par = replicate_cell(c);
        const auto ser = replicate_cell_serial(c);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].failed == ser[i].failed);
            CHECK(par[i].reject == ser[i].reject);
            CHECK(par[i].statistic == ser[i].statistic);
        }
        CHECK(run_cell(c) == run_cell_serial(c));
    }
}

TEST_CASE("replications are reproducible individually", "[mc]") {
    const auto c = cell(0.3, 0.0, 300, 20);
    const auto all = replicate_cell_serial(c);
    for (std::size_t i : {0u, 7u, 19u}) CHECK(run_replication(c, i).statistic == all[i].statistic);

    const auto one = cell(0.3, 0.1, 500, 1);
    const auto first = run_cell(one);
    CHECK(first.rejections <= 1);
    CHECK(first == run_cell(one));
}

TEST_CASE("cell seeds depend on every coordinate", "[mc]") {
    const auto base = cell_seed(1, 0.3, 0.1, 500);
    CHECK(base == cell_seed(1, 0.3, 0.1, 500));
    CHECK(base != cell_seed(2, 0.3, 0.1, 500));
    CHECK(base != cell_seed(1, 0.4, 0.1, 500));
    CHECK(base != cell_seed(1, 0.3, 0.2, 500));
    CHECK(base != cell_seed(1, 0.3, 0.1, 1000));
}

TEST_CASE("cell counting distributions", "[mc]") {
    CHECK(std::holds_alternative<Bernoulli>(cell_counting(0.3, 0.0)));
    CHECK(std::holds_alternative<BerG>(cell_counting(0.3, 0.1)));
    CHECK_THROWS_AS(run_cell(cell(0.7, 0.3, 100, 5)), ConfigError);
}

TEST_CASE("rates", "[mc]") {
    RejectionRow row{0.3, 0.0, 500, 5, 2, 102};
    CHECK(row.rate() == Catch::Approx(0.05));
    row.failures = 102;
    CHECK(row.rate() == 0.0);
}

TEST_CASE("grid validation", "[mc]") {
    auto g = small_grid();
    CHECK_NOTHROW(g.validate(true));
    g.replications = 0;
    CHECK_THROWS_AS(g.validate(true), ConfigError);
    g = small_grid();
    g.pi_values = {0.8};
    CHECK_THROWS_AS(g.validate(true), ConfigError);
    CHECK_NOTHROW(g.validate(false));
    g = small_grid();
    g.level = 1.0;
    CHECK_THROWS_AS(g.validate(true), ConfigError);
    g = small_grid();
    g.n_values.clear();
    CHECK_THROWS_AS(g.validate(true), ConfigError);
    CHECK_NOTHROW(default_size_grid().validate(false));
    CHECK_NOTHROW(default_power_grid().validate(true));
    CHECK(default_size_grid().pi_values.size() == 7);
    CHECK(default_power_grid().xi_values.size() == 6);
}

TEST_CASE("experiments", "[mc]") {
    SECTION("single cell") {
        ExperimentGrid g = small_grid();
        g.pi_values = {0.3};
        g.n_values = {300};
        const auto t = run_size_experiment(g);
        REQUIRE(t.rows.size() == 1);
        CHECK(t.rows[0].xi == 0.0);
        CHECK(t.rows[0].replications == 100);
        CHECK(t.find(0.3, 0.0, 300) != nullptr);
        CHECK(t.find(0.3, 0.1, 300) == nullptr);
    }
    SECTION("smoke grid rates and determinism") {
        const auto g = small_grid();
        const auto t = run_power_experiment(g);
        CHECK(t.rows.size() == 8);
        for (const auto& r : t.rows) {
            CHECK(r.xi > 0.0);
            CHECK(r.rate() >= 0.0);
            CHECK(r.rate() <= 1.0);
            CHECK(r.rejections + r.failures <= r.replications);
        }
        const auto again = run_power_experiment(g);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            CHECK(t.rows[i].rejections == again.rows[i].rejections);
            CHECK(t.rows[i].failures == again.rows[i].failures);
        }
        // Cells do not depend on the grid they sit in.
        ExperimentGrid one = g;
        one.pi_values = {0.5};
        one.xi_values = {0.3};
        one.n_values = {400};
        CHECK(run_power_experiment(one).rows[0].rejections == t.find(0.5, 0.3, 400)->rejections);
    }
}

TEST_CASE("power grows with the overdispersion at pi = 0.2, n = 500", "[mc][slow]") {
    ExperimentGrid g = default_power_grid();
    g.pi_values = {0.2};
    g.n_values = {500};
    g.replications = 2000;
    g.master_seed = 3;
    const auto t = run_power_experiment(g);
    REQUIRE(t.rows.size() == 6);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        INFO("xi " << t.rows[i - 1].xi << " -> " << t.rows[i].xi);
        CHECK(t.rows[i].rate() >= t.rows[i - 1].rate() - 0.04);
    }
    CHECK(t.rows.back().rate() > t.rows.front().rate() + 0.5);
}

TEST_CASE("grid config parsing", "[mc]") {
    std::istringstream in(
        "# study\n"
        "pi_values = 0.2, 0.4\n"
        "xi_values: 0.1\n"
        "n_values = 100,200\n"
        "replications = 10\n"
        "burn_in = 50\n"
        "level = 0.1\n"
        "seed = 99\n");
    const auto g = parse_grid_config(in);
    CHECK(g.pi_values == std::vector<double>{0.2, 0.4});
    CHECK(g.xi_values == std::vector<double>{0.1});
    CHECK(g.n_values == std::vector<std::size_t>{100, 200});
    CHECK(g.replications == 10);
    CHECK(g.burn_in == 50);
    CHECK(g.level == 0.1);
    CHECK(g.master_seed == 99);

    std::istringstream partial("replications = 5\n");
    const auto p = parse_grid_config(partial, default_size_grid());
    CHECK(p.replications == 5);
    CHECK(p.pi_values.size() == 7);

    std::istringstream bad_key("colour = red\n");
    CHECK_THROWS_AS(parse_grid_config(bad_key), InputError);
    std::istringstream bad_value("replications = ten\n");
    try {
        parse_grid_config(bad_value);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 1"));
    }
    CHECK_THROWS_AS(read_grid_config("/nonexistent/grid.cfg"), InputError);
}

TEST_CASE("table writers", "[mc]") {
    RejectionTable t;
    t.rows = {{0.2, 0.0, 500, 33, 0, 500}, {0.2, 0.0, 1000, 30, 0, 500}, {0.3, 0.0, 500, 25, 0, 500}};
    std::ostringstream csv;
    write_rejection_csv(csv, t);
    std::istringstream lines(csv.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "pi,xi,n,rejections,failures,rate");
    CHECK(first.rfind("0.2,0,500,33,0,0.066", 0) == 0);

    std::ostringstream size;
    write_size_table(size, t);
    CHECK_THAT(size.str(), Catch::Matchers::ContainsSubstring("1000"));
    CHECK_THAT(size.str(), Catch::Matchers::ContainsSubstring("0.066"));

    RejectionTable p;
    p.rows = {{0.2, 0.05, 500, 30, 0, 1000}, {0.2, 0.1, 500, 84, 0, 1000}};
    std::ostringstream power;
    write_power_table(power, p);
    CHECK_THAT(power.str(), Catch::Matchers::ContainsSubstring("0.084"));
}
