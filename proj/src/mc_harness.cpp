#include "ginar/mc_harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ginar/errors.hpp"

namespace ginar {

namespace {

std::vector<double> range_grid(double first, double step, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(std::round((first + step * i) * 1e6) / 1e6);
    return out;
}

bool same(double a, double b) { return std::fabs(a - b) < 1e-9; }

}  // namespace

void ExperimentGrid::validate(bool include_xi) const {
    if (pi_values.empty()) throw ConfigError("experiment grid: pi_values is empty");
    if (n_values.empty()) throw ConfigError("experiment grid: n_values is empty");
    if (include_xi && xi_values.empty()) throw ConfigError("experiment grid: xi_values is empty");
    if (replications < 1) throw ConfigError("experiment grid: replications must be at least 1");
    if (!(level > 0.0 && level < 1.0)) throw ConfigError("experiment grid: level must lie in (0, 1)");
    for (std::size_t n : n_values) {
        if (n < 3) throw ConfigError("experiment grid: every n must be at least 3");
    }
    for (double pi : pi_values) {
        if (!(pi > 0.0 && pi < 1.0)) throw ConfigError("experiment grid: pi must lie in (0, 1)");
        if (!include_xi) continue;
        for (double xi : xi_values) {
            if (!(xi >= 0.0)) throw ConfigError("experiment grid: xi must be nonnegative");
            if (!(pi + xi < 1.0)) {
                std::ostringstream msg;
                msg << "experiment grid: pi + xi = " << pi + xi << " violates stationarity (pi=" << pi
                    << ", xi=" << xi << ")";
                throw ConfigError(msg.str());
            }
        }
    }
}

ExperimentGrid default_size_grid() {
    ExperimentGrid g;
    g.pi_values = range_grid(0.2, 0.1, 7);
    g.xi_values = {0.0};
    g.n_values = {500, 1000, 2000};
    return g;
}

ExperimentGrid default_power_grid() {
    ExperimentGrid g;
    g.pi_values = range_grid(0.2, 0.1, 5);
    g.xi_values = range_grid(0.05, 0.05, 6);
    g.n_values = {500, 1000, 2000};
    return g;
}

CountDistributionSpec cell_counting(double pi, double xi) {
    if (xi == 0.0) return Bernoulli(pi);
    return BerG(pi, xi);
}

NullSpec bernoulli_poisson_null() { return NullSpec{{KappaFamily::bernoulli(), KappaFamily::poisson()}}; }

std::uint64_t cell_seed(std::uint64_t master_seed, double pi, double xi, std::size_t n) {
    std::uint64_t s = derive_seed(master_seed, std::bit_cast<std::uint64_t>(pi));
    s = derive_seed(s, std::bit_cast<std::uint64_t>(xi));
    return derive_seed(s, n);
}

namespace {

GinarModel cell_model(const CellSpec& cell) {
    if (!(cell.pi + cell.xi < 1.0)) {
        std::ostringstream msg;
        msg << "cell (pi=" << cell.pi << ", xi=" << cell.xi << ") violates pi + xi < 1";
        throw ConfigError(msg.str());
    }
    return GinarModel({cell_counting(cell.pi, cell.xi)}, Poisson(1.0));
}

ReplicationOutcome replicate_once(const GinarModel& model, const CellSpec& cell, std::size_t index) {
    static const NullSpec null = bernoulli_poisson_null();
    static constexpr std::size_t all[] = {1, 2};
    RandomStream rng = RandomStream(cell.cell_seed).substream(index);
    ReplicationOutcome out;
    try {
        const CountSeries series = simulate(model, cell.n, cell.burn_in, rng);
        const TestResult r = run_subvector_test(build_regressors(series, 1), null, all, cell.level);
        out.statistic = r.statistic;
        out.reject = r.reject;
    } catch (const NumericalError&) {
        out.failed = true;
    } catch (const InputError&) {
        out.failed = true;
    }
    return out;
}

}  // namespace

ReplicationOutcome run_replication(const CellSpec& cell, std::size_t index) {
    return replicate_once(cell_model(cell), cell, index);
}

std::vector<ReplicationOutcome> replicate_cell_serial(const CellSpec& cell) {
    const GinarModel model = cell_model(cell);
    std::vector<ReplicationOutcome> out(cell.replications);
    for (std::size_t k = 0; k < cell.replications; ++k) out[k] = replicate_once(model, cell, k);
    return out;
}

std::vector<ReplicationOutcome> replicate_cell(const CellSpec& cell) {
    const GinarModel model = cell_model(cell);
    std::vector<ReplicationOutcome> out(cell.replications);
    const auto count = static_cast<std::ptrdiff_t>(cell.replications);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = replicate_once(model, cell, static_cast<std::size_t>(k));
    }
    return out;
}

CellCounts run_cell_serial(const CellSpec& cell) {
    const GinarModel model = cell_model(cell);
    CellCounts c;
    for (std::size_t k = 0; k < cell.replications; ++k) {
        const ReplicationOutcome r = replicate_once(model, cell, k);
        c.failures += r.failed ? 1 : 0;
        c.rejections += (!r.failed && r.reject) ? 1 : 0;
    }
    return c;
}

CellCounts run_cell(const CellSpec& cell) {
    const GinarModel model = cell_model(cell);
    std::size_t rejections = 0;
    std::size_t failures = 0;
    const auto count = static_cast<std::ptrdiff_t>(cell.replications);
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : rejections, failures)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const ReplicationOutcome r = replicate_once(model, cell, static_cast<std::size_t>(k));
        failures += r.failed ? 1 : 0;
        rejections += (!r.failed && r.reject) ? 1 : 0;
    }
    return {rejections, failures};
}

double RejectionRow::rate() const {
    const std::size_t valid = replications - failures;
    return valid == 0 ? 0.0 : static_cast<double>(rejections) / static_cast<double>(valid);
}

const RejectionRow* RejectionTable::find(double pi, double xi, std::size_t n) const {
    for (const auto& row : rows) {
        if (same(row.pi, pi) && same(row.xi, xi) && row.n == n) return &row;
    }
    return nullptr;
}

namespace {

RejectionTable run_grid(const ExperimentGrid& grid, const std::vector<double>& xis) {
    RejectionTable table;
    for (double pi : grid.pi_values) {
        for (std::size_t n : grid.n_values) {
            for (double xi : xis) {
                CellSpec cell{pi, xi, n, grid.replications, grid.burn_in, grid.level,
                              cell_seed(grid.master_seed, pi, xi, n)};
                const CellCounts c = run_cell(cell);
                table.rows.push_back({pi, xi, n, c.rejections, c.failures, grid.replications});
            }
        }
    }
    return table;
}

}  // namespace

RejectionTable run_size_experiment(const ExperimentGrid& grid) {
    grid.validate(false);
    return run_grid(grid, {0.0});
}

RejectionTable run_power_experiment(const ExperimentGrid& grid) {
    grid.validate(true);
    std::vector<double> xis;
    for (double xi : grid.xi_values) {
        if (xi > 0.0) xis.push_back(xi);
    }
    if (xis.empty()) throw ConfigError("power experiment needs at least one xi > 0");
    return run_grid(grid, xis);
}

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& text, std::size_t line_no, const std::string& key) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (!in || !(in >> std::ws).eof()) {
        throw InputError("grid config line " + std::to_string(line_no) + ": invalid value '" + text + "' for " +
                         key);
    }
    if constexpr (std::is_unsigned_v<T>) {
        if (text.find('-') != std::string::npos) {
            throw InputError("grid config line " + std::to_string(line_no) + ": " + key + " must be nonnegative");
        }
    }
    return value;
}

}  // namespace

ExperimentGrid parse_grid_config(std::istream& in, ExperimentGrid grid) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find_first_of("=:");
        if (eq == std::string::npos) {
            throw InputError("grid config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "pi_values" || key == "xi_values") {
            std::vector<double> values;
            for (const auto& item : split_list(value)) values.push_back(parse_number<double>(item, line_no, key));
            (key == "pi_values" ? grid.pi_values : grid.xi_values) = std::move(values);
        } else if (key == "n_values") {
            grid.n_values.clear();
            for (const auto& item : split_list(value))
                grid.n_values.push_back(parse_number<std::size_t>(item, line_no, key));
        } else if (key == "replications") {
            grid.replications = parse_number<std::size_t>(value, line_no, key);
        } else if (key == "burn_in") {
            grid.burn_in = parse_number<std::size_t>(value, line_no, key);
        } else if (key == "level") {
            grid.level = parse_number<double>(value, line_no, key);
        } else if (key == "seed") {
            grid.master_seed = parse_number<std::uint64_t>(value, line_no, key);
        } else {
            throw InputError("grid config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return grid;
}

ExperimentGrid read_grid_config(const std::filesystem::path& path, ExperimentGrid base) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open grid config '" + path.string() + "'");
    return parse_grid_config(in, std::move(base));
}

void write_rejection_csv(std::ostream& out, const RejectionTable& table) {
    out << "pi,xi,n,rejections,failures,rate\n";
    for (const auto& row : table.rows) {
        out << row.pi << ',' << row.xi << ',' << row.n << ',' << row.rejections << ',' << row.failures << ','
            << std::fixed << std::setprecision(3) << row.rate() << std::defaultfloat << '\n';
    }
}

namespace {

template <class T>
std::vector<T> distinct(const RejectionTable& table, T RejectionRow::*field) {
    std::vector<T> out;
    for (const auto& row : table.rows) {
        const T v = row.*field;
        if (std::none_of(out.begin(), out.end(), [&](T x) { return x == v; })) out.push_back(v);
    }
    return out;
}

void put_rate(std::ostream& out, const RejectionRow* row) {
    if (row) {
        out << std::setw(8) << std::fixed << std::setprecision(3) << row->rate() << std::defaultfloat;
    } else {
        out << std::setw(8) << "-";
    }
}

}  // namespace

void write_size_table(std::ostream& out, const RejectionTable& table) {
    const auto pis = distinct(table, &RejectionRow::pi);
    const auto ns = distinct(table, &RejectionRow::n);
    out << std::setw(6) << "pi";
    for (auto n : ns) out << std::setw(8) << n;
    out << '\n';
    for (double pi : pis) {
        out << std::setw(6) << pi;
        for (auto n : ns) put_rate(out, table.find(pi, 0.0, n));
        out << '\n';
    }
}

void write_power_table(std::ostream& out, const RejectionTable& table) {
    const auto pis = distinct(table, &RejectionRow::pi);
    const auto ns = distinct(table, &RejectionRow::n);
    const auto xis = distinct(table, &RejectionRow::xi);
    out << std::setw(6) << "pi" << std::setw(6) << "n";
    for (double xi : xis) out << std::setw(8) << xi;
    out << '\n';
    for (double pi : pis) {
        for (auto n : ns) {
            out << std::setw(6) << pi << std::setw(6) << n;
            for (double xi : xis) put_rate(out, table.find(pi, xi, n));
            out << '\n';
        }
    }
}

}  // namespace ginar
