#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ginar/mv_test.hpp"
#include "ginar/simulate.hpp"

namespace ginar {

/// INAR(1) study design: BerG(pi, xi) counting sequence (Bernoulli(pi) when
/// xi = 0), Poisson(1) innovation, Bernoulli + Poisson null.
struct ExperimentGrid {
    std::vector<double> pi_values;
    std::vector<double> xi_values;
    std::vector<std::size_t> n_values;
    std::size_t replications = 1000;
    std::size_t burn_in = 1000;
    double level = 0.05;
    std::uint64_t master_seed = 20240101;

    /// Throws ConfigError on empty axes, R = 0, a level outside (0, 1), or
    /// any (pi, xi) pair with pi + xi >= 1. include_xi selects whether the
    /// xi axis takes part in the check (the size design fixes xi = 0).
    void validate(bool include_xi) const;
};

/// Size design: pi in {0.2, ..., 0.8}, n in {500, 1000, 2000}, R = 1000.
ExperimentGrid default_size_grid();
/// Power design: pi in {0.2, ..., 0.6}, xi in {0.05, ..., 0.3}.
ExperimentGrid default_power_grid();

struct CellSpec {
    double pi = 0.0;
    double xi = 0.0;
    std::size_t n = 0;
    std::size_t replications = 0;
    std::size_t burn_in = 1000;
    double level = 0.05;
    std::uint64_t cell_seed = 0;
};

struct ReplicationOutcome {
    bool failed = false;
    bool reject = false;
    double statistic = 0.0;
};

struct CellCounts {
    std::size_t rejections = 0;
    std::size_t failures = 0;

    friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

/// Counting distribution for a cell: Bernoulli(pi) at xi = 0, else BerG.
CountDistributionSpec cell_counting(double pi, double xi);

/// The bernoulli,poisson null used throughout the study.
NullSpec bernoulli_poisson_null();

/// Seed for a cell, a pure function of the master seed and the cell's
/// coordinates, so cells are independent of grid order.
std::uint64_t cell_seed(std::uint64_t master_seed, double pi, double xi, std::size_t n);

/// One replication on substream `index` of the cell seed. Singular
/// matrices and other numerical failures become `failed`.
ReplicationOutcome run_replication(const CellSpec& cell, std::size_t index);

/// Per-replication outcomes in index order. The parallel version
/// distributes replications over OpenMP threads; both return identical
/// vectors.
std::vector<ReplicationOutcome> replicate_cell(const CellSpec& cell);
std::vector<ReplicationOutcome> replicate_cell_serial(const CellSpec& cell);

CellCounts run_cell(const CellSpec& cell);
CellCounts run_cell_serial(const CellSpec& cell);

struct RejectionRow {
    double pi = 0.0;
    double xi = 0.0;
    std::size_t n = 0;
    std::size_t rejections = 0;
    std::size_t failures = 0;
    std::size_t replications = 0;

    /// rejections / (replications - failures); 0 when every replication failed.
    double rate() const;
};

struct RejectionTable {
    std::vector<RejectionRow> rows;

    const RejectionRow* find(double pi, double xi, std::size_t n) const;
};

RejectionTable run_size_experiment(const ExperimentGrid& grid);
RejectionTable run_power_experiment(const ExperimentGrid& grid);

/// `key = value` lines, `#` comments. Keys: pi_values, xi_values, n_values
/// (comma-separated), replications, burn_in, level, seed. Missing keys keep
/// the defaults of `base`.
ExperimentGrid parse_grid_config(std::istream& in, ExperimentGrid base = {});
ExperimentGrid read_grid_config(const std::filesystem::path& path, ExperimentGrid base = {});

/// Header `pi,xi,n,rejections,failures,rate`.
void write_rejection_csv(std::ostream& out, const RejectionTable& table);
/// Size layout: one row per pi, one column per n.
void write_size_table(std::ostream& out, const RejectionTable& table);
/// Power layout: one row per (pi, n), one column per xi.
void write_power_table(std::ostream& out, const RejectionTable& table);

}  // namespace ginar
