#pragma once

#include <filesystem>
#include <iosfwd>

#include "ginar/simulate.hpp"

namespace ginar {

/// Single-column CSV; the `count` header line is optional and blank lines
/// are skipped. Throws InputError with a 1-based line number on any value
/// that is not a nonnegative integer, and on empty input.
CountSeries read_series(std::istream& in);
CountSeries ingest_series(const std::filesystem::path& path);

/// Writes the `count` header followed by one value per line.
void write_series(std::ostream& out, const CountSeries& series);
void write_series(const std::filesystem::path& path, const CountSeries& series);

}  // namespace ginar
