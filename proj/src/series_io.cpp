#include "ginar/series_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ginar/errors.hpp"

namespace ginar {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

CountSeries read_series(std::istream& in) {
    CountSeries series;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view field = trim(line);
        if (field.empty()) continue;
        if (!seen_content) {
            seen_content = true;
            std::string lowered(field);
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (lowered == "count" || lowered == "\"count\"") continue;
        }
        std::int64_t value = -1;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw InputError("line " + std::to_string(line_no) + ": '" + std::string(field) +
                             "' is not a nonnegative integer");
        }
        if (value < 0) {
            throw InputError("line " + std::to_string(line_no) + ": negative count " + std::to_string(value));
        }
        series.push_back(value);
    }
    if (series.empty()) throw InputError("series input contains no observations");
    return series;
}

CountSeries ingest_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open series file '" + path.string() + "'");
    try {
        return read_series(in);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_series(std::ostream& out, const CountSeries& series) {
    out << "count\n";
    for (auto v : series) out << v << '\n';
}

void write_series(const std::filesystem::path& path, const CountSeries& series) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
    write_series(out, series);
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace ginar
