#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptrans/scenario.hpp"

namespace ptrans {

struct ScanRow {
    double k = 0.0;
    double t = 0.0;
    std::optional<double> r1;
    std::optional<double> r2;
};

/// Uniform (k, T) samples plus a scenario echo for the CSV header.
struct ScanTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<ScanRow> rows;
    bool has_residuals = false;
};

/// Samples T1 (single mode) or T2 (double mode) uniformly on
/// [k_min, k_max]. Double-mode tables with all lengths finite also carry the
/// normalized resonance residuals r1, r2 per row.
ScanTable run_scan(const Scenario& scenario);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

/// `# key = value` metadata lines, a `k,T[,r1,r2]` header, LF endings.
void write_csv(const ScanTable& table, std::ostream& out);
std::string to_csv(const ScanTable& table);

} // namespace ptrans
