#include "ptrans/scan.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

#include "ptrans/resonance.hpp"
#include "ptrans/scattering_double.hpp"
#include "ptrans/scattering_single.hpp"

namespace ptrans {

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), ptr);
}

namespace {

std::string format_length(const ExtendedLength& l) {
    return l.is_finite() ? format_double(l.value()) : "inf";
}

void echo_junction(ScanTable& table, const Junction& j, int index) {
    const std::string prefix = "L" + std::to_string(index);
    table.meta.emplace_back(prefix + "_plus", format_length(j.l_plus()));
    table.meta.emplace_back(prefix + "_minus", format_length(j.l_minus()));
}

} // namespace

ScanTable run_scan(const Scenario& scenario) {
    ScanTable table;
    table.meta.emplace_back("tool", std::string("ptrans ") + kToolVersion);
    table.meta.emplace_back("mode", scenario.mode == ScanMode::Single ? "single" : "double");
    echo_junction(table, scenario.j1, 1);
    if (scenario.mode == ScanMode::Double) {
        echo_junction(table, *scenario.j2, 2);
        table.meta.emplace_back("a", format_double(*scenario.separation));
    }
    table.meta.emplace_back("k_min", format_double(scenario.k_range.k_min));
    table.meta.emplace_back("k_max", format_double(scenario.k_range.k_max));
    table.meta.emplace_back("samples", std::to_string(scenario.k_range.samples));

    const int n = scenario.k_range.samples;
    const double k_min = scenario.k_range.k_min;
    const double k_max = scenario.k_range.k_max;

    if (scenario.mode == ScanMode::Single) {
        table.rows.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double k = k_min + (k_max - k_min) * i / (n - 1);
            table.rows.push_back({k, t1(scenario.j1, k), std::nullopt, std::nullopt});
        }
        return table;
    }

    const DoubleBarrier config(scenario.j1, *scenario.j2, *scenario.separation);
    const bool finite = scenario.j1.l_plus().is_finite() && scenario.j1.l_minus().is_finite() &&
                        scenario.j2->l_plus().is_finite() && scenario.j2->l_minus().is_finite();
    table.has_residuals = finite;
    table.rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double k = k_min + (k_max - k_min) * i / (n - 1);
        ScanRow row;
        row.k = k;
        row.t = t2(config, k);
        if (finite) {
            const auto [r1, r2] = resonance_residuals_normalized(config, k);
            row.r1 = r1;
            row.r2 = r2;
        }
        table.rows.push_back(row);
    }
    return table;
}

void write_csv(const ScanTable& table, std::ostream& out) {
    for (const auto& [key, value] : table.meta)
        out << "# " << key << " = " << value << "\n";
    out << (table.has_residuals ? "k,T,r1,r2" : "k,T") << "\n";
    for (const ScanRow& row : table.rows) {
        out << format_double(row.k) << ',' << format_double(row.t);
        if (table.has_residuals)
            out << ',' << format_double(*row.r1) << ',' << format_double(*row.r2);
        out << "\n";
    }
}

std::string to_csv(const ScanTable& table) {
    std::ostringstream ss;
    write_csv(table, ss);
    return ss.str();
}

} // namespace ptrans
