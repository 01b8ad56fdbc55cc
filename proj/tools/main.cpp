// ptrans: transmission through one or two parity-invariant point
// interactions on a line. Subcommands: scan, roots, classify, preset, report.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ptrans/presets.hpp"
#include "ptrans/report.hpp"
#include "ptrans/resonance.hpp"
#include "ptrans/scan.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitNumericError = 3;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<double> k_max_override;
    std::optional<int> samples_override;
};

ptrans::Scenario load_scenario(const CommonOptions& opts) {
    ptrans::Scenario scenario = ptrans::parse_scenario(read_file(opts.config_path));
    if (opts.k_max_override) {
        if (!(*opts.k_max_override > scenario.k_range.k_min))
            throw ptrans::ParseError(0, 0, "--k-max must be above k_min");
        scenario.k_range.k_max = *opts.k_max_override;
    }
    if (opts.samples_override) {
        if (*opts.samples_override < 2)
            throw ptrans::ParseError(0, 0, "--samples must be at least 2");
        scenario.k_range.samples = *opts.samples_override;
    }
    return scenario;
}

std::filesystem::path output_path(const CommonOptions& opts, const std::string& suffix) {
    const std::filesystem::path config(opts.config_path);
    std::filesystem::create_directories(opts.out_dir);
    return std::filesystem::path(opts.out_dir) / (config.stem().string() + suffix);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
}

std::string scan_plot_script(const std::string& csv_name, bool single) {
    std::ostringstream ss;
    ss << "set datafile separator ','\n"
       << "set xlabel 'k'\n"
       << "set ylabel 'T'\n"
       << "set yrange [0:1.05]\n"
       << "plot '" << csv_name << "' using 1:2 with lines title '"
       << (single ? "T1" : "T2") << "'\n";
    return ss.str();
}

int run_scan_command(const CommonOptions& opts) {
    const ptrans::Scenario scenario = load_scenario(opts);
    const ptrans::ScanTable table = ptrans::run_scan(scenario);
    const auto csv_path = output_path(opts, "_scan.csv");
    write_file(csv_path, ptrans::to_csv(table));
    std::cout << csv_path.string() << "\n";
    if (scenario.outputs.count(ptrans::OutputKind::PlotScript)) {
        const auto gp_path = output_path(opts, "_scan.gp");
        write_file(gp_path, scan_plot_script(csv_path.filename().string(),
                                             scenario.mode == ptrans::ScanMode::Single));
        std::cout << gp_path.string() << "\n";
    }
    return 0;
}

int run_roots_command(const CommonOptions& opts) {
    const ptrans::Scenario scenario = load_scenario(opts);
    if (scenario.mode != ptrans::ScanMode::Double) {
        std::cerr << "error: roots requires a double-barrier config\n";
        return kExitNumericError;
    }
    const ptrans::DoubleBarrier config(scenario.j1, *scenario.j2, *scenario.separation);
    const ptrans::ResonanceSummary summary =
        ptrans::resonance_summary(config, scenario.k_range.k_max);
    std::cout << "relation: " << ptrans::to_string(summary.relation) << "\n";

    std::ostringstream csv;
    csv << "# tool = ptrans " << ptrans::kToolVersion << "\n";
    csv << "# relation = " << ptrans::to_string(summary.relation) << "\n";
    csv << "k,kind,residual\n";
    if (summary.relation != ptrans::Relation::None) {
        for (const auto& root : summary.roots) {
            csv << ptrans::format_double(root.k) << ',' << ptrans::to_string(root.kind) << ','
                << ptrans::format_double(root.residual) << "\n";
            std::cout << "k = " << ptrans::format_double(root.k) << "  ["
                      << ptrans::to_string(root.kind) << "]\n";
        }
    } else {
        for (const auto& cand : summary.incidental.candidates) {
            csv << ptrans::format_double(cand.k) << ",incidental,"
                << ptrans::format_double(std::abs(cand.t2_value - 1.0)) << "\n";
            std::cout << "incidental candidate k = " << ptrans::format_double(cand.k)
                      << (cand.verified ? "  (perfect at this separation)"
                                        : "  (requires a matching separation)")
                      << "\n";
        }
    }
    const auto csv_path = output_path(opts, "_roots.csv");
    write_file(csv_path, csv.str());
    std::cout << csv_path.string() << "\n";
    return 0;
}

int run_classify_command(const CommonOptions& opts) {
    const ptrans::Scenario scenario = load_scenario(opts);
    const auto describe = [](const ptrans::Junction& j, int index) {
        const auto cls = ptrans::classify_junction(j);
        std::cout << "junction " << index << ": " << ptrans::to_string(cls.tag);
        if (cls.length)
            std::cout << " (L = " << ptrans::format_double(*cls.length) << ")";
        std::cout << "\n";
    };
    describe(scenario.j1, 1);
    if (scenario.mode == ptrans::ScanMode::Double) {
        describe(*scenario.j2, 2);
        const ptrans::DoubleBarrier config(scenario.j1, *scenario.j2, *scenario.separation);
        std::cout << "relation: " << ptrans::to_string(ptrans::classify_relation(config)) << "\n";
    }
    return 0;
}

int run_preset_command(const std::string& name, const std::string& out_dir) {
    for (const auto& path : ptrans::run_preset(name, out_dir))
        std::cout << path.string() << "\n";
    return 0;
}

int run_report_command(const CommonOptions& opts) {
    const ptrans::Scenario scenario = load_scenario(opts);
    std::cout << ptrans::emit_report(scenario);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transmission and resonances for parity-invariant point interactions"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string preset_name;
    std::string preset_out = ".";

    const auto add_common = [&opts](CLI::App* cmd, bool with_samples) {
        cmd->add_option("--config", opts.config_path, "config file (key = value lines)")
            ->required();
        cmd->add_option("--out", opts.out_dir, "output directory");
        cmd->add_option("--k-max", opts.k_max_override, "override the config k_max");
        if (with_samples)
            cmd->add_option("--samples", opts.samples_override, "override the config samples");
    };

    CLI::App* scan_cmd = app.add_subcommand("scan", "sample T(k) and write a CSV table");
    add_common(scan_cmd, true);
    CLI::App* roots_cmd =
        app.add_subcommand("roots", "list perfect-transmission wavenumbers");
    add_common(roots_cmd, false);
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "name the boundary classes and the relation");
    add_common(classify_cmd, false);
    CLI::App* report_cmd = app.add_subcommand("report", "full text report");
    add_common(report_cmd, false);

    CLI::App* preset_cmd = app.add_subcommand("preset", "emit a bundled example data set");
    preset_cmd->add_option("name", preset_name, "one of fig3..fig8")->required();
    preset_cmd->add_option("--out", preset_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan_cmd->parsed())
            return run_scan_command(opts);
        if (roots_cmd->parsed())
            return run_roots_command(opts);
        if (classify_cmd->parsed())
            return run_classify_command(opts);
        if (report_cmd->parsed())
            return run_report_command(opts);
        if (preset_cmd->parsed())
            return run_preset_command(preset_name, preset_out);
    } catch (const ptrans::ParseError& err) {
        std::cerr << "error: " << opts.config_path << ": " << err.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitNumericError;
    }
    return 0;
}
