#include "ptrans/presets.hpp"

#include <fstream>
#include <sstream>

#include "ptrans/detail/phase.hpp"
#include "ptrans/errors.hpp"
#include "ptrans/resonance.hpp"
#include "ptrans/scan.hpp"
#include "ptrans/scattering_single.hpp"

namespace ptrans {

namespace {

struct PresetSpec {
    const char* name;
    double l1p, l1m;
    double l2p, l2m; // only for the scan presets
    bool has_j2;
    bool anti; // selects the anti-symmetric root solver
};

constexpr double kSeparation = 1.0;
constexpr double kMaxK = 10.0;
constexpr int kSamples = 2000;

const PresetSpec* find_spec(const std::string& name) {
    static const PresetSpec specs[] = {
        {"fig3", 1.0, 0.5, 0.0, 0.0, false, false},
        {"fig4", -1.0, -0.5, 0.0, 0.0, false, false},
        {"fig5", 5.0, -0.5, 0.0, 0.0, false, false},
        {"fig6", -5.0, 0.5, 0.0, 0.0, false, false},
        {"fig7", 1.0, 0.5, 1.0, 0.5, true, false},
        {"fig8", 2.0, -1.0, -2.0, 1.0, true, true},
    };
    for (const auto& spec : specs)
        if (name == spec.name)
            return &spec;
    return nullptr;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
}

std::string roots_csv(const std::vector<ResonanceRoot>& roots) {
    std::ostringstream ss;
    ss << "# tool = ptrans " << kToolVersion << "\n";
    ss << "k,kind,residual\n";
    for (const ResonanceRoot& root : roots)
        ss << format_double(root.k) << ',' << to_string(root.kind) << ','
           << format_double(root.residual) << "\n";
    return ss.str();
}

std::string condition_curves_csv(const Junction& j1) {
    std::ostringstream ss;
    ss << "# tool = ptrans " << kToolVersion << "\n";
    ss << "# L1_plus = " << format_double(j1.l_plus().value())
       << "\n# L1_minus = " << format_double(j1.l_minus().value())
       << "\n# a = " << format_double(kSeparation) << "\n";
    ss << "k,tan_ka,f_k\n";
    for (int i = 0; i < kSamples; ++i) {
        const double k = 1e-3 + (kMaxK - 1e-3) * i / (kSamples - 1);
        const auto [sn, cs] = detail::sincos_reduced(k, kSeparation);
        ss << format_double(k) << ',' << format_double(sn / cs) << ','
           << format_double(resonance_rhs_f(j1, k)) << "\n";
    }
    return ss.str();
}

std::string transmission_curves_csv(const DoubleBarrier& config) {
    std::ostringstream ss;
    ss << "# tool = ptrans " << kToolVersion << "\n";
    ss << "# L1_plus = " << format_double(config.left.l_plus().value())
       << "\n# L1_minus = " << format_double(config.left.l_minus().value())
       << "\n# L2_plus = " << format_double(config.right.l_plus().value())
       << "\n# L2_minus = " << format_double(config.right.l_minus().value())
       << "\n# a = " << format_double(config.separation) << "\n";
    ss << "k,T2,T1\n";
    for (int i = 0; i < kSamples; ++i) {
        const double k = 1e-3 + (kMaxK - 1e-3) * i / (kSamples - 1);
        ss << format_double(k) << ',' << format_double(t2(config, k)) << ','
           << format_double(t1(config.left, k)) << "\n";
    }
    return ss.str();
}

std::string condition_plot_script(const std::string& name) {
    std::ostringstream ss;
    ss << "# resonance condition curves: crossings mark perfect transmission\n"
       << "set datafile separator ','\n"
       << "set xlabel 'k'\n"
       << "set yrange [-10:10]\n"
       << "set key top right\n"
       << "plot '" << name << "_curves.csv' using 1:2 with lines title 'tan(ka)', \\\n"
       << "     '" << name << "_curves.csv' using 1:3 with lines title 'f(k)', \\\n"
       << "     '" << name << "_roots.csv' using 1:(0) with points pt 7 title 'roots'\n";
    return ss.str();
}

std::string transmission_plot_script(const std::string& name) {
    std::ostringstream ss;
    ss << "# transmission probability for the double barrier (and its left\n"
       << "# junction alone, dashed)\n"
       << "set datafile separator ','\n"
       << "set xlabel 'k'\n"
       << "set ylabel 'T'\n"
       << "set yrange [0:1.05]\n"
       << "set key bottom right\n"
       << "plot '" << name << "_curves.csv' using 1:2 with lines title 'T2', \\\n"
       << "     '" << name << "_curves.csv' using 1:3 with lines dashtype 2 title 'T1', \\\n"
       << "     '" << name << "_roots.csv' using 1:(1.0) with points pt 6 title 'T2 = 1'\n";
    return ss.str();
}

} // namespace

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

bool is_preset(const std::string& name) {
    return find_spec(name) != nullptr;
}

std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const std::filesystem::path& out_dir) {
    const PresetSpec* spec = find_spec(name);
    if (!spec)
        throw InvalidParameter("unknown preset '" + name + "'");
    std::filesystem::create_directories(out_dir);

    const Junction j1 = Junction::from_lengths(spec->l1p, spec->l1m);

    std::string curves;
    std::string script;
    std::vector<ResonanceRoot> roots;
    if (spec->has_j2) {
        const DoubleBarrier config(j1, Junction::from_lengths(spec->l2p, spec->l2m), kSeparation);
        curves = transmission_curves_csv(config);
        script = transmission_plot_script(name);
        roots = spec->anti ? resonance_roots_antisymmetric(j1, kSeparation, kMaxK)
                           : resonance_roots_symmetric(j1, kSeparation, kMaxK);
    } else {
        curves = condition_curves_csv(j1);
        script = condition_plot_script(name);
        roots = resonance_roots_symmetric(j1, kSeparation, kMaxK);
    }

    const std::filesystem::path curves_path = out_dir / (name + "_curves.csv");
    const std::filesystem::path roots_path = out_dir / (name + "_roots.csv");
    const std::filesystem::path script_path = out_dir / (name + ".gp");
    write_text(curves_path, curves);
    write_text(roots_path, roots_csv(roots));
    write_text(script_path, script);
    return {curves_path, roots_path, script_path};
}

} // namespace ptrans
