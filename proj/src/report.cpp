#include "ptrans/report.hpp"

#include <cmath>
#include <sstream>

#include "ptrans/errors.hpp"
#include "ptrans/resonance.hpp"
#include "ptrans/scan.hpp"
#include "ptrans/scattering_single.hpp"

namespace ptrans {

namespace {

std::string length_str(const ExtendedLength& l) {
    return l.is_finite() ? format_double(l.value()) : "inf";
}

void describe_junction(std::ostream& out, const Junction& j, int index) {
    const BoundaryClass cls = classify_junction(j);
    out << "junction " << index << ": L+ = " << length_str(j.l_plus())
        << ", L- = " << length_str(j.l_minus()) << "  (theta+ = " << format_double(j.theta_plus())
        << ", theta- = " << format_double(j.theta_minus()) << ")\n";
    out << "  boundary class: " << to_string(cls.tag);
    if (cls.length)
        out << " (L = " << format_double(*cls.length) << ")";
    out << "\n";
}

// With junction 1 a pure delta (L1- = 0), the four relation classes are the
// four delta-partner placements of junction 2.
const char* delta_case(Relation relation) {
    switch (relation) {
    case Relation::SymmetricSame: return "(I): (L2+, L2-) = (L1+, 0)";
    case Relation::AntiSame: return "(II): (L2+, L2-) = (-L1+, 0)";
    case Relation::SymmetricSwapped: return "(III): (L2+, L2-) = (0, L1+)";
    case Relation::AntiSwapped: return "(IV): (L2+, L2-) = (0, -L1+)";
    case Relation::None: break;
    }
    return nullptr;
}

void describe_single(std::ostream& out, const Scenario& scenario) {
    const Junction& j = scenario.j1;
    if (j.l_plus().is_finite() && j.l_minus().is_finite()) {
        const double x = j.l_plus().value() * j.l_minus().value();
        if (x < 0.0) {
            const double k_star = 1.0 / std::sqrt(-x);
            out << "perfect transmission: T1 = 1 at k = " << format_double(k_star)
                << "  (T1 = " << format_double(t1(j, k_star)) << ")\n";
        } else if (classify_junction(j).tag == BoundaryTag::Decoupling) {
            out << "opaque junction: T1 vanishes identically\n";
        } else {
            out << "no perfect-transmission wavenumber (L+ L- >= 0)\n";
        }
    }
    const double k_mid = 0.5 * (scenario.k_range.k_min + scenario.k_range.k_max);
    out << "T1 at k = " << format_double(k_mid) << ": " << format_double(t1(j, k_mid)) << "\n";
}

void describe_double(std::ostream& out, const Scenario& scenario) {
    const DoubleBarrier config(scenario.j1, *scenario.j2, *scenario.separation);
    out << "separation a = " << format_double(config.separation) << "\n";

    const bool finite = config.left.l_plus().is_finite() &&
                        config.left.l_minus().is_finite() &&
                        config.right.l_plus().is_finite() && config.right.l_minus().is_finite();
    const Relation relation = classify_relation(config);
    out << "parameter relation: " << to_string(relation) << "\n";

    if (classify_junction(config.left).tag == BoundaryTag::DiracDelta) {
        if (const char* label = delta_case(relation))
            out << "delta-potential special case " << label << "\n";
    }

    if (!finite) {
        out << "resonance analysis requires finite lengths; skipped\n";
        return;
    }

    const ResonanceSummary summary = resonance_summary(config, scenario.k_range.k_max);
    out << "quartic coefficients: alpha = " << format_double(summary.quartic.alpha)
        << ", beta = " << format_double(summary.quartic.beta)
        << ", gamma = " << format_double(summary.quartic.gamma) << "\n";

    if (relation != Relation::None) {
        out << "relation holds: the resonance condition is satisfiable at every k;\n"
            << "perfect-transmission roots in (0, " << format_double(scenario.k_range.k_max)
            << "]:\n";
        if (summary.roots.empty())
            out << "  none (junction opaque: transmission vanishes identically)\n";
        for (const ResonanceRoot& root : summary.roots) {
            out << "  k = " << format_double(root.k) << "  [" << to_string(root.kind) << "]"
                << "  |T2 - 1| = " << format_double(root.residual);
            if (root.tangency)
                out << "  (tangency)";
            out << "\n";
        }
        if (relation == Relation::AntiSame || relation == Relation::AntiSwapped) {
            out << "lattice peak widths:\n";
            for (int n = 1; n <= 3; ++n) {
                try {
                    const PeakWidth pw = peak_width(config.left, config.separation, n);
                    if (pw.k_n > scenario.k_range.k_max)
                        break;
                    out << "  n = " << n << ": k_n = " << format_double(pw.k_n)
                        << ", w = " << format_double(pw.width) << "\n";
                } catch (const SingularPeak&) {
                    out << "  n = " << n << ": singular (inverse-sqrt root on the lattice)\n";
                }
            }
        }
    } else {
        out << "no relation holds; incidental candidates from the quartic:\n";
        switch (summary.incidental.status) {
        case IncidentalStatus::NoCandidate:
            out << "  none (no positive quartic root)\n";
            break;
        case IncidentalStatus::NotApplicable:
            out << "  not applicable\n";
            break;
        case IncidentalStatus::Candidates:
            for (const IncidentalCandidate& cand : summary.incidental.candidates) {
                out << "  k = " << format_double(cand.k)
                    << "  T2(k) = " << format_double(cand.t2_value)
                    << (cand.verified ? "  [perfect at this separation]"
                                      : "  [requires a matching separation]")
                    << "\n";
            }
            break;
        }
    }
}

} // namespace

std::string emit_report(const Scenario& scenario) {
    std::ostringstream out;
    out << "ptrans " << kToolVersion << " report\n";
    out << "mode: " << (scenario.mode == ScanMode::Single ? "single" : "double") << "\n";
    describe_junction(out, scenario.j1, 1);
    if (scenario.mode == ScanMode::Double)
        describe_junction(out, *scenario.j2, 2);
    if (scenario.mode == ScanMode::Single)
        describe_single(out, scenario);
    else
        describe_double(out, scenario);
    return out.str();
}

} // namespace ptrans
