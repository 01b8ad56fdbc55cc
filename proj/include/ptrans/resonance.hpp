#pragma once

#include <optional>
#include <vector>

#include "ptrans/scattering_double.hpp"

namespace ptrans {

/// Coefficients of the two linear conditions
///   r1 = M11 sin(ka) + M12 cos(ka),  r2 = M21 sin(ka) + M22 cos(ka),
/// which vanish simultaneously exactly at perfect transmission (for
/// non-opaque junctions): |Delta|^2 = k^4 d1^2 d2^2 + r1^2 + r2^2.
struct ResonanceMatrix {
    double m11 = 0.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 0.0;

    double max_abs() const;
};

ResonanceMatrix resonance_matrix(const DoubleBarrier& config, double k);

/// (r1, r2) evaluated at k.
std::pair<double, double> resonance_residuals(const DoubleBarrier& config, double k);

/// (r1, r2) divided by the largest |M| entry.
std::pair<double, double> resonance_residuals_normalized(const DoubleBarrier& config, double k);

/// det M = k^2 (alpha k^4 + 2 beta k^2 + gamma); the quartic's zero set on
/// k > 0 is the solvability condition for simultaneous resonance.
struct QuarticCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

QuarticCoefficients quartic_coefficients(const DoubleBarrier& config);

/// det(M) at k, for cross-checking the quartic's zero set.
double resonance_determinant(const DoubleBarrier& config, double k);

/// Parameter relations under which the quartic vanishes identically and
/// perfect transmission occurs at infinitely many k.
enum class Relation {
    SymmetricSame,    // (L2+, L2-) = ( L1+,  L1-)
    SymmetricSwapped, // (L2+, L2-) = ( L1-,  L1+)
    AntiSame,         // (L2+, L2-) = (-L1+, -L1-)
    AntiSwapped,      // (L2+, L2-) = (-L1-, -L1+)
    None,
};

/// Ties (degenerate parameter sets matching several relations) resolve in
/// the declaration order above.
Relation classify_relation(const DoubleBarrier& config, double tol = 1e-12);

const char* to_string(Relation relation);

enum class RootKind {
    TanCondition, // crossing of tan(ka) with f(k) (symmetric relations)
    SinCondition, // lattice root k = n pi / a (anti-symmetric relations)
    InverseSqrt,  // k = sqrt(-1 / (L+ L-)), present when L+ L- < 0
    Incidental,   // isolated quartic root outside the relation classes
};

const char* to_string(RootKind kind);

struct ResonanceRoot {
    double k = 0.0;
    RootKind kind = RootKind::TanCondition;
    double residual = 0.0; // |T2(k) - 1|
    bool tangency = false; // |g| touched zero without a sign change
};

/// Perfect-transmission wavenumbers in (0, k_max] for the symmetric family
/// (L2 = L1 or swapped). Solves the pole-free form
///   g(k) = (1 - k^2 L+L-) sin(ka) - k (L+ + L-) cos(ka) = 0
/// by grid bracketing plus bisection, and adds the inverse-sqrt root when
/// L+ L- < 0. Every returned root is verified against t2.
std::vector<ResonanceRoot> resonance_roots_symmetric(const Junction& j1, double a, double k_max);

/// Same for the anti-symmetric family (L2 = -L1 or swapped-negated):
/// lattice roots n pi / a plus the inverse-sqrt root when L+ L- < 0.
std::vector<ResonanceRoot> resonance_roots_antisymmetric(const Junction& j1, double a,
                                                         double k_max);

/// Relation-gated dispatcher; throws NotApplicableError when no relation
/// holds (use incidental_resonance for that regime).
std::vector<ResonanceRoot> resonance_roots(const DoubleBarrier& config, double k_max);

/// tan(ka) = f(k) with f(k) = k (L+ + L-) / (1 - k^2 L+ L-); kept for plot
/// emission alongside the pole-free solver.
double resonance_rhs_f(const Junction& j1, double k);

struct IncidentalCandidate {
    double k = 0.0;
    bool verified = false; // T2(k) = 1 within 1e-8 at this config's separation
    double t2_value = 0.0;
};

enum class IncidentalStatus { Candidates, NoCandidate, NotApplicable };

struct IncidentalResult {
    IncidentalStatus status = IncidentalStatus::NoCandidate;
    std::vector<IncidentalCandidate> candidates;
};

/// Positive roots of the quartic for relation-None configs, evaluated from
/// the factored closed form k^2 = -(d1 + d2)/(d1 X2 + d2 X1) and
/// k^2 = (d1 - d2)/(d2 X1 - d1 X2). Perfect transmission additionally needs
/// a matching separation, hence the per-candidate verification flag.
IncidentalResult incidental_resonance(const DoubleBarrier& config);

/// Lattice peak k_n = n pi / a and the half-width scale w of the resonance,
///   w = | k_n (L+ - L-) sqrt(T1(k_n)) / (2a (1 + k_n^2 L+ L-)) |,
/// valid for anti-symmetric configurations, where
/// T2(k) ~ 1 - ((k - k_n)/w)^2 near the peak. Throws SingularPeak when the
/// inverse-sqrt root collides with the lattice root.
struct PeakWidth {
    double k_n = 0.0;
    double width = 0.0;
};

PeakWidth peak_width(const Junction& j1, double a, int n);

/// Aggregate view used by reports: relation, quartic, verified roots.
struct ResonanceSummary {
    Relation relation = Relation::None;
    QuarticCoefficients quartic;
    std::vector<ResonanceRoot> roots;       // empty when relation is None
    IncidentalResult incidental;            // populated when relation is None
};

ResonanceSummary resonance_summary(const DoubleBarrier& config, double k_max);

} // namespace ptrans
