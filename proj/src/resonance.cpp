#include "ptrans/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptrans/detail/phase.hpp"
#include "ptrans/errors.hpp"
#include "ptrans/scattering_single.hpp"

namespace ptrans {

namespace {

constexpr double kPi = std::numbers::pi;

struct Lengths {
    double l1p, l1m, l2p, l2m;
    double d1, d2; // L+ - L-
    double x1, x2; // L+ L-
    double s1, s2; // L+ + L-
};

Lengths finite_lengths(const DoubleBarrier& config) {
    const auto finite = [](const Junction& j) {
        return j.l_plus().is_finite() && j.l_minus().is_finite();
    };
    if (!finite(config.left) || !finite(config.right))
        throw InvalidParameter("resonance: finite lengths required");
    Lengths l;
    l.l1p = config.left.l_plus().value();
    l.l1m = config.left.l_minus().value();
    l.l2p = config.right.l_plus().value();
    l.l2m = config.right.l_minus().value();
    l.d1 = l.l1p - l.l1m;
    l.d2 = l.l2p - l.l2m;
    l.x1 = l.l1p * l.l1m;
    l.x2 = l.l2p * l.l2m;
    l.s1 = l.l1p + l.l1m;
    l.s2 = l.l2p + l.l2m;
    return l;
}

std::pair<double, double> junction_sx(const Junction& j) {
    if (!j.l_plus().is_finite() || !j.l_minus().is_finite())
        throw InvalidParameter("resonance: finite lengths required");
    const double lp = j.l_plus().value();
    const double lm = j.l_minus().value();
    return {lp + lm, lp * lm};
}

// Pole-free resonance residual for the symmetric family.
double g_resid(double s, double x, double a, double k) {
    const auto [sn, cs] = detail::sincos_reduced(k, a);
    return (1.0 - k * k * x) * sn - k * s * cs;
}

double g_scale(double s, double x, double k) {
    return 1.0 + k * k * std::abs(x) + k * std::abs(s);
}

void require_window(double a, double k_max) {
    if (!std::isfinite(a) || a <= 0.0)
        throw InvalidParameter("resonance: separation must be positive and finite");
    if (!std::isfinite(k_max) || k_max <= 0.0)
        throw InvalidParameter("resonance: k_max must be positive and finite");
}

void verify_and_append(std::vector<ResonanceRoot>& roots, const DoubleBarrier& config, double k,
                       RootKind kind, double threshold, bool tangency = false) {
    if (k <= 0.0)
        return;
    const double residual = std::abs(t2(config, k) - 1.0);
    if (residual >= threshold)
        return;
    // Merge with an existing root when the solver and the factor root agree.
    for (auto& r : roots) {
        if (std::abs(r.k - k) < 1e-9) {
            if (kind == RootKind::InverseSqrt)
                r.kind = RootKind::InverseSqrt;
            return;
        }
    }
    roots.push_back({k, kind, residual, tangency});
}

} // namespace

ResonanceMatrix resonance_matrix(const DoubleBarrier& config, double k) {
    if (!std::isfinite(k))
        throw InvalidParameter("resonance_matrix: k must be finite");
    const Lengths l = finite_lengths(config);
    const double k3 = k * k * k;
    ResonanceMatrix m;
    m.m11 = 2.0 * (1.0 - k3 * k * l.x1 * l.x2);
    m.m12 = -k * (l.s1 + l.s2) - k3 * (l.x1 * l.s2 + l.s1 * l.x2);
    m.m21 = k * (l.s1 - l.s2) - k3 * (l.x1 * l.s2 - l.s1 * l.x2);
    m.m22 = -2.0 * k * k * (l.x1 - l.x2);
    return m;
}

double ResonanceMatrix::max_abs() const {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

std::pair<double, double> resonance_residuals(const DoubleBarrier& config, double k) {
    const ResonanceMatrix m = resonance_matrix(config, k);
    const auto [sn, cs] = detail::sincos_reduced(k, config.separation);
    return {m.m11 * sn + m.m12 * cs, m.m21 * sn + m.m22 * cs};
}

std::pair<double, double> resonance_residuals_normalized(const DoubleBarrier& config, double k) {
    const ResonanceMatrix m = resonance_matrix(config, k);
    const auto [sn, cs] = detail::sincos_reduced(k, config.separation);
    const double scale = std::max(m.max_abs(), 1e-300);
    return {(m.m11 * sn + m.m12 * cs) / scale, (m.m21 * sn + m.m22 * cs) / scale};
}

QuarticCoefficients quartic_coefficients(const DoubleBarrier& config) {
    const Lengths l = finite_lengths(config);
    QuarticCoefficients q;
    // Factored forms vanish exactly (not just to rounding) on the relation
    // classes: d1 X2 -+ d2 X1 and d1 -+ d2 are exact zeros there.
    q.alpha = (l.d1 * l.x2 - l.d2 * l.x1) * (l.d1 * l.x2 + l.d2 * l.x1);
    q.beta = l.d1 * l.d1 * l.x2 - l.d2 * l.d2 * l.x1;
    q.gamma = (l.d1 - l.d2) * (l.d1 + l.d2);
    return q;
}

double resonance_determinant(const DoubleBarrier& config, double k) {
    const ResonanceMatrix m = resonance_matrix(config, k);
    return m.m11 * m.m22 - m.m12 * m.m21;
}

Relation classify_relation(const DoubleBarrier& config, double tol) {
    const ExtendedLength& l1p = config.left.l_plus();
    const ExtendedLength& l1m = config.left.l_minus();
    const ExtendedLength& l2p = config.right.l_plus();
    const ExtendedLength& l2m = config.right.l_minus();

    if (l2p.almost_equal(l1p, tol) && l2m.almost_equal(l1m, tol))
        return Relation::SymmetricSame;
    if (l2p.almost_equal(l1m, tol) && l2m.almost_equal(l1p, tol))
        return Relation::SymmetricSwapped;
    if (l2p.almost_equal(l1p.negated(), tol) && l2m.almost_equal(l1m.negated(), tol))
        return Relation::AntiSame;
    if (l2p.almost_equal(l1m.negated(), tol) && l2m.almost_equal(l1p.negated(), tol))
        return Relation::AntiSwapped;
    return Relation::None;
}

const char* to_string(Relation relation) {
    switch (relation) {
    case Relation::SymmetricSame: return "symmetric-same";
    case Relation::SymmetricSwapped: return "symmetric-swapped";
    case Relation::AntiSame: return "anti-same";
    case Relation::AntiSwapped: return "anti-swapped";
    case Relation::None: return "none";
    }
    return "none";
}

const char* to_string(RootKind kind) {
    switch (kind) {
    case RootKind::TanCondition: return "tan-condition";
    case RootKind::SinCondition: return "sin-condition";
    case RootKind::InverseSqrt: return "inverse-sqrt";
    case RootKind::Incidental: return "incidental";
    }
    return "tan-condition";
}

double resonance_rhs_f(const Junction& j1, double k) {
    const auto [s, x] = junction_sx(j1);
    return k * s / (1.0 - k * k * x);
}

std::vector<ResonanceRoot> resonance_roots_symmetric(const Junction& j1, double a, double k_max) {
    require_window(a, k_max);
    const auto [s, x] = junction_sx(j1);
    const DoubleBarrier config(j1, j1, a);

    // Step bounded by the shortest oscillation scale, halved for safety.
    const double l_abs = std::max(std::abs(j1.l_plus().value()), std::abs(j1.l_minus().value()));
    double step = kPi / (8.0 * a);
    if (l_abs > 0.0 && k_max > 0.0)
        step = std::min(step, kPi / (8.0 * l_abs * k_max));
    step *= 0.5;
    step = std::max(step, k_max / 4e6);

    // Grid nodes; the first one sits just above zero so a crossing inside
    // the first step is still bracketed (g(0) = 0 identically).
    std::vector<double> grid;
    grid.push_back(std::min(step, k_max) * 1e-6);
    for (double k = step; k < k_max; k += step)
        grid.push_back(k);
    grid.push_back(k_max);

    std::vector<ResonanceRoot> roots;
    const auto bisect = [&](double lo, double hi, double g_lo) {
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = g_resid(s, x, a, mid);
            if (g_mid == 0.0)
                return mid;
            if (g_lo * g_mid < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                g_lo = g_mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    double k_prev = grid[0];
    double g_prev = g_resid(s, x, a, k_prev);
    double k_before = k_prev;
    bool have_before = false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double k = grid[i];
        const double g_cur = g_resid(s, x, a, k);
        if (g_prev == 0.0) {
            verify_and_append(roots, config, k_prev, RootKind::TanCondition, 1e-8);
        } else if (g_prev * g_cur < 0.0) {
            verify_and_append(roots, config, bisect(k_prev, k, g_prev), RootKind::TanCondition,
                              1e-8);
        } else if (have_before && std::abs(g_prev) < std::abs(g_resid(s, x, a, k_before)) &&
                   std::abs(g_prev) < std::abs(g_cur) &&
                   std::abs(g_prev) / g_scale(s, x, k_prev) < 1e-6) {
            // Candidate double root: |g| dips without a sign change. Refine
            // by ternary search and accept only a genuine touch of zero.
            double lo = k_before, hi = k;
            while (hi - lo > 1e-13) {
                const double m1 = lo + (hi - lo) / 3.0;
                const double m2 = hi - (hi - lo) / 3.0;
                if (std::abs(g_resid(s, x, a, m1)) < std::abs(g_resid(s, x, a, m2)))
                    hi = m2;
                else
                    lo = m1;
            }
            const double k_touch = 0.5 * (lo + hi);
            if (std::abs(g_resid(s, x, a, k_touch)) / g_scale(s, x, k_touch) < 1e-10)
                verify_and_append(roots, config, k_touch, RootKind::TanCondition, 1e-8, true);
        }
        k_before = k_prev;
        have_before = true;
        k_prev = k;
        g_prev = g_cur;
    }

    if (x < 0.0) {
        const double k_sqrt = 1.0 / std::sqrt(-x);
        if (k_sqrt <= k_max)
            verify_and_append(roots, config, k_sqrt, RootKind::InverseSqrt, 1e-8);
    }

    std::sort(roots.begin(), roots.end(),
              [](const ResonanceRoot& a_, const ResonanceRoot& b_) { return a_.k < b_.k; });
    return roots;
}

std::vector<ResonanceRoot> resonance_roots_antisymmetric(const Junction& j1, double a,
                                                         double k_max) {
    require_window(a, k_max);
    const auto [s, x] = junction_sx(j1);
    (void)s;
    const DoubleBarrier config(j1, j1.negated(), a);

    std::vector<ResonanceRoot> roots;
    if (x < 0.0) {
        const double k_sqrt = 1.0 / std::sqrt(-x);
        if (k_sqrt <= k_max)
            verify_and_append(roots, config, k_sqrt, RootKind::InverseSqrt, 1e-10);
    }
    const auto n_max = static_cast<long>(std::floor(k_max * a / kPi * (1.0 + 1e-15)));
    for (long n = 1; n <= n_max; ++n) {
        const double k = static_cast<double>(n) * kPi / a;
        if (k > k_max * (1.0 + 1e-15))
            break;
        verify_and_append(roots, config, k, RootKind::SinCondition, 1e-10);
    }
    std::sort(roots.begin(), roots.end(),
              [](const ResonanceRoot& a_, const ResonanceRoot& b_) { return a_.k < b_.k; });
    return roots;
}

std::vector<ResonanceRoot> resonance_roots(const DoubleBarrier& config, double k_max) {
    switch (classify_relation(config)) {
    case Relation::SymmetricSame:
    case Relation::SymmetricSwapped:
        return resonance_roots_symmetric(config.left, config.separation, k_max);
    case Relation::AntiSame:
    case Relation::AntiSwapped:
        return resonance_roots_antisymmetric(config.left, config.separation, k_max);
    case Relation::None:
        break;
    }
    throw NotApplicableError("resonance_roots: no parameter relation holds");
}

IncidentalResult incidental_resonance(const DoubleBarrier& config) {
    IncidentalResult result;
    if (classify_relation(config) != Relation::None) {
        result.status = IncidentalStatus::NotApplicable;
        return result;
    }
    const Lengths l = finite_lengths(config);

    // alpha = -(den_a)(den_b); each quartic root in k^2 pairs one numerator
    // with one denominator factor, which stays valid as alpha -> 0.
    const double den_a = l.d1 * l.x2 + l.d2 * l.x1;
    const double den_b = l.d2 * l.x1 - l.d1 * l.x2;
    const double scale = std::abs(l.d1 * l.x2) + std::abs(l.d2 * l.x1) + 1e-300;

    const auto consider = [&](double num, double den) {
        if (std::abs(den) <= 1e-14 * scale)
            return;
        const double k2 = num / den;
        if (!(k2 > 0.0) || !std::isfinite(k2))
            return;
        IncidentalCandidate cand;
        cand.k = std::sqrt(k2);
        cand.t2_value = t2(config, cand.k);
        cand.verified = std::abs(cand.t2_value - 1.0) < 1e-8;
        result.candidates.push_back(cand);
    };
    consider(-(l.d1 + l.d2), den_a);
    consider(l.d1 - l.d2, den_b);

    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const IncidentalCandidate& a_, const IncidentalCandidate& b_) {
                  return a_.k < b_.k;
              });
    result.status =
        result.candidates.empty() ? IncidentalStatus::NoCandidate : IncidentalStatus::Candidates;
    return result;
}

PeakWidth peak_width(const Junction& j1, double a, int n) {
    if (!std::isfinite(a) || a <= 0.0)
        throw InvalidParameter("peak_width: separation must be positive and finite");
    if (n < 1)
        throw InvalidParameter("peak_width: peak index must be >= 1");
    const auto [s, x] = junction_sx(j1);
    (void)s;
    const double lp = j1.l_plus().value();
    const double lm = j1.l_minus().value();
    const double k_n = static_cast<double>(n) * kPi / a;
    const double denom = 1.0 + k_n * k_n * x;
    if (std::abs(denom) <= 1e-10 * (1.0 + k_n * k_n * std::abs(x)))
        throw SingularPeak("peak_width: inverse-sqrt root coincides with the lattice root");
    PeakWidth pw;
    pw.k_n = k_n;
    pw.width = std::abs(k_n * (lp - lm) * std::sqrt(t1(j1, k_n)) / (2.0 * a * denom));
    return pw;
}

ResonanceSummary resonance_summary(const DoubleBarrier& config, double k_max) {
    ResonanceSummary summary;
    summary.relation = classify_relation(config);
    summary.quartic = quartic_coefficients(config);
    if (summary.relation == Relation::None) {
        summary.incidental = incidental_resonance(config);
    } else {
        summary.roots = resonance_roots(config, k_max);
        summary.incidental.status = IncidentalStatus::NotApplicable;
    }
    return summary;
}

} // namespace ptrans
