#include "ptrans/junction.hpp"

#include <cmath>
#include <numbers>

namespace ptrans {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    return t;
}

// theta = 2 * arccot(L / L0) in [0, 2pi); the infinite point maps to 0.
double angle_from_length(const ExtendedLength& l, double l0) {
    return 2.0 * std::atan2(l.q() * l0, l.p());
}

} // namespace

Junction Junction::from_angles(double theta_plus, double theta_minus, double l0) {
    if (!std::isfinite(theta_plus) || !std::isfinite(theta_minus))
        throw InvalidParameter("Junction: angles must be finite");
    if (!std::isfinite(l0) || l0 <= 0.0)
        throw InvalidParameter("Junction: L0 must be positive and finite");
    Junction j;
    j.theta_plus_ = reduce_angle(theta_plus);
    j.theta_minus_ = reduce_angle(theta_minus);
    j.l0_ = l0;
    j.l_plus_ = ExtendedLength(l0 * std::cos(0.5 * j.theta_plus_), std::sin(0.5 * j.theta_plus_));
    j.l_minus_ = ExtendedLength(l0 * std::cos(0.5 * j.theta_minus_), std::sin(0.5 * j.theta_minus_));
    return j;
}

Junction Junction::from_lengths(ExtendedLength l_plus, ExtendedLength l_minus, double l0) {
    if (!std::isfinite(l0) || l0 <= 0.0)
        throw InvalidParameter("Junction: L0 must be positive and finite");
    Junction j;
    j.l_plus_ = l_plus;
    j.l_minus_ = l_minus;
    j.l0_ = l0;
    j.theta_plus_ = angle_from_length(l_plus, l0);
    j.theta_minus_ = angle_from_length(l_minus, l0);
    return j;
}

Junction Junction::from_lengths(double l_plus, double l_minus, double l0) {
    return from_lengths(ExtendedLength::from_value(l_plus), ExtendedLength::from_value(l_minus), l0);
}

BoundaryClass classify_junction(const Junction& junction, double tol) {
    const ExtendedLength& lp = junction.l_plus();
    const ExtendedLength& lm = junction.l_minus();
    const bool p_inf = lp.is_infinite(tol);
    const bool m_inf = lm.is_infinite(tol);
    const bool p_zero = lp.is_zero(tol);
    const bool m_zero = lm.is_zero(tol);

    if (p_inf && m_inf)
        return {BoundaryTag::Neumann, std::nullopt};
    if (p_zero && m_zero)
        return {BoundaryTag::Dirichlet, std::nullopt};
    if (p_inf && m_zero)
        return {BoundaryTag::Free, std::nullopt};
    if (p_zero && m_inf)
        return {BoundaryTag::PhaseInversion, std::nullopt};
    if (m_zero && !p_inf && !p_zero)
        return {BoundaryTag::DiracDelta, lp.value()};
    if (!p_inf && !m_inf && lp.almost_equal(lm, tol))
        return {BoundaryTag::Decoupling, lp.value()};
    return {BoundaryTag::Generic, std::nullopt};
}

const char* to_string(BoundaryTag tag) {
    switch (tag) {
    case BoundaryTag::Decoupling: return "decoupling";
    case BoundaryTag::Neumann: return "neumann";
    case BoundaryTag::Dirichlet: return "dirichlet";
    case BoundaryTag::Free: return "free";
    case BoundaryTag::PhaseInversion: return "phase-inversion";
    case BoundaryTag::DiracDelta: return "dirac-delta";
    case BoundaryTag::Generic: return "generic";
    }
    return "generic";
}

} // namespace ptrans
