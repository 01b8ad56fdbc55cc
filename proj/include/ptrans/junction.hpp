#pragma once

#include <optional>
#include <string>

#include "ptrans/extended_length.hpp"

namespace ptrans {

/// One parity-invariant point interaction on the line.
///
/// The junction is parametrized by two angles (theta+, theta-) on a torus,
/// or equivalently by two extended lengths L(+-) = L0 * cot(theta(+-)/2).
/// theta = 0 maps to the infinite length, theta = pi to L = 0. The scale L0
/// defaults to 1 (natural units); all formulas depend only on k*L and k*a.
class Junction {
public:
    static Junction from_angles(double theta_plus, double theta_minus, double l0 = 1.0);
    static Junction from_lengths(ExtendedLength l_plus, ExtendedLength l_minus, double l0 = 1.0);
    static Junction from_lengths(double l_plus, double l_minus, double l0 = 1.0);

    double theta_plus() const { return theta_plus_; }
    double theta_minus() const { return theta_minus_; }
    double l0() const { return l0_; }
    const ExtendedLength& l_plus() const { return l_plus_; }
    const ExtendedLength& l_minus() const { return l_minus_; }

    /// Torus coordinates xi = (theta+ + theta-)/2, zeta = (theta+ - theta-)/2.
    double xi() const { return 0.5 * (theta_plus_ + theta_minus_); }
    double zeta() const { return 0.5 * (theta_plus_ - theta_minus_); }

    /// Junction with both lengths negated (the anti-symmetric partner).
    Junction negated() const {
        return from_lengths(l_plus_.negated(), l_minus_.negated(), l0_);
    }

    /// Junction with the two lengths exchanged.
    Junction swapped() const { return from_lengths(l_minus_, l_plus_, l0_); }

private:
    Junction() = default;
    double theta_plus_ = 0.0;
    double theta_minus_ = 0.0;
    double l0_ = 1.0;
    ExtendedLength l_plus_;
    ExtendedLength l_minus_;
};

/// Named boundary-condition families.
enum class BoundaryTag {
    Decoupling,     // L+ = L- finite: the half lines decouple (Robin walls)
    Neumann,        // both lengths infinite
    Dirichlet,      // both lengths zero
    Free,           // L+ infinite, L- = 0: no interaction at all
    PhaseInversion, // L+ = 0, L- infinite: psi(+0) = -psi(-0)
    DiracDelta,     // L- = 0, L+ finite nonzero
    Generic,
};

struct BoundaryClass {
    BoundaryTag tag = BoundaryTag::Generic;
    /// Defining length for Decoupling (the common L) and DiracDelta (L+).
    std::optional<double> length;
};

/// Most specific matching family wins; near-misses beyond `tol` on the
/// canonical (p, q) coordinates classify as Generic.
BoundaryClass classify_junction(const Junction& junction, double tol = 1e-12);

const char* to_string(BoundaryTag tag);

} // namespace ptrans
