#pragma once

#include <complex>

#include "ptrans/junction.hpp"

namespace ptrans {

/// Plane-wave scattering off one junction. For a unit incident wave the
/// outgoing state is reflection * e^{-ikx} on the incoming side and
/// transmission * e^{ikx} beyond; r1 = |reflection|^2, t1 = |transmission|^2.
struct SingleSolution {
    double k = 0.0;
    std::complex<double> reflection;   // A
    std::complex<double> transmission; // B
    double t1 = 0.0;
    double r1 = 0.0;
    /// Set by single_oracle when the boundary system was (near-)singular and
    /// the zero-transmission solution was reported instead.
    bool from_singular_system = false;
};

enum class IncidentSide { Left, Right };

/// Closed-form amplitudes, evaluated on the homogeneous (q + ikp) factors so
/// infinite lengths need no special casing:
///   A = -(q+q- + k^2 p+p-) / ((q+ + ikp+)(q- + ikp-))
///   B =  ik (p+q- - p-q+)  / ((q+ + ikp+)(q- + ikp-))
SingleSolution single_amplitudes(const Junction& junction, double k);

/// Transmission probability |B|^2. Equals 1 exactly when k^2 L+ L- = -1 and
/// vanishes identically when L+ = L-.
double t1(const Junction& junction, double k);

/// Independent check: solves the two raw junction equations for (A, B) with
/// a dense pivoted solver. Finite lengths only. Right incidence sets up the
/// mirrored system; parity invariance makes the amplitudes coincide.
SingleSolution single_oracle(const Junction& junction, double k,
                             IncidentSide side = IncidentSide::Left);

} // namespace ptrans
