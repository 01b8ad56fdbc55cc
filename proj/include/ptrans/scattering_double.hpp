#pragma once

#include <complex>

#include "ptrans/junction.hpp"

namespace ptrans {

/// Two junctions at x = -a/2 (left) and x = +a/2 (right), separation a > 0.
struct DoubleBarrier {
    Junction left;  // parameters L1(+-)
    Junction right; // parameters L2(+-)
    double separation;

    DoubleBarrier(Junction l, Junction r, double a) : left(l), right(r), separation(a) {
        if (!std::isfinite(a) || a <= 0.0)
            throw InvalidParameter("DoubleBarrier: separation must be positive and finite");
    }
};

/// Amplitudes of e^{ikx} + A e^{-ikx} | B e^{ikx} + C e^{-ikx} | D e^{ikx}
/// in the three regions, plus the common denominator Delta.
struct DoubleSolution {
    double k = 0.0;
    std::complex<double> reflection;   // A
    std::complex<double> mid_right;    // B
    std::complex<double> mid_left;     // C
    std::complex<double> transmission; // D
    std::complex<double> delta;
    double t2 = 0.0;
    double r2 = 0.0;
    bool from_singular_system = false;
};

/// Closed form on homogeneous factors; each of A..D and Delta is multiplied
/// by q1+ q1- q2+ q2-, which cancels in the ratios, so infinite lengths are
/// handled uniformly.
DoubleSolution double_amplitudes(const DoubleBarrier& config, double k);

/// Transmission probability |D|^2.
double t2(const DoubleBarrier& config, double k);

/// Independent check: dense pivoted solve of the four raw junction equations
/// in (A, B, C, D). Finite lengths only.
DoubleSolution double_oracle(const DoubleBarrier& config, double k);

/// Third route: per-junction 2x2 transfer matrices composed with free
/// propagation over the separation. Not applicable when either junction is
/// opaque (transmission amplitude zero).
struct TransferCheck {
    bool applicable = false;
    double t2_transfer = 0.0;
    double t2_closed = 0.0;
    double deviation = 0.0;
};

TransferCheck transfer_compose_check(const DoubleBarrier& config, double k);

} // namespace ptrans
