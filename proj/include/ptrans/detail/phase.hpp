#pragma once

#include <cmath>
#include <complex>

namespace ptrans::detail {

inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;

/// e^{i * mult * k * a} with the phase reduced modulo 2*pi in extended
/// precision first, so large k*a products keep full trig accuracy.
inline std::complex<double> unit_phase(double mult, double k, double a) {
    const long double angle =
        static_cast<long double>(mult) * static_cast<long double>(k) * static_cast<long double>(a);
    const long double reduced = std::remainderl(angle, 2.0L * kPiL);
    const double r = static_cast<double>(reduced);
    return {std::cos(r), std::sin(r)};
}

/// (sin(k*a), cos(k*a)) with the same reduction.
inline std::pair<double, double> sincos_reduced(double k, double a) {
    const long double angle = static_cast<long double>(k) * static_cast<long double>(a);
    const long double reduced = std::remainderl(angle, 2.0L * kPiL);
    const double r = static_cast<double>(reduced);
    return {std::sin(r), std::cos(r)};
}

} // namespace ptrans::detail
