#include "ptrans/scattering_single.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace ptrans {

namespace {

void require_valid_k(double k) {
    if (!std::isfinite(k) || k <= 0.0)
        throw InvalidParameter("scattering: wavenumber k must be positive and finite");
}

double clamp01(double x) {
    return std::clamp(x, 0.0, 1.0);
}

} // namespace

SingleSolution single_amplitudes(const Junction& junction, double k) {
    require_valid_k(k);
    const double pp = junction.l_plus().p(), qp = junction.l_plus().q();
    const double pm = junction.l_minus().p(), qm = junction.l_minus().q();

    const std::complex<double> fp(qp, k * pp);
    const std::complex<double> fm(qm, k * pm);
    const std::complex<double> den = fp * fm;
    const double s = qp * qm + k * k * pp * pm; // homogeneous (1 + k^2 L+L-)
    const double d = pp * qm - pm * qp;         // homogeneous (L+ - L-)

    SingleSolution sol;
    sol.k = k;
    sol.reflection = -s / den;
    sol.transmission = std::complex<double>(0.0, k * d) / den;
    // |den|^2 = s^2 + k^2 d^2 identically, so these are exact complements.
    const double norm = s * s + k * k * d * d;
    sol.r1 = clamp01(s * s / norm);
    sol.t1 = clamp01(k * k * d * d / norm);
    return sol;
}

double t1(const Junction& junction, double k) {
    require_valid_k(k);
    const double pp = junction.l_plus().p(), qp = junction.l_plus().q();
    const double pm = junction.l_minus().p(), qm = junction.l_minus().q();
    const double s = qp * qm + k * k * pp * pm;
    const double d = pp * qm - pm * qp;
    if (s == 0.0)
        return 1.0;
    if (d == 0.0)
        return 0.0;
    return clamp01(k * k * d * d / (s * s + k * k * d * d));
}

SingleSolution single_oracle(const Junction& junction, double k, IncidentSide side) {
    require_valid_k(k);
    if (!junction.l_plus().is_finite() || !junction.l_minus().is_finite())
        throw InvalidParameter("single_oracle: finite lengths required");
    const double lp = junction.l_plus().value();
    const double lm = junction.l_minus().value();
    const std::complex<double> ik(0.0, k);

    // Unknowns (A, B): reflected and transmitted amplitudes. The equations
    // below are the two parity-split junction conditions applied to the
    // plane-wave ansatz; for right incidence the roles of the half lines swap.
    Eigen::Matrix2cd m;
    Eigen::Vector2cd rhs;
    if (side == IncidentSide::Left) {
        // psi(+0) = B, psi(-0) = 1 + A, psi'(+0) = ikB, psi'(-0) = ik(1 - A)
        m(0, 0) = 1.0 + ik * lp;
        m(0, 1) = 1.0 + ik * lp;
        rhs(0) = -(1.0 - ik * lp);
        m(1, 0) = -(1.0 + ik * lm);
        m(1, 1) = 1.0 + ik * lm;
        rhs(1) = 1.0 - ik * lm;
    } else {
        // psi(+0) = 1 + A, psi(-0) = B, psi'(+0) = ik(A - 1), psi'(-0) = -ikB
        m(0, 0) = 1.0 + ik * lp;
        m(0, 1) = 1.0 + ik * lp;
        rhs(0) = -(1.0 - ik * lp);
        m(1, 0) = 1.0 + ik * lm;
        m(1, 1) = -(1.0 + ik * lm);
        rhs(1) = -(1.0 - ik * lm);
    }

    SingleSolution sol;
    sol.k = k;
    Eigen::FullPivLU<Eigen::Matrix2cd> lu(m);
    if (!lu.isInvertible()) {
        sol.reflection = -1.0;
        sol.transmission = 0.0;
        sol.t1 = 0.0;
        sol.r1 = 1.0;
        sol.from_singular_system = true;
        return sol;
    }
    Eigen::Vector2cd x = lu.solve(rhs);
    sol.reflection = x(0);
    sol.transmission = x(1);
    sol.r1 = clamp01(std::norm(sol.reflection));
    sol.t1 = clamp01(std::norm(sol.transmission));
    return sol;
}

} // namespace ptrans
