#include "ptrans/scattering_double.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ptrans/detail/phase.hpp"
#include "ptrans/scattering_single.hpp"

namespace ptrans {

namespace {

using cplx = std::complex<double>;

void require_valid_k(double k) {
    if (!std::isfinite(k) || k <= 0.0)
        throw InvalidParameter("scattering: wavenumber k must be positive and finite");
}

struct HomogeneousPieces {
    cplx f1p, f1m, f2p, f2m; // (q + ikp) per length
    double s1, s2;           // homogeneous (1 + k^2 L+L-) per junction
    double d1, d2;           // homogeneous (L+ - L-) per junction
};

HomogeneousPieces pieces(const DoubleBarrier& config, double k) {
    const auto& l1p = config.left.l_plus();
    const auto& l1m = config.left.l_minus();
    const auto& l2p = config.right.l_plus();
    const auto& l2m = config.right.l_minus();
    HomogeneousPieces h;
    h.f1p = cplx(l1p.q(), k * l1p.p());
    h.f1m = cplx(l1m.q(), k * l1m.p());
    h.f2p = cplx(l2p.q(), k * l2p.p());
    h.f2m = cplx(l2m.q(), k * l2m.p());
    const double k2 = k * k;
    h.s1 = l1p.q() * l1m.q() + k2 * l1p.p() * l1m.p();
    h.s2 = l2p.q() * l2m.q() + k2 * l2p.p() * l2m.p();
    h.d1 = l1p.p() * l1m.q() - l1m.p() * l1p.q();
    h.d2 = l2p.p() * l2m.q() - l2m.p() * l2p.q();
    return h;
}

} // namespace

DoubleSolution double_amplitudes(const DoubleBarrier& config, double k) {
    require_valid_k(k);
    const auto h = pieces(config, k);
    const double a = config.separation;
    const cplx e_ika = detail::unit_phase(1.0, k, a);
    const cplx e_2ika = detail::unit_phase(2.0, k, a);
    const cplx e_mika = std::conj(e_ika);
    const double k2 = k * k;

    const cplx delta = h.f1p * h.f1m * h.f2p * h.f2m - h.s1 * h.s2 * e_2ika;

    DoubleSolution sol;
    sol.k = k;
    sol.delta = delta;
    sol.reflection =
        e_mika * (-(h.f2p * h.f2m) * h.s1 + std::conj(h.f1p) * std::conj(h.f1m) * h.s2 * e_2ika) /
        delta;
    sol.mid_right = cplx(0.0, k) * h.d1 * h.f2p * h.f2m / delta;
    sol.mid_left = -cplx(0.0, k) * h.d1 * h.s2 * e_ika / delta;
    sol.transmission = -k2 * h.d1 * h.d2 / delta;
    sol.t2 = std::clamp(std::norm(sol.transmission), 0.0, 1.0);
    sol.r2 = std::clamp(std::norm(sol.reflection), 0.0, 1.0);
    return sol;
}

double t2(const DoubleBarrier& config, double k) {
    require_valid_k(k);
    const auto h = pieces(config, k);
    if (h.d1 == 0.0 || h.d2 == 0.0)
        return 0.0;
    const cplx e_2ika = detail::unit_phase(2.0, k, config.separation);
    const cplx delta = h.f1p * h.f1m * h.f2p * h.f2m - h.s1 * h.s2 * e_2ika;
    const double k2 = k * k;
    return std::clamp(k2 * k2 * h.d1 * h.d1 * h.d2 * h.d2 / std::norm(delta), 0.0, 1.0);
}

DoubleSolution double_oracle(const DoubleBarrier& config, double k) {
    require_valid_k(k);
    const auto finite = [](const Junction& j) {
        return j.l_plus().is_finite() && j.l_minus().is_finite();
    };
    if (!finite(config.left) || !finite(config.right))
        throw InvalidParameter("double_oracle: finite lengths required");

    const double l1p = config.left.l_plus().value();
    const double l1m = config.left.l_minus().value();
    const double l2p = config.right.l_plus().value();
    const double l2m = config.right.l_minus().value();
    const double a = config.separation;
    const cplx ik(0.0, k);

    // Plane-wave phases at the junction positions x = -a/2 and x = +a/2.
    const cplx ep1 = std::exp(ik * (-a / 2.0)); // e^{ikx} at left junction
    const cplx em1 = 1.0 / ep1;
    const cplx ep2 = std::exp(ik * (a / 2.0));
    const cplx em2 = 1.0 / ep2;

    // Unknown order (A, B, C, D). Rows: plus/minus conditions at the left
    // junction, then plus/minus conditions at the right junction.
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();

    m(0, 0) = em1 + l1p * ik * em1;
    m(0, 1) = ep1 + l1p * ik * ep1;
    m(0, 2) = em1 - l1p * ik * em1;
    rhs(0) = -(ep1 - l1p * ik * ep1);

    m(1, 0) = -em1 - l1m * ik * em1;
    m(1, 1) = ep1 + l1m * ik * ep1;
    m(1, 2) = em1 - l1m * ik * em1;
    rhs(1) = ep1 - l1m * ik * ep1;

    m(2, 1) = ep2 - l2p * ik * ep2;
    m(2, 2) = em2 + l2p * ik * em2;
    m(2, 3) = ep2 + l2p * ik * ep2;

    m(3, 1) = -ep2 + l2m * ik * ep2;
    m(3, 2) = -em2 - l2m * ik * em2;
    m(3, 3) = ep2 + l2m * ik * ep2;

    DoubleSolution sol;
    sol.k = k;
    Eigen::FullPivLU<Eigen::Matrix4cd> lu(m);
    if (!lu.isInvertible()) {
        sol.reflection = -1.0;
        sol.r2 = 1.0;
        sol.from_singular_system = true;
        return sol;
    }
    Eigen::Vector4cd x = lu.solve(rhs);
    sol.reflection = x(0);
    sol.mid_right = x(1);
    sol.mid_left = x(2);
    sol.transmission = x(3);
    sol.t2 = std::clamp(std::norm(sol.transmission), 0.0, 1.0);
    sol.r2 = std::clamp(std::norm(sol.reflection), 0.0, 1.0);
    return sol;
}

TransferCheck transfer_compose_check(const DoubleBarrier& config, double k) {
    require_valid_k(k);
    const auto h = pieces(config, k);
    TransferCheck check;
    check.t2_closed = t2(config, k);
    // A 1/B factor enters each transfer matrix; opaque junctions have B = 0.
    if (std::abs(h.d1) < 1e-14 || std::abs(h.d2) < 1e-14)
        return check;

    const auto tmat = [k](const Junction& j) {
        const SingleSolution s = single_amplitudes(j, k);
        const cplx A = s.reflection, B = s.transmission;
        Eigen::Matrix2cd t;
        t(0, 0) = (B * B - A * A) / B;
        t(0, 1) = A / B;
        t(1, 0) = -A / B;
        t(1, 1) = 1.0 / B;
        return t;
    };

    Eigen::Matrix2cd prop = Eigen::Matrix2cd::Zero();
    prop(0, 0) = detail::unit_phase(1.0, k, config.separation);
    prop(1, 1) = std::conj(prop(0, 0));

    const Eigen::Matrix2cd total = tmat(config.right) * prop * tmat(config.left);
    check.applicable = true;
    check.t2_transfer = 1.0 / std::norm(total(1, 1));
    check.deviation = std::abs(check.t2_transfer - check.t2_closed);
    return check;
}

} // namespace ptrans
