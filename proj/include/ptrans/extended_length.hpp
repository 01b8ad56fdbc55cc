#pragma once

#include <cmath>

#include "ptrans/errors.hpp"

namespace ptrans {

/// A real length that may be infinite, stored as a projective pair (p, q)
/// with L = p/q. Canonical form: p^2 + q^2 = 1 and q >= 0; the single point
/// at infinity is (1, 0), so +inf and -inf are identified. Keeping lengths
/// homogeneous lets every scattering formula evaluate the factor (1 + ikL)
/// as (q + ikp) with no branching on infinite parameters.
class ExtendedLength {
public:
    /// Canonicalized from a homogeneous pair; (0, 0) is rejected.
    ExtendedLength(double p, double q) {
        if (!std::isfinite(p) || !std::isfinite(q))
            throw InvalidParameter("ExtendedLength: non-finite homogeneous pair");
        if (p == 0.0 && q == 0.0)
            throw InvalidParameter("ExtendedLength: (0, 0) is not a length");
        const double n = std::hypot(p, q);
        p /= n;
        q /= n;
        if (q < 0.0) {
            p = -p;
            q = -q;
        }
        if (q == 0.0) {
            p = 1.0;
            q = 0.0;
        }
        p_ = p;
        q_ = q;
    }

    /// L = 0 by default.
    ExtendedLength() : p_(0.0), q_(1.0) {}

    static ExtendedLength from_value(double value) {
        if (std::isnan(value))
            throw InvalidParameter("ExtendedLength: NaN value");
        if (std::isinf(value))
            return infinite();
        return ExtendedLength(value, 1.0);
    }

    static ExtendedLength infinite() {
        ExtendedLength l;
        l.p_ = 1.0;
        l.q_ = 0.0;
        return l;
    }

    double p() const { return p_; }
    double q() const { return q_; }

    bool is_finite() const { return q_ != 0.0; }

    /// p/q; +inf for the infinite point.
    double value() const { return p_ / q_; }

    /// Maps L -> -L. The infinite point is its own negation.
    ExtendedLength negated() const {
        ExtendedLength l;
        l.p_ = is_finite() ? -p_ : p_;
        l.q_ = q_;
        return l;
    }

    bool almost_equal(const ExtendedLength& other, double tol = 1e-12) const {
        return std::abs(p_ - other.p_) <= tol && std::abs(q_ - other.q_) <= tol;
    }

    bool is_zero(double tol = 1e-12) const { return std::abs(p_) <= tol; }
    bool is_infinite(double tol = 1e-12) const { return q_ <= tol; }

private:
    double p_;
    double q_;
};

} // namespace ptrans
