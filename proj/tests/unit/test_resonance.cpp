#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ptrans/resonance.hpp"

using namespace ptrans;

namespace {

constexpr double kPi = std::numbers::pi;

DoubleBarrier fig7_config() {
    return {Junction::from_lengths(1.0, 0.5), Junction::from_lengths(1.0, 0.5), 1.0};
}

DoubleBarrier fig8_config() {
    return {Junction::from_lengths(2.0, -1.0), Junction::from_lengths(-2.0, 1.0), 1.0};
}

DoubleBarrier random_finite_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> len(-3.0, 3.0);
    std::uniform_real_distribution<double> sep(0.2, 3.0);
    return {Junction::from_lengths(len(rng), len(rng)),
            Junction::from_lengths(len(rng), len(rng)), sep(rng)};
}

} // namespace

TEST_CASE("determinant factorizes through the quartic") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> kdist(0.05, 10.0);
    for (int i = 0; i < 500; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const double k = kdist(rng);
        const QuarticCoefficients q = quartic_coefficients(config);
        const double k2 = k * k;
        const double quartic = q.alpha * k2 * k2 + 2.0 * q.beta * k2 + q.gamma;
        const double det = resonance_determinant(config, k);
        const ResonanceMatrix m = resonance_matrix(config, k);
        const double scale = std::abs(m.m11 * m.m22) + std::abs(m.m12 * m.m21) + 1e-300;
        CHECK(std::abs(det - k2 * quartic) < 1e-12 * scale);
    }
}

TEST_CASE("residuals measure the distance to perfect transmission") {
    // |Delta|^2 = k^4 d1^2 d2^2 + r1^2 + r2^2 with homogeneity removed
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> kdist(0.05, 10.0);
    for (int i = 0; i < 500; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const double k = kdist(rng);
        const auto [r1, r2] = resonance_residuals(config, k);
        const DoubleSolution s = double_amplitudes(config, k);
        const double d1 = config.left.l_plus().value() - config.left.l_minus().value();
        const double d2 = config.right.l_plus().value() - config.right.l_minus().value();
        // amplitudes carry the homogeneous normalization; undo it
        const auto norm_q = [](const Junction& j) {
            return j.l_plus().q() * j.l_minus().q();
        };
        const double h = norm_q(config.left) * norm_q(config.right);
        const double lhs = std::norm(s.delta) / (h * h);
        const double k4 = std::pow(k, 4);
        const double rhs = k4 * d1 * d1 * d2 * d2 + r1 * r1 + r2 * r2;
        CHECK(std::abs(lhs - rhs) < 1e-8 * (std::abs(lhs) + std::abs(rhs) + 1.0));
    }
}

TEST_CASE("residuals vanish at a known resonance") {
    const auto [r1, r2] = resonance_residuals_normalized(fig8_config(), kPi);
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-10);
}

TEST_CASE("an opaque junction never satisfies both conditions") {
    const DoubleBarrier config(Junction::from_lengths(0.7, 0.7),
                               Junction::from_lengths(1.0, 0.3), 1.0);
    double min_resid = 1e300;
    for (int i = 1; i <= 20000; ++i) {
        const double k = 20.0 * i / 20000.0;
        const auto [r1, r2] = resonance_residuals_normalized(config, k);
        min_resid = std::min(min_resid, std::max(std::abs(r1), std::abs(r2)));
    }
    CHECK(min_resid > 1e-4);
}

TEST_CASE("quartic coefficients at a reference configuration") {
    // dyadic inputs give exact coefficients
    const DoubleBarrier config(Junction::from_lengths(1.0, 0.5),
                               Junction::from_lengths(2.0, 0.25), 1.0);
    const QuarticCoefficients q = quartic_coefficients(config);
    CHECK(q.alpha == doctest::Approx(-0.703125).epsilon(1e-15));
    CHECK(q.beta == doctest::Approx(-1.40625).epsilon(1e-15));
    CHECK(q.gamma == doctest::Approx(-2.8125).epsilon(1e-15));

    // recover the same polynomial from determinant samples: solve the
    // 3x3 Vandermonde system in k^2 for det/k^2 at three nodes, check the
    // rest
    const double nodes[6] = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    double v[3][4];
    for (int row = 0; row < 3; ++row) {
        const double k2 = nodes[row] * nodes[row];
        v[row][0] = k2 * k2;
        v[row][1] = 2.0 * k2;
        v[row][2] = 1.0;
        v[row][3] = resonance_determinant(config, nodes[row]) / k2;
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(v[row][col]) > std::abs(v[pivot][col]))
                pivot = row;
        std::swap(v[pivot], v[col]);
        for (int row = col + 1; row < 3; ++row) {
            const double f = v[row][col] / v[col][col];
            for (int j = col; j < 4; ++j)
                v[row][j] -= f * v[col][j];
        }
    }
    double fit[3];
    for (int row = 2; row >= 0; --row) {
        fit[row] = v[row][3];
        for (int j = row + 1; j < 3; ++j)
            fit[row] -= v[row][j] * fit[j];
        fit[row] /= v[row][row];
    }
    CHECK(fit[0] == doctest::Approx(q.alpha).epsilon(1e-9));
    CHECK(fit[1] == doctest::Approx(q.beta).epsilon(1e-9));
    CHECK(fit[2] == doctest::Approx(q.gamma).epsilon(1e-9));
    for (int i = 3; i < 6; ++i) {
        const double k2 = nodes[i] * nodes[i];
        CHECK(resonance_determinant(config, nodes[i]) / k2 ==
              doctest::Approx(fit[0] * k2 * k2 + fit[1] * 2.0 * k2 + fit[2]).epsilon(1e-9));
    }
}

TEST_CASE("relation classes zero the quartic exactly") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> len(-3.0, 3.0);
    std::uniform_real_distribution<double> sep(0.2, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double lp = len(rng), lm = len(rng);
        const Junction j1 = Junction::from_lengths(lp, lm);
        const Junction j2 = [&]() {
            switch (i % 4) {
            case 0: return Junction::from_lengths(lp, lm);
            case 1: return Junction::from_lengths(lm, lp);
            case 2: return Junction::from_lengths(-lp, -lm);
            default: return Junction::from_lengths(-lm, -lp);
            }
        }();
        const DoubleBarrier config(j1, j2, sep(rng));
        const QuarticCoefficients q = quartic_coefficients(config);
        const double scale = lp * lp + lm * lm + 1.0;
        CHECK(std::abs(q.alpha) < 1e-12 * scale * scale * scale);
        CHECK(std::abs(q.beta) < 1e-12 * scale * scale);
        CHECK(std::abs(q.gamma) < 1e-12 * scale);
        CHECK(classify_relation(config) != Relation::None);
    }
}

TEST_CASE("relation classification") {
    CHECK(classify_relation(fig7_config()) == Relation::SymmetricSame);
    CHECK(classify_relation(fig8_config()) == Relation::AntiSame);
    CHECK(classify_relation({Junction::from_lengths(1.0, 0.5),
                             Junction::from_lengths(0.5, 1.0), 1.0}) ==
          Relation::SymmetricSwapped);
    CHECK(classify_relation({Junction::from_lengths(1.0, 0.5),
                             Junction::from_lengths(-0.5, -1.0), 1.0}) == Relation::AntiSwapped);
    CHECK(classify_relation({Junction::from_lengths(1.0, 0.5),
                             Junction::from_lengths(1.0, 0.4), 1.0}) == Relation::None);
    // degenerate tie resolves to the first listed class
    CHECK(classify_relation({Junction::from_lengths(0.7, 0.7),
                             Junction::from_lengths(0.7, 0.7), 1.0}) == Relation::SymmetricSame);
}

TEST_CASE("symmetric-family roots for the reference configuration") {
    const auto roots = resonance_roots_symmetric(Junction::from_lengths(1.0, 0.5), 1.0, 20.0);
    const double expected[] = {1.792835206512565,  5.778632453498917,  9.098949613546465,
                               12.324533442677188, 15.515402985883053, 18.689494611497025};
    REQUIRE(roots.size() == 6);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(roots[i].k == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(roots[i].kind == RootKind::TanCondition);
        CHECK(roots[i].residual < 1e-8);
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
        CHECK(roots[i].k > roots[i - 1].k);
}

TEST_CASE("symmetric-family root count matches a sign-change scan") {
    const Junction j1 = Junction::from_lengths(1.0, 0.5);
    const double a = 1.0, k_max = 10.0;
    const auto roots = resonance_roots_symmetric(j1, a, k_max);

    const double s = 1.5, x = 0.5;
    int crossings = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 1; i <= 100000; ++i) {
        const double k = k_max * i / 100000.0;
        const double g = (1.0 - k * k * x) * std::sin(k * a) - k * s * std::cos(k * a);
        if (have_prev && prev * g < 0.0)
            ++crossings;
        prev = g;
        have_prev = true;
    }
    CHECK(static_cast<int>(roots.size()) == crossings);
    CHECK(roots.size() == 3);
}

TEST_CASE("symmetric family includes the inverse-sqrt root") {
    const auto roots = resonance_roots_symmetric(Junction::from_lengths(2.0, -1.0), 1.0, 10.0);
    bool found = false;
    for (const auto& root : roots)
        if (root.kind == RootKind::InverseSqrt) {
            CHECK(root.k == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("anti-symmetric family: lattice plus inverse-sqrt roots") {
    const auto roots = resonance_roots_antisymmetric(Junction::from_lengths(2.0, -1.0), 1.0, 10.0);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].k == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(roots[0].kind == RootKind::InverseSqrt);
    CHECK(roots[1].k == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(roots[2].k == doctest::Approx(2.0 * kPi).epsilon(1e-12));
    CHECK(roots[3].k == doctest::Approx(3.0 * kPi).epsilon(1e-12));
    for (const auto& root : roots) {
        CHECK(root.residual < 1e-10);
        if (root.kind != RootKind::InverseSqrt)
            CHECK(root.kind == RootKind::SinCondition);
    }
}

TEST_CASE("anti-symmetric family with vanishing length sum") {
    // L+ = -L- = 1: the inverse-sqrt root sits at exactly k = 1
    const auto roots = resonance_roots_antisymmetric(Junction::from_lengths(1.0, -1.0), 1.0, 10.0);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].k == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(roots[0].kind == RootKind::InverseSqrt);
    CHECK(roots[1].k == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("anti-symmetric family at separation 2") {
    const auto roots = resonance_roots_antisymmetric(Junction::from_lengths(1.0, 0.5), 2.0, 5.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].k == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(roots[1].k == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(roots[2].k == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("root dispatcher follows the relation") {
    CHECK_NOTHROW(resonance_roots(fig7_config(), 10.0));
    CHECK_NOTHROW(resonance_roots(fig8_config(), 10.0));
    CHECK_THROWS_AS(resonance_roots({Junction::from_lengths(1.0, 0.5),
                                     Junction::from_lengths(1.0, 0.4), 1.0},
                                    10.0),
                    NotApplicableError);
}

TEST_CASE("incidental candidates for a relation-free configuration") {
    const DoubleBarrier config(Junction::from_lengths(1.0, -0.5),
                               Junction::from_lengths(3.0, 0.2), 1.0);
    const IncidentalResult result = incidental_resonance(config);
    REQUIRE(result.status == IncidentalStatus::Candidates);
    REQUIRE(result.candidates.size() == 2);
    CHECK(result.candidates[0].k == doctest::Approx(0.75180941155611228).epsilon(1e-12));
    CHECK(result.candidates[1].k == doctest::Approx(2.9325756597230362).epsilon(1e-12));
    // both sit on the quartic's zero set
    const QuarticCoefficients q = quartic_coefficients(config);
    for (const auto& cand : result.candidates) {
        const double k2 = cand.k * cand.k;
        CHECK(std::abs(q.alpha * k2 * k2 + 2.0 * q.beta * k2 + q.gamma) < 1e-12);
        CHECK(cand.t2_value == doctest::Approx(t2(config, cand.k)).epsilon(1e-15));
    }
}

TEST_CASE("incidental resonance refuses relation configurations") {
    CHECK(incidental_resonance(fig7_config()).status == IncidentalStatus::NotApplicable);
}

TEST_CASE("incidental resonance with degenerate denominators") {
    // both products vanish: every candidate denominator is zero
    const DoubleBarrier config(Junction::from_lengths(1.0, 0.0),
                               Junction::from_lengths(2.0, 0.0), 1.0);
    CHECK(incidental_resonance(config).status == IncidentalStatus::NoCandidate);
}

TEST_CASE("peak widths for the anti-symmetric reference configuration") {
    const Junction j1 = Junction::from_lengths(2.0, -1.0);
    const PeakWidth w1 = peak_width(j1, 1.0, 1);
    const PeakWidth w2 = peak_width(j1, 1.0, 2);
    const PeakWidth w3 = peak_width(j1, 1.0, 3);
    CHECK(w1.k_n == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(w1.width == doctest::Approx(0.11299061601537718).epsilon(1e-12));
    CHECK(w2.width == doctest::Approx(0.028413560466129518).epsilon(1e-12));
    CHECK(w3.width == doctest::Approx(0.012647961489819795).epsilon(1e-12));
    CHECK(w2.width < w1.width);
    CHECK(w3.width < w2.width);

    // curvature of 1 - T2 at the peak matches 1/w^2 (quadratic fit, n = 1)
    const DoubleBarrier config(j1, j1.negated(), 1.0);
    const double window = w1.width / 10.0;
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, y0 = 0, y1 = 0, y2 = 0;
    for (int i = 0; i <= 20; ++i) {
        const double dk = -window + 2.0 * window * i / 20.0;
        const double y = 1.0 - t2(config, w1.k_n + dk);
        const double dk2 = dk * dk;
        s0 += 1;
        s1 += dk;
        s2 += dk2;
        s3 += dk2 * dk;
        s4 += dk2 * dk2;
        y0 += y;
        y1 += y * dk;
        y2 += y * dk2;
    }
    // normal equations for y = c0 + c1 dk + c2 dk^2 (Cramer)
    const double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                       s2 * (s1 * s3 - s2 * s2);
    const double c2 = (s0 * (s2 * y2 - s3 * y1) - s1 * (s1 * y2 - s3 * y0) +
                       s2 * (s1 * y1 - s2 * y0)) /
                      det;
    CHECK(std::abs(c2 * w1.width * w1.width - 1.0) < 0.01);
}

TEST_CASE("peak width guards the singular collision") {
    // 1 + k_1^2 L+ L- = 0 exactly at k_1 = pi: choose L+L- = -1/pi^2
    const Junction j1 = Junction::from_lengths(1.0, -1.0 / (kPi * kPi));
    CHECK_THROWS_AS(peak_width(j1, 1.0, 1), SingularPeak);
    // away from the collision the width is finite
    CHECK_NOTHROW(peak_width(Junction::from_lengths(2.0, -1.0), 1.0, 1));
    CHECK_THROWS_AS(peak_width(Junction::from_lengths(2.0, -1.0), 1.0, 0), InvalidParameter);
}

TEST_CASE("quartic zero set and relation are scale invariant") {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> len(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(0.25, 4.0);
    for (int i = 0; i < 200; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const double c = scale(rng);
        const DoubleBarrier scaled(
            Junction::from_lengths(c * config.left.l_plus().value(),
                                   c * config.left.l_minus().value()),
            Junction::from_lengths(c * config.right.l_plus().value(),
                                   c * config.right.l_minus().value()),
            c * config.separation);
        CHECK(classify_relation(scaled) == classify_relation(config));
        // roots of the quartic scale as k -> k/c
        const IncidentalResult base = incidental_resonance(config);
        const IncidentalResult other = incidental_resonance(scaled);
        if (base.status == IncidentalStatus::Candidates) {
            REQUIRE(other.status == IncidentalStatus::Candidates);
            REQUIRE(other.candidates.size() == base.candidates.size());
            for (std::size_t j = 0; j < base.candidates.size(); ++j)
                CHECK(other.candidates[j].k ==
                      doctest::Approx(base.candidates[j].k / c).epsilon(1e-9));
        }
    }
}

TEST_CASE("summary aggregates relation, quartic and roots") {
    const ResonanceSummary summary = resonance_summary(fig8_config(), 10.0);
    CHECK(summary.relation == Relation::AntiSame);
    CHECK(summary.quartic.alpha == 0.0);
    CHECK(summary.quartic.beta == 0.0);
    CHECK(summary.quartic.gamma == 0.0);
    CHECK(summary.roots.size() == 4);

    const ResonanceSummary incidental = resonance_summary(
        {Junction::from_lengths(1.0, -0.5), Junction::from_lengths(3.0, 0.2), 1.0}, 10.0);
    CHECK(incidental.relation == Relation::None);
    CHECK(incidental.roots.empty());
    CHECK(incidental.incidental.status == IncidentalStatus::Candidates);
}
