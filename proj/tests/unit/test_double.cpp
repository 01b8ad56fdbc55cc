#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ptrans/scattering_double.hpp"

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

TEST_CASE("two free junctions are transparent") {
    const Junction free = Junction::from_lengths(ExtendedLength::infinite(), ExtendedLength());
    const DoubleBarrier config(free, free, 1.0);
    for (int i = 1; i <= 50; ++i) {
        const double k = 0.2 * i;
        const DoubleSolution s = double_amplitudes(config, k);
        CHECK(std::abs(s.reflection) < 1e-15);
        CHECK(std::abs(std::abs(s.transmission) - 1.0) < 1e-15);
        CHECK(t2(config, k) == 1.0);
    }
}

TEST_CASE("an opaque junction kills transmission identically") {
    const DoubleBarrier config(Junction::from_lengths(0.7, 0.7),
                               Junction::from_lengths(1.0, 0.3), 1.0);
    for (int i = 1; i <= 100; ++i) {
        const double k = 0.1 * i;
        CHECK(t2(config, k) == 0.0);
        CHECK(double_amplitudes(config, k).transmission == std::complex<double>(0.0, 0.0));
    }
    // same when the right junction is the opaque one
    const DoubleBarrier mirrored(Junction::from_lengths(1.0, 0.3),
                                 Junction::from_lengths(-0.4, -0.4), 1.0);
    for (int i = 1; i <= 100; ++i)
        CHECK(t2(mirrored, 0.1 * i) == 0.0);
}

TEST_CASE("closed-form amplitudes at a reference point") {
    const DoubleSolution s = double_amplitudes(fig7_config(), 2.0);
    CHECK(s.reflection.real() == doctest::Approx(0.32111176588618842).epsilon(1e-12));
    CHECK(s.reflection.imag() == doctest::Approx(-0.83806877432295931).epsilon(1e-12));
    CHECK(s.mid_right.real() == doctest::Approx(1.0777626849383929).epsilon(1e-12));
    CHECK(s.mid_right.imag() == doctest::Approx(0.88527240332964779).epsilon(1e-12));
    CHECK(s.mid_left.real() == doctest::Approx(-0.92648820849552051).epsilon(1e-12));
    CHECK(s.mid_left.imag() == doctest::Approx(-0.94465404744126233).epsilon(1e-12));
    CHECK(s.transmission.real() == doctest::Approx(0.41185604581448266).epsilon(1e-12));
    CHECK(s.transmission.imag() == doctest::Approx(0.15780545250505504).epsilon(1e-12));
}

TEST_CASE("transmission probability reference values") {
    CHECK(t2(fig7_config(), 0.5) == doctest::Approx(0.013362439146892832).epsilon(1e-12));
    CHECK(t2(fig7_config(), 1.0) == doctest::Approx(0.043724002232887903).epsilon(1e-12));
    CHECK(t2(fig7_config(), 3.0) == doctest::Approx(2.6595202115727990e-3).epsilon(1e-12));
}

TEST_CASE("anti-symmetric pair: resonances at the inverse-sqrt root and the lattice") {
    const DoubleBarrier config = fig8_config();
    CHECK(std::abs(t2(config, 1.0 / std::sqrt(2.0)) - 1.0) < 1e-10);
    CHECK(std::abs(t2(config, kPi) - 1.0) < 1e-10);
    CHECK(std::abs(t2(config, 2.0 * kPi) - 1.0) < 1e-10);
    CHECK(std::abs(t2(config, 3.0 * kPi) - 1.0) < 1e-10);
}

TEST_CASE("oracle agrees with the closed form") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> kdist(0.01, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const double k = kdist(rng);
        const DoubleSolution closed = double_amplitudes(config, k);
        const DoubleSolution solved = double_oracle(config, k);
        CHECK(std::abs(closed.reflection - solved.reflection) < 1e-10);
        CHECK(std::abs(closed.mid_right - solved.mid_right) < 1e-10);
        CHECK(std::abs(closed.mid_left - solved.mid_left) < 1e-10);
        CHECK(std::abs(closed.transmission - solved.transmission) < 1e-10);
    }
    const DoubleSolution closed = double_amplitudes(fig7_config(), 1.0);
    const DoubleSolution solved = double_oracle(fig7_config(), 1.0);
    CHECK(std::abs(closed.t2 - solved.t2) < 1e-12);
}

TEST_CASE("phase wrap at large separation") {
    const DoubleBarrier config(Junction::from_lengths(1.0, 0.5),
                               Junction::from_lengths(0.3, -0.8), 50.0);
    for (double k : {0.7, 3.9, 11.3, 19.7}) {
        const DoubleSolution closed = double_amplitudes(config, k);
        const DoubleSolution solved = double_oracle(config, k);
        CHECK(std::abs(closed.t2 - solved.t2) < 1e-9);
    }
}

TEST_CASE("transfer-matrix composition") {
    const TransferCheck ref = transfer_compose_check(fig7_config(), 3.0);
    CHECK(ref.applicable);
    CHECK(ref.deviation < 1e-10);

    // opaque left junction: no transfer matrix exists
    const DoubleBarrier opaque(Junction::from_lengths(0.7, 0.7),
                               Junction::from_lengths(1.0, 0.3), 1.0);
    CHECK(!transfer_compose_check(opaque, 1.0).applicable);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> kdist(0.05, 15.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const TransferCheck check = transfer_compose_check(config, kdist(rng));
        if (check.applicable)
            worst = std::max(worst, check.deviation);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("unitarity including infinite lengths") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> sep(0.2, 3.0);
    std::uniform_real_distribution<double> logk(-2.0, 2.0);
    for (int i = 0; i < 2000; ++i) {
        double t1p = angle(rng), t1m = angle(rng), t2p = angle(rng), t2m = angle(rng);
        if (i % 10 == 0)
            t1p = 0.0;
        if (i % 15 == 0)
            t2m = 0.0;
        const DoubleBarrier config(Junction::from_angles(t1p, t1m),
                                   Junction::from_angles(t2p, t2m), sep(rng));
        const DoubleSolution s = double_amplitudes(config, std::pow(10.0, logk(rng)));
        CHECK(std::abs(std::norm(s.reflection) + std::norm(s.transmission) - 1.0) < 1e-12);
        CHECK(std::abs(s.delta) > 0.0);
    }
}

TEST_CASE("transmission is reciprocal under junction exchange") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> kdist(0.05, 10.0);
    for (int i = 0; i < 300; ++i) {
        const DoubleBarrier config = random_finite_config(rng);
        const DoubleBarrier exchanged(config.right, config.left, config.separation);
        const double k = kdist(rng);
        CHECK(std::abs(t2(config, k) - t2(exchanged, k)) < 1e-12);
    }
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(DoubleBarrier(Junction::from_lengths(1.0, 0.5),
                                  Junction::from_lengths(1.0, 0.5), -1.0),
                    InvalidParameter);
    CHECK_THROWS_AS(t2(fig7_config(), 0.0), InvalidParameter);
    CHECK_THROWS_AS(double_oracle(
                        DoubleBarrier(Junction::from_lengths(ExtendedLength::infinite(),
                                                             ExtendedLength()),
                                      Junction::from_lengths(1.0, 0.5), 1.0),
                        1.0),
                    InvalidParameter);
}
