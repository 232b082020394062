#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "questions/two_state.hpp"

using namespace questions;

TEST_SUITE_BEGIN("two_state");

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(23);
    return gen;
}

StateVector random_state() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const std::complex<double> a0(gauss(rng()), gauss(rng()));
        const std::complex<double> a1(gauss(rng()), gauss(rng()));
        if (std::abs(a0) + std::abs(a1) > 1e-3) return StateVector(a0, a1).normalized();
    }
}

Direction random_direction() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const Vec3 v{gauss(rng()), gauss(rng()), gauss(rng())};
        if (norm(v) > 1e-3) return Direction(v);
    }
}

double distance(const Vec3& a, const Vec3& b) {
    return norm({a.x - b.x, a.y - b.y, a.z - b.z});
}

}  // namespace

TEST_CASE("directions and bloch states") {
    CHECK_THROWS_AS(Direction({0, 0, 0}), std::invalid_argument);
    const Direction d = Direction::spherical(std::numbers::pi / 2, 0.0);
    CHECK(distance(d.vec(), {1, 0, 0}) < 1e-12);
    CHECK_THROWS_AS(BlochState({1.1, 0, 0}), std::invalid_argument);
    CHECK(BlochState::mixed().vec().x == 0.0);
    CHECK(BlochState::pure(Direction::z_axis()).is_pure());
    CHECK_FALSE(BlochState({0.3, 0, 0}).is_pure());
}

TEST_CASE("gap along an axis is the cosine projection") {
    const BlochState up = BlochState::pure(Direction::z_axis());
    CHECK(gap_along(up, Direction::z_axis()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gap_along(up, Direction::x_axis()) == doctest::Approx(0.0).epsilon(1e-14));

    const Direction tilted = Direction::spherical(std::numbers::pi / 3, 0.0);
    CHECK(gap_along(BlochState::pure(tilted), Direction::z_axis()) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // P(X) = (1 + cos theta)/2 = 3/4 at theta = pi/3.
    CHECK(0.5 * (1.0 + gap_along(BlochState::pure(tilted), Direction::z_axis())) ==
          doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("born probability") {
    const StateVector up(1.0, 0.0);
    CHECK(born_probability(up, up) == doctest::Approx(1.0).epsilon(1e-14));
    const StateVector down(0.0, 1.0);
    CHECK(born_probability(up, down) == doctest::Approx(0.0).epsilon(1e-14));

    // theta = 2 pi / 3 between the states: P = cos^2(pi/3) = 1/4.
    const StateVector tilted = state_from_bloch(Direction::spherical(2 * std::numbers::pi / 3, 0));
    CHECK(born_probability(tilted, up) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(StateVector(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("born equals (1 + gap)/2 on random pairs") {
    for (int i = 0; i < 1000; ++i) {
        const StateVector psi = random_state();
        const Direction axis = random_direction();
        const double born = born_probability(psi, state_from_bloch(axis));
        const double g = gap_along(bloch_from_state(psi), axis);
        CHECK(born == doctest::Approx(0.5 * (1.0 + g)).epsilon(1e-12));
    }
}

TEST_CASE("bloch map and round trip") {
    CHECK(distance(bloch_from_state(StateVector(1.0, 0.0)).vec(), {0, 0, 1}) < 1e-14);
    const StateVector plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    CHECK(distance(bloch_from_state(plus).vec(), {1, 0, 0}) < 1e-14);

    for (int i = 0; i < 1000; ++i) {
        const Direction d = random_direction();
        CHECK(distance(bloch_from_state(state_from_bloch(d)).vec(), d.vec()) < 1e-12);
    }
}

TEST_CASE("global phase invariance") {
    std::uniform_real_distribution<double> unit(0.0, 2 * std::numbers::pi);
    for (int i = 0; i < 200; ++i) {
        const StateVector psi = random_state();
        const std::complex<double> phase = std::polar(1.0, unit(rng()));
        const StateVector scaled(psi.amp0 * phase, psi.amp1 * phase);
        CHECK(distance(bloch_from_state(psi).vec(), bloch_from_state(scaled).vec()) < 1e-12);
        const StateVector probe = random_state();
        CHECK(born_probability(psi, probe) ==
              doctest::Approx(born_probability(scaled, probe)).epsilon(1e-12));
    }
}

TEST_CASE("add_with_angle geometry") {
    const Direction x = Direction::x_axis(), y = Direction::y_axis();
    const Direction mid = add_with_angle(x, y, 0.0);
    CHECK(distance(mid.vec(), {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0}) < 1e-12);

    const Direction anti = add_with_angle(x, y, std::numbers::pi);
    CHECK(distance(anti.vec(), {-1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0}) < 1e-12);

    CHECK_THROWS_AS(add_with_angle(x, x, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(add_with_angle(x, -x, 0.5), std::invalid_argument);

    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (int i = 0; i < 500; ++i) {
        const Direction p1 = random_direction();
        const Direction p2 = random_direction();
        if (std::abs(dot(p1.vec(), p2.vec())) > 0.99) continue;
        const double phi = angle(rng());
        const Direction p3 = add_with_angle(p1, p2, phi);
        // Equal geodesic distances to both inputs.
        const double d1 = std::acos(std::clamp(dot(p3.vec(), p1.vec()), -1.0, 1.0));
        const double d2 = std::acos(std::clamp(dot(p3.vec(), p2.vec()), -1.0, 1.0));
        CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
        // phi = 0 stays on the great circle through p1 and p2.
        const Vec3 pole = cross(p1.vec(), p2.vec());
        const Direction m0 = add_with_angle(p1, p2, 0.0);
        CHECK(std::abs(dot(m0.vec(), pole)) / norm(pole) < 1e-9);
    }
}

TEST_CASE("hilbert addition matches the geometric route") {
    for (int i = 0; i < 1000;) {
        const StateVector psi1 = random_state();
        const StateVector psi2 = random_state();
        const double overlap = std::abs(inner(psi1, psi2));
        if (overlap < 0.05 || overlap > 0.95) continue;
        ++i;
        const StateVector sum(psi1.amp0 + psi2.amp0, psi1.amp1 + psi2.amp1);
        const Vec3 direct = bloch_from_state(sum).vec();
        const Direction geo =
            add_with_angle(Direction(bloch_from_state(psi1).vec()),
                           Direction(bloch_from_state(psi2).vec()),
                           std::arg(inner(psi1, psi2)));
        CHECK(distance(direct, geo.vec()) < 1e-9);
        CHECK(distance(hilbert_add_as_geometry(psi1, psi2).vec(), direct) < 1e-12);
    }
}

TEST_CASE("phase-aligned sum is the arc midpoint") {
    // Real-amplitude states have phase difference 0: plain + gives the midpoint.
    const StateVector psi1(0.8, 0.6);
    const StateVector psi2(0.6, 0.8);
    const Vec3 sum = bloch_from_state(StateVector(psi1.amp0 + psi2.amp0,
                                                  psi1.amp1 + psi2.amp1))
                         .vec();
    const Vec3 p1 = bloch_from_state(psi1).vec(), p2 = bloch_from_state(psi2).vec();
    const double n = norm({p1.x + p2.x, p1.y + p2.y, p1.z + p2.z});
    CHECK(distance(sum, {(p1.x + p2.x) / n, (p1.y + p2.y) / n, (p1.z + p2.z) / n}) < 1e-12);

    // |0> and (|0> + i|1>)/sqrt 2 have a real inner product, so their plain
    // sum also lands on the arc midpoint.
    const StateVector up(1.0, 0.0);
    const StateVector side(1.0 / std::sqrt(2.0), std::complex<double>(0.0, 1.0 / std::sqrt(2.0)));
    CHECK(std::arg(inner(up, side)) == doctest::Approx(0.0).epsilon(1e-14));
    const Direction got = hilbert_add_as_geometry(up, side);
    CHECK(distance(got.vec(), {0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}) < 1e-12);

    // Scaling psi2 by a phase rotates the result along the symmetric circle
    // while the re-aligned sum stays at the midpoint.
    const std::complex<double> twist = std::polar(1.0, 1.1);
    const StateVector side2(side.amp0 * twist, side.amp1 * twist);
    const StateVector realigned(
        up.amp0 + std::polar(1.0, -std::arg(inner(up, side2))) * side2.amp0,
        up.amp1 + std::polar(1.0, -std::arg(inner(up, side2))) * side2.amp1);
    CHECK(distance(bloch_from_state(realigned).vec(),
                   {0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}) < 1e-12);

    CHECK_THROWS_AS(hilbert_add_as_geometry(up, StateVector(0.0, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_add_as_geometry(up, StateVector(2.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("measurement collapse") {
    const BlochState y_up = BlochState::pure(Direction::y_axis());
    const BlochState after = measure(y_up, Direction::x_axis(), Answer::Yes);
    CHECK(distance(after.vec(), {1, 0, 0}) < 1e-15);
    CHECK(gap_along(after, Direction::y_axis()) == doctest::Approx(0.0).epsilon(1e-15));

    const BlochState no = measure(y_up, Direction::x_axis(), Answer::No);
    CHECK(distance(no.vec(), {-1, 0, 0}) < 1e-15);

    // Idempotent: measuring again along the same axis with the same answer.
    const BlochState again = measure(after, Direction::x_axis(), Answer::Yes);
    CHECK(distance(again.vec(), after.vec()) == 0.0);
}

TEST_CASE("sampled measurement") {
    // Mixed state: P(Yes) = 1/2; sampling is deterministic per seed.
    const auto [a1, s1] = sample_measure(BlochState::mixed(), Direction::z_axis(), 42);
    const auto [a2, s2] = sample_measure(BlochState::mixed(), Direction::z_axis(), 42);
    CHECK(a1 == a2);
    CHECK(distance(s1.vec(), s2.vec()) == 0.0);
    CHECK(s1.is_pure(1e-15));

    // A pure state along +z measured along +z always answers Yes.
    const auto [ans, post] =
        sample_measure(BlochState::pure(Direction::z_axis()), Direction::z_axis(), 7);
    CHECK(ans == Answer::Yes);
    CHECK(distance(post.vec(), {0, 0, 1}) < 1e-15);

    // Frequencies approach the Born rule.
    const BlochState tilted = BlochState::pure(Direction::spherical(std::numbers::pi / 3, 0));
    int yes = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i)
        if (sample_measure(tilted, Direction::z_axis(), 1000 + i).first == Answer::Yes) ++yes;
    CHECK(static_cast<double>(yes) / trials == doctest::Approx(0.75).epsilon(0.02));
}

TEST_SUITE_END();
