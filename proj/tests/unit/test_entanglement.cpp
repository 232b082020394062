#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "questions/entanglement.hpp"

using namespace questions;

TEST_SUITE_BEGIN("entanglement");

namespace {

Direction random_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        if (norm(v) > 1e-3) return Direction(v);
    }
}

}  // namespace

TEST_CASE("singlet joint probabilities") {
    const PairState singlet = PairState::singlet();
    const Direction x = Direction::x_axis(), y = Direction::y_axis();

    // Same axis, same sign: impossible.
    CHECK(joint_prob(singlet, x, +1, x, +1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(joint_prob(singlet, x, +1, x, -1) == doctest::Approx(0.5).epsilon(1e-14));
    // Orthogonal axes: independent fifty-fifty.
    CHECK(joint_prob(singlet, x, +1, y, +1) == doctest::Approx(0.25).epsilon(1e-14));

    // w at 225 degrees from x: P(x1+, w2-) = 0.5 cos^2(5 pi / 8) by the
    // half-angle identity.
    const Direction w = Direction({std::cos(5 * std::numbers::pi / 4),
                                   std::sin(5 * std::numbers::pi / 4), 0.0});
    CHECK(joint_prob(singlet, x, +1, w, -1) ==
          doctest::Approx(0.5 * std::pow(std::cos(5 * std::numbers::pi / 8), 2))
              .epsilon(1e-12));

    // Cells sum to one.
    double total = 0.0;
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1}) total += joint_prob(singlet, x, s1, w, s2);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(joint_prob(singlet, x, 0, y, 1), std::invalid_argument);
}

TEST_CASE("correlation equals the signed cosine") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Direction d1 = random_direction(rng), d2 = random_direction(rng);
        const double c = dot(d1.vec(), d2.vec());
        CHECK(correlation(PairState::singlet(), d1, d2) ==
              doctest::Approx(-c).epsilon(1e-12));
        CHECK(correlation(PairState::aligned(), d1, d2) ==
              doctest::Approx(c).epsilon(1e-12));
    }
    CHECK(correlation(PairState::singlet(), Direction::x_axis(), Direction::x_axis()) ==
          doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(correlation(PairState::aligned(), Direction::x_axis(), Direction::x_axis()) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("product states factorize") {
    const PairState prod = PairState::product(BlochState::pure(Direction::z_axis()),
                                              BlochState::pure(Direction::x_axis()));
    CHECK(joint_prob(prod, Direction::z_axis(), +1, Direction::x_axis(), +1) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(correlation(prod, Direction::z_axis(), Direction::x_axis()) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(correlation(prod, Direction::z_axis(), Direction::y_axis()) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("measuring the first particle") {
    // Aligned state measured along x with Yes: both particles pure +x.
    const PairState after =
        measure_first(PairState::aligned(), Direction::x_axis(), Answer::Yes);
    CHECK_FALSE(after.is_correlated());
    CHECK(norm({after.first().vec().x - 1, after.first().vec().y, after.first().vec().z}) <
          1e-14);
    CHECK(norm({after.second().vec().x - 1, after.second().vec().y, after.second().vec().z}) <
          1e-14);

    // Singlet measured along x with Yes: particle 2 pure -x.
    const PairState anti =
        measure_first(PairState::singlet(), Direction::x_axis(), Answer::Yes);
    CHECK(norm({anti.second().vec().x + 1, anti.second().vec().y, anti.second().vec().z}) <
          1e-14);

    // Cross-axis correlation is gone after the measurement.
    CHECK(correlation(after, Direction::y_axis(), Direction::y_axis()) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(measure_first(after, Direction::y_axis(), Answer::Yes),
                    std::domain_error);
}

TEST_CASE("no signaling") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Direction d1 = random_direction(rng), d2 = random_direction(rng);
        for (const auto& state : {PairState::singlet(), PairState::aligned()}) {
            const double unmeasured =
                joint_prob(state, d1, +1, d2, +1) + joint_prob(state, d1, -1, d2, +1);
            double after = 0.0;
            for (Answer ans : {Answer::Yes, Answer::No}) {
                const PairState collapsed = measure_first(state, d1, ans);
                after += 0.5 * joint_prob(collapsed, d1, ans == Answer::Yes ? +1 : -1, d2, +1);
            }
            CHECK(after == doctest::Approx(unmeasured).epsilon(1e-12));
        }
    }
}

TEST_CASE("lhv inequality is an identity on counts") {
    LhvTable ones;
    ones.n.fill(1);
    const LhvResult r = lhv_inequality(ones);
    CHECK(r.lhs == 4);
    CHECK(r.rhs == 2);
    CHECK(r.holds);

    LhvTable boundary{};
    boundary.n[2] = 5;  // N3
    boundary.n[3] = 5;  // N4
    const LhvResult eq = lhv_inequality(boundary);
    CHECK(eq.lhs == eq.rhs);
    CHECK(eq.holds);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> count(0, 1000);
    for (int i = 0; i < 10000; ++i) {
        LhvTable t;
        for (auto& n : t.n) n = count(rng);
        const LhvResult res = lhv_inequality(t);
        CHECK(res.holds);
        // lhs - rhs = N1 + N8 exactly.
        CHECK(res.lhs - res.rhs == t.n[0] + t.n[7]);
    }
}

TEST_CASE("quantum violation at 225 degrees") {
    const BellProbs p = quantum_bell_probs(225.0 * std::numbers::pi / 180.0);
    CHECK(p.p_xy == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p.p_xw ==
          doctest::Approx(0.5 * std::pow(std::cos(5 * std::numbers::pi / 8), 2)).epsilon(1e-6));
    CHECK(p.p_wy ==
          doctest::Approx(0.5 * std::pow(std::cos(3 * std::numbers::pi / 8), 2)).epsilon(1e-6));
    CHECK(p.p_xw == doctest::Approx(0.0732233).epsilon(1e-5));
    CHECK(p.violated);
    CHECK(p.p_xw + p.p_wy < p.p_xy);

    // w = x: opposite results along the shared axis are certain, so the
    // (x1+, w2-) cell carries half the probability and there is no violation.
    CHECK_FALSE(quantum_bell_probs(0.0).violated);
    CHECK(quantum_bell_probs(0.0).p_xw == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(quantum_bell_probs(std::numbers::pi / 2).violated);
}

TEST_CASE("monte carlo matches the exact probabilities") {
    const double w = 225.0 * std::numbers::pi / 180.0;
    const BellProbs p = quantum_bell_probs(w);
    const std::uint64_t trials = 200000;
    const BellCounts counts = bell_montecarlo(w, trials, 7);
    auto check_within = [&](std::uint64_t n, double exact) {
        const double freq = static_cast<double>(n) / trials;
        const double sigma = std::sqrt(exact * (1.0 - exact) / trials);
        CHECK(std::abs(freq - exact) < 3.0 * sigma);
    };
    check_within(counts.n_xy, p.p_xy);
    check_within(counts.n_xw, p.p_xw);
    check_within(counts.n_wy, p.p_wy);

    const BellCounts again = bell_montecarlo(w, trials, 7);
    CHECK(again.n_xy == counts.n_xy);
    CHECK(again.n_xw == counts.n_xw);
    CHECK(again.n_wy == counts.n_wy);
}

TEST_CASE("nonlocal questions") {
    const NonlocalRankReport r = nonlocal_rank_check(3, 0);
    CHECK(r.rank_s == 1);
    CHECK(r.subtraction_ok);
    CHECK(r.max_gap_growth <= 1e-12);
    CHECK(r.p_y2_after_rank2_raise == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.p_y2_after_rank2_raise > 0.5);
    CHECK_THROWS_AS(nonlocal_rank_check(1, 0), std::invalid_argument);
}

TEST_SUITE_END();
