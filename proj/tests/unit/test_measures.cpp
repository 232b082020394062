#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "questions/measures.hpp"
#include "questions/worlds.hpp"

using namespace questions;

TEST_SUITE_BEGIN("measures");

namespace {

WorldDistribution random_joint(std::mt19937_64& rng, int n_generators) {
    const WorldSet ws = WorldSet::generated(n_generators);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    std::vector<double> p(ws.size);
    double sum = 0.0;
    for (auto& v : p) sum += (v = unit(rng));
    for (auto& v : p) v /= sum;
    return WorldDistribution(ws, std::move(p));
}

WorldDistribution random_product(std::mt19937_64& rng, int n_generators) {
    std::uniform_real_distribution<double> unit(0.02, 0.98);
    std::vector<double> m(n_generators);
    for (auto& v : m) v = unit(rng);
    return WorldDistribution::product(m);
}

}  // namespace

TEST_CASE("gaps") {
    const WorldDistribution d = WorldDistribution::product({0.75, 0.0, 0.5, 0.2});
    const WorldSet& ws = d.world_set();
    CHECK(gap(d, AskableQuestion{Proposition::generator(ws, 0)}) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gap(d, AskableQuestion{Proposition::generator(ws, 1)}) ==
          doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(gap(d, AskableQuestion{Proposition::generator(ws, 2)}) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(gap(d, PureQuestion(Proposition::generator(ws, 3))) ==
          doctest::Approx(0.6).epsilon(1e-14));
    CHECK(gap(d, PureQuestion::identity(ws)) == doctest::Approx(1.0).epsilon(1e-14));

    // gap(A?) = -gap((!A)?) and gap(pure) = |gap(askable)|.
    const AskableQuestion q{Proposition::generator(ws, 3)};
    CHECK(gap(d, q) == doctest::Approx(-gap(d, q.negate())).epsilon(1e-14));
    CHECK(gap(d, q.pure()) == doctest::Approx(std::abs(gap(d, q))).epsilon(1e-14));
}

TEST_CASE("gap multiplicativity for independent questions") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const WorldDistribution d = random_product(rng, 3);
        const WorldSet& ws = d.world_set();
        const PureQuestion qa(Proposition::generator(ws, 0));
        const PureQuestion qb(Proposition::generator(ws, 1));
        CHECK(gap(d, star(qa, qb)) ==
              doctest::Approx(gap(d, qa) * gap(d, qb)).epsilon(1e-12));

        const AskableQuestion aa{Proposition::generator(ws, 0)};
        const AskableQuestion ab{Proposition::generator(ws, 2)};
        CHECK(gap(d, star(aa, ab)) ==
              doctest::Approx(gap(d, aa) * gap(d, ab)).epsilon(1e-12));
        CHECK(gap(d, star(aa.negate(), ab)) ==
              doctest::Approx(gap(d, aa.negate()) * gap(d, ab)).epsilon(1e-12));
    }
}

TEST_CASE("signed gap multiplicativity equals independence, exactly") {
    // gap(A? * B?) - gap(A?) gap(B?) = 4 (P(AB) - P(A) P(B)) identically.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const WorldDistribution d = random_joint(rng, 2);
        const WorldSet& ws = d.world_set();
        const AskableQuestion qa{Proposition::generator(ws, 0)};
        const AskableQuestion qb{Proposition::generator(ws, 1)};
        const double lhs = gap(d, star(qa, qb)) - gap(d, qa) * gap(d, qb);
        const double rhs = 4.0 * (prob(d, qa.asked() & qb.asked()) -
                                  prob(d, qa.asked()) * prob(d, qb.asked()));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("gmp") {
    const WorldDistribution half = WorldDistribution::product({0.5, 0.5});
    const WorldSet& ws = half.world_set();
    const PureQuestion qa(Proposition::generator(ws, 0));
    const PureQuestion qb(Proposition::generator(ws, 1));
    CHECK(gmp(half, qa) == doctest::Approx(0.5).epsilon(1e-14));
    const PureQuestion pair[2] = {qa, qb};
    CHECK(gmp(half, pair) == doctest::Approx(0.25).epsilon(1e-14));

    const WorldDistribution settled = WorldDistribution::product({1.0, 0.5});
    CHECK(gmp(settled, PureQuestion(Proposition::generator(ws, 0))) == 0.0);

    // Multiplicative over independent questions.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const WorldDistribution d = random_product(rng, 2);
        const PureQuestion a(Proposition::generator(d.world_set(), 0));
        const PureQuestion b(Proposition::generator(d.world_set(), 1));
        const PureQuestion both[2] = {a, b};
        CHECK(gmp(d, both) == doctest::Approx(gmp(d, a) * gmp(d, b)).epsilon(1e-12));
    }
}

TEST_CASE("gmp-gap identity everywhere") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const WorldDistribution d = random_joint(rng, 3);
        std::uniform_int_distribution<std::uint32_t> bits(1, 254);
        std::vector<bool> truth(8);
        const std::uint32_t t = bits(rng);
        for (int w = 0; w < 8; ++w) truth[w] = (t >> w) & 1;
        const PureQuestion q(Proposition(d.world_set(), truth));
        const double g = gap(d, q);
        CHECK(gmp(d, q) == doctest::Approx(0.5 * std::sqrt(1.0 - g * g)).epsilon(1e-12));
    }
}

TEST_CASE("info_value") {
    const WorldDistribution half = WorldDistribution::product({0.5});
    const PureQuestion qa(Proposition::generator(half.world_set(), 0));
    CHECK(info_value(half, qa) == doctest::Approx(1.0).epsilon(1e-14));

    const WorldDistribution settled = WorldDistribution::product({1.0});
    CHECK(std::isinf(info_value(settled, PureQuestion(
                                    Proposition::generator(settled.world_set(), 0)))));

    // Additivity over an independent pair: i(a) = 1, i(b) = 2 gives i(ab) = 3.
    // gmp(b) = 1/4 at P(B) = (2 - sqrt 3)/4.
    const WorldDistribution d = WorldDistribution::product({0.5, 0.06698729810778065});
    const WorldSet& ws = d.world_set();
    const PureQuestion a(Proposition::generator(ws, 0));
    const PureQuestion b(Proposition::generator(ws, 1));
    CHECK(info_value(d, b) == doctest::Approx(2.0).epsilon(1e-10));
    const PureQuestion both[2] = {a, b};
    CHECK(info_value(d, both) ==
          doctest::Approx(info_value(d, a) + info_value(d, b)).epsilon(1e-12));
}

TEST_CASE("gap_from_gmp") {
    CHECK(gap_from_gmp(0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(gap_from_gmp(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gap_from_gmp(0.4) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK_THROWS_AS(gap_from_gmp(0.6), std::domain_error);
    CHECK_THROWS_AS(gap_from_gmp(-0.1), std::domain_error);
}

TEST_CASE("evidence") {
    const WorldDistribution d = WorldDistribution::product({0.2, 0.5, 1.0});
    const WorldSet& ws = d.world_set();
    CHECK(evidence(d, AskableQuestion{Proposition::generator(ws, 0)}) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(evidence(d, AskableQuestion{Proposition::generator(ws, 1)}) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(evidence(d, AskableQuestion{Proposition::generator(ws, 2)}) ==
          -std::numeric_limits<double>::infinity());
}

TEST_CASE("evidence update") {
    // B independent of A leaves the evidence unchanged.
    const WorldDistribution indep = WorldDistribution::product({0.3, 0.6});
    const WorldSet& ws2 = indep.world_set();
    const AskableQuestion qa{Proposition::generator(ws2, 0)};
    CHECK(evidence_update(indep, qa, Proposition::generator(ws2, 1)) ==
          doctest::Approx(evidence(indep, qa)).epsilon(1e-12));

    // Likelihood ratio 4 lowers the evidence against A by 2 bits.
    //   P(B|A) = 0.8, P(B|!A) = 0.2 over the (A, B) joint.
    const WorldSet ws = WorldSet::generated(2);
    const double pa = 0.25;
    const WorldDistribution d(
        ws, {(1 - pa) * 0.8, pa * 0.2, (1 - pa) * 0.2, pa * 0.8});
    const AskableQuestion q{Proposition::generator(ws, 0)};
    CHECK(evidence_update(d, q, Proposition::generator(ws, 1)) ==
          doctest::Approx(evidence(d, q) - 2.0).epsilon(1e-12));

    // Conditionally independent updates add: two ratio-2 observations.
    const WorldSet ws3 = WorldSet::generated(3);
    std::vector<double> p(8);
    for (int w = 0; w < 8; ++w) {
        const bool a = w & 1, b = w & 2, c = w & 4;
        const double pb = a ? 2.0 / 3.0 : 1.0 / 3.0;
        const double pc = a ? 2.0 / 3.0 : 1.0 / 3.0;
        p[w] = 0.5 * (b ? pb : 1 - pb) * (c ? pc : 1 - pc);
    }
    const WorldDistribution d3(ws3, p);
    const AskableQuestion qa3{Proposition::generator(ws3, 0)};
    const Proposition bc =
        Proposition::generator(ws3, 1) & Proposition::generator(ws3, 2);
    CHECK(evidence_update(d3, qa3, bc) ==
          doctest::Approx(evidence(d3, qa3) - 2.0).epsilon(1e-12));

    const WorldDistribution bad = WorldDistribution::product({0.5, 1.0});
    CHECK_THROWS_AS(
        evidence_update(bad, AskableQuestion{Proposition::generator(ws2, 0)},
                        ~Proposition::generator(ws2, 1)),
        std::domain_error);
}

TEST_CASE("doubt") {
    const WorldDistribution d = WorldDistribution::product({1.0, 0.0, 0.25, 0.5});
    const WorldSet& ws = d.world_set();
    const DoubtValue no_doubt = doubt(d, AskableQuestion{Proposition::generator(ws, 0)});
    CHECK(no_doubt.real == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(no_doubt.imag == 0.0);

    const DoubtValue falsum = doubt(d, AskableQuestion{Proposition::generator(ws, 1)});
    CHECK(falsum.real == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(falsum.imag == doctest::Approx(std::numbers::pi).epsilon(1e-14));

    const DoubtValue halfdown = doubt(d, AskableQuestion{Proposition::generator(ws, 2)});
    CHECK(halfdown.real == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(halfdown.imag == doctest::Approx(std::numbers::pi).epsilon(1e-14));

    const DoubtValue open = doubt(d, AskableQuestion{Proposition::generator(ws, 3)});
    CHECK(std::isinf(open.real));

    CHECK(doubt(d, PureQuestion(Proposition::generator(ws, 2))) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-14));
}

TEST_CASE("doubt adds for independent questions, mod 2 pi i") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> away(0.05, 0.45);
    for (int trial = 0; trial < 100; ++trial) {
        double m0 = away(rng), m1 = away(rng);
        if (rng() & 1) m0 = 1.0 - m0;
        if (rng() & 1) m1 = 1.0 - m1;
        const WorldDistribution d = WorldDistribution::product({m0, m1});
        const AskableQuestion qa{Proposition::generator(d.world_set(), 0)};
        const AskableQuestion qb{Proposition::generator(d.world_set(), 1)};
        const DoubtValue da = doubt(d, qa), db = doubt(d, qb);
        const DoubtValue dab = doubt(d, star(qa, qb));
        double imag = da.imag + db.imag;
        if (imag >= 2.0 * std::numbers::pi - 1e-9) imag -= 2.0 * std::numbers::pi;
        CHECK(dab.real == doctest::Approx(da.real + db.real).epsilon(1e-9));
        CHECK(dab.imag == doctest::Approx(imag).epsilon(1e-12));
    }
}

TEST_SUITE_END();
