#include <doctest.h>

#include <cmath>
#include <random>

#include "questions/actions.hpp"
#include "questions/measures.hpp"
#include "questions/tilde.hpp"

using namespace questions;

TEST_SUITE_BEGIN("actions");

namespace {

WorldDistribution random_product(std::mt19937_64& rng, int n_generators) {
    std::uniform_real_distribution<double> unit(0.02, 0.98);
    std::vector<double> m(n_generators);
    for (auto& v : m) v = unit(rng);
    return WorldDistribution::product(m);
}

std::vector<PureQuestion> rank1_questions(const WorldSet& ws) {
    std::vector<PureQuestion> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << ws.generators); ++mask) {
        PureQuestion q = PureQuestion::identity(ws);
        for (int i = 0; i < ws.generators; ++i)
            if ((mask >> i) & 1) q = star(q, PureQuestion(Proposition::generator(ws, i)));
        out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("give conditions the distribution") {
    const WorldSet ws = WorldSet::generated(2);
    const WorldDistribution u = WorldDistribution::uniform(ws);
    const Proposition a = Proposition::generator(ws, 0);

    const WorldDistribution after = give(u, a);
    CHECK(prob(after, a) == 1.0);
    CHECK(after[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(after[3] == doctest::Approx(0.5).epsilon(1e-14));

    const WorldDistribution same = give(u, Proposition::verum(ws));
    for (std::size_t w = 0; w < 4; ++w) CHECK(same[w] == u[w]);

    CHECK_THROWS_AS(give(u, Proposition::falsum(ws)), std::domain_error);
}

TEST_CASE("the noncommutativity fixture: Xx vs xX") {
    const WorldSet pair = WorldSet::generated(1);
    const Proposition x = Proposition::generator(pair, 0);
    const PureQuestion qx(x);
    const WorldDistribution start = WorldDistribution::product({0.3});

    const WorldDistribution after_Xx = raise_question(give(start, x), qx);
    CHECK(prob(after_Xx, x) == 0.5);

    const WorldDistribution after_xX = give(raise_question(start, qx), x);
    CHECK(prob(after_xX, x) == 1.0);

    const ActionSequence xx_seq{Give{x}, RaiseQuestion{qx}};
    const WorldDistribution via_seq = apply_sequence(start, xx_seq);
    CHECK(prob(via_seq, x) == 0.5);
}

TEST_CASE("giving not-A undoes giving A on singleton branches") {
    const WorldSet pair = WorldSet::generated(1);
    const Proposition x = Proposition::generator(pair, 0);
    const WorldDistribution start = WorldDistribution::product({0.3});
    const WorldDistribution undone = give(give(start, x), ~x);
    CHECK(prob(undone, ~x) == 1.0);
}

TEST_CASE("give on a multi-world null branch needs an extension") {
    const WorldSet ws = WorldSet::generated(2);
    const WorldDistribution d(ws, {0.0, 0.6, 0.0, 0.4});  // P(A) = 1, !A has two worlds
    const Proposition a = Proposition::generator(ws, 0);
    CHECK_THROWS_AS(give(d, ~a), std::domain_error);

    auto ext = std::make_shared<ConditionalExtension>();
    ext->define(~a, {0.25, 0.0, 0.75, 0.0});
    const WorldDistribution with = d.with_extension(ext);
    const WorldDistribution after = give(with, ~a);
    CHECK(after[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(after[2] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("raise sets the gap to zero") {
    const WorldSet ws = WorldSet::generated(2);
    const WorldDistribution u = WorldDistribution::uniform(ws);
    const Proposition ab = Proposition::generator(ws, 0) & Proposition::generator(ws, 1);

    // Uniform is already flat for rank-1 generator questions.
    const WorldDistribution same = raise_question(u, PureQuestion(Proposition::generator(ws, 0)));
    for (std::size_t w = 0; w < 4; ++w) CHECK(same[w] == doctest::Approx(0.25).epsilon(1e-14));

    // Raising q(AB) on uniform: P(AB) = 1/2, the rest share 1/6 each.
    const WorldDistribution raised = raise_question(u, PureQuestion(ab));
    CHECK(prob(raised, ab) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(raised[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(raised[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(raised[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    // Raising with one empty branch and no extension is an error.
    const WorldDistribution settled(ws, {0.0, 0.6, 0.0, 0.4});
    CHECK_THROWS_AS(
        raise_question(settled, PureQuestion(~Proposition::generator(ws, 0))),
        std::domain_error);
}

TEST_CASE("raise_subject matches iterated raises") {
    std::mt19937_64 rng(29);
    const Subject s_ab(2, 0b11);
    for (int trial = 0; trial < 50; ++trial) {
        const WorldDistribution d = random_product(rng, 2);
        const WorldDistribution via_subject = raise_subject(d, s_ab);
        for (std::size_t w = 0; w < 4; ++w)
            CHECK(via_subject[w] == doctest::Approx(0.25).epsilon(1e-12));

        const WorldDistribution ba = raise_question(
            raise_question(d, PureQuestion(Proposition::generator(d.world_set(), 1))),
            PureQuestion(Proposition::generator(d.world_set(), 0)));
        for (std::size_t w = 0; w < 4; ++w)
            CHECK(via_subject[w] == doctest::Approx(ba[w]).epsilon(1e-12));
    }
    const WorldDistribution u = WorldDistribution::uniform(WorldSet::generated(2));
    const WorldDistribution same = raise_subject(u, Subject::identity(2));
    for (std::size_t w = 0; w < 4; ++w) CHECK(same[w] == u[w]);
}

TEST_CASE("idempotence") {
    // Exact on the two-world fixture.
    const WorldDistribution start = WorldDistribution::product({0.3});
    const Proposition x = Proposition::generator(start.world_set(), 0);
    const WorldDistribution r1 = raise_question(start, PureQuestion(x));
    const WorldDistribution r2 = raise_question(r1, PureQuestion(x));
    CHECK(r1[0] == r2[0]);
    CHECK(r1[1] == r2[1]);
    const WorldDistribution g1 = give(start, x), g2 = give(g1, x);
    CHECK(g1[0] == g2[0]);
    CHECK(g1[1] == g2[1]);

    // Within an ulp on random joints, where per-world division rounds.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const WorldDistribution d = random_product(rng, 2);
        const Proposition a = Proposition::generator(d.world_set(), 0);
        const WorldDistribution ga = give(d, a), gb = give(ga, a);
        const WorldDistribution ra = raise_question(d, PureQuestion(a));
        const WorldDistribution rb = raise_question(ra, PureQuestion(a));
        for (std::size_t w = 0; w < d.size(); ++w) {
            CHECK(std::abs(ga[w] - gb[w]) <= 1e-15);
            CHECK(std::abs(ra[w] - rb[w]) <= 1e-15);
        }
    }
}

TEST_CASE("asking branches instead of producing one distribution") {
    const WorldDistribution d = WorldDistribution::product({0.3});
    const AskableQuestion q{Proposition::generator(d.world_set(), 0)};
    const AskOutcome out = ask(d, q);
    CHECK(out.p_yes == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(out.p_no == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(prob(out.if_yes, q.asked()) == 1.0);
    CHECK(prob(out.if_no, ~q.asked()) == 1.0);
}

TEST_CASE("info_content") {
    const WorldSet ws = WorldSet::generated(2);
    CHECK(info_content(WorldDistribution::uniform(ws)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(info_content(WorldDistribution(ws, {0.0, 0.0, 0.0, 1.0})) ==
          doctest::Approx(2.0).epsilon(1e-12));

    const WorldDistribution raised = raise_question(
        WorldDistribution::uniform(ws),
        PureQuestion(Proposition::generator(ws, 0) & Proposition::generator(ws, 1)));
    CHECK(info_content(raised) > 0.0);
}

TEST_CASE("rank-1 raising is a pure subtraction on product distributions") {
    std::mt19937_64 rng(37);
    const WorldSet ws = WorldSet::generated(3);
    const auto rank1 = rank1_questions(ws);
    double worst_growth = -1.0, worst_entropy_drop = 1.0;
    for (int trial = 0; trial < 300; ++trial) {
        const WorldDistribution d = random_product(rng, 3);
        for (const auto& q : rank1) {
            const WorldDistribution after = raise_question(d, q);
            worst_entropy_drop =
                std::min(worst_entropy_drop, shannon_entropy(after) - shannon_entropy(d));
            for (const auto& other : rank1)
                worst_growth = std::max(worst_growth, gap(after, other) - gap(d, other));
        }
    }
    CHECK(worst_growth <= 1e-12);
    CHECK(worst_entropy_drop >= -1e-12);
}

TEST_CASE("tilde action rule") {
    const WorldSet four = WorldSet::generated(2);
    const PureQuestion qa(Proposition::generator(four, 0));
    const PureQuestion qb(Proposition::generator(four, 1));

    // Settled A with unsettled B: raising a drives both gaps to zero, the
    // question-level footprint of a subject raise.
    const auto settled = tilde_action_check(tilde_distribution(1.0, 0.3), qa, qb);
    CHECK(settled.marginal_is_tilde);
    CHECK(settled.guaranteed);
    CHECK(settled.p_a_after_raise == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(settled.p_b_after_raise == doctest::Approx(0.5).epsilon(1e-9));

    const auto zero = tilde_action_check(tilde_distribution(0.0, 0.3), qa, qb);
    CHECK(zero.p_b_after_raise == doctest::Approx(0.5).epsilon(1e-9));

    // P(A) = 1/2 behaves like independence: P(B) unchanged.
    const auto half = tilde_action_check(tilde_distribution(0.5, 0.3), qa, qb);
    CHECK(half.p_b_after_raise == doctest::Approx(0.3).epsilon(1e-9));

    // Both settled: not guaranteed.
    const auto both = tilde_action_check(tilde_distribution(1.0, 1.0), qa, qb);
    CHECK_FALSE(both.guaranteed);

    // A non-tilde marginal is rejected.
    const WorldDistribution off(four, {0.55, 0.15, 0.2, 0.1});
    CHECK_THROWS_AS(tilde_action_check(off, qa, qb), std::domain_error);
}

TEST_CASE("sequence errors carry the step index") {
    const WorldSet ws = WorldSet::generated(1);
    const WorldDistribution d = WorldDistribution::product({0.5});
    const ActionSequence seq{Give{Proposition::generator(ws, 0)},
                             Give{Proposition::falsum(ws)}};
    try {
        apply_sequence(d, seq);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_SUITE_END();
