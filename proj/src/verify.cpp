#include "questions/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "questions/actions.hpp"
#include "questions/complex_props.hpp"
#include "questions/entanglement.hpp"
#include "questions/groups.hpp"
#include "questions/measures.hpp"
#include "questions/tilde.hpp"
#include "questions/two_state.hpp"
#include "questions/worlds.hpp"

namespace questions {

namespace {

class SuiteBuilder {
  public:
    explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

    void add(std::string id, std::string description, double measured, double tolerance) {
        Check c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.measured = measured;
        c.tolerance = tolerance;
        c.passed = std::isfinite(measured) && std::abs(measured) <= tolerance;
        report_.checks.push_back(std::move(c));
    }

    void add_flag(std::string id, std::string description, bool ok) {
        Check c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.measured = ok ? 0.0 : 1.0;
        c.tolerance = 0.0;
        c.passed = ok;
        report_.checks.push_back(std::move(c));
    }

    VerificationReport take() { return std::move(report_); }

  private:
    VerificationReport report_;
};

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

VerificationReport verify_worlds(std::uint64_t seed) {
    SuiteBuilder b("worlds");
    std::mt19937_64 rng(seed + 1);

    const WorldSet hundred(100);
    const WorldDistribution u100 = WorldDistribution::uniform(hundred);
    auto is_prime = [](std::size_t w) {
        const std::size_t n = w + 1;
        if (n < 2) return false;
        for (std::size_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    const Proposition prime = Proposition::from_predicate(hundred, is_prime);
    const Proposition even =
        Proposition::from_predicate(hundred, [](std::size_t w) { return (w + 1) % 2 == 0; });
    b.add("W1", "P(prime in 1..100) = 0.25", prob(u100, prime) - 0.25, 1e-15);
    b.add("W2", "i(A) = 1 bit at P(A) = 1/2", info(u100, even) - 1.0, 1e-12);
    b.add("W3", "i(even, prime) = 1 + 2 - log2(100) bits",
          mutual_info_pair(u100, even, prime) - (3.0 - std::log2(100.0)), 1e-12);

    const WorldSet eight = WorldSet::generated(3);
    const WorldDistribution u8 = WorldDistribution::uniform(eight);
    const Proposition abc = Proposition::generator(eight, 0) & Proposition::generator(eight, 1) &
                            Proposition::generator(eight, 2);
    const Proposition ab = Proposition::generator(eight, 0) & Proposition::generator(eight, 1);
    b.add("W4", "A implies B gives i(A,B) = i(B)", mutual_info_pair(u8, abc, ab) - 2.0, 1e-12);

    const WorldDistribution td = tilde_distribution(0.25, 0.25);
    const WorldSet four = WorldSet::generated(2);
    b.add("W5", "balance_sum vanishes at the tilde point (0.25, 0.25)",
          balance_sum(td, Proposition::generator(four, 0), Proposition::generator(four, 1)),
          1e-8);

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const WorldDistribution d = random_joint(rng, 3);
        const Proposition a = Proposition::generator(d.world_set(), i % 3);
        worst = std::max(worst, std::abs(prob(d, a) + prob(d, ~a) - 1.0));
    }
    b.add("W6", "P(A) + P(!A) = 1 on random distributions", worst, 1e-12);

    double worst_sym = 0.0;
    for (int i = 0; i < 50; ++i) {
        const WorldDistribution d = random_joint(rng, 3);
        const WorldSet& ws = d.world_set();
        const Proposition a = Proposition::generator(ws, 0);
        const Proposition bp = Proposition::generator(ws, 1) & Proposition::generator(ws, 2);
        double base;
        try {
            base = balance_sum(d, a, bp);
        } catch (const std::exception&) {
            continue;
        }
        worst_sym = std::max(worst_sym, std::abs(balance_sum(d, ~a, bp) - base));
        worst_sym = std::max(worst_sym, std::abs(balance_sum(d, a, ~bp) - base));
        worst_sym = std::max(worst_sym, std::abs(balance_sum(d, bp, a) - base));
    }
    b.add("W7", "balance_sum invariant under negation and swap", worst_sym, 1e-10);
    return b.take();
}

VerificationReport verify_groups(std::uint64_t seed) {
    SuiteBuilder b("groups");
    std::mt19937_64 rng(seed + 2);

    const GroupCensus c2 = group_census(2);
    const GroupCensus c3 = group_census(3);
    b.add("G1", "|Q(2)| = 8", static_cast<double>(c2.q_size) - 8.0, 0.0);
    b.add("G2", "|Q(3)| = 128", static_cast<double>(c3.q_size) - 128.0, 0.0);
    b.add("G3", "|Q_1(3)| = 8", static_cast<double>(c3.q1_size) - 8.0, 0.0);
    b.add("G4", "Q(3) has 7 generators", static_cast<double>(c3.generator_count) - 7.0, 0.0);
    b.add("G5", "|S_2(3)| = 8", static_cast<double>(c3.s_sizes[2]) - 8.0, 0.0);
    b.add_flag("G6", "closure, involution, associativity for N <= 3",
               c2.closure_ok && c2.involution_ok && c2.associativity_ok && c3.closure_ok &&
                   c3.involution_ok && c3.associativity_ok);

    const WorldSet ws = WorldSet::generated(3);
    bool anf_ok = true;
    for (std::uint32_t t = 0; t < 256; ++t) {
        std::vector<bool> truth(8);
        for (int w = 0; w < 8; ++w) truth[w] = (t >> w) & 1;
        const Proposition p(ws, truth);
        if (!(anf(p).to_proposition() == p)) anf_ok = false;
    }
    b.add_flag("G7", "ANF round-trip is the identity for all N = 3 propositions", anf_ok);

    const Proposition a = Proposition::generator(ws, 0);
    const Proposition bb = Proposition::generator(ws, 1);
    b.add_flag("G8", "q(A) * q(AB) = q(A and not B)",
               star(PureQuestion(a), PureQuestion(a & bb)) == PureQuestion(a & ~bb));

    bool hom_ok = true;
    std::uniform_int_distribution<std::uint32_t> table(0, 255);
    for (int i = 0; i < 500; ++i) {
        std::vector<bool> ta(8), tb(8);
        const std::uint32_t xa = table(rng), xb = table(rng);
        for (int w = 0; w < 8; ++w) {
            ta[w] = (xa >> w) & 1;
            tb[w] = (xb >> w) & 1;
        }
        const AskableQuestion qa{Proposition(ws, ta)}, qb{Proposition(ws, tb)};
        const AskableQuestion prod = star(qa, qb);
        if (!(prod.pure() == star(qa.pure(), qb.pure()))) hom_ok = false;
        if (prod.sign() != qa.sign() * qb.sign()) hom_ok = false;
    }
    b.add_flag("G9", "K(N) factors as Q(N) x Z2 on random samples", hom_ok);

    bool iso_ok = true;
    for (std::uint32_t m1 = 0; m1 < 8; ++m1) {
        for (std::uint32_t m2 = 0; m2 < 8; ++m2) {
            const Subject s1(3, m1), s2(3, m2);
            PureQuestion q1 = PureQuestion::identity(ws), q2 = PureQuestion::identity(ws);
            for (int i = 0; i < 3; ++i) {
                if (s1.contains(i)) q1 = star(q1, PureQuestion(Proposition::generator(ws, i)));
                if (s2.contains(i)) q2 = star(q2, PureQuestion(Proposition::generator(ws, i)));
            }
            PureQuestion expect = PureQuestion::identity(ws);
            const Subject sc = circ(s1, s2);
            for (int i = 0; i < 3; ++i)
                if (sc.contains(i)) expect = star(expect, PureQuestion(Proposition::generator(ws, i)));
            if (!(star(q1, q2) == expect)) iso_ok = false;
        }
    }
    b.add_flag("G10", "S(N) is isomorphic to Q_1(N)", iso_ok);

    bool quot_ok = true;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const Proposition gi = Proposition::generator(ws, i);
            const Proposition gj = Proposition::generator(ws, j);
            const auto base = quotient_subject(PureQuestion(gi & gj), 2);
            for (const Proposition& variant : {gi & ~gj, ~gi & gj, ~gi & ~gj}) {
                if (quotient_subject(PureQuestion(variant), 2) != base) quot_ok = false;
            }
        }
    }
    b.add_flag("G11", "quotient subject invariant under generator negation", quot_ok);
    return b.take();
}

VerificationReport verify_measures(std::uint64_t seed) {
    SuiteBuilder b("measures");
    std::mt19937_64 rng(seed + 3);
    const WorldSet ws = WorldSet::generated(3);
    const auto rank1 = rank1_questions(ws);

    double worst_pure = 0.0, worst_signed = 0.0, worst_gmp_id = 0.0, worst_gmp_mult = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const WorldDistribution d = random_product(rng, 3);
        for (std::size_t i = 0; i < rank1.size(); ++i) {
            for (std::size_t j = 0; j < rank1.size(); ++j) {
                const Subject si(3, static_cast<std::uint32_t>(i + 1));
                const Subject sj(3, static_cast<std::uint32_t>(j + 1));
                if ((si.mask() & sj.mask()) != 0) continue;  // disjoint = independent
                const PureQuestion& qi = rank1[i];
                const PureQuestion& qj = rank1[j];
                worst_pure = std::max(
                    worst_pure, std::abs(gap(d, star(qi, qj)) - gap(d, qi) * gap(d, qj)));
                const AskableQuestion ai(qi.canonical()), aj(qj.canonical());
                worst_signed = std::max(
                    worst_signed, std::abs(gap(d, star(ai, aj)) - gap(d, ai) * gap(d, aj)));
            }
        }
        const PureQuestion qa(Proposition::generator(ws, 0));
        const PureQuestion qb(Proposition::generator(ws, 1));
        const PureQuestion both[2] = {qa, qb};
        worst_gmp_mult =
            std::max(worst_gmp_mult, std::abs(gmp(d, both) - gmp(d, qa) * gmp(d, qb)));
    }
    for (int trial = 0; trial < 300; ++trial) {
        const WorldDistribution d = random_joint(rng, 3);
        for (const auto& q : rank1)
            worst_gmp_id = std::max(
                worst_gmp_id, std::abs(gmp(d, q) - 0.5 * std::sqrt(1.0 - std::pow(gap(d, q), 2))));
    }
    b.add("M1", "unsigned gaps multiply for independent questions", worst_pure, 1e-12);
    b.add("M2", "signed gaps multiply for independent askable questions", worst_signed, 1e-12);
    b.add("M3", "gmp = (1/2) sqrt(1 - gap^2) everywhere", worst_gmp_id, 1e-12);
    b.add("M4", "gmp multiplies for independent questions", worst_gmp_mult, 1e-12);

    const WorldDistribution d5 = WorldDistribution::product({0.2});
    const AskableQuestion a5{Proposition::generator(d5.world_set(), 0)};
    b.add("M5", "e(A?) = 2 bits at P(A) = 0.2", evidence(d5, a5) - 2.0, 1e-12);

    const WorldDistribution d6 = WorldDistribution::product({0.25});
    const AskableQuestion a6{Proposition::generator(d6.world_set(), 0)};
    const DoubtValue dv = doubt(d6, a6);
    b.add("M6", "doubt at gap -1/2 is ln 2 + i pi",
          std::abs(dv.real - std::numbers::ln2) + std::abs(dv.imag - std::numbers::pi), 1e-12);

    b.add("M7", "gap_from_gmp inverts the identity", gap_from_gmp(0.4) - 0.6, 1e-12);

    double worst_doubt = 0.0;
    std::uniform_real_distribution<double> away_from_half(0.05, 0.45);
    for (int trial = 0; trial < 100; ++trial) {
        // Marginals kept away from 1/2: -ln|gap| amplifies noise near gap 0.
        double m0 = away_from_half(rng), m1 = away_from_half(rng);
        if (rng() & 1) m0 = 1.0 - m0;
        if (rng() & 1) m1 = 1.0 - m1;
        const WorldDistribution d = WorldDistribution::product({m0, m1});
        const AskableQuestion qa{Proposition::generator(d.world_set(), 0)};
        const AskableQuestion qb{Proposition::generator(d.world_set(), 1)};
        const DoubtValue da = doubt(d, qa), db = doubt(d, qb), dab = doubt(d, star(qa, qb));
        const std::complex<double> lhs(dab.real, dab.imag);
        std::complex<double> rhs(da.real + db.real, da.imag + db.imag);
        if (rhs.imag() >= 2.0 * std::numbers::pi - 1e-9)
            rhs -= std::complex<double>(0.0, 2.0 * std::numbers::pi);
        worst_doubt = std::max(worst_doubt, std::abs(lhs - rhs));
    }
    b.add("M8", "doubt adds (mod 2 pi i) for independent questions", worst_doubt, 1e-9);
    return b.take();
}

VerificationReport verify_tilde(std::uint64_t seed) {
    SuiteBuilder b("tilde");
    (void)seed;

    b.add("T1", "x(0.25, 0.25) = 0.12299828119582",
          tilde_closed_form(0.25, 0.25).x - 0.12299828119582, 1e-11);

    const auto roots = quartic_roots_oracle(0.25, 0.25);
    const bool two = roots.size() == 2;
    b.add_flag("T2", "oracle finds exactly {0.0625, 0.12299828119582} at (0.25, 0.25)",
               two && std::abs(roots[0].x - 0.0625) < 1e-9 &&
                   std::abs(roots[1].x - 0.12299828119582) < 1e-9);

    double worst_resid = 0.0, worst_sym = 0.0, worst_bracket = 0.0, worst_balance = 0.0,
           worst_gmp = 0.0;
    const WorldSet four = WorldSet::generated(2);
    const Proposition a = Proposition::generator(four, 0);
    const Proposition bb = Proposition::generator(four, 1);
    const PureQuestion qa(a), qb(bb);
    const PureQuestion qpair[2] = {qa, qb};
    for (int i = 1; i < 101; ++i) {
        for (int j = 1; j < 101; ++j) {
            const double pa = i / 101.0, pb = j / 101.0;
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            const double rhs = pa * pb * (1.0 - pa) * (1.0 - pb);
            worst_resid = std::max(worst_resid,
                                   std::abs(e.x * (pa - e.x) * (pb - e.x) *
                                                (1.0 - pa - pb + e.x) -
                                            rhs * rhs));
            worst_sym = std::max(worst_sym, std::abs(e.x - tilde_closed_form(pb, pa).x));
            worst_sym = std::max(
                worst_sym, std::abs(tilde_closed_form(1.0 - pa, pb).x - (pb - e.x)));
            const double g_star = 4.0 * e.x - 2.0 * pa - 2.0 * pb + 1.0;
            const double lo = std::min(e.gap_a * e.gap_b, g_star);
            const double hi = std::max(e.gap_a * e.gap_b, g_star);
            const double re_v = e.v.real();
            worst_bracket = std::max(worst_bracket,
                                     std::max(0.0, std::max(lo - re_v, re_v - hi)));
            if (i % 10 == 1 && j % 10 == 1) {
                const WorldDistribution td = tilde_distribution(pa, pb);
                worst_balance = std::max(worst_balance, std::abs(balance_sum(td, a, bb)));
                worst_gmp = std::max(worst_gmp, std::abs(gmp(td, qpair) - gmp(td, qa) * gmp(td, qb)));
            }
        }
    }
    b.add("T3", "quartic residual of the closed form on the interior grid", worst_resid, 1e-9);
    b.add("T4", "symmetries x(a,b) = x(b,a) and x(1-a,b) = b - x(a,b)", worst_sym, 1e-9);
    b.add("T5", "Re(V) bracketed by gap products", worst_bracket, 1e-9);
    b.add("T6", "balance_sum vanishes on tilde distributions", worst_balance, 1e-8);
    b.add("T7", "gmp factorizes over tilde distributions", worst_gmp, 1e-9);

    double worst_rule1 = 0.0, worst_rule_half = 0.0;
    for (int j = 0; j <= 20; ++j) {
        const double pb = j / 20.0;
        worst_rule1 = std::max(worst_rule1, std::abs(tilde_conditional(1.0, pb).value - pb));
        worst_rule_half =
            std::max(worst_rule_half, std::abs(tilde_conditional(0.5, pb).value - pb));
    }
    b.add("T8", "P(B|A) = P(B) when P(A) = 1, exactly", worst_rule1, 0.0);
    b.add("T9", "P(B|A) = P(B) when P(A) = 1/2", worst_rule_half, 1e-9);
    b.add("T10", "P(B|A) -> P(!B) as P(A) -> 0",
          tilde_conditional(1e-6, 0.3).value - 0.7, 1e-3);
    b.add_flag("T11", "P(B|A) unconstrained at P(A) = 0, P(B) = 1",
               tilde_conditional(0.0, 1.0).unconstrained);

    double max_disc = 0.0;
    for (int i = 0; i <= 1000; ++i)
        for (int j = 0; j <= 1000; ++j)
            max_disc = std::max(max_disc, std::abs(discrepancy(i / 1000.0, j / 1000.0)));
    b.add("T12", "max |x - ab| = 0.0674 over the unit square", max_disc - 0.0674, 5e-4);

    bool unique_ok = true;
    for (int i = 1; i < 33 && unique_ok; ++i) {
        for (int j = 1; j < 33 && unique_ok; ++j) {
            const double pa = i / 33.0, pb = j / 33.0;
            if (std::abs(pa - 0.5) < 1e-3 || std::abs(pb - 0.5) < 1e-3) continue;
            const auto rs = quartic_roots_oracle(pa, pb);
            if (rs.size() != 2) unique_ok = false;
        }
    }
    b.add_flag("T13", "exactly two admissible roots away from the half lines", unique_ok);
    return b.take();
}

VerificationReport verify_actions(std::uint64_t seed) {
    SuiteBuilder b("actions");
    std::mt19937_64 rng(seed + 4);

    const WorldSet pair = WorldSet::generated(1);
    const Proposition x = Proposition::generator(pair, 0);
    const PureQuestion qx(x);
    const WorldDistribution start = WorldDistribution::product({0.3});
    const WorldDistribution after_Xx = raise_question(give(start, x), qx);
    const WorldDistribution after_xX = give(raise_question(start, qx), x);
    b.add("A1", "P(X|Xx) = 1/2, exactly", prob(after_Xx, x) - 0.5, 0.0);
    b.add("A2", "P(X|xX) = 1, exactly", prob(after_xX, x) - 1.0, 0.0);
    b.add_flag("A3", "give then raise differs from raise then give",
               std::abs(prob(after_Xx, x) - prob(after_xX, x)) > 0.4);

    const WorldSet four = WorldSet::generated(2);
    const WorldDistribution u4 = WorldDistribution::uniform(four);
    const Proposition ab = Proposition::generator(four, 0) & Proposition::generator(four, 1);
    const WorldDistribution raised = raise_question(u4, PureQuestion(ab));
    const double expect_cells = std::abs(prob(raised, ab) - 0.5) +
                                std::abs(raised[0] - 1.0 / 6.0) +
                                std::abs(raised[1] - 1.0 / 6.0) +
                                std::abs(raised[2] - 1.0 / 6.0);
    b.add("A4", "raising q(AB) on uniform gives cells (1/2, 1/6, 1/6, 1/6)", expect_cells,
          1e-12);

    double worst_idem = 0.0, worst_subject = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const WorldDistribution d = random_product(rng, 2);
        const Proposition g0 = Proposition::generator(d.world_set(), 0);
        const WorldDistribution g1 = give(d, g0);
        const WorldDistribution g2 = give(g1, g0);
        for (std::size_t w = 0; w < d.size(); ++w)
            worst_idem = std::max(worst_idem, std::abs(g1[w] - g2[w]));
        const PureQuestion q0(g0);
        const WorldDistribution r1 = raise_question(d, q0);
        const WorldDistribution r2 = raise_question(r1, q0);
        for (std::size_t w = 0; w < d.size(); ++w)
            worst_idem = std::max(worst_idem, std::abs(r1[w] - r2[w]));

        const Subject s_ab(2, 0b11);
        const WorldDistribution via_subject = raise_subject(d, s_ab);
        const WorldDistribution via_questions = raise_question(
            raise_question(d, PureQuestion(g0)),
            PureQuestion(Proposition::generator(d.world_set(), 1)));
        for (std::size_t w = 0; w < d.size(); ++w)
            worst_subject = std::max(worst_subject, std::abs(via_subject[w] - via_questions[w]));
    }
    b.add("A5", "give and raise are idempotent", worst_idem, 1e-15);
    b.add("A6", "raising the subject ab equals raising a then b (independent case)",
          worst_subject, 1e-12);

    const WorldSet eight = WorldSet::generated(3);
    const auto rank1 = rank1_questions(eight);
    double worst_growth = 0.0, worst_entropy = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const WorldDistribution d = random_product(rng, 3);
        for (const auto& r : rank1) {
            const WorldDistribution after = raise_question(d, r);
            worst_entropy =
                std::max(worst_entropy, shannon_entropy(d) - shannon_entropy(after));
            for (const auto& r2 : rank1)
                worst_growth = std::max(worst_growth, gap(after, r2) - gap(d, r2));
        }
    }
    b.add("A7", "rank-1 raising never grows a rank-1 gap (pure subtraction)", worst_growth,
          1e-12);
    b.add("A8", "rank-1 raising never removes entropy", worst_entropy, 1e-12);

    const WorldDistribution td = tilde_distribution(1.0, 0.3);
    const auto report = tilde_action_check(td, PureQuestion(Proposition::generator(four, 0)),
                                           PureQuestion(Proposition::generator(four, 1)));
    b.add("A9", "tilde rule: raising settled a drives P(B) to 1/2",
          report.p_b_after_raise - 0.5, 1e-9);

    const WorldDistribution td_half = tilde_distribution(0.5, 0.3);
    const auto report_half = tilde_action_check(
        td_half, PureQuestion(Proposition::generator(four, 0)),
        PureQuestion(Proposition::generator(four, 1)));
    b.add("A10", "tilde rule: raising a at P(A) = 1/2 leaves P(B) unchanged",
          report_half.p_b_after_raise - 0.3, 1e-9);

    const WorldDistribution undo = give(give(start, x), ~x);
    b.add("A11", "giving !A undoes giving A (singleton branches)", prob(undo, ~x) - 1.0, 0.0);

    const WorldDistribution u8 = WorldDistribution::uniform(eight);
    b.add("A12", "info_content of uniform is 0", info_content(u8), 1e-12);
    std::vector<double> point(8, 0.0);
    point[5] = 1.0;
    b.add("A13", "info_content of a point mass is log2 |worlds|",
          info_content(WorldDistribution(eight, point)) - 3.0, 1e-12);
    return b.take();
}

VerificationReport verify_complex(std::uint64_t seed) {
    SuiteBuilder b("complex");

    const auto cube = [](Complex z) { return z * z * z; };
    const auto square = [](Complex z) { return z * z; };
    const auto rep_cube = check_constraint(cube, SampleDomain::Plane, 10000, seed);
    const auto rep_square = check_constraint(square, SampleDomain::Plane, 10000, seed);
    const auto rep_linear =
        check_constraint([](Complex z) { return z; }, SampleDomain::Plane, 10000, seed);
    const auto rep_cbrt =
        check_constraint([](Complex z) { return question_cbrt(z); }, SampleDomain::Plane,
                         10000, seed);
    b.add("C1", "z^3 satisfies f(-z*) = -f(z)*", rep_cube.max_violation, 1e-9);
    b.add_flag("C2", "z^2 violates the constraint", !rep_square.passed);
    b.add("C3", "identity satisfies the constraint", rep_linear.max_violation, 1e-9);
    b.add("C4", "half-plane cube root satisfies the constraint", rep_cbrt.max_violation, 1e-9);

    std::mt19937_64 rng(seed + 5);
    std::uniform_real_distribution<double> unit(-3.0, 3.0);
    double worst_cube = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Complex z(unit(rng), unit(rng));
        const Complex r = question_cbrt(z);
        worst_cube = std::max(worst_cube, std::abs(r * r * r - z));
    }
    b.add("C5", "question_cbrt cubes back to its argument", worst_cube, 1e-12);

    bool parity_ok = true;
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; n + m <= 5; ++m) {
            if (n == 0 && m == 0) continue;
            const bool even = (n + m) % 2 == 0;
            const auto f = family_member(n, m, even);
            if (!check_constraint(f, SampleDomain::Plane, 2000, seed).passed)
                parity_ok = false;
            bool rejected = false;
            try {
                family_member(n, m, !even);
            } catch (const std::invalid_argument&) {
                rejected = true;
            }
            if (!rejected) parity_ok = false;
        }
    }
    b.add_flag("C6", "monomial family parity rules hold for n + m <= 5", parity_ok);

    double worst_v_law = 0.0;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double pa = i / 100.0, pb = j / 100.0;
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            const TildeEvaluation neg = tilde_closed_form(1.0 - pa, pb);
            worst_v_law = std::max(worst_v_law, std::abs(neg.v - (-std::conj(e.v))));
        }
    }
    b.add("C7", "tilde's V changes sign under negation with conjugation", worst_v_law, 1e-9);

    const auto rep_sin =
        check_constraint([](Complex z) { return std::sin(z); }, SampleDomain::Plane, 2000, seed);
    const auto rep_sinh =
        check_constraint([](Complex z) { return std::sinh(z); }, SampleDomain::Plane, 2000, seed);
    const auto rep_icos = check_constraint(
        [](Complex z) { return Complex(0, 1) * std::cos(z); }, SampleDomain::Plane, 2000, seed);
    const auto rep_icosh = check_constraint(
        [](Complex z) { return Complex(0, 1) * std::cosh(z); }, SampleDomain::Plane, 2000, seed);
    const auto rep_cos =
        check_constraint([](Complex z) { return std::cos(z); }, SampleDomain::Plane, 2000, seed);
    b.add_flag("C8", "sin, sinh, i cos, i cosh pass; cos fails",
               rep_sin.passed && rep_sinh.passed && rep_icos.passed && rep_icosh.passed &&
                   !rep_cos.passed);

    // Im(V) spans [-sqrt 3, -sqrt(3/2)] over the unit square.
    double min_im = 0.0, max_im = -10.0;
    for (int i = 0; i <= 200; ++i) {
        for (int j = 0; j <= 200; ++j) {
            const double im = tilde_closed_form(i / 200.0, j / 200.0).v.imag();
            min_im = std::min(min_im, im);
            max_im = std::max(max_im, im);
        }
    }
    b.add("C9", "Im(V) ranges over [-sqrt 3, -sqrt(3/2)]",
          std::abs(min_im + std::sqrt(3.0)) + std::abs(max_im + std::sqrt(1.5)), 1e-3);

    const SpinorValue s1{Complex(1, 0), Complex(-1, 0)};
    const SpinorValue s2{Complex(0, 1), Complex(0, 1)};
    const SpinorValue sp = spinor_product(s1, s2);
    bool spinor_ok = std::abs(std::abs(sp.first) - std::abs(sp.second)) < 1e-12;
    // (1, -1) + (1, 1) = (2, 0) leaves the |z1| = |z2| manifold.
    const SpinorValue ones{Complex(1, 0), Complex(1, 0)};
    if (std::abs(std::abs(s1.first + ones.first) - std::abs(s1.second + ones.second)) < 1e-9)
        spinor_ok = false;
    b.add_flag("C10", "spinors close under product, not under addition", spinor_ok);

    const auto g1 = whole_property(std::numbers::pi / 2,
                                   [](double p) { return Complex(2.0 * p - 1.0, 0.1); });
    const auto g2 =
        whole_property(0.0, [](double p) { return Complex(2.0 * p - 1.0, 0.3); });
    const auto [phi_a, phi_b] = whole_phase_align(g1, g2);
    PropertyFunction sum_a;
    sum_a.kind = PropertyKind::Whole;
    sum_a.phase = g1.phase;
    sum_a.value = [&g1, &g2, phi = phi_a](double p) {
        return g1.value(p) + std::polar(1.0, phi) * g2.value(p);
    };
    PropertyFunction sum_b = sum_a;
    sum_b.value = [&g1, &g2, phi = phi_b](double p) {
        return g1.value(p) + std::polar(1.0, phi) * g2.value(p);
    };
    b.add_flag("C11", "whole properties add at the two aligned phases",
               check_property(sum_a).passed && check_property(sum_b).passed &&
                   std::abs(phi_a - std::numbers::pi / 2) < 1e-12);
    return b.take();
}

VerificationReport verify_quantum(std::uint64_t seed) {
    SuiteBuilder b("quantum");
    std::mt19937_64 rng(seed + 6);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto random_state = [&]() {
        while (true) {
            const Complex a0(gauss(rng), gauss(rng)), a1(gauss(rng), gauss(rng));
            if (std::abs(a0) + std::abs(a1) > 1e-3) return StateVector(a0, a1).normalized();
        }
    };
    auto random_direction = [&]() {
        while (true) {
            const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
            if (norm(v) > 1e-3) return Direction(v);
        }
    };

    double worst_born = 0.0, worst_round = 0.0, worst_phase = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const StateVector psi = random_state();
        const Direction axis = random_direction();
        const StateVector axis_state = state_from_bloch(axis);
        const double born = born_probability(psi, axis_state);
        const double g = gap_along(bloch_from_state(psi), axis);
        worst_born = std::max(worst_born, std::abs(born - 0.5 * (1.0 + g)));

        const Direction d = random_direction();
        const BlochState round = bloch_from_state(state_from_bloch(d));
        worst_round = std::max(worst_round, norm({round.vec().x - d.vec().x,
                                                  round.vec().y - d.vec().y,
                                                  round.vec().z - d.vec().z}));

        const double alpha = 2.0 * std::numbers::pi * unit(rng);
        const StateVector scaled(psi.amp0 * std::polar(1.0, alpha),
                                 psi.amp1 * std::polar(1.0, alpha));
        worst_phase = std::max(worst_phase,
                               std::abs(born_probability(scaled, axis_state) - born));
        const Vec3 bv = bloch_from_state(psi).vec(), sv = bloch_from_state(scaled).vec();
        worst_phase = std::max(worst_phase, norm({bv.x - sv.x, bv.y - sv.y, bv.z - sv.z}));
    }
    b.add("Q1", "Born probability equals (1 + gap)/2", worst_born, 1e-12);
    b.add("Q2", "Bloch round trip is the identity", worst_round, 1e-12);
    b.add("Q3", "global phase changes nothing observable", worst_phase, 1e-12);

    const BlochState north = bloch_from_state(StateVector(1.0, 0.0));
    b.add("Q4", "|0> sits at the north pole",
          norm({north.vec().x, north.vec().y, north.vec().z - 1.0}), 1e-12);
    b.add("Q5", "P(X) = 3/4 at theta = pi/3",
          0.5 * (1.0 + gap_along(BlochState::pure(Direction::spherical(std::numbers::pi / 3, 0.0)),
                                 Direction::z_axis())) -
              0.75,
          1e-12);

    double worst_hilbert = 0.0, worst_mid = 0.0;
    int accepted = 0;
    while (accepted < 1000) {
        const StateVector psi1 = random_state();
        const StateVector psi2 = random_state();
        const double overlap = std::abs(inner(psi1, psi2));
        if (overlap < 0.05 || overlap > 0.95) continue;
        ++accepted;
        const Direction combined = hilbert_add_as_geometry(psi1, psi2);
        const Direction geometric =
            add_with_angle(Direction(bloch_from_state(psi1).vec()),
                           Direction(bloch_from_state(psi2).vec()),
                           std::arg(inner(psi1, psi2)));
        worst_hilbert = std::max(worst_hilbert, norm({combined.vec().x - geometric.vec().x,
                                                      combined.vec().y - geometric.vec().y,
                                                      combined.vec().z - geometric.vec().z}));

        const std::complex<double> phase = std::polar(1.0, -std::arg(inner(psi1, psi2)));
        const StateVector aligned(psi1.amp0 + phase * psi2.amp0,
                                  psi1.amp1 + phase * psi2.amp1);
        const Vec3 mid_direct = bloch_from_state(aligned).vec();
        const Vec3 p1 = bloch_from_state(psi1).vec(), p2 = bloch_from_state(psi2).vec();
        const double n = norm({p1.x + p2.x, p1.y + p2.y, p1.z + p2.z});
        worst_mid = std::max(worst_mid, norm({mid_direct.x - (p1.x + p2.x) / n,
                                              mid_direct.y - (p1.y + p2.y) / n,
                                              mid_direct.z - (p1.z + p2.z) / n}));
    }
    b.add("Q6", "Hilbert addition lands on the geometric +phi point", worst_hilbert, 1e-9);
    b.add("Q7", "phase-aligned Hilbert sum is the arc midpoint", worst_mid, 1e-9);

    const BlochState after = measure(BlochState::pure(Direction::y_axis()),
                                     Direction::x_axis(), Answer::Yes);
    b.add("Q8", "measuring +y along x with Yes yields +x",
          norm({after.vec().x - 1.0, after.vec().y, after.vec().z}), 1e-15);
    const auto [ans, post] = sample_measure(BlochState::mixed(), Direction::z_axis(), seed);
    b.add_flag("Q9", "measuring the mixed state yields a pure posterior",
               post.is_pure(1e-12));

    // Information budget on the Yes/No marginal: a pure state measured along a
    // new axis loses its old bit and gains one.
    const Direction old_axis = Direction::z_axis();
    const Direction new_axis = Direction::x_axis();
    const BlochState pure_state = BlochState::pure(old_axis);
    const WorldSet pair = WorldSet::generated(1);
    auto binary = [&](double p_yes) {
        return WorldDistribution(pair, {1.0 - p_yes, p_yes});
    };
    const double before_old = info_content(binary(0.5 * (1.0 + gap_along(pure_state, old_axis))));
    const BlochState collapsed = measure(pure_state, new_axis, Answer::Yes);
    const double after_old = info_content(binary(0.5 * (1.0 + gap_along(collapsed, old_axis))));
    const double before_new = info_content(binary(0.5 * (1.0 + gap_along(pure_state, new_axis))));
    const double after_new = info_content(binary(0.5 * (1.0 + gap_along(collapsed, new_axis))));
    b.add("Q10", "orthogonal measurement loses 1 bit and gains 1 bit",
          std::abs((before_old - after_old) - 1.0) + std::abs((after_new - before_new) - 1.0),
          1e-12);
    return b.take();
}

VerificationReport verify_bell(std::uint64_t seed) {
    SuiteBuilder b("bell");
    std::mt19937_64 rng(seed + 7);

    const double w225 = 225.0 * std::numbers::pi / 180.0;
    const BellProbs p = quantum_bell_probs(w225);
    const double expect = 0.5 * std::pow(std::cos(5.0 * std::numbers::pi / 8.0), 2);
    b.add("B1", "P(x1+, y2+) = 0.25", p.p_xy - 0.25, 1e-12);
    b.add("B2", "P(x1+, w2-) = 0.5 cos^2(5 pi / 8)", p.p_xw - expect, 1e-6);
    b.add("B3", "P(w1-, y2+) = 0.5 cos^2(3 pi / 8)",
          p.p_wy - 0.5 * std::pow(std::cos(3.0 * std::numbers::pi / 8.0), 2), 1e-6);
    b.add_flag("B4", "quantum probabilities violate the inequality at w = 225 deg",
               p.violated && p.p_xw + p.p_wy < p.p_xy);
    b.add_flag("B5", "no violation at w = 0", !quantum_bell_probs(0.0).violated);

    bool lhv_ok = true;
    std::uniform_int_distribution<std::uint64_t> count(0, 1000000);
    for (int i = 0; i < 10000; ++i) {
        LhvTable t;
        for (auto& n : t.n) n = count(rng);
        if (!lhv_inequality(t).holds) lhv_ok = false;
    }
    b.add_flag("B6", "LHV inequality holds for fuzzed count tables", lhv_ok);

    const std::uint64_t trials = 1000000;
    const BellCounts mc = bell_montecarlo(w225, trials, seed + 7);
    auto sigma_dev = [&](std::uint64_t n, double prob_exact) {
        const double sigma = std::sqrt(prob_exact * (1.0 - prob_exact) / trials);
        return std::abs(static_cast<double>(n) / trials - prob_exact) / sigma;
    };
    const double worst_sigma = std::max({sigma_dev(mc.n_xy, p.p_xy), sigma_dev(mc.n_xw, p.p_xw),
                                         sigma_dev(mc.n_wy, p.p_wy)});
    b.add("B7", "Monte Carlo frequencies within 3 binomial sigma", worst_sigma, 3.0);

    double worst_signal = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_direction = [&]() {
        while (true) {
            const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
            if (norm(v) > 1e-3) return Direction(v);
        }
    };
    for (int i = 0; i < 1000; ++i) {
        const Direction d1 = random_direction();
        const Direction d2 = random_direction();
        for (const auto& state : {PairState::singlet(), PairState::aligned()}) {
            const double unmeasured =
                joint_prob(state, d1, +1, d2, +1) + joint_prob(state, d1, -1, d2, +1);
            double summed = 0.0;
            for (Answer ans : {Answer::Yes, Answer::No}) {
                const PairState after = measure_first(state, d1, ans);
                const double p_ans = 0.5;
                summed += p_ans * joint_prob(after, d1, ans == Answer::Yes ? +1 : -1, d2, +1);
            }
            worst_signal = std::max(worst_signal, std::abs(summed - unmeasured));
        }
    }
    b.add("B8", "particle-2 marginal unchanged by particle-1 measurement", worst_signal,
          1e-12);

    const double corr_dev =
        std::abs(correlation(PairState::singlet(), Direction::x_axis(), Direction::x_axis()) +
                 1.0) +
        std::abs(correlation(PairState::aligned(), Direction::x_axis(), Direction::x_axis()) -
                 1.0);
    b.add("B9", "singlet anti-correlates and aligned correlates on the same axis", corr_dev,
          1e-12);

    const NonlocalRankReport nl = nonlocal_rank_check(3, seed);
    b.add_flag("B10", "s_x = x1 * x2 is rank 1 and purely subtractive",
               nl.rank_s == 1 && nl.subtraction_ok);
    b.add_flag("B11", "raising rank-2 q(X1 Y2) lifts P(Y2) above 1/2",
               nl.p_y2_after_rank2_raise > 0.5 + 1e-9);
    return b.take();
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"worlds", "groups", "measures", "tilde",
                                                   "actions", "complex", "quantum", "bell"};
    return names;
}

std::vector<VerificationReport> run_verification(const std::string& name, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    auto run_one = [&](const std::string& suite) {
        if (suite == "worlds") return verify_worlds(seed);
        if (suite == "groups") return verify_groups(seed);
        if (suite == "measures") return verify_measures(seed);
        if (suite == "tilde") return verify_tilde(seed);
        if (suite == "actions") return verify_actions(seed);
        if (suite == "complex") return verify_complex(seed);
        if (suite == "quantum") return verify_quantum(seed);
        if (suite == "bell") return verify_bell(seed);
        throw std::invalid_argument("unknown suite: " + suite);
    };
    if (name == "all") {
        for (const auto& suite : suite_names()) out.push_back(run_one(suite));
    } else {
        out.push_back(run_one(name));
    }
    return out;
}

}  // namespace questions
