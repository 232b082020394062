#include "questions/entanglement.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "questions/actions.hpp"
#include "questions/measures.hpp"
#include "questions/worlds.hpp"

namespace questions {

PairState::PairState(int sign) : correlated_(true), sign_(sign) {}

PairState PairState::product(BlochState v1, BlochState v2) {
    PairState s(0);
    s.correlated_ = false;
    s.v1_ = v1;
    s.v2_ = v2;
    return s;
}

int PairState::sign() const {
    if (!correlated_) throw std::logic_error("product states have no correlation sign");
    return sign_;
}

const BlochState& PairState::first() const {
    if (correlated_) throw std::logic_error("correlated states have no single-particle state");
    return v1_;
}

const BlochState& PairState::second() const {
    if (correlated_) throw std::logic_error("correlated states have no single-particle state");
    return v2_;
}

double joint_prob(const PairState& state, const Direction& d1, int s1, const Direction& d2,
                  int s2) {
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
        throw std::invalid_argument("result signs must be +1 or -1");
    if (state.is_correlated()) {
        const double c = dot(d1.vec(), d2.vec());
        return 0.25 * (1.0 + state.sign() * s1 * s2 * c);
    }
    const double g1 = dot(state.first().vec(), d1.vec());
    const double g2 = dot(state.second().vec(), d2.vec());
    return 0.5 * (1.0 + s1 * g1) * 0.5 * (1.0 + s2 * g2);
}

double correlation(const PairState& state, const Direction& d1, const Direction& d2) {
    return joint_prob(state, d1, +1, d2, +1) + joint_prob(state, d1, -1, d2, -1) -
           joint_prob(state, d1, +1, d2, -1) - joint_prob(state, d1, -1, d2, +1);
}

PairState measure_first(const PairState& state, const Direction& d, Answer ans) {
    if (!state.is_correlated())
        throw std::domain_error("pair already measured: no correlated state to collapse");
    const int a = ans == Answer::Yes ? +1 : -1;
    const Direction first = a > 0 ? d : -d;
    const Direction second = state.sign() * a > 0 ? d : -d;
    return PairState::product(BlochState::pure(first), BlochState::pure(second));
}

LhvResult lhv_inequality(const LhvTable& table) {
    LhvResult r;
    r.lhs = (table.n[0] + table.n[2]) + (table.n[3] + table.n[7]);
    r.rhs = table.n[2] + table.n[3];
    r.holds = r.lhs >= r.rhs;
    return r;
}

BellProbs quantum_bell_probs(double w_angle) {
    const PairState singlet = PairState::singlet();
    const Direction x = Direction::x_axis();
    const Direction y = Direction::y_axis();
    const Direction w = Direction({std::cos(w_angle), std::sin(w_angle), 0.0});
    BellProbs p;
    p.p_xy = joint_prob(singlet, x, +1, y, +1);
    p.p_xw = joint_prob(singlet, x, +1, w, -1);
    p.p_wy = joint_prob(singlet, w, -1, y, +1);
    p.violated = p.p_xw + p.p_wy < p.p_xy;
    return p;
}

BellCounts bell_montecarlo(double w_angle, std::uint64_t trials, std::uint64_t seed) {
    const PairState singlet = PairState::singlet();
    const Direction x = Direction::x_axis();
    const Direction y = Direction::y_axis();
    const Direction w = Direction({std::cos(w_angle), std::sin(w_angle), 0.0});

    struct PairSetup {
        Direction d1;
        int s1;
        Direction d2;
        int s2;
        std::uint64_t* counter;
    };
    BellCounts counts;
    counts.trials = trials;
    PairSetup setups[3] = {{x, +1, y, +1, &counts.n_xy},
                           {x, +1, w, -1, &counts.n_xw},
                           {w, -1, y, +1, &counts.n_wy}};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& setup : setups) {
        double cell[4];
        int idx = 0;
        for (int a1 : {+1, -1})
            for (int a2 : {+1, -1})
                cell[idx++] = joint_prob(singlet, setup.d1, a1, setup.d2, a2);
        // Cell order: (+,+), (+,-), (-,+), (-,-).
        const int target = (setup.s1 > 0 ? 0 : 2) + (setup.s2 > 0 ? 0 : 1);
        for (std::uint64_t t = 0; t < trials; ++t) {
            double u = unit(rng);
            int drawn = 3;
            for (int c = 0; c < 3; ++c) {
                if (u < cell[c]) {
                    drawn = c;
                    break;
                }
                u -= cell[c];
            }
            if (drawn == target) ++*setup.counter;
        }
    }
    return counts;
}

NonlocalRankReport nonlocal_rank_check(int n_generators, std::uint64_t seed) {
    if (n_generators < 2)
        throw std::invalid_argument("need at least the X1 and X2 generators");
    const WorldSet ws = WorldSet::generated(n_generators);
    const PureQuestion x1(Proposition::generator(ws, 0));
    const PureQuestion x2(Proposition::generator(ws, 1));
    const PureQuestion s_x = star(x1, x2);

    NonlocalRankReport report;
    report.rank_s = rank(s_x);

    // Rank-1 questions: xor combinations of generators.
    std::vector<PureQuestion> rank1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n_generators); ++mask) {
        PureQuestion q = PureQuestion::identity(ws);
        for (int i = 0; i < n_generators; ++i)
            if ((mask >> i) & 1) q = star(q, PureQuestion(Proposition::generator(ws, i)));
        rank1.push_back(q);
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.02, 0.98);
    report.subtraction_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> marginals(n_generators);
        for (auto& m : marginals) m = unit(rng);
        const WorldDistribution dist = WorldDistribution::product(marginals);
        const WorldDistribution after = raise_question(dist, s_x);
        for (const auto& r : rank1) {
            const double growth = gap(after, r) - gap(dist, r);
            report.max_gap_growth = std::max(report.max_gap_growth, growth);
            if (growth > 1e-12) report.subtraction_ok = false;
        }
    }

    // Raising the rank-2 question q(X1 Y2) on the uniform distribution makes
    // Y2 more probable. Y2 is generator 2 when present, else generator 1.
    const int y2_index = n_generators >= 3 ? 2 : 1;
    const Proposition y2 = Proposition::generator(ws, y2_index);
    const PureQuestion q_x1y2(Proposition::generator(ws, 0) & y2);
    const WorldDistribution uniform = WorldDistribution::uniform(ws);
    const WorldDistribution after = raise_question(uniform, q_x1y2);
    report.p_y2_after_rank2_raise = prob(after, y2);
    return report;
}

}  // namespace questions
