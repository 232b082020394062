#ifndef QUESTIONS_ENTANGLEMENT_HPP
#define QUESTIONS_ENTANGLEMENT_HPP

#include <array>
#include <cstdint>

#include "questions/two_state.hpp"

/// Entangled pairs, non-local questions, and the simplified Bell analysis.
namespace questions {

/// Joint state of two two-state particles. Correlated(-1) is the singlet;
/// Correlated(+1) is the aligned state in which the spins match along every
/// axis. Product states factorize all joint probabilities.
class PairState {
  public:
    static PairState singlet() { return PairState(-1); }
    static PairState aligned() { return PairState(+1); }
    static PairState product(BlochState v1, BlochState v2);

    bool is_correlated() const { return correlated_; }
    int sign() const;
    const BlochState& first() const;
    const BlochState& second() const;

  private:
    explicit PairState(int sign);
    bool correlated_ = true;
    int sign_ = -1;
    BlochState v1_ = BlochState::mixed();
    BlochState v2_ = BlochState::mixed();
};

/// P(result s1 along d1 for particle 1, result s2 along d2 for particle 2).
/// Signs are +1 (up / Yes) or -1 (down / No).
double joint_prob(const PairState& state, const Direction& d1, int s1, const Direction& d2,
                  int s2);

/// c(X1, X2) = gap(X1? * X2?), recomputed from the four joint cells.
double correlation(const PairState& state, const Direction& d1, const Direction& d2);

/// Measuring particle 1 of a correlated pair along d collapses both particles
/// to pure states and removes every cross-axis correlation.
PairState measure_first(const PairState& state, const Direction& d, Answer ans);

/// Counterfactual counts, one per sign-assignment row of the local
/// hidden-variable table.
struct LhvTable {
    std::array<std::uint64_t, 8> n{};
};

struct LhvResult {
    std::uint64_t lhs = 0;  // N(x1+, w2-) + N(w1-, y2+) = (N1 + N3) + (N4 + N8)
    std::uint64_t rhs = 0;  // N(x1+, y2+) = N3 + N4
    bool holds = false;
};

LhvResult lhv_inequality(const LhvTable& table);

struct BellProbs {
    double p_xy = 0.0;  // P(x1+, y2+)
    double p_xw = 0.0;  // P(x1+, w2-)
    double p_wy = 0.0;  // P(w1-, y2+)
    bool violated = false;
};

/// Singlet probabilities for the three axis pairs, with x and y orthogonal in
/// a plane and w in the same plane at w_angle radians from x.
BellProbs quantum_bell_probs(double w_angle);

struct BellCounts {
    std::uint64_t trials = 0;
    std::uint64_t n_xy = 0;
    std::uint64_t n_xw = 0;
    std::uint64_t n_wy = 0;
};

/// Monte Carlo sampling of singlet outcomes: for each trial and each of the
/// three axis pairs, one joint outcome is drawn from the four joint_prob
/// cells; counts tally the Bell-relevant result per pair.
BellCounts bell_montecarlo(double w_angle, std::uint64_t trials, std::uint64_t seed);

struct NonlocalRankReport {
    int rank_s = 0;              // rank of x1 * x2 in Q(N)
    bool subtraction_ok = false; // raising s_x never grew a rank-1 gap
    double max_gap_growth = 0.0;
    double p_y2_after_rank2_raise = 0.0;  // P(Y2) after raising q(X1 Y2) on uniform
};

/// Verifies that the non-local question x1 * x2 is rank 1 and a pure
/// subtraction, while raising the rank-2 question q(X1 Y2) adds information.
NonlocalRankReport nonlocal_rank_check(int n_generators, std::uint64_t seed = 0);

}  // namespace questions

#endif
