#ifndef QUESTIONS_TILDE_HPP
#define QUESTIONS_TILDE_HPP

#include <complex>
#include <vector>

#include "questions/worlds.hpp"

/// The tilde relation: the unique non-independent solution of
/// i(A,B) + i(A,!B) + i(!A,B) + i(!A,!B) = 0, computed through the
/// gap-simplified closed-form pipeline, together with an independent
/// quartic-root oracle and the conditional-surface rules.
namespace questions {

/// One evaluation of the closed-form pipeline at (P(A), P(B)).
struct TildeEvaluation {
    double pa = 0.0;
    double pb = 0.0;
    double gap_a = 0.0;  // 2 pa - 1
    double gap_b = 0.0;  // 2 pb - 1
    double t = 0.0;      // (1/8)(3 - gap_a^2)(3 - gap_b^2) - 3/2, in [-1, -3/8]
    double s = 0.0;      // -(5/32)((9/5 - gap_a^2)(9/5 - gap_b^2) - (9/5)^2 + 9)
    double y = 0.0;      // gap_a gap_b s
    std::complex<double> u;  // sqrt(t^3 + y^2), purely imaginary
    std::complex<double> v;  // 2 w2 cbrt(y + u), w2 = (-1 - i sqrt 3)/2
    double x = 0.0;          // P(AB) under ~, clamped into the admissible interval
};

/// Closed-form tilde evaluation. Inputs must lie in [0, 1].
TildeEvaluation tilde_closed_form(double pa, double pb);

struct QuarticRoot {
    double x = 0.0;
    double residual = 0.0;
};

/// Independent root oracle: sign-scans
///   g(x) = x (pa - x)(pb - x)(1 - pa - pb + x) - (pa pb (1-pa)(1-pb))^2
/// on a 10^4-point grid over the admissible interval
/// [max(0, pa+pb-1), min(pa, pb)] and bisects each bracket to 1e-14.
/// Tangential double roots are located through the local maxima of g.
/// Inputs must lie strictly inside (0, 1).
std::vector<QuarticRoot> quartic_roots_oracle(double pa, double pb);

struct TildeConditional {
    double value = 0.0;
    bool unconstrained = false;  // pa = 0 with pb in {0, 1}: any value is consistent
};

/// P(B|A) under ~: x/pa for pa > 0, 1 - pb at pa = 0 for interior pb, and the
/// unconstrained marker at pa = 0 with pb in {0, 1}.
TildeConditional tilde_conditional(double pa, double pb);

/// x - pa pb, the deviation of ~ from independence.
double discrepancy(double pa, double pb);

/// Re(V), the gap of the connecting question. Always bracketed between
/// gap_a gap_b and the tilde-distribution value of gap(A? * B?).
double connecting_gap(double pa, double pb);

/// The 4-cell joint distribution {AB, A!B, !AB, !A!B} induced by ~ at
/// (pa, pb), over a 2-generator world set (generator 0 = A, generator 1 = B).
WorldDistribution tilde_distribution(double pa, double pb);

}  // namespace questions

#endif
