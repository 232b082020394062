#ifndef QUESTIONS_ACTIONS_HPP
#define QUESTIONS_ACTIONS_HPP

#include <string>
#include <variant>
#include <vector>

#include "questions/groups.hpp"
#include "questions/worlds.hpp"

/// The non-commutative algebra of actions on probability distributions:
/// giving propositions, raising pure questions and subjects, sequences, and
/// the tilde action rule. All transformations return new distributions.
namespace questions {

struct Give {
    Proposition prop;
};
struct RaiseQuestion {
    PureQuestion question;
};
struct RaiseSubject {
    Subject subject;
};

using Action = std::variant<Give, RaiseQuestion, RaiseSubject>;
using ActionSequence = std::vector<Action>;

/// P(W) -> P(W|X). Conditioning on a zero-probability proposition consults the
/// distribution's extension kernel; a null proposition holding in exactly one
/// world conditions to the point mass on that world.
WorldDistribution give(const WorldDistribution& dist, const Proposition& prop);

/// P(W) -> (P(W|X) + P(W|!X)) / 2, setting gap(x) to zero.
WorldDistribution raise_question(const WorldDistribution& dist, const PureQuestion& q);

/// P(W) -> the equal mixture of the 2^m conditionals over the subject's
/// signed generator conjunctions.
WorldDistribution raise_subject(const WorldDistribution& dist, const Subject& s);

WorldDistribution apply_action(const WorldDistribution& dist, const Action& action);

/// Left-to-right fold; errors are reported with the failing step index.
WorldDistribution apply_sequence(const WorldDistribution& dist, const ActionSequence& seq);

/// Asking an askable question branches on the answer; there is no single
/// resulting distribution.
struct AskOutcome {
    WorldDistribution if_yes;
    WorldDistribution if_no;
    double p_yes = 0.0;
    double p_no = 0.0;
};

AskOutcome ask(const WorldDistribution& dist, const AskableQuestion& q);

/// log2 |worlds| - H(dist): information relative to the uniform distribution.
double info_content(const WorldDistribution& dist);

double shannon_entropy(const WorldDistribution& dist);

/// Checks the tilde action rule on a distribution whose (A, B) marginal
/// satisfies ~: raising a settled question a drives P(B) to 1/2 when
/// 0 < P(B) < 1 (both questions end up raised, as a subject raise would
/// leave them), and behaves as independence at P(A) = 1/2.
struct TildeActionReport {
    bool marginal_is_tilde = false;
    double pa = 0.0;
    double pb = 0.0;
    double p_a_after_raise = 0.0;
    double p_b_after_raise = 0.0;
    bool guaranteed = false;  // false when both questions are settled
    std::string note;
};

TildeActionReport tilde_action_check(const WorldDistribution& dist, const PureQuestion& a,
                                     const PureQuestion& b);

/// Extension kernel encoding the tilde update rules for the 4-cell (A, B)
/// joint at (pa, pb): conditioning on a null branch of A swaps P(B) with
/// P(!B), and symmetrically for B.
std::shared_ptr<const ConditionalExtension> tilde_extension_kernel(double pa, double pb);

}  // namespace questions

#endif
