#ifndef QUESTIONS_GROUPS_HPP
#define QUESTIONS_GROUPS_HPP

#include <cstdint>
#include <vector>

#include "questions/worlds.hpp"

/// The group algebra of questions: pure questions Q(N), askable questions
/// K(N), subjects S(N) and S_m(N), ranks, quotient maps, Algebraic Normal
/// Form, predicates and answers.
namespace questions {

/// The unordered complement pair {A, !A}, stored through a canonical
/// representative: the member that is false in world 0. The identity question
/// {True, False} canonicalizes to False's table.
class PureQuestion {
  public:
    explicit PureQuestion(const Proposition& member);
    static PureQuestion identity(WorldSet ws);

    const Proposition& canonical() const { return canon_; }
    const WorldSet& world_set() const { return canon_.world_set(); }
    bool is_identity() const { return canon_.is_false(); }

    friend bool operator==(const PureQuestion& a, const PureQuestion& b) {
        return a.canon_ == b.canon_;
    }

  private:
    Proposition canon_;
};

/// q(A) * q(B) = q(A xor B).
PureQuestion star(const PureQuestion& p, const PureQuestion& q);

/// The ordered pair (A, !A); fully determined by the asked proposition.
class AskableQuestion {
  public:
    explicit AskableQuestion(Proposition asked) : asked_(std::move(asked)) {}
    static AskableQuestion identity(WorldSet ws) {
        return AskableQuestion(Proposition::verum(ws));
    }

    const Proposition& asked() const { return asked_; }
    AskableQuestion negate() const { return AskableQuestion(~asked_); }
    PureQuestion pure() const { return PureQuestion(asked_); }
    /// Sign component of the K(N) = Q(N) x Z2 decomposition: +1 when the asked
    /// proposition is true in world 0 (the identity True? has sign +1).
    int sign() const { return asked_.value(0) ? +1 : -1; }
    bool is_identity() const { return asked_.is_true(); }

    friend bool operator==(const AskableQuestion& a, const AskableQuestion& b) {
        return a.asked_ == b.asked_;
    }

  private:
    Proposition asked_;
};

/// A? * B? = (AB or !A!B)? -- "do these questions have the same answer?".
AskableQuestion star(const AskableQuestion& p, const AskableQuestion& q);

enum class Answer { Yes, No };

/// Yes selects the asked proposition, No its negation.
Proposition answer(const AskableQuestion& q, Answer ans);

/// A subset of the N generator questions, as an N-bit mask. The empty mask is
/// the identity subject.
class Subject {
  public:
    Subject(int n_generators, std::uint32_t mask);
    static Subject identity(int n_generators) { return Subject(n_generators, 0); }

    int generator_count() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool contains(int i) const { return (mask_ >> i) & 1; }
    bool is_identity() const { return mask_ == 0; }

    /// The conjunction proposition of the subject's generators on a generated
    /// world set (all generators un-negated); the identity maps to True.
    Proposition conjunction(WorldSet ws) const;

    friend bool operator==(const Subject&, const Subject&) = default;
    bool operator<(const Subject& o) const { return mask_ < o.mask_; }

  private:
    int n_;
    std::uint32_t mask_;
};

/// s(ab) o s(bcd) = s(acd): symmetric difference of subject matter.
Subject circ(const Subject& s, const Subject& t);

enum class Connective { Xor, Xnor };

/// Algebraic Normal Form: a set of negation-free conjunction monomials (each
/// a generator-index mask) plus a constant, joined by XOR, or the XNOR dual
/// obtained by flipping both the constant and the connective.
struct AnfForm {
    std::vector<std::uint32_t> monomials;  // sorted, non-empty masks only
    bool constant = false;
    Connective connective = Connective::Xor;
    int n_generators = 0;

    int degree() const;
    AnfForm dual() const;
    bool evaluate(std::uint32_t assignment) const;
    Proposition to_proposition() const;
};

/// Exact Moebius transform of the truth table. Requires generator structure.
AnfForm anf(const Proposition& prop);

/// Smallest m with q in Q_m(N); rank(I) = 0. Requires generator structure.
int rank(const PureQuestion& q);

/// The image of q under Q_m -> S_m, as the set of degree-m ANF monomials.
/// Requires rank(q) == m >= 1.
std::vector<Subject> quotient_subject(const PureQuestion& q, int m);

struct SubjectPredicateAnswer {
    std::vector<Subject> subject;  // top-degree monomials
    AnfForm predicate;             // lower-degree monomials, XOR form, constant False
    bool answer = false;           // True-constant iff the ANF constant term is set
};

/// Split a proposition into subject, predicate and answer along its ANF.
SubjectPredicateAnswer subject_predicate_answer(const Proposition& prop);

struct GroupCensus {
    int n = 0;
    std::uint64_t q_size = 0;           // |Q(N)| = 2^(2^N - 1)
    std::uint64_t q1_size = 0;          // |Q_1(N)| = 2^N
    std::uint64_t generator_count = 0;  // 2^N - 1
    std::vector<std::uint64_t> s_sizes; // s_sizes[m] = |S_m(N)| = 2^C(N,m), m = 1..N
    bool closure_ok = false;
    bool involution_ok = false;
    bool associativity_ok = false;
};

/// Full enumeration of Q(N) with structural checks. N <= 4.
GroupCensus group_census(int n);

}  // namespace questions

#endif
