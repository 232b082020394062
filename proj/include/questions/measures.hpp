#ifndef QUESTIONS_MEASURES_HPP
#define QUESTIONS_MEASURES_HPP

#include <span>

#include "questions/groups.hpp"
#include "questions/worlds.hpp"

/// Numerical properties of questions and subjects: probability gaps,
/// geometric mean probabilities, information values, evidence and doubt.
/// Evidence and information values are in bits; doubt is in nats so that a
/// negative gap contributes an imaginary part of exactly pi.
namespace questions {

/// gap(A?) = 2 P(A) - 1, in [-1, 1].
double gap(const WorldDistribution& dist, const AskableQuestion& q);

/// gap(a) = |P(A) - P(!A)|, in [0, 1].
double gap(const WorldDistribution& dist, const PureQuestion& q);

/// Geometric mean probability of the subject formed by the given questions:
/// the geometric mean of all 2^m signed-conjunction cell probabilities.
/// For a single question this is sqrt(P(A) P(!A)).
double gmp(const WorldDistribution& dist, std::span<const PureQuestion> qs);
double gmp(const WorldDistribution& dist, const PureQuestion& q);

/// i(s) = -log2 gmp(s); +infinity when gmp = 0.
double info_value(const WorldDistribution& dist, std::span<const PureQuestion> qs);
double info_value(const WorldDistribution& dist, const PureQuestion& q);

/// Inverts gmp = (1/2) sqrt(1 - gap^2): returns sqrt(1 - 4 g^2) for g in [0, 1/2].
double gap_from_gmp(double g);

/// e(A?) = log2(P(!A) / P(A)), the weight of evidence against A; +-infinity at
/// the settled ends.
double evidence(const WorldDistribution& dist, const AskableQuestion& q);

/// e(A?|B) = e(A?) - log2(P(B|A) / P(B|!A)). Both conditional likelihoods must
/// be strictly positive.
double evidence_update(const WorldDistribution& dist, const AskableQuestion& q,
                       const Proposition& given);

/// d(A?) = -ln gap(A?): real part in nats (+infinity at gap 0), imaginary part
/// pi when the signed gap is negative.
struct DoubtValue {
    double real = 0.0;
    double imag = 0.0;
};

DoubtValue doubt(const WorldDistribution& dist, const AskableQuestion& q);

/// The d-quantity of a pure question, -ln gap(a): the unsigned counterpart
/// of doubt (no sign to carry an imaginary part).
double doubt(const WorldDistribution& dist, const PureQuestion& q);

}  // namespace questions

#endif
