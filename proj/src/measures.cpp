#include "questions/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace questions {

double gap(const WorldDistribution& dist, const AskableQuestion& q) {
    return 2.0 * prob(dist, q.asked()) - 1.0;
}

double gap(const WorldDistribution& dist, const PureQuestion& q) {
    return std::abs(2.0 * prob(dist, q.canonical()) - 1.0);
}

double gmp(const WorldDistribution& dist, std::span<const PureQuestion> qs) {
    if (qs.empty()) throw std::invalid_argument("gmp requires at least one question");
    const std::size_t m = qs.size();
    if (m > 20) throw std::invalid_argument("too many questions for gmp cell enumeration");
    double log_sum = 0.0;
    for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
        Proposition cell = Proposition::verum(qs[0].world_set());
        for (std::size_t i = 0; i < m; ++i) {
            const Proposition& c = qs[i].canonical();
            cell = cell & (((signs >> i) & 1) ? ~c : c);
        }
        const double p = prob(dist, cell);
        if (p <= 0.0) return 0.0;
        log_sum += std::log(p);
    }
    return std::exp(log_sum / static_cast<double>(std::size_t{1} << m));
}

double gmp(const WorldDistribution& dist, const PureQuestion& q) {
    return gmp(dist, std::span<const PureQuestion>(&q, 1));
}

double info_value(const WorldDistribution& dist, std::span<const PureQuestion> qs) {
    const double g = gmp(dist, qs);
    if (g == 0.0) return std::numeric_limits<double>::infinity();
    return -std::log2(g);
}

double info_value(const WorldDistribution& dist, const PureQuestion& q) {
    return info_value(dist, std::span<const PureQuestion>(&q, 1));
}

double gap_from_gmp(double g) {
    if (!(g >= 0.0 && g <= 0.5)) throw std::domain_error("gmp must lie in [0, 1/2]");
    return std::sqrt(1.0 - 4.0 * g * g);
}

double evidence(const WorldDistribution& dist, const AskableQuestion& q) {
    const double p = prob(dist, q.asked());
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    return std::log2((1.0 - p) / p);
}

double evidence_update(const WorldDistribution& dist, const AskableQuestion& q,
                       const Proposition& given) {
    const Proposition& a = q.asked();
    const double pa = prob(dist, a);
    if (pa <= 0.0 || pa >= 1.0)
        throw std::domain_error("evidence update needs 0 < P(A) < 1");
    const double likely_a = prob(dist, given & a) / pa;
    const double likely_na = prob(dist, given & ~a) / (1.0 - pa);
    if (likely_a <= 0.0 || likely_na <= 0.0)
        throw std::domain_error("evidence update needs positive conditional likelihoods");
    return evidence(dist, q) - std::log2(likely_a / likely_na);
}

DoubtValue doubt(const WorldDistribution& dist, const AskableQuestion& q) {
    const double g = gap(dist, q);
    DoubtValue d;
    d.imag = g < 0.0 ? std::numbers::pi : 0.0;
    d.real = g == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(std::abs(g));
    return d;
}

double doubt(const WorldDistribution& dist, const PureQuestion& q) {
    const double g = gap(dist, q);
    return g == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(g);
}

}  // namespace questions
