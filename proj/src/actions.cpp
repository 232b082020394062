#include "questions/actions.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "questions/measures.hpp"
#include "questions/tilde.hpp"

namespace questions {

namespace {

// Conditional probability vector given prop, or empty when undefined.
std::vector<double> conditional_probs(const WorldDistribution& dist, const Proposition& prop) {
    const double p = prob(dist, prop);
    std::vector<double> out(dist.size(), 0.0);
    if (p > 0.0) {
        for (std::size_t w = 0; w < dist.size(); ++w)
            if (prop.value(w)) out[w] = dist[w] / p;
        return out;
    }
    if (const auto* ext = dist.extension()) {
        if (const auto* cond = ext->find(prop)) return *cond;
    }
    if (prop.count() == 1) {
        for (std::size_t w = 0; w < dist.size(); ++w)
            if (prop.value(w)) out[w] = 1.0;
        return out;
    }
    return {};
}

}  // namespace

WorldDistribution give(const WorldDistribution& dist, const Proposition& prop) {
    if (dist.size() != prop.size())
        throw std::invalid_argument("distribution and proposition sizes differ");
    std::vector<double> cond = conditional_probs(dist, prop);
    if (cond.empty())
        throw std::domain_error("conditioning on null proposition without extension");
    return WorldDistribution(dist.world_set(), std::move(cond)).with_extension(dist.extension_ptr());
}

WorldDistribution raise_question(const WorldDistribution& dist, const PureQuestion& q) {
    const Proposition& x = q.canonical();
    if (q.is_identity()) return dist;
    std::vector<double> on = conditional_probs(dist, x);
    std::vector<double> off = conditional_probs(dist, ~x);
    if (on.empty() || off.empty())
        throw std::domain_error("raise undefined: a branch has zero probability and no extension");
    std::vector<double> p(dist.size());
    for (std::size_t w = 0; w < dist.size(); ++w) p[w] = 0.5 * (on[w] + off[w]);
    return WorldDistribution(dist.world_set(), std::move(p)).with_extension(dist.extension_ptr());
}

WorldDistribution raise_subject(const WorldDistribution& dist, const Subject& s) {
    if (s.is_identity()) return dist;
    const WorldSet& ws = dist.world_set();
    if (!ws.has_generators() || ws.generators != s.generator_count())
        throw std::invalid_argument("raise_subject requires a matching generated world set");
    const int m = s.size();
    std::vector<double> acc(dist.size(), 0.0);
    const std::size_t cells = std::size_t{1} << m;
    for (std::size_t signs = 0; signs < cells; ++signs) {
        Proposition cell = Proposition::verum(ws);
        int bit = 0;
        for (int i = 0; i < s.generator_count(); ++i) {
            if (!s.contains(i)) continue;
            Proposition g = Proposition::generator(ws, i);
            cell = cell & (((signs >> bit) & 1) ? ~g : g);
            ++bit;
        }
        std::vector<double> cond = conditional_probs(dist, cell);
        if (cond.empty())
            throw std::domain_error("raise_subject: a cell has zero probability and no extension");
        for (std::size_t w = 0; w < dist.size(); ++w) acc[w] += cond[w];
    }
    for (auto& v : acc) v /= static_cast<double>(cells);
    return WorldDistribution(ws, std::move(acc)).with_extension(dist.extension_ptr());
}

WorldDistribution apply_action(const WorldDistribution& dist, const Action& action) {
    return std::visit(
        [&](const auto& a) -> WorldDistribution {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Give>) return give(dist, a.prop);
            if constexpr (std::is_same_v<T, RaiseQuestion>) return raise_question(dist, a.question);
            if constexpr (std::is_same_v<T, RaiseSubject>) return raise_subject(dist, a.subject);
        },
        action);
}

WorldDistribution apply_sequence(const WorldDistribution& dist, const ActionSequence& seq) {
    WorldDistribution out = dist;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            out = apply_action(out, seq[i]);
        } catch (const std::exception& e) {
            throw std::domain_error("step " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

AskOutcome ask(const WorldDistribution& dist, const AskableQuestion& q) {
    const double p = prob(dist, q.asked());
    if (p <= 0.0 || p >= 1.0)
        throw std::domain_error("asking a settled question has a predetermined answer");
    return AskOutcome{give(dist, q.asked()), give(dist, ~q.asked()), p, 1.0 - p};
}

double shannon_entropy(const WorldDistribution& dist) {
    double h = 0.0;
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w] > 0.0) h -= dist[w] * std::log2(dist[w]);
    return h;
}

double info_content(const WorldDistribution& dist) {
    return std::log2(static_cast<double>(dist.size())) - shannon_entropy(dist);
}

std::shared_ptr<const ConditionalExtension> tilde_extension_kernel(double pa, double pb) {
    WorldSet ws = WorldSet::generated(2);
    const Proposition a = Proposition::generator(ws, 0);
    const Proposition b = Proposition::generator(ws, 1);
    auto ext = std::make_shared<ConditionalExtension>();
    // Cells ordered by world bits: 00 = !A!B, 01 = A!B, 10 = !AB, 11 = AB.
    // Giving a null branch swaps the other proposition's probability with its
    // negation's: P(B|A) = 1 - pb when P(A) = 0, and symmetrically.
    ext->define(a, {0.0, pb, 0.0, 1.0 - pb});
    ext->define(~a, {pb, 0.0, 1.0 - pb, 0.0});
    ext->define(b, {0.0, 0.0, pa, 1.0 - pa});
    ext->define(~b, {pa, 1.0 - pa, 0.0, 0.0});
    return ext;
}

TildeActionReport tilde_action_check(const WorldDistribution& dist, const PureQuestion& a,
                                     const PureQuestion& b) {
    const WorldSet& ws = dist.world_set();
    if (ws != a.world_set() || ws != b.world_set())
        throw std::invalid_argument("mismatched world sets");
    const Proposition& pa_prop = a.canonical();
    const Proposition& pb_prop = b.canonical();

    TildeActionReport report;
    report.pa = prob(dist, pa_prop);
    report.pb = prob(dist, pb_prop);

    const double x = prob(dist, pa_prop & pb_prop);
    const double expected = tilde_closed_form(report.pa, report.pb).x;
    report.marginal_is_tilde = std::abs(x - expected) <= 1e-9;
    if (!report.marginal_is_tilde)
        throw std::domain_error("(A, B) marginal does not satisfy the tilde relation");

    const bool a_settled = report.pa <= 0.0 || report.pa >= 1.0;
    const bool b_settled = report.pb <= 0.0 || report.pb >= 1.0;

    WorldDistribution d = dist;
    if (a_settled && dist.extension() == nullptr && ws.generators == 2 &&
        pa_prop == Proposition::generator(ws, 0) && pb_prop == Proposition::generator(ws, 1)) {
        d = dist.with_extension(tilde_extension_kernel(report.pa, report.pb));
    }
    const WorldDistribution after = raise_question(d, a);
    report.p_a_after_raise = prob(after, pa_prop);
    report.p_b_after_raise = prob(after, pb_prop);
    report.guaranteed = !(a_settled && b_settled);
    if (!report.guaranteed)
        report.note = "both questions settled: raising a is not guaranteed to raise b";
    else if (a_settled)
        report.note = "settled question raised: both gaps driven to 0";
    else
        report.note = "unsettled question raised";
    return report;
}

}  // namespace questions
