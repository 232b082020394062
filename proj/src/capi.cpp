#include "questions.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "questions/actions.hpp"
#include "questions/entanglement.hpp"
#include "questions/figures.hpp"
#include "questions/format.hpp"
#include "questions/groups.hpp"
#include "questions/measures.hpp"
#include "questions/tilde.hpp"
#include "questions/two_state.hpp"
#include "questions/verify.hpp"
#include "questions/worlds.hpp"

using namespace questions;

struct qst_dist {
    WorldDistribution value;
};

struct qst_prop {
    Proposition value;
};

struct qst_verify_report {
    std::vector<VerificationReport> suites;
};

namespace {

thread_local std::string g_last_error;

qst_status fail(qst_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
qst_status guarded(Fn&& fn) {
    try {
        fn();
        return QST_OK;
    } catch (const std::invalid_argument& e) {
        return fail(QST_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(QST_ERR_DOMAIN, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(QST_ERR_IO, e.what());
    } catch (const std::runtime_error& e) {
        return fail(QST_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(QST_ERR_UNKNOWN, e.what());
    }
}

qst_status require(bool ok, const char* what) {
    return ok ? QST_OK : fail(QST_ERR_INVALID_ARGUMENT, what);
}

StateVector state_from_array(const double psi[4]) {
    return StateVector({psi[0], psi[1]}, {psi[2], psi[3]});
}

Direction direction_from_array(const double v[3]) { return Direction({v[0], v[1], v[2]}); }

}  // namespace

extern "C" {

const char* qst_version(void) { return "1.0.0"; }

const char* qst_last_error(void) { return g_last_error.c_str(); }

qst_status qst_dist_create(const double* probs, size_t n_worlds, qst_dist** out) {
    if (auto s = require(probs && out && n_worlds > 0, "null argument")) return s;
    return guarded([&] {
        *out = new qst_dist{WorldDistribution(WorldSet(n_worlds),
                                              std::vector<double>(probs, probs + n_worlds))};
    });
}

qst_status qst_dist_uniform(size_t n_worlds, qst_dist** out) {
    if (auto s = require(out && n_worlds > 0, "null argument")) return s;
    return guarded([&] { *out = new qst_dist{WorldDistribution::uniform(WorldSet(n_worlds))}; });
}

qst_status qst_dist_product(const double* marginals, int n_generators, qst_dist** out) {
    if (auto s = require(marginals && out && n_generators > 0, "null argument")) return s;
    return guarded([&] {
        *out = new qst_dist{WorldDistribution::product(
            std::vector<double>(marginals, marginals + n_generators))};
    });
}

void qst_dist_free(qst_dist* dist) { delete dist; }

qst_status qst_dist_size(const qst_dist* dist, size_t* out) {
    if (auto s = require(dist && out, "null argument")) return s;
    *out = dist->value.size();
    return QST_OK;
}

qst_status qst_prop_create(const uint8_t* truth, size_t n_worlds, qst_prop** out) {
    if (auto s = require(truth && out && n_worlds > 0, "null argument")) return s;
    return guarded([&] {
        std::vector<bool> bits(n_worlds);
        for (size_t w = 0; w < n_worlds; ++w) bits[w] = truth[w] != 0;
        *out = new qst_prop{Proposition(WorldSet(n_worlds), bits)};
    });
}

qst_status qst_prop_generator(int n_generators, int index, qst_prop** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new qst_prop{
            Proposition::generator(WorldSet::generated(n_generators), index)};
    });
}

qst_status qst_prop_not(const qst_prop* a, qst_prop** out) {
    if (auto s = require(a && out, "null argument")) return s;
    return guarded([&] { *out = new qst_prop{~a->value}; });
}

#define QST_BINARY_PROP(name, expr)                                          \
    qst_status name(const qst_prop* a, const qst_prop* b, qst_prop** out) {  \
        if (auto s = require(a && b && out, "null argument")) return s;      \
        return guarded([&] { *out = new qst_prop{expr}; });                  \
    }

QST_BINARY_PROP(qst_prop_and, a->value & b->value)
QST_BINARY_PROP(qst_prop_or, a->value | b->value)
QST_BINARY_PROP(qst_prop_xor, a->value ^ b->value)
QST_BINARY_PROP(qst_prop_xnor, xnor(a->value, b->value))
#undef QST_BINARY_PROP

void qst_prop_free(qst_prop* prop) { delete prop; }

qst_status qst_prob(const qst_dist* dist, const qst_prop* prop, double* out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = prob(dist->value, prop->value); });
}

qst_status qst_info(const qst_dist* dist, const qst_prop* prop, double* out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = info(dist->value, prop->value); });
}

qst_status qst_mutual_info(const qst_dist* dist, const qst_prop* a, const qst_prop* b,
                           double* out) {
    if (auto s = require(dist && a && b && out, "null argument")) return s;
    return guarded([&] { *out = mutual_info_pair(dist->value, a->value, b->value); });
}

qst_status qst_balance_sum(const qst_dist* dist, const qst_prop* a, const qst_prop* b,
                           double* out) {
    if (auto s = require(dist && a && b && out, "null argument")) return s;
    return guarded([&] { *out = balance_sum(dist->value, a->value, b->value); });
}

qst_status qst_gap_askable(const qst_dist* dist, const qst_prop* prop, double* out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = gap(dist->value, AskableQuestion(prop->value)); });
}

qst_status qst_gap_pure(const qst_dist* dist, const qst_prop* prop, double* out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = gap(dist->value, PureQuestion(prop->value)); });
}

qst_status qst_gmp(const qst_dist* dist, const qst_prop* const* props, size_t count,
                   double* out) {
    if (auto s = require(dist && props && out && count > 0, "null argument")) return s;
    return guarded([&] {
        std::vector<PureQuestion> qs;
        qs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!props[i]) throw std::invalid_argument("null proposition in list");
            qs.emplace_back(props[i]->value);
        }
        *out = gmp(dist->value, qs);
    });
}

qst_status qst_evidence(const qst_dist* dist, const qst_prop* prop, double* out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = evidence(dist->value, AskableQuestion(prop->value)); });
}

qst_status qst_doubt(const qst_dist* dist, const qst_prop* prop, double* out_real,
                     double* out_imag) {
    if (auto s = require(dist && prop && out_real && out_imag, "null argument")) return s;
    return guarded([&] {
        const DoubtValue d = doubt(dist->value, AskableQuestion(prop->value));
        *out_real = d.real;
        *out_imag = d.imag;
    });
}

qst_status qst_dist_give(const qst_dist* dist, const qst_prop* prop, qst_dist** out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded([&] { *out = new qst_dist{give(dist->value, prop->value)}; });
}

qst_status qst_dist_raise(const qst_dist* dist, const qst_prop* prop, qst_dist** out) {
    if (auto s = require(dist && prop && out, "null argument")) return s;
    return guarded(
        [&] { *out = new qst_dist{raise_question(dist->value, PureQuestion(prop->value))}; });
}

qst_status qst_info_content(const qst_dist* dist, double* out) {
    if (auto s = require(dist && out, "null argument")) return s;
    return guarded([&] { *out = info_content(dist->value); });
}

qst_status qst_tilde_eval(double pa, double pb, qst_tilde_record* out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        const TildeEvaluation e = tilde_closed_form(pa, pb);
        *out = {e.pa,        e.pb,        e.gap_a,     e.gap_b, e.t, e.s, e.y,
                e.u.real(),  e.u.imag(),  e.v.real(),  e.v.imag(), e.x};
    });
}

qst_status qst_tilde_conditional(double pa, double pb, double* value, int* unconstrained) {
    if (auto s = require(value && unconstrained, "null argument")) return s;
    return guarded([&] {
        const TildeConditional c = tilde_conditional(pa, pb);
        *value = c.value;
        *unconstrained = c.unconstrained ? 1 : 0;
    });
}

qst_status qst_tilde_discrepancy(double pa, double pb, double* out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] { *out = discrepancy(pa, pb); });
}

qst_status qst_tilde_quartic_roots(double pa, double pb, double* roots, size_t capacity,
                                   size_t* count) {
    if (auto s = require(count && (capacity == 0 || roots), "null argument")) return s;
    return guarded([&] {
        const auto rs = quartic_roots_oracle(pa, pb);
        *count = rs.size();
        for (size_t i = 0; i < rs.size() && i < capacity; ++i) roots[i] = rs[i].x;
    });
}

qst_status qst_born(const double psi[4], const double phi[4], double* out) {
    if (auto s = require(psi && phi && out, "null argument")) return s;
    return guarded(
        [&] { *out = born_probability(state_from_array(psi), state_from_array(phi)); });
}

qst_status qst_bloch_from_state(const double psi[4], double v[3]) {
    if (auto s = require(psi && v, "null argument")) return s;
    return guarded([&] {
        const Vec3 b = bloch_from_state(state_from_array(psi)).vec();
        v[0] = b.x;
        v[1] = b.y;
        v[2] = b.z;
    });
}

qst_status qst_state_from_bloch(const double v[3], double psi[4]) {
    if (auto s = require(v && psi, "null argument")) return s;
    return guarded([&] {
        const StateVector sv = state_from_bloch(direction_from_array(v));
        psi[0] = sv.amp0.real();
        psi[1] = sv.amp0.imag();
        psi[2] = sv.amp1.real();
        psi[3] = sv.amp1.imag();
    });
}

qst_status qst_gap_along(const double v[3], const double axis[3], double* out) {
    if (auto s = require(v && axis && out, "null argument")) return s;
    return guarded([&] {
        *out = gap_along(BlochState({v[0], v[1], v[2]}), direction_from_array(axis));
    });
}

qst_status qst_add_with_angle(const double p1[3], const double p2[3], double phi,
                              double out[3]) {
    if (auto s = require(p1 && p2 && out, "null argument")) return s;
    return guarded([&] {
        const Vec3 r =
            add_with_angle(direction_from_array(p1), direction_from_array(p2), phi).vec();
        out[0] = r.x;
        out[1] = r.y;
        out[2] = r.z;
    });
}

qst_status qst_measure(const double axis[3], int answer_yes, double out[3]) {
    if (auto s = require(axis && out, "null argument")) return s;
    return guarded([&] {
        const Vec3 r = measure(BlochState::mixed(), direction_from_array(axis),
                               answer_yes ? Answer::Yes : Answer::No)
                           .vec();
        out[0] = r.x;
        out[1] = r.y;
        out[2] = r.z;
    });
}

qst_status qst_sample_measure(const double v[3], const double axis[3], uint64_t seed,
                              int* answer_yes, double out[3]) {
    if (auto s = require(v && axis && answer_yes && out, "null argument")) return s;
    return guarded([&] {
        const auto [ans, post] =
            sample_measure(BlochState({v[0], v[1], v[2]}), direction_from_array(axis), seed);
        *answer_yes = ans == Answer::Yes ? 1 : 0;
        out[0] = post.vec().x;
        out[1] = post.vec().y;
        out[2] = post.vec().z;
    });
}

qst_status qst_joint_prob_correlated(int sign, const double d1[3], int s1,
                                     const double d2[3], int s2, double* out) {
    if (auto s = require(d1 && d2 && out, "null argument")) return s;
    return guarded([&] {
        const PairState state = sign < 0 ? PairState::singlet() : PairState::aligned();
        *out = joint_prob(state, direction_from_array(d1), s1, direction_from_array(d2), s2);
    });
}

qst_status qst_bell_probs_at(double w_angle_rad, qst_bell_probs* out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        const BellProbs p = quantum_bell_probs(w_angle_rad);
        *out = {p.p_xy, p.p_xw, p.p_wy, p.violated ? 1 : 0};
    });
}

qst_status qst_bell_montecarlo(double w_angle_rad, uint64_t trials, uint64_t seed,
                               qst_bell_counts* out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        const BellCounts c = bell_montecarlo(w_angle_rad, trials, seed);
        *out = {c.trials, c.n_xy, c.n_xw, c.n_wy};
    });
}

qst_status qst_lhv_inequality(const uint64_t counts[8], uint64_t* lhs, uint64_t* rhs,
                              int* holds) {
    if (auto s = require(counts && lhs && rhs && holds, "null argument")) return s;
    return guarded([&] {
        LhvTable t;
        for (int i = 0; i < 8; ++i) t.n[i] = counts[i];
        const LhvResult r = lhv_inequality(t);
        *lhs = r.lhs;
        *rhs = r.rhs;
        *holds = r.holds ? 1 : 0;
    });
}

qst_status qst_group_census(int n, qst_census* out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        const GroupCensus c = group_census(n);
        *out = {};
        out->n = c.n;
        out->q_size = c.q_size;
        out->q1_size = c.q1_size;
        out->generator_count = c.generator_count;
        for (int m = 1; m <= c.n && m <= 4; ++m) out->s_sizes[m] = c.s_sizes[m];
        out->closure_ok = c.closure_ok ? 1 : 0;
        out->involution_ok = c.involution_ok ? 1 : 0;
        out->associativity_ok = c.associativity_ok ? 1 : 0;
    });
}

qst_status qst_figure_write(const char* name, double grid_step, const char* format,
                            const char* path) {
    if (auto s = require(name && format && path, "null argument")) return s;
    return guarded([&] {
        FigureFormat f;
        if (std::strcmp(format, "csv") == 0)
            f = FigureFormat::Csv;
        else if (std::strcmp(format, "json") == 0)
            f = FigureFormat::Json;
        else
            throw std::invalid_argument("format must be csv or json");
        write_figure_file(name, grid_step, f, path);
    });
}

qst_status qst_figure_names(const char* const** names, size_t* count) {
    if (auto s = require(names && count, "null argument")) return s;
    static std::vector<const char*> ptrs = [] {
        std::vector<const char*> v;
        for (const auto& n : figure_names()) v.push_back(n.c_str());
        return v;
    }();
    *names = ptrs.data();
    *count = ptrs.size();
    return QST_OK;
}

qst_status qst_verify_run(const char* suite, uint64_t seed, qst_verify_report** out) {
    if (auto s = require(suite && out, "null argument")) return s;
    return guarded([&] { *out = new qst_verify_report{run_verification(suite, seed)}; });
}

size_t qst_verify_suite_count(const qst_verify_report* report) {
    return report ? report->suites.size() : 0;
}

const char* qst_verify_suite_name(const qst_verify_report* report, size_t suite) {
    if (!report || suite >= report->suites.size()) return "";
    return report->suites[suite].suite.c_str();
}

size_t qst_verify_check_count(const qst_verify_report* report, size_t suite) {
    if (!report || suite >= report->suites.size()) return 0;
    return report->suites[suite].checks.size();
}

qst_status qst_verify_check(const qst_verify_report* report, size_t suite, size_t check,
                            qst_check_view* out) {
    if (auto s = require(report && out, "null argument")) return s;
    if (suite >= report->suites.size() || check >= report->suites[suite].checks.size())
        return fail(QST_ERR_INVALID_ARGUMENT, "check index out of range");
    const Check& c = report->suites[suite].checks[check];
    out->id = c.id.c_str();
    out->description = c.description.c_str();
    out->passed = c.passed ? 1 : 0;
    out->measured = c.measured;
    out->tolerance = c.tolerance;
    return QST_OK;
}

int qst_verify_passed(const qst_verify_report* report) {
    if (!report) return 0;
    for (const auto& suite : report->suites)
        if (!suite.passed()) return 0;
    return 1;
}

void qst_verify_free(qst_verify_report* report) { delete report; }

qst_status qst_format_double(double value, char* buf, size_t buflen) {
    if (auto s = require(buf && buflen >= 32, "buffer must hold at least 32 bytes")) return s;
    const std::string s = format_double(value);
    if (s.size() + 1 > buflen) return fail(QST_ERR_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return QST_OK;
}

}  // extern "C"
