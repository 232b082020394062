// Command-line driver for the questions library. Talks to the core purely
// through the public C API in questions.h.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "questions.h"

namespace {

std::string fmt(double v) {
    char buf[40];
    if (qst_format_double(v, buf, sizeof buf) != QST_OK) return "?";
    return buf;
}

[[noreturn]] void die(const char* context) {
    std::fprintf(stderr, "error: %s: %s\n", context, qst_last_error());
    std::exit(2);
}

std::uint64_t default_seed() {
    const char* env = std::getenv("QUESTIONS_SEED");
    if (!env || !*env) return 0;
    return std::strtoull(env, nullptr, 10);
}

int run_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
    qst_verify_report* report = nullptr;
    if (qst_verify_run(suite.c_str(), seed, &report) != QST_OK) die("verify");

    const size_t n_suites = qst_verify_suite_count(report);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["seed"] = seed;
        doc["suites"] = nlohmann::ordered_json::array();
        for (size_t s = 0; s < n_suites; ++s) {
            nlohmann::ordered_json js;
            js["suite"] = qst_verify_suite_name(report, s);
            js["checks"] = nlohmann::ordered_json::array();
            for (size_t c = 0; c < qst_verify_check_count(report, s); ++c) {
                qst_check_view view;
                qst_verify_check(report, s, c, &view);
                js["checks"].push_back({{"id", view.id},
                                        {"description", view.description},
                                        {"status", view.passed ? "pass" : "fail"},
                                        {"measured", view.measured},
                                        {"tolerance", view.tolerance}});
            }
            doc["suites"].push_back(js);
        }
        doc["passed"] = qst_verify_passed(report) != 0;
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        int total = 0, passed = 0;
        for (size_t s = 0; s < n_suites; ++s) {
            std::printf("suite %s\n", qst_verify_suite_name(report, s));
            for (size_t c = 0; c < qst_verify_check_count(report, s); ++c) {
                qst_check_view view;
                qst_verify_check(report, s, c, &view);
                std::printf("  [%s] %-4s %-58s measured=%s tol=%s\n",
                            view.passed ? "pass" : "FAIL", view.id, view.description,
                            fmt(view.measured).c_str(), fmt(view.tolerance).c_str());
                ++total;
                passed += view.passed ? 1 : 0;
            }
        }
        std::printf("%d/%d checks passed\n", passed, total);
    }
    const int ok = qst_verify_passed(report);
    qst_verify_free(report);
    return ok ? 0 : 1;
}

int run_tilde(double pa, double pb, bool full) {
    qst_tilde_record rec;
    if (qst_tilde_eval(pa, pb, &rec) != QST_OK) {
        std::fprintf(stderr, "error: %s\n", qst_last_error());
        return 2;
    }
    std::printf("x = %s\n", fmt(rec.x).c_str());
    if (!full) return 0;

    std::printf("gap(A?) = %s\n", fmt(rec.gap_a).c_str());
    std::printf("gap(B?) = %s\n", fmt(rec.gap_b).c_str());
    std::printf("T = %s\n", fmt(rec.t).c_str());
    std::printf("S = %s\n", fmt(rec.s).c_str());
    std::printf("Y = %s\n", fmt(rec.y).c_str());
    std::printf("U = %s + %si\n", fmt(rec.u_re).c_str(), fmt(rec.u_im).c_str());
    std::printf("V = %s + %si\n", fmt(rec.v_re).c_str(), fmt(rec.v_im).c_str());
    std::printf("x - ab = %s\n", fmt(rec.x - pa * pb).c_str());

    double cond = 0.0;
    int unconstrained = 0;
    if (qst_tilde_conditional(pa, pb, &cond, &unconstrained) == QST_OK) {
        if (unconstrained)
            std::printf("P(B|A) unconstrained\n");
        else
            std::printf("P(B|A) = %s\n", fmt(cond).c_str());
    }

    if (pa > 0.0 && pa < 1.0 && pb > 0.0 && pb < 1.0) {
        double roots[8];
        size_t count = 0;
        if (qst_tilde_quartic_roots(pa, pb, roots, 8, &count) != QST_OK) die("oracle");
        std::printf("oracle roots:");
        for (size_t i = 0; i < count && i < 8; ++i) std::printf(" %s", fmt(roots[i]).c_str());
        std::printf("\n");
    }
    return 0;
}

int run_figure(const std::string& name, double step, const std::string& format,
               const std::string& out_path) {
    if (qst_figure_write(name.c_str(), step, format.c_str(), out_path.c_str()) != QST_OK) {
        std::fprintf(stderr, "error: %s\n", qst_last_error());
        return 2;
    }
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int run_bell(double w_angle_deg, std::uint64_t trials, std::uint64_t seed) {
    const double rad = w_angle_deg * 3.14159265358979323846 / 180.0;
    qst_bell_probs p;
    if (qst_bell_probs_at(rad, &p) != QST_OK) die("bell");
    std::printf("w angle: %s degrees\n", fmt(w_angle_deg).c_str());
    std::printf("P(x1+, y2+) = %s\n", fmt(p.p_xy).c_str());
    std::printf("P(x1+, w2-) = %s\n", fmt(p.p_xw).c_str());
    std::printf("P(w1-, y2+) = %s\n", fmt(p.p_wy).c_str());
    std::printf("LHV bound requires %s + %s >= %s\n", fmt(p.p_xw).c_str(), fmt(p.p_wy).c_str(),
                fmt(p.p_xy).c_str());
    std::printf("%s\n", p.violated ? "VIOLATED" : "not violated");

    if (trials > 0) {
        qst_bell_counts counts;
        if (qst_bell_montecarlo(rad, trials, seed, &counts) != QST_OK) die("bell montecarlo");
        struct Row {
            const char* label;
            std::uint64_t n;
            double exact;
        } rows[3] = {{"xy", counts.n_xy, p.p_xy},
                     {"xw", counts.n_xw, p.p_xw},
                     {"wy", counts.n_wy, p.p_wy}};
        std::printf("monte carlo: %" PRIu64 " trials, seed %" PRIu64 "\n", trials, seed);
        for (const auto& row : rows) {
            const double freq = static_cast<double>(row.n) / static_cast<double>(trials);
            const double sigma =
                std::sqrt(row.exact * (1.0 - row.exact) / static_cast<double>(trials));
            std::printf("  %s: %" PRIu64 " hits, freq %s, exact %s, stderr %s\n", row.label,
                        row.n, fmt(freq).c_str(), fmt(row.exact).c_str(), fmt(sigma).c_str());
        }
    }
    return 0;
}

int run_census(int n) {
    qst_census c;
    if (qst_group_census(n, &c) != QST_OK) {
        std::fprintf(stderr, "error: %s\n", qst_last_error());
        return 2;
    }
    std::printf("N = %d\n", c.n);
    std::printf("|Q(%d)|  = %" PRIu64 "\n", c.n, c.q_size);
    std::printf("|Q1(%d)| = %" PRIu64 "\n", c.n, c.q1_size);
    std::printf("generators = %" PRIu64 "\n", c.generator_count);
    for (int m = 1; m <= c.n; ++m)
        std::printf("|S%d(%d)| = %" PRIu64 "\n", m, c.n, c.s_sizes[m]);
    std::printf("closure %s, involution %s, associativity %s\n",
                c.closure_ok ? "ok" : "FAILED", c.involution_ok ? "ok" : "FAILED",
                c.associativity_ok ? "ok" : "FAILED");
    return c.closure_ok && c.involution_ok && c.associativity_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"questions: probability, question algebra, the tilde relation, and the "
                 "two-state system"};
    app.require_subcommand(1);

    std::string suite = "all";
    std::uint64_t seed = default_seed();
    bool as_json = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "suite name or 'all'");
    verify->add_option("--seed", seed, "random seed (default from QUESTIONS_SEED or 0)");
    verify->add_flag("--json", as_json, "emit a machine-readable JSON report");

    double pa = 0.0, pb = 0.0;
    bool full = false;
    auto* tilde = app.add_subcommand("tilde", "evaluate the tilde closed form at (pa, pb)");
    tilde->add_option("pa", pa, "P(A)")->required()->check(CLI::Range(0.0, 1.0));
    tilde->add_option("pb", pb, "P(B)")->required()->check(CLI::Range(0.0, 1.0));
    tilde->add_flag("--full", full, "print pipeline intermediates and oracle roots");

    std::string fig_name, fig_format = "csv", fig_out;
    double fig_step = 0.0;
    auto* figure = app.add_subcommand("figure", "write figure data to a file");
    figure->add_option("name", fig_name, "fig2_2 fig2_3 fig2_4 fig7_1 fig7_2 fig7_3 fig7_4")
        ->required();
    figure->add_option("--step", fig_step, "grid step (default per figure)");
    figure->add_option("--format", fig_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--out", fig_out, "output path (default <name>.<format>)");

    double w_angle = 225.0;
    std::uint64_t trials = 0, bell_seed = default_seed();
    auto* bell = app.add_subcommand("bell", "Bell inequality probabilities for the singlet");
    bell->add_option("--w-angle", w_angle, "w axis angle from x, in degrees (default 225)");
    bell->add_option("--trials", trials, "Monte Carlo trials (0 = exact only)");
    bell->add_option("--seed", bell_seed, "Monte Carlo seed");

    int census_n = 3;
    auto* census = app.add_subcommand("census", "enumerate Q(N) and subject groups, N <= 4");
    census->add_option("n", census_n, "number of generator propositions")
        ->required()
        ->check(CLI::Range(1, 4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (verify->parsed()) return run_verify(suite, seed, as_json);
    if (tilde->parsed()) return run_tilde(pa, pb, full);
    if (figure->parsed()) {
        if (fig_out.empty()) fig_out = fig_name + "." + fig_format;
        return run_figure(fig_name, fig_step, fig_format, fig_out);
    }
    if (bell->parsed()) return run_bell(w_angle, trials, bell_seed);
    if (census->parsed()) return run_census(census_n);
    return 2;
}
