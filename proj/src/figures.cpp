#include "questions/figures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "questions/format.hpp"
#include "questions/tilde.hpp"

namespace questions {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> axis_grid(double step) {
    std::vector<double> g;
    const int n = static_cast<int>(std::round(1.0 / step));
    g.reserve(n + 1);
    for (int i = 0; i <= n; ++i) g.push_back(std::min(1.0, i * step));
    return g;
}

const std::vector<double>& line_levels() {
    static const std::vector<double> levels = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                               0.6, 0.7, 0.8, 0.9, 1.0};
    return levels;
}

FigureTable fig2_2(double step) {
    FigureTable t{{"pa", "pb", "x_independent", "x_tilde"}, {}};
    for (double pa : axis_grid(step))
        for (double pb : axis_grid(step))
            t.rows.push_back({pa, pb, pa * pb, tilde_closed_form(pa, pb).x});
    return t;
}

FigureTable fig2_3(double step) {
    FigureTable t{{"pa", "pb", "discrepancy"}, {}};
    for (double pa : axis_grid(step))
        for (double pb : axis_grid(step))
            t.rows.push_back({pa, pb, discrepancy(pa, pb)});
    return t;
}

FigureTable fig2_4(double step) {
    FigureTable t{{"pa", "pb", "conditional"}, {}};
    for (double pa : axis_grid(step)) {
        for (double pb : axis_grid(step)) {
            const TildeConditional c = tilde_conditional(pa, pb);
            t.rows.push_back({pa, pb, c.unconstrained ? kNaN : c.value});
        }
    }
    return t;
}

FigureTable fig7_1(double step) {
    FigureTable t{{"pb", "pa", "re", "im"}, {}};
    for (double pb : axis_grid(step)) {
        for (double pa : axis_grid(step)) {
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            t.rows.push_back({pb, pa, e.v.real(), e.v.imag()});
        }
    }
    return t;
}

// Fold a point of the gap square along the diagonals x = y and x = -y into
// the wedge x >= |y|.
std::pair<double, double> fold(double x, double y) {
    double a = std::max(x, y), b = std::min(x, y);
    if (b < -a) {
        const double na = -b, nb = -a;
        a = na;
        b = nb;
    }
    return {a, b};
}

FigureTable fig7_2(double step) {
    FigureTable t{{"series", "pb", "pa", "re", "im"}, {}};
    for (double pb : line_levels()) {
        for (double pa : axis_grid(step)) {
            auto [re, im] = fold(2.0 * pa - 1.0, 2.0 * pb - 1.0);
            t.rows.push_back({0.0, pb, pa, re, im});
        }
    }
    for (double pb : line_levels()) {
        for (double pa : axis_grid(step)) {
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            t.rows.push_back({1.0, pb, pa, e.v.real(), e.v.imag()});
        }
    }
    return t;
}

FigureTable fig7_3(double step) {
    FigureTable t{{"pb", "pa", "gap_a", "gap_b", "t", "s", "y", "u_im", "cbrt_re",
                   "cbrt_im", "v_re", "v_im"},
                  {}};
    for (double pb : line_levels()) {
        for (double pa : axis_grid(step)) {
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            const std::complex<double> w2(-0.5, -0.5 * std::sqrt(3.0));
            const std::complex<double> cbrt = e.v / (2.0 * w2);
            t.rows.push_back({pb, pa, e.gap_a, e.gap_b, e.t, e.s, e.y, e.u.imag(),
                              cbrt.real(), cbrt.imag(), e.v.real(), e.v.imag()});
        }
    }
    return t;
}

FigureTable fig7_4(double step) {
    FigureTable t{{"pb", "pa", "s", "t"}, {}};
    for (double pb : line_levels()) {
        for (double pa : axis_grid(step)) {
            const TildeEvaluation e = tilde_closed_form(pa, pb);
            t.rows.push_back({pb, pa, e.s, e.t});
        }
    }
    return t;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig2_2", "fig2_3", "fig2_4", "fig7_1",
                                                   "fig7_2", "fig7_3", "fig7_4"};
    return names;
}

bool is_figure_name(const std::string& name) {
    const auto& names = figure_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FigureTable compute_figure(const std::string& name, double grid_step) {
    double step = grid_step;
    if (step == 0.0) step = 0.005;
    if (step < 1e-4 || step > 0.25)
        throw std::invalid_argument("grid step must lie in [1e-4, 0.25]");
    if (name == "fig2_2") return fig2_2(step);
    if (name == "fig2_3") return fig2_3(step);
    if (name == "fig2_4") return fig2_4(step);
    if (name == "fig7_1") return fig7_1(step);
    if (name == "fig7_2") return fig7_2(step);
    if (name == "fig7_3") return fig7_3(step);
    if (name == "fig7_4") return fig7_4(step);
    throw std::invalid_argument("unknown figure: " + name);
}

void write_figure(const FigureTable& table, FigureFormat format, std::ostream& out) {
    if (format == FigureFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ",";
                if (!std::isnan(row[c])) out << format_double(row[c]);
            }
            out << "\n";
        }
        return;
    }
    out << "{\"columns\":[";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << "\"" << table.columns[c] << "\"";
    out << "],\"rows\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out << ",";
            if (std::isnan(table.rows[r][c]))
                out << "null";
            else
                out << format_double(table.rows[r][c]);
        }
        out << "]";
    }
    out << "]}\n";
}

void write_figure_file(const std::string& name, double grid_step, FigureFormat format,
                       const std::string& path) {
    const FigureTable table = compute_figure(name, grid_step);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_figure(table, format, out);
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace questions
