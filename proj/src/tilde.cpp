#include "questions/tilde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace questions {

namespace {

constexpr double kClampTol = 1e-9;

void check_unit_interval(double pa, double pb) {
    if (!(pa >= 0.0 && pa <= 1.0 && pb >= 0.0 && pb <= 1.0))
        throw std::invalid_argument("probabilities must lie in [0, 1]");
}

double quartic_gap_form(double pa, double pb, double x) {
    const double rhs = pa * pb * (1.0 - pa) * (1.0 - pb);
    return x * (pa - x) * (pb - x) * (1.0 - pa - pb + x) - rhs * rhs;
}

}  // namespace

TildeEvaluation tilde_closed_form(double pa, double pb) {
    check_unit_interval(pa, pb);
    TildeEvaluation e;
    e.pa = pa;
    e.pb = pb;
    e.gap_a = 2.0 * pa - 1.0;
    e.gap_b = 2.0 * pb - 1.0;
    const double ga2 = e.gap_a * e.gap_a;
    const double gb2 = e.gap_b * e.gap_b;
    e.t = (3.0 - ga2) * (3.0 - gb2) / 8.0 - 1.5;
    e.s = -(5.0 / 32.0) * ((1.8 - ga2) * (1.8 - gb2) - 1.8 * 1.8 + 9.0);
    e.y = e.gap_a * e.gap_b * e.s;

    // t^3 + y^2 <= 0 analytically and reaches 0 only at the corners
    // y = +-1, t = -1. Rounding noise there lands on either side of 0 and the
    // square root would amplify it to ~1e-8, so |noise| <= 1e-12 collapses to
    // the exact corner value.
    double disc = e.t * e.t * e.t + e.y * e.y;
    if (std::abs(disc) <= 1e-12) disc = 0.0;
    if (disc > 0.0)
        throw std::domain_error("tilde pipeline: t^3 + y^2 unexpectedly positive");
    // Im(u) must be +0 so the principal log stays on the upper side of the
    // branch cut when y + u is a negative real.
    e.u = std::complex<double>(0.0, disc == 0.0 ? 0.0 : std::sqrt(-disc));

    static const std::complex<double> w2(-0.5, -0.5 * std::sqrt(3.0));
    const std::complex<double> yu(e.y, e.u.imag());
    e.v = 2.0 * w2 * std::exp(std::log(yu) / 3.0);

    double x = pa * pb + (e.v.real() - e.gap_a * e.gap_b) / 3.0;
    // (pa - 1) + pb keeps the bound exact on the degenerate lines, where
    // pa + pb - 1 picks up rounding that can invert the interval.
    double lo = std::max(0.0, (pa - 1.0) + pb);
    const double hi = std::min(pa, pb);
    if (lo > hi) {
        if (lo - hi > kClampTol)
            throw std::domain_error("admissible interval inverted beyond tolerance");
        lo = hi;
    }
    if (x < lo && x > lo - kClampTol) x = lo;
    if (x > hi && x < hi + kClampTol) x = hi;
    if (x < lo || x > hi)
        throw std::domain_error("tilde pipeline produced x outside the admissible interval");
    e.x = x;
    return e;
}

std::vector<QuarticRoot> quartic_roots_oracle(double pa, double pb) {
    if (!(pa > 0.0 && pa < 1.0 && pb > 0.0 && pb < 1.0))
        throw std::invalid_argument("oracle requires probabilities strictly inside (0, 1)");
    const double lo = std::max(0.0, (pa - 1.0) + pb);
    const double hi = std::min(pa, pb);
    const int n = 10000;
    const double step = (hi - lo) / n;

    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) g[i] = quartic_gap_form(pa, pb, lo + step * i);

    std::vector<double> roots;
    auto derivative = [&](double x) {
        const double u1 = x, u2 = pa - x, u3 = pb - x, u4 = 1.0 - pa - pb + x;
        return u2 * u3 * u4 - u1 * u3 * u4 - u1 * u2 * u4 + u1 * u2 * u3;
    };
    auto bisect = [&](double a, double b) {
        double fa = quartic_gap_form(pa, pb, a);
        for (int iter = 0; iter < 200 && b - a > 1e-14; ++iter) {
            const double m = 0.5 * (a + b);
            const double fm = quartic_gap_form(pa, pb, m);
            if ((fa <= 0.0) == (fm <= 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        // Newton polish; each step is kept only if it shrinks the residual.
        double x = 0.5 * (a + b);
        double best = std::abs(quartic_gap_form(pa, pb, x));
        for (int iter = 0; iter < 3; ++iter) {
            const double d = derivative(x);
            if (std::abs(d) < 1e-30) break;
            const double next = x - quartic_gap_form(pa, pb, x) / d;
            if (next < lo || next > hi) break;
            const double resid = std::abs(quartic_gap_form(pa, pb, next));
            if (resid >= best) break;
            x = next;
            best = resid;
        }
        return x;
    };

    for (int i = 0; i < n; ++i) {
        const double xi = lo + step * i, xj = lo + step * (i + 1);
        if (g[i] == 0.0) {
            roots.push_back(xi);
        } else if (g[i] * g[i + 1] < 0.0) {
            roots.push_back(bisect(xi, xj));
        }
    }
    if (g[n] == 0.0) roots.push_back(hi);

    // A tangential double root shows up as an interior local maximum of g that
    // touches zero from below without a sign change.
    for (int i = 1; i < n; ++i) {
        if (g[i] >= 0.0) continue;  // crossing roots already caught above
        if (g[i] < g[i - 1] || g[i] < g[i + 1]) continue;
        double a = lo + step * (i - 1), b = lo + step * (i + 1);
        for (int iter = 0; iter < 200 && b - a > 1e-14; ++iter) {
            const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (quartic_gap_form(pa, pb, m1) < quartic_gap_form(pa, pb, m2))
                a = m1;
            else
                b = m2;
        }
        const double peak = 0.5 * (a + b);
        if (std::abs(quartic_gap_form(pa, pb, peak)) < 1e-12) roots.push_back(peak);
    }

    std::sort(roots.begin(), roots.end());
    std::vector<QuarticRoot> out;
    for (double r : roots) {
        if (!out.empty() && r - out.back().x < 1e-9) continue;
        out.push_back({r, quartic_gap_form(pa, pb, r)});
    }
    return out;
}

TildeConditional tilde_conditional(double pa, double pb) {
    check_unit_interval(pa, pb);
    TildeConditional c;
    if (pa > 0.0) {
        c.value = tilde_closed_form(pa, pb).x / pa;
        c.value = std::clamp(c.value, 0.0, 1.0);
    } else if (pb > 0.0 && pb < 1.0) {
        c.value = 1.0 - pb;
    } else {
        c.unconstrained = true;
    }
    return c;
}

double discrepancy(double pa, double pb) {
    const TildeEvaluation e = tilde_closed_form(pa, pb);
    return e.x - pa * pb;
}

double connecting_gap(double pa, double pb) {
    return tilde_closed_form(pa, pb).v.real();
}

WorldDistribution tilde_distribution(double pa, double pb) {
    const TildeEvaluation e = tilde_closed_form(pa, pb);
    WorldSet ws = WorldSet::generated(2);
    // World bits: bit 0 = A, bit 1 = B.
    std::vector<double> p(4);
    p[0b11] = e.x;
    p[0b01] = pa - e.x;
    p[0b10] = pb - e.x;
    p[0b00] = 1.0 - pa - pb + e.x;
    for (auto& v : p) v = std::max(v, 0.0);
    return WorldDistribution(ws, std::move(p));
}

}  // namespace questions
