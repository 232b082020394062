#include "questions/complex_props.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace questions {

namespace {

constexpr double kPassTol = 1e-9;

// 2D low-discrepancy points from the additive golden-ratio lattice, scrambled
// by the seed.
struct QuasiSampler {
    explicit QuasiSampler(std::uint64_t seed) {
        u = 0.5 + 1e-9 * static_cast<double>(seed % 1000003);
        v = 0.25 + 1e-9 * static_cast<double>((seed / 7) % 1000003);
    }
    std::pair<double, double> next() {
        u += 0.7548776662466927;  // 1/phi_2
        v += 0.5698402909980532;  // 1/phi_2^2
        if (u >= 1.0) u -= 1.0;
        if (v >= 1.0) v -= 1.0;
        return {u, v};
    }
    double u, v;
};

double reduce_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

}  // namespace

ConstraintReport check_constraint(const ComplexFn& f, SampleDomain domain, int samples,
                                  std::uint64_t seed) {
    if (samples < 100) throw std::invalid_argument("need at least 100 samples");
    QuasiSampler qs(seed);
    ConstraintReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        auto [a, b] = qs.next();
        const double re = 6.0 * a - 3.0;
        double im = 6.0 * b - 3.0;
        if (domain == SampleDomain::UpperHalfPlane) im = 3.0 * b + 1e-6;
        if (domain == SampleDomain::LowerHalfPlane) im = -3.0 * b - 1e-6;
        const Complex z(re, im);
        const double violation = std::abs(f(-std::conj(z)) + std::conj(f(z)));
        rep.max_violation = std::max(rep.max_violation, violation);
    }
    rep.passed = rep.max_violation < kPassTol;
    return rep;
}

Complex question_cbrt(Complex z) {
    if (z.imag() == 0.0) return Complex(std::cbrt(z.real()), 0.0);
    static const Complex w2(-0.5, -0.5 * std::sqrt(3.0));
    static const Complex w1(-0.5, 0.5 * std::sqrt(3.0));
    const Complex principal = std::exp(std::log(z) / 3.0);
    return (z.imag() > 0.0 ? w2 : w1) * principal;
}

Complex question_nth_root(Complex z, int n) {
    if (n < 1) throw std::invalid_argument("root order must be positive");
    if (z.imag() == 0.0 && (n % 2 == 1))
        return Complex(std::copysign(std::pow(std::abs(z.real()), 1.0 / n), z.real()), 0.0);
    const double angle = std::numbers::pi / 2.0 + std::numbers::pi / (2.0 * n);
    const Complex c = std::polar(1.0, z.imag() >= 0.0 ? -angle : angle);
    return c * std::exp(std::log(z) / static_cast<double>(n));
}

ComplexFn family_member(int n, int m, bool with_i) {
    if (n < 0 || m < 0) throw std::invalid_argument("monomial powers must be non-negative");
    const bool even = (n + m) % 2 == 0;
    if (with_i != even)
        throw std::invalid_argument("parity violation: the i factor goes with even n + m");
    return [n, m, with_i](Complex z) {
        Complex r(1.0, 0.0);
        for (int k = 0; k < n; ++k) r *= z;
        const Complex zc = std::conj(z);
        for (int k = 0; k < m; ++k) r *= zc;
        return with_i ? Complex(0.0, 1.0) * r : r;
    };
}

ConstraintReport check_property(const PropertyFunction& f, int grid_points, double tol) {
    if (grid_points < 3) throw std::invalid_argument("grid too small");
    ConstraintReport rep;
    rep.samples = grid_points;
    for (int i = 1; i < grid_points - 1; ++i) {
        const double p = static_cast<double>(i) / (grid_points - 1);
        const Complex at = f.value(p);
        const Complex at_neg = f.value(1.0 - p);
        Complex expected;
        switch (f.kind) {
            case PropertyKind::Askable: expected = -std::conj(at); break;
            case PropertyKind::Pure: expected = std::conj(at); break;
            case PropertyKind::Whole:
                // g = exp(i phi) f with f askable gives
                // g(1-p) = exp(i(2 phi + pi)) conj(g(p)).
                expected = std::polar(1.0, 2.0 * f.phase + std::numbers::pi) * std::conj(at);
                break;
        }
        rep.max_violation = std::max(rep.max_violation, std::abs(at_neg - expected));
    }
    rep.passed = rep.max_violation < tol;
    return rep;
}

PropertyFunction whole_property(double phase, std::function<Complex(double)> askable_core) {
    PropertyFunction g;
    g.kind = PropertyKind::Whole;
    g.phase = phase;
    g.value = [phase, core = std::move(askable_core)](double p) {
        return std::polar(1.0, phase) * core(p);
    };
    return g;
}

std::pair<double, double> whole_phase_align(const PropertyFunction& g1,
                                            const PropertyFunction& g2) {
    if (g1.kind != PropertyKind::Whole || g2.kind != PropertyKind::Whole)
        throw std::invalid_argument("phase alignment requires whole properties");
    const double d = reduce_angle(g1.phase - g2.phase);
    return {d, reduce_angle(d + std::numbers::pi)};
}

SpinorValue spinor_product(const SpinorValue& u, const SpinorValue& v) {
    const double tol = 1e-12;
    if (std::abs(std::abs(u.first) - std::abs(u.second)) > tol ||
        std::abs(std::abs(v.first) - std::abs(v.second)) > tol)
        throw std::invalid_argument("spinor components must have equal magnitudes");
    return {u.first * v.first, u.second * v.second};
}

}  // namespace questions
