#ifndef QUESTIONS_COMPLEX_PROPS_HPP
#define QUESTIONS_COMPLEX_PROPS_HPP

#include <complex>
#include <functional>
#include <utility>

/// Complex-valued properties of questions: the negation-conjugation
/// constraint f(-z*) = -f(z)*, the admissible function families, half-plane
/// cube roots, and whole-question phase and spinor structure.
namespace questions {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

enum class SampleDomain { Plane, UpperHalfPlane, LowerHalfPlane };

struct ConstraintReport {
    bool passed = false;
    double max_violation = 0.0;
    int samples = 0;
};

/// Evaluates |f(-z*) + f(z)*| on a seeded quasi-random sample of the domain;
/// passes iff the maximum stays below 1e-9.
ConstraintReport check_constraint(const ComplexFn& f, SampleDomain domain, int samples,
                                  std::uint64_t seed = 0);

/// The cube root that is itself a valid property transform: w2 z^(1/3) for
/// Im z > 0, w1 z^(1/3) for Im z < 0, and the real cube root on the real
/// axis. The result is the unique cube root lying alone in its half-plane.
Complex question_cbrt(Complex z);

/// The admissible n-th-root transform: c z^(1/n) with c = exp(-i(pi/2 + pi/2n))
/// in the upper half-plane and its conjugate in the lower. For n = 3 this is
/// the w2/w1 cube-root pair; the result is a genuine n-th root only when
/// n = 3 (mod 4).
Complex question_nth_root(Complex z, int n);

/// Monomial transform z^n conj(z)^m, optionally multiplied by i. Constructible
/// only when the parity rule holds: the factor i is required exactly when
/// n + m is even.
ComplexFn family_member(int n, int m, bool with_i);

enum class PropertyKind { Askable, Pure, Whole };

/// A complex-valued property evaluated at the parameter p = P(A); the value
/// at !A is the same function at 1 - p. Whole properties record the phase phi
/// of their offset g = exp(i phi) f from an askable-valid core f.
struct PropertyFunction {
    PropertyKind kind = PropertyKind::Askable;
    double phase = 0.0;  // meaningful for Whole
    std::function<Complex(double)> value;
};

/// Pointwise check of the defining symmetry on a parameter grid over (0, 1):
/// askable: f(1-p) = -conj(f(p)); pure: f(1-p) = conj(f(p));
/// whole: g(1-p) = exp(i(2 phi + pi)) conj(g(p)).
ConstraintReport check_property(const PropertyFunction& f, int grid_points = 201,
                                double tol = 1e-9);

PropertyFunction whole_property(double phase, std::function<Complex(double)> askable_core);

/// The two values of phi for which g1 + exp(i phi) g2 is a valid whole
/// property: phi1 - phi2 and phi1 - phi2 + pi, reduced to [0, 2 pi).
std::pair<double, double> whole_phase_align(const PropertyFunction& g1,
                                            const PropertyFunction& g2);

/// Pre-answer value pair (f(A), f(!A)) of a whole-question property;
/// magnitudes must match.
struct SpinorValue {
    Complex first;
    Complex second;
};

/// Componentwise product; closed on the |z1| = |z2| manifold.
SpinorValue spinor_product(const SpinorValue& u, const SpinorValue& v);

}  // namespace questions

#endif
