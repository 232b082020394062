#ifndef QUESTIONS_TWO_STATE_HPP
#define QUESTIONS_TWO_STATE_HPP

#include <complex>
#include <cstdint>
#include <utility>

#include "questions/groups.hpp"

/// The sphere of askable questions as the two-state quantum system: Bloch
/// states, cosine-projection gaps, the Born rule, arc addition with an angle,
/// the Hilbert correspondence, and measurement as raise-then-give.
namespace questions {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

/// A unit vector: a measurement axis on the sphere of askable questions.
class Direction {
  public:
    explicit Direction(Vec3 v);
    static Direction spherical(double theta, double phi);
    static Direction x_axis() { return Direction({1, 0, 0}); }
    static Direction y_axis() { return Direction({0, 1, 0}); }
    static Direction z_axis() { return Direction({0, 0, 1}); }

    const Vec3& vec() const { return v_; }
    Direction operator-() const { return Direction({-v_.x, -v_.y, -v_.z}); }

  private:
    Vec3 v_;
};

/// A state of the two-state system: |v| = 1 for pure states, v = 0 for the
/// maximally mixed state.
class BlochState {
  public:
    explicit BlochState(Vec3 v);
    static BlochState mixed() { return BlochState({0, 0, 0}); }
    static BlochState pure(const Direction& d) { return BlochState(d.vec()); }

    const Vec3& vec() const { return v_; }
    bool is_pure(double tol = 1e-9) const;

  private:
    Vec3 v_;
};

/// An unnormalized two-component state vector; physical predictions are
/// invariant under global complex scaling.
struct StateVector {
    std::complex<double> amp0;
    std::complex<double> amp1;

    StateVector(std::complex<double> a0, std::complex<double> a1);
    StateVector normalized() const;
};

std::complex<double> inner(const StateVector& a, const StateVector& b);

/// gap(X?) for the question along d: the cosine projection v . d.
double gap_along(const BlochState& state, const Direction& d);

/// |<phi|psi>|^2 / (|phi|^2 |psi|^2) = (1 + cos theta) / 2.
double born_probability(const StateVector& psi, const StateVector& phi);

BlochState bloch_from_state(const StateVector& psi);
StateVector state_from_bloch(const Direction& d);

/// Addition of points with an angle: the point on the great circle of
/// symmetric points reached from the shortest-arc midpoint; phi = 0 is the
/// midpoint, phi = pi its antipode, and the parametrization is the one under
/// which phi coincides with arg<psi1|psi2> for Hilbert addition.
Direction add_with_angle(const Direction& p1, const Direction& p2, double phi);

/// bloch(psi1 + psi2); throws if it disagrees with
/// add_with_angle(P1, P2, arg<psi1|psi2>) beyond 1e-9.
Direction hilbert_add_as_geometry(const StateVector& psi1, const StateVector& psi2);

/// Raise-all-then-give: the posterior is the pure state along +-d regardless
/// of the prior.
BlochState measure(const BlochState& state, const Direction& d, Answer ans);

/// Draws the answer with P(Yes) = (1 + v . d) / 2 from the seeded generator.
std::pair<Answer, BlochState> sample_measure(const BlochState& state, const Direction& d,
                                             std::uint64_t seed);

}  // namespace questions

#endif
