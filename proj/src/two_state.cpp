#include "questions/two_state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace questions {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

namespace {

Vec3 scale(double c, const Vec3& v) { return {c * v.x, c * v.y, c * v.z}; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

Vec3 normalize(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return scale(1.0 / n, v);
}

Vec3 rotate(const Vec3& v, const Vec3& unit_axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec3 k = unit_axis;
    return add(add(scale(c, v), scale(s, cross(k, v))), scale(dot(k, v) * (1.0 - c), k));
}

}  // namespace

Direction::Direction(Vec3 v) : v_(v) {
    const double n = norm(v_);
    if (std::abs(n - 1.0) > 1e-9) {
        if (n == 0.0) throw std::invalid_argument("direction cannot be zero");
        v_ = scale(1.0 / n, v_);
    }
}

Direction Direction::spherical(double theta, double phi) {
    return Direction({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                      std::cos(theta)});
}

BlochState::BlochState(Vec3 v) : v_(v) {
    if (norm(v_) > 1.0 + 1e-12)
        throw std::invalid_argument("Bloch vector length exceeds 1");
}

bool BlochState::is_pure(double tol) const { return std::abs(norm(v_) - 1.0) <= tol; }

StateVector::StateVector(std::complex<double> a0, std::complex<double> a1)
    : amp0(a0), amp1(a1) {
    if (std::abs(a0) == 0.0 && std::abs(a1) == 0.0)
        throw std::invalid_argument("state vector cannot be zero");
}

StateVector StateVector::normalized() const {
    const double n = std::sqrt(std::norm(amp0) + std::norm(amp1));
    return StateVector(amp0 / n, amp1 / n);
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

double gap_along(const BlochState& state, const Direction& d) {
    return dot(state.vec(), d.vec());
}

double born_probability(const StateVector& psi, const StateVector& phi) {
    const double npsi = std::norm(psi.amp0) + std::norm(psi.amp1);
    const double nphi = std::norm(phi.amp0) + std::norm(phi.amp1);
    return std::norm(inner(phi, psi)) / (npsi * nphi);
}

BlochState bloch_from_state(const StateVector& psi) {
    const double n = std::norm(psi.amp0) + std::norm(psi.amp1);
    const std::complex<double> c = std::conj(psi.amp0) * psi.amp1;
    return BlochState({2.0 * c.real() / n, 2.0 * c.imag() / n,
                       (std::norm(psi.amp0) - std::norm(psi.amp1)) / n});
}

StateVector state_from_bloch(const Direction& d) {
    const Vec3& v = d.vec();
    const double theta = std::acos(std::clamp(v.z, -1.0, 1.0));
    const double phi = std::atan2(v.y, v.x);
    return StateVector(std::cos(theta / 2.0),
                       std::sin(theta / 2.0) * std::polar(1.0, phi));
}

Direction add_with_angle(const Direction& p1, const Direction& p2, double phi) {
    const Vec3 sum = add(p1.vec(), p2.vec());
    const Vec3 diff = add(p1.vec(), scale(-1.0, p2.vec()));
    if (norm(sum) < 1e-9 || norm(diff) < 1e-9)
        throw std::invalid_argument("degenerate pair: coincident or antipodal points");
    const Vec3 midpoint = normalize(sum);
    const Vec3 axis = normalize(diff);
    // Arc angle along the circle of symmetric points at which the Hilbert sum
    // of states with relative phase phi lands: with theta the angle between
    // the points, mu = arg((cos(theta/2) + cos phi) + i sin(theta/2) sin phi).
    const double cos_theta = std::clamp(dot(p1.vec(), p2.vec()), -1.0, 1.0);
    const double half = 0.5 * std::acos(cos_theta);
    const double mu =
        std::atan2(std::sin(half) * std::sin(phi), std::cos(half) + std::cos(phi));
    return Direction(rotate(midpoint, axis, mu));
}

Direction hilbert_add_as_geometry(const StateVector& psi1, const StateVector& psi2) {
    const StateVector n1 = psi1.normalized();
    const StateVector n2 = psi2.normalized();
    const std::complex<double> ip = inner(n1, n2);
    if (std::abs(ip) < 1e-9)
        throw std::invalid_argument("orthogonal states have no defined sum direction");
    if (std::abs(std::abs(ip) - 1.0) < 1e-12)
        throw std::invalid_argument("parallel states: sum direction is degenerate");
    const StateVector sum(n1.amp0 + n2.amp0, n1.amp1 + n2.amp1);
    const Vec3 direct = bloch_from_state(sum).vec();
    const Direction geometric = add_with_angle(Direction(bloch_from_state(n1).vec()),
                                               Direction(bloch_from_state(n2).vec()),
                                               std::arg(ip));
    const Vec3 g = geometric.vec();
    const double dist = norm({direct.x - g.x, direct.y - g.y, direct.z - g.z});
    if (dist > 1e-9)
        throw std::domain_error("Hilbert addition disagrees with the geometric route");
    return Direction(direct);
}

BlochState measure(const BlochState& state, const Direction& d, Answer ans) {
    (void)state;  // raise-all erases the prior
    return BlochState::pure(ans == Answer::Yes ? d : -d);
}

std::pair<Answer, BlochState> sample_measure(const BlochState& state, const Direction& d,
                                             std::uint64_t seed) {
    const double p_yes = 0.5 * (1.0 + gap_along(state, d));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Answer ans = unit(rng) < p_yes ? Answer::Yes : Answer::No;
    return {ans, measure(state, d, ans)};
}

}  // namespace questions
