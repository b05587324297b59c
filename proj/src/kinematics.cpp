#include "sdirac/kinematics.hpp"

#include <cmath>
#include <limits>

#include "sdirac/errors.hpp"

namespace sdirac {

namespace {

// Split r into components parallel and perpendicular to the boost axis.
struct Split {
    double par;
    ThreeVector perp;
};

Split split_along(const ThreeVector& r, const ThreeVector& axis) {
    const double par = r.dot(axis);
    return {par, r - axis * par};
}

void check_same_frame(const Event& a, const Event& b, const char* op) {
    if (a.frame_tag != b.frame_tag)
        throw DomainError(std::string(op) + ": events are in different frames ('" +
                          a.frame_tag + "' vs '" + b.frame_tag + "')");
}

} // namespace

BoostVelocity::BoostVelocity(const ThreeVector& v) : v_(v), speed_(v.norm()) {
    if (speed_ >= 1.0)
        throw DomainError("BoostVelocity: |v| must be < c (got " + std::to_string(speed_) + ")");
    gamma_ = 1.0 / std::sqrt(1.0 - speed_ * speed_);
}

ThreeVector BoostVelocity::axis() const {
    if (speed_ == 0.0) return {1.0, 0.0, 0.0};
    return v_ / speed_;
}

SpacelikeFourMomentum::SpacelikeFourMomentum(double E, const ThreeVector& p, double m_s)
    : e_(E), p_(p), m_s_(m_s) {
    if (!(m_s > 0.0)) throw DomainError("SpacelikeFourMomentum: m_s must be > 0");
    const double lhs = p.norm_sq() - E * E;
    const double rhs = m_s * m_s;
    if (std::abs(lhs - rhs) > 1e-10 * std::max(rhs, std::max(p.norm_sq(), E * E)))
        throw DomainError("SpacelikeFourMomentum: p^2 - E^2 != m_s^2 (not on the spacelike shell)");
}

TimelikeFourMomentum::TimelikeFourMomentum(double E, const ThreeVector& p, double m_o)
    : e_(E), p_(p), m_o_(m_o) {
    if (!(m_o > 0.0)) throw DomainError("TimelikeFourMomentum: m_o must be > 0");
    if (!(E > 0.0)) throw DomainError("TimelikeFourMomentum: E must be > 0");
    const double lhs = E * E - p.norm_sq();
    const double rhs = m_o * m_o;
    if (std::abs(lhs - rhs) > 1e-10 * std::max(rhs, std::max(p.norm_sq(), E * E)))
        throw DomainError("TimelikeFourMomentum: E^2 - p^2 != m_o^2 (not on the mass shell)");
}

Event ggt_boost(const Event& e, const BoostVelocity& v) {
    if (e.frame_tag != kPreferredFrame)
        throw DomainError("ggt_boost: GGT is defined from the preferred frame '" +
                          kPreferredFrame + "', event is in '" + e.frame_tag + "'");
    const ThreeVector axis = v.axis();
    const auto [par, perp] = split_along(e.r, axis);
    const double gamma = v.gamma();
    const double x_par = gamma * (par - v.speed() * e.t);
    return {e.t / gamma, perp + axis * x_par, kBoostedFrame};
}

Event ggt_boost_inverse(const Event& e, const BoostVelocity& v) {
    if (e.frame_tag != kBoostedFrame)
        throw DomainError("ggt_boost_inverse: expected an event in frame '" + kBoostedFrame +
                          "', got '" + e.frame_tag + "'");
    const ThreeVector axis = v.axis();
    const auto [par, perp] = split_along(e.r, axis);
    const double gamma = v.gamma();
    const double big_t = gamma * e.t;
    const double big_x = par / gamma + v.speed() * big_t;
    return {big_t, perp + axis * big_x, kPreferredFrame};
}

Event lorentz_boost(const Event& e, const BoostVelocity& v) {
    const ThreeVector axis = v.axis();
    const auto [par, perp] = split_along(e.r, axis);
    const double gamma = v.gamma();
    const double t = gamma * (e.t - v.speed() * par);
    const double x_par = gamma * (par - v.speed() * e.t);
    return {t, perp + axis * x_par, e.frame_tag + "'"};
}

double ggt_time_to_sr_time(double dt_tilde, const ThreeVector& dr, const BoostVelocity& v) {
    return dt_tilde - v.vec().dot(dr);
}

GgtMomentum ggt_boost_momentum(double E, const ThreeVector& p, const BoostVelocity& v) {
    const ThreeVector axis = v.axis();
    const auto [par, perp] = split_along(p, axis);
    const double gamma = v.gamma();
    return {E / gamma, perp + axis * (gamma * (par - v.speed() * E))};
}

double ggt_momentum_to_sr_energy(const GgtMomentum& gm, const BoostVelocity& v) {
    return gm.energy - v.vec().dot(gm.p);
}

IntervalResult interval(const Event& e1, const Event& e2) {
    check_same_frame(e1, e2, "interval");
    const double dt = e1.t - e2.t;
    const ThreeVector dr = e1.r - e2.r;
    const double s2 = dt * dt - dr.norm_sq();
    const double scale = dt * dt + dr.norm_sq();
    IntervalKind kind;
    if (std::abs(s2) <= 1e-12 * std::max(scale, 1.0))
        kind = IntervalKind::lightlike;
    else
        kind = s2 > 0.0 ? IntervalKind::timelike : IntervalKind::spacelike;
    return {s2, kind};
}

DispersionResult dispersion_energy(double p_mag, double m_s) {
    if (!(m_s > 0.0)) throw DomainError("dispersion_energy: m_s must be > 0");
    p_mag = std::abs(p_mag);
    const double d = p_mag * p_mag - m_s * m_s;
    if (d > 0.0) {
        const double e = std::sqrt(d);
        return {DispersionRegime::propagating, {e, 0.0}, {-e, 0.0}};
    }
    if (d == 0.0) return {DispersionRegime::threshold, {0.0, 0.0}, {0.0, 0.0}};
    const double mu = std::sqrt(-d);
    return {DispersionRegime::evanescent, {0.0, mu}, {0.0, -mu}};
}

DispersionResult dispersion_energy(const ThreeVector& p, double m_s) {
    return dispersion_energy(p.norm(), m_s);
}

double speed_from_momentum(const SpacelikeFourMomentum& pm) {
    if (pm.energy() == 0.0) return std::numeric_limits<double>::infinity();
    return pm.momentum().norm() / pm.energy();
}

SpacelikeFourMomentum spacelike_momentum_from_speed(double u_s, const ThreeVector& n, double m_s) {
    if (!(u_s > 1.0)) throw DomainError("spacelike_momentum_from_speed: u_s must be > 1 (in units of c)");
    if (!(m_s > 0.0)) throw DomainError("spacelike_momentum_from_speed: m_s must be > 0");
    const ThreeVector nhat = n.unit();
    const double root = std::sqrt(u_s * u_s - 1.0);
    return {m_s / root, nhat * (m_s * u_s / root), m_s};
}

AsymptoticLimits asymptotic_limits(const ThreeVector& n, const BoostVelocity& v, double m_s) {
    if (!(m_s > 0.0)) throw DomainError("asymptotic_limits: m_s must be > 0");
    const ThreeVector nhat = n.unit();
    const double nv = nhat.dot(v.vec());
    const double factor = 1.0 / std::sqrt(1.0 - nv * nv);
    return {nhat * (m_s * factor), -m_s * nv * factor};
}

std::optional<double> momentum_flip_boost(double u) {
    if (!(u > 0.0)) throw DomainError("momentum_flip_boost: u must be > 0");
    // p' = gamma_v (p - v E); for a timelike particle p/E = u so the sign
    // flips past v = u. For u >= 1 the flip threshold is not subluminal.
    if (u < 1.0) return u;
    return std::nullopt;
}

TimelikeFourMomentum timelike_four_momentum(double u, const ThreeVector& n, double m_o) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("timelike_four_momentum: u must be in [0, 1)");
    if (!(m_o > 0.0)) throw DomainError("timelike_four_momentum: m_o must be > 0");
    const double gamma = 1.0 / std::sqrt(1.0 - u * u);
    if (u == 0.0) return {m_o, {0.0, 0.0, 0.0}, m_o};
    return {gamma * m_o, n.unit() * (gamma * m_o * u), m_o};
}

} // namespace sdirac
