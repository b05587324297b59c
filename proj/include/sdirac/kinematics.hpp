#pragma once

#include <complex>
#include <optional>
#include <string>

#include "sdirac/threevector.hpp"

namespace sdirac {

// The preferred inertial frame in which GGT time is defined and spacelike
// particles have non-negative energy. Physically the CMBR rest frame.
inline const std::string kPreferredFrame = "Sigma";
inline const std::string kBoostedFrame = "S";

// Spacetime point tagged with the frame its coordinates belong to.
// Operations refuse to mix events from different frames.
struct Event {
    double t = 0.0;
    ThreeVector r;
    std::string frame_tag = kPreferredFrame;
};

// Subluminal frame velocity in units of c. All boosts satisfy |v| < 1.
class BoostVelocity {
public:
    explicit BoostVelocity(const ThreeVector& v);
    static BoostVelocity along_x(double vx) { return BoostVelocity({vx, 0.0, 0.0}); }

    const ThreeVector& vec() const { return v_; }
    double speed() const { return speed_; }
    double gamma() const { return gamma_; }
    // Unit boost axis; arbitrary (x) for the identity boost.
    ThreeVector axis() const;

private:
    ThreeVector v_;
    double speed_;
    double gamma_;
};

// (E, p, m_s) with p^2 c^2 - E^2 = m_s^2 c^4. E may be negative in
// non-preferred frames. Validated on construction.
class SpacelikeFourMomentum {
public:
    SpacelikeFourMomentum(double E, const ThreeVector& p, double m_s);

    double energy() const { return e_; }
    const ThreeVector& momentum() const { return p_; }
    double mass() const { return m_s_; }

private:
    double e_;
    ThreeVector p_;
    double m_s_;
};

// Ordinary timelike four-momentum, E^2 - p^2 c^2 = m_o^2 c^4, E > 0.
class TimelikeFourMomentum {
public:
    TimelikeFourMomentum(double E, const ThreeVector& p, double m_o);

    double energy() const { return e_; }
    const ThreeVector& momentum() const { return p_; }
    double mass() const { return m_o_; }

private:
    double e_;
    ThreeVector p_;
    double m_o_;
};

// --- frame transformations ---------------------------------------------

// GGT map from the preferred frame Sigma to a frame moving with v:
// x_par = gamma (X_par - v T), x_perp = X_perp, t_tilde = T / gamma.
// Distant simultaneity is absolute: equal T implies equal t_tilde.
Event ggt_boost(const Event& e, const BoostVelocity& v);

// Inverse of ggt_boost; composes with it to the identity.
Event ggt_boost_inverse(const Event& e, const BoostVelocity& v);

// Standard Lorentz transformation. Works in any frame; the result is
// tagged with the input tag plus a prime.
Event lorentz_boost(const Event& e, const BoostVelocity& v);

// SR time interval from a GGT time interval and the displacement in the
// moving frame: dt = dt_tilde - v.dr / c^2.
double ggt_time_to_sr_time(double dt_tilde, const ThreeVector& dr, const BoostVelocity& v);

// Contravariant GGT transform of an energy-momentum pair:
// E_ggt = E / gamma, p_par -> gamma (p_par - v E), p_perp unchanged.
struct GgtMomentum {
    double energy; // GGT (contravariant) energy component
    ThreeVector p;
};
GgtMomentum ggt_boost_momentum(double E, const ThreeVector& p, const BoostVelocity& v);

// Dual of the time map for momenta: the SR energy recovered from GGT
// components, E_sr = E_ggt - v.p. Together with ggt_boost_momentum this
// reproduces the standard Lorentz-transformed (E, p).
double ggt_momentum_to_sr_energy(const GgtMomentum& gm, const BoostVelocity& v);

enum class IntervalKind { timelike, lightlike, spacelike };

struct IntervalResult {
    double value; // c^2 dt^2 - |dr|^2
    IntervalKind kind;
};

// Invariant interval between two events of the same frame.
IntervalResult interval(const Event& e1, const Event& e2);

// --- dispersion and four-momenta ----------------------------------------

enum class DispersionRegime { propagating, threshold, evanescent };

// E_pm = +-sqrt(p^2 - m_s^2) as complex numbers: real for |p| > m_s c,
// zero at threshold, +-i|Im E| in the evanescent regime |p| < m_s c.
struct DispersionResult {
    DispersionRegime regime;
    std::complex<double> e_plus;
    std::complex<double> e_minus;
};

DispersionResult dispersion_energy(const ThreeVector& p, double m_s);
DispersionResult dispersion_energy(double p_mag, double m_s);

// u_s = |p| c^2 / E in units of c. Greater than 1 for positive-energy
// spacelike states; +-infinity at E = 0 (the |p| = m_s c limit).
double speed_from_momentum(const SpacelikeFourMomentum& pm);

// Preferred-frame momentum of a tachyon moving with speed u_s > 1 along n.
SpacelikeFourMomentum spacelike_momentum_from_speed(double u_s, const ThreeVector& n, double m_s);

// Infinite-speed limits of momentum and energy in a frame moving with v:
// p_inf = m_s c n / sqrt(1 - (n.v)^2), E_inf = -m_s c^2 (n.v) / sqrt(1 - (n.v)^2).
// E_inf is odd under n -> -n and vanishes in the preferred frame.
struct AsymptoticLimits {
    ThreeVector p_inf;
    double e_inf;
};

AsymptoticLimits asymptotic_limits(const ThreeVector& n, const BoostVelocity& v, double m_s);

// Minimal boost speed beyond which the 1D momentum of a particle moving
// with speed u changes sign. Exists only for subluminal u: a boost can
// never reverse the momentum of a lightlike or spacelike particle.
std::optional<double> momentum_flip_boost(double u);

// Standard relativistic four-momentum of a subluminal particle.
TimelikeFourMomentum timelike_four_momentum(double u, const ThreeVector& n, double m_o);

} // namespace sdirac
