#pragma once

#include "sdirac/matrix4.hpp"
#include "sdirac/planewave.hpp"

namespace sdirac {

// Weyl-representation spinor pair: (xi, eta) = ((phi + chi)/sqrt2,
// (phi - chi)/sqrt2). The map is a real orthogonal mixing, so it preserves
// the sum of squared magnitudes.
struct WeylPair {
    Vec2c xi{};
    Vec2c eta{};
};

WeylPair to_weyl(const Bispinor& psi);
Bispinor from_weyl(const WeylPair& w);

// The change-of-representation matrix W with (xi, eta) = W (phi, chi);
// W is Hermitian and its own inverse.
Matrix4c weyl_transform();

// rho = xi^dag xi - eta^dag eta; j_i = xi^dag sigma_i xi + eta^dag sigma_i eta.
// Agrees with density_current(from_weyl(w)).
DensityCurrent weyl_density_current(const WeylPair& w);

// Pointwise time derivatives for a 1D field along z, given the spatial
// derivatives at the same point:
//   d xi /dt = -s c sigma3 (d xi /dz) + i m_s c^2 eta / hbar
//   d eta/dt = +s c sigma3 (d eta/dz) - i m_s c^2 xi  / hbar
// with s the species momentum sign; the mass term is the only coupling.
struct WeylRhs {
    Vec2c dxi_dt{};
    Vec2c deta_dt{};
};

WeylRhs coupled_weyl_rhs(const WeylPair& w, const WeylPair& dw_dz, double m_s, Species species);

// Decoupled massless limit: d xi/dt = -+ c sigma3 (d xi/dz), minus for the
// antineutrino equation and plus for the neutrino one.
Vec2c massless_weyl_rhs(const Vec2c& dxi_dz, Species species);

} // namespace sdirac
