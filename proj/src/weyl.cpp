#include "sdirac/weyl.hpp"

#include <cmath>

#include "sdirac/spinor_algebra.hpp"

namespace sdirac {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

WeylPair to_weyl(const Bispinor& psi) {
    const Vec2c phi = psi.phi();
    const Vec2c chi = psi.chi();
    return {c64(kInvSqrt2) * (phi + chi), c64(kInvSqrt2) * (phi - chi)};
}

Bispinor from_weyl(const WeylPair& w) {
    return Bispinor::from_halves(c64(kInvSqrt2) * (w.xi + w.eta),
                                 c64(kInvSqrt2) * (w.xi - w.eta));
}

Matrix4c weyl_transform() {
    const Matrix2c h = Matrix2c::identity() * c64(kInvSqrt2);
    return Matrix4c::from_blocks(h, h, h, h * c64(-1.0));
}

DensityCurrent weyl_density_current(const WeylPair& w) {
    DensityCurrent dc;
    dc.rho = std::real(inner(w.xi, w.xi) - inner(w.eta, w.eta));
    double j[3];
    for (int i = 1; i <= 3; ++i) {
        const Matrix2c s = pauli(i);
        j[i - 1] = std::real(inner(w.xi, s * w.xi) + inner(w.eta, s * w.eta));
    }
    dc.j = {j[0], j[1], j[2]};
    return dc;
}

WeylRhs coupled_weyl_rhs(const WeylPair& w, const WeylPair& dw_dz, double m_s, Species species) {
    const c64 s(static_cast<double>(momentum_sign_of(species)));
    const c64 im(0.0, m_s);
    const Matrix2c sigma3 = pauli(3);
    WeylRhs rhs;
    rhs.dxi_dt = c64(-1.0) * s * (sigma3 * dw_dz.xi) + im * w.eta;
    rhs.deta_dt = s * (sigma3 * dw_dz.eta) - im * w.xi;
    return rhs;
}

Vec2c massless_weyl_rhs(const Vec2c& dxi_dz, Species species) {
    const c64 s(static_cast<double>(-momentum_sign_of(species)));
    return s * (pauli(3) * dxi_dz);
}

} // namespace sdirac
