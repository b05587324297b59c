#include "sdirac/planewave.hpp"

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/spinor_algebra.hpp"

namespace sdirac {

namespace {

void check_sign(int value, const char* what) {
    if (value != 1 && value != -1) throw DomainError(std::string(what) + " must be +1 or -1");
}

// Requires m_s > 0 and classifies |p| against the m_s c threshold.
void check_propagating(double p, double m_s, const char* where) {
    const std::string prefix(where);
    if (!(m_s > 0.0))
        throw DomainError(prefix + ": m_s must be > 0 (the massless case has no " +
                          "finite normalization; use the Weyl form)");
    const double kappa = std::abs(p);
    if (kappa < m_s) throw EvanescentError(prefix + ": |p| < m_s c, energy is imaginary");
    if (kappa == m_s) throw ThresholdError(prefix + ": |p| = m_s c, E = 0 and A is undefined");
}

} // namespace

const char* species_name(Species s) {
    return s == Species::antineutrino ? "antineutrino" : "neutrino";
}

Species species_from_name(std::string_view name) {
    if (name == "antineutrino" || name == "nubar") return Species::antineutrino;
    if (name == "neutrino" || name == "nu") return Species::neutrino;
    throw DomainError("unknown species name: " + std::string(name));
}

double norm(const Bispinor& b) { return norm(b.c); }

double chi_from_phi(double p, double energy, double m_s) {
    if (energy == 0.0)
        throw ThresholdError("chi_from_phi: E = 0 at |p| = m_s c, the ratio is singular");
    return (p - m_s) / energy;
}

DensityCurrent density_current(const Bispinor& psi) {
    const Vec2c phi = psi.phi();
    const Vec2c chi = psi.chi();
    // gamma5 alpha_i = diag(sigma_i, sigma_i), so j_i = phi^dag sigma_i phi
    // + chi^dag sigma_i chi; rho = 2 Re(phi^dag chi).
    DensityCurrent dc;
    dc.rho = 2.0 * std::real(inner(phi, chi));
    double j[3];
    for (int i = 1; i <= 3; ++i) {
        const Matrix2c s = pauli(i);
        j[i - 1] = std::real(inner(phi, s * phi) + inner(chi, s * chi));
    }
    dc.j = {j[0], j[1], j[2]};
    return dc;
}

BilinearValues bilinears(const Bispinor& psi) {
    const Vec2c phi = psi.phi();
    const Vec2c chi = psi.chi();
    BilinearValues b;
    b.scalar = std::real(inner(phi, phi) - inner(chi, chi));
    // psi^dag beta_s psi = phi^dag chi - chi^dag phi = 2i Im(phi^dag chi)
    b.pseudoscalar = 2.0 * std::imag(inner(phi, chi));
    return b;
}

PlaneWaveSolution plane_wave_solution(double p, double m_s, int helicity, int energy_sign,
                                      Species species) {
    check_sign(helicity, "helicity");
    check_sign(energy_sign, "energy_sign");
    check_propagating(p, m_s, "plane_wave_solution");

    const double kappa = std::abs(p);
    const double e_abs = std::sqrt((kappa - m_s) * (kappa + m_s));
    const double a = (kappa - m_s) / e_abs;
    const double n = std::sqrt((kappa + m_s) / (2.0 * m_s));

    const ThreeVector phat{0.0, 0.0, p >= 0.0 ? 1.0 : -1.0};
    const Vec2c w = helicity_spinor(phat, helicity);
    const int s = momentum_sign_of(species);
    const double eps = static_cast<double>(energy_sign);

    // The block coupling (s h kappa + m) fixes which half carries the A
    // factor: s h = +1 puts it on chi, s h = -1 on phi with a sign flip.
    Bispinor b;
    if (s * helicity == 1)
        b = Bispinor::from_halves(c64(n) * w, c64(eps * a * n) * w);
    else
        b = Bispinor::from_halves(c64(-eps * a * n) * w, c64(n) * w);

    return {p, m_s, eps * e_abs, helicity, energy_sign, species, b, a, n};
}

std::array<PlaneWaveSolution, 4> bispinor_basis(double p, double m_s) {
    if (!(p > 0.0)) throw DomainError("bispinor_basis: p must be > 0 (closed forms are for +z)");
    const Species nubar = Species::antineutrino;
    return {plane_wave_solution(p, m_s, +1, +1, nubar), plane_wave_solution(p, m_s, -1, +1, nubar),
            plane_wave_solution(p, m_s, +1, -1, nubar), plane_wave_solution(p, m_s, -1, -1, nubar)};
}

PlaneWaveSolution physical_selection(double p, double m_s, Species species) {
    if (!(p > 0.0)) throw DomainError("physical_selection: p must be > 0");
    check_propagating(p, m_s, "physical_selection");
    const int s = momentum_sign_of(species);
    const PlaneWaveSolution selected = plane_wave_solution(p, m_s, s, +1, species);
    const PlaneWaveSolution rejected = plane_wave_solution(p, m_s, -s, +1, species);
    if (!(density_current(selected.bispinor).rho > 0.0) ||
        !(density_current(rejected.bispinor).rho < 0.0))
        throw std::logic_error("physical_selection: density signs violate the selection rule");
    return selected;
}

Matrix4c helicity_operator(const ThreeVector& direction) {
    const Matrix2c s = pauli_dot(direction.unit());
    return Matrix4c::from_blocks(s, {}, {}, s);
}

Matrix4c spin_rotation(const ThreeVector& direction) {
    const Vec2c up = helicity_spinor(direction, +1);
    const Vec2c down = helicity_spinor(direction, -1);
    Matrix2c u;
    u(0, 0) = up[0];
    u(1, 0) = up[1];
    u(0, 1) = down[0];
    u(1, 1) = down[1];
    return Matrix4c::from_blocks(u, {}, {}, u);
}

} // namespace sdirac
