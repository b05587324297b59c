#pragma once

#include <array>
#include <string_view>

#include "sdirac/matrix4.hpp"
#include "sdirac/threevector.hpp"

namespace sdirac {

// Which first-order equation a state solves. The two differ only in the
// sign carried by the momentum operator: +1 for the antineutrino equation,
// -1 for the neutrino one.
enum class Species { antineutrino, neutrino };

constexpr int momentum_sign_of(Species s) { return s == Species::antineutrino ? +1 : -1; }

const char* species_name(Species s);               // "antineutrino" / "neutrino"
Species species_from_name(std::string_view name);  // accepts nubar/nu aliases

// Four complex components grouped as upper spinor phi and lower spinor chi.
struct Bispinor {
    Vec4c c{};

    Vec2c phi() const { return {c[0], c[1]}; }
    Vec2c chi() const { return {c[2], c[3]}; }

    static Bispinor from_halves(const Vec2c& phi, const Vec2c& chi) {
        return {{phi[0], phi[1], chi[0], chi[1]}};
    }
};

double norm(const Bispinor& b);

// chi = ratio * phi for a helicity +1 plane wave along +z:
// ratio = (c p - m_s c^2)/E. Throws ThresholdError at E = 0.
double chi_from_phi(double p, double energy, double m_s);

// rho = psi^dag gamma5 psi, j_i = psi^dag gamma5 alpha_i psi. Both are real
// for any bispinor (the forms are Hermitian). rho is indefinite.
struct DensityCurrent {
    double rho;
    ThreeVector j;
};

DensityCurrent density_current(const Bispinor& psi);

// scalar = psi^dag beta psi. The pseudoscalar form psi^dag beta_s psi is
// anti-Hermitian, hence purely imaginary; the imaginary part is returned.
struct BilinearValues {
    double scalar;
    double pseudoscalar;
};

BilinearValues bilinears(const Bispinor& psi);

struct PlaneWaveSolution {
    double p;             // momentum along z in eV, may be negative
    double m_s;           // eV
    double energy;        // signed, eV
    int helicity;         // sigma.phat eigenvalue, phat = sign(p) z
    int energy_sign;      // +1 or -1
    Species species;
    Bispinor bispinor;
    double a_component;   // (c|p| - m_s c^2)/|E|
    double normalization; // sqrt((|p| + m_s c)/(2 m_s c))
};

// Closed-form eigenstate of the chosen equation for momentum p along z.
// Requires m_s > 0 and |p| > m_s c (real nonzero energy); below threshold
// throws EvanescentError, at threshold ThresholdError.
PlaneWaveSolution plane_wave_solution(double p, double m_s, int helicity, int energy_sign,
                                      Species species);

// The four z-axis antineutrino-equation states for p > m_s c:
//   psi1 = N(1, 0, A, 0), psi2 = N(0, -A, 0, 1)   (positive energy)
//   psi3 = N(1, 0, -A, 0), psi4 = N(0, A, 0, 1)   (negative energy)
// with A = (cp - m_s c^2)/|E| and N = sqrt((p + m_s c)/(2 m_s c)).
std::array<PlaneWaveSolution, 4> bispinor_basis(double p, double m_s);

// The unique positive-energy state with rho > 0: helicity +1 (right-handed)
// for the antineutrino equation, -1 (left-handed) for the neutrino one.
// Also verifies the complementary positive-energy state has rho < 0.
PlaneWaveSolution physical_selection(double p, double m_s, Species species);

// sigma.nhat duplicated on both spinor halves.
Matrix4c helicity_operator(const ThreeVector& direction);

// diag(U, U) with U the SU(2) rotation taking the z-axis helicity spinors to
// those of `direction`. Conjugating a z-axis solution by it gives the
// equal-helicity solution propagating along `direction`.
Matrix4c spin_rotation(const ThreeVector& direction);

} // namespace sdirac
