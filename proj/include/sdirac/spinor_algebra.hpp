#pragma once

#include <array>
#include <string>
#include <vector>

#include "sdirac/matrix4.hpp"
#include "sdirac/threevector.hpp"

namespace sdirac {

// 2x2 Pauli matrices, standard convention: sigma3 diagonal (+1, -1),
// sigma1 real off-diagonal, sigma2 imaginary.
Matrix2c pauli(int i);
Matrix2c pauli_dot(const ThreeVector& p); // sigma . p

// Normalized eigenspinor of sigma.nhat with eigenvalue helicity (+1 or -1).
// direction need not be normalized; the zero vector means +z.
Vec2c helicity_spinor(const ThreeVector& direction, int helicity);

// The seven matrices of the spacelike Dirac algebra. alpha_i have Pauli
// off-diagonal blocks; beta_s = [[0, I], [-I, 0]] is anti-Hermitian and
// squares to -1; beta and gamma5 are the standard Dirac companions with
// beta_s = beta gamma5.
struct MatrixBasis {
    Matrix4c alpha1, alpha2, alpha3;
    Matrix4c beta, beta_s, gamma5;
    Matrix4c identity;

    const Matrix4c& alpha(int i) const;
};

MatrixBasis build_basis();

// AB + BA.
Matrix4c anticommutator(const Matrix4c& a, const Matrix4c& b);

// One checked identity of the algebra.
struct AlgebraCheck {
    std::string identity;
    double max_deviation;
    bool pass;
};

struct AlgebraReport {
    std::vector<AlgebraCheck> checks;
    bool all_pass() const;
};

// Checks every anticommutation identity, beta_s^2 = -1, beta_s = beta gamma5,
// and the Hermiticity pattern of the basis. All deviations are exactly zero
// for the canonical basis (the entries are small integers times i).
AlgebraReport verify_algebra(const MatrixBasis& basis);

// H = momentum_sign * c (alpha . p) + beta_s m_s c^2. momentum_sign is +1
// for the antineutrino equation and -1 for the neutrino one. H is not
// Hermitian for m_s > 0, but gamma5 H^dag gamma5 = H always.
struct HamiltonianMatrix {
    Matrix4c matrix;
    ThreeVector p;
    double m_s;
    int momentum_sign;
};

HamiltonianMatrix hamiltonian(const ThreeVector& p, double m_s, int momentum_sign);

struct Eigenpair {
    c64 eigenvalue;
    Vec4c eigenvector; // unit norm
    int helicity;      // sigma.phat eigenvalue of both spinor halves
};

// All four eigenpairs of H, in the helicity basis: order is
// (h=+1, E+), (h=+1, E-), (h=-1, E+), (h=-1, E-). Eigenvalues are
// +-sqrt(p^2 - m_s^2) for |p| >= m_s c and a conjugate-imaginary quartet
// below threshold. At |p| = m_s c the matrix is defective; the two slots
// of each block then share the block's kernel vector, and the four
// vectors span the 2D kernel.
std::array<Eigenpair, 4> eigen_solve(const HamiltonianMatrix& h);

// Generic fallback: an eigenvector of (m - lambda I) via Gaussian
// elimination on the nullspace. Used to cross-check the closed form.
Vec4c nullspace_vector(const Matrix4c& m, c64 lambda);

} // namespace sdirac
