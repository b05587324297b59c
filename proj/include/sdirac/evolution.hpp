#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdirac/errors.hpp"
#include "sdirac/matrix4.hpp"
#include "sdirac/planewave.hpp"

// 1+1D lattice evolution of the spacelike first-order equation in natural
// units (hbar = c = 1): energies, momenta and masses in eV, lengths in
// hbar c/eV, times in hbar/eV. Not thread-safe: the FFT plan cache behind
// the spectral operations is shared module state.

namespace sdirac {

inline constexpr double kDefaultAmplitudeCap = 1e12;

// Periodic 1D lattice. The power-of-two point count keeps FFT sizes exact.
class Grid1D {
  public:
    Grid1D(int n_points, double dz); // n_points a power of two >= 8, dz > 0

    int n_points() const { return n_points_; }
    double dz() const { return dz_; }
    double length() const { return n_points_ * dz_; }
    double z(int site) const { return site * dz_; }

    // Wavenumber of FFT bin b in [0, n): k = 2 pi m/(n dz) with the signed
    // mode index m in [-n/2, n/2).
    double wavenumber(int bin) const;
    int signed_mode(int bin) const;
    // Signed mode index in [-n/2, n/2) -> FFT bin.
    int bin_of_mode(int mode_index) const;

    bool operator==(const Grid1D& other) const {
        return n_points_ == other.n_points_ && dz_ == other.dz_;
    }

  private:
    int n_points_;
    double dz_;
};

enum class Representation { dirac, weyl };

const char* representation_name(Representation r);

// A four-component field sampled on the grid, component-major:
// values[c][site]. In the dirac representation components 0..1 are phi and
// 2..3 chi; in the weyl representation 0..1 are xi and 2..3 eta.
struct FieldState {
    Grid1D grid{8, 1.0};
    double time = 0.0;
    std::array<std::vector<c64>, 4> values;
    double m_s = 0.0; // >= 0; the massless case is legal on the lattice
    int momentum_sign = +1;
    Representation representation = Representation::dirac;

    Vec4c site(int j) const {
        return {values[0][j], values[1][j], values[2][j], values[3][j]};
    }
    void set_site(int j, const Vec4c& v) {
        for (int c = 0; c < 4; ++c) values[c][j] = v[c];
    }
};

// Fourier coefficients per component: field_j = sum_b coef[c][b] e^{i k_b z_j}.
std::array<std::vector<c64>, 4> spectrum(const FieldState& state);

FieldState state_from_spectrum(const Grid1D& grid, const std::array<std::vector<c64>, 4>& coefs,
                               double m_s, int momentum_sign, Representation representation,
                               double time = 0.0);

// Single-mode eigenstate field: branch 1..4 = (helicity, energy sign)
// (+,+), (-,+), (+,-), (-,-), helicity measured along sign(k) z. Requires
// m_s > 0 and a propagating mode (|k| > m_s); evanescent requests throw.
FieldState init_plane_wave(const Grid1D& grid, int mode_index, int branch, double m_s,
                           int momentum_sign);

// Arbitrary single-mode field (no propagating-regime check): every site
// carries amplitude * e^{ikz}. The k = 0 evanescent scenarios start here.
FieldState init_mode_spinor(const Grid1D& grid, int mode_index, const Vec4c& amplitude,
                            double m_s, int momentum_sign,
                            Representation representation = Representation::dirac);

// Gaussian momentum envelope exp(-(k - k0)^2 width^2 / 4) around k0, each
// mode dressed with its branch eigenvector and the packet centered at
// length/4. width is the position-space envelope scale (1/width the
// momentum-space standard deviation of the amplitude).
struct PacketInit {
    FieldState state;
    double evanescent_fraction; // |k| < m_s share of total spectral weight
};

PacketInit init_gaussian_packet(const Grid1D& grid, double k0, double width, int branch,
                                double m_s, int momentum_sign);

// Independent uniform complex site amplitudes in [-1, 1]^2, all components.
// Deterministic in the seed. Mixes propagating and evanescent content.
FieldState init_random(const Grid1D& grid, double m_s, int momentum_sign, std::uint64_t seed);

// Advances every Fourier mode by the exact propagator of its 4x4 mode
// Hamiltonian (exact for any dt). Propagating modes rotate phases;
// evanescent modes grow or decay hyperbolically. Throws BlowupError naming
// the offending modes if any coefficient magnitude would exceed the cap.
FieldState step_spectral(const FieldState& state, double dt,
                         double amplitude_cap = kDefaultAmplitudeCap);

// Classical RK4 with a central-difference spatial derivative; independent
// cross-check of the spectral path. dt must not exceed cfl_limit * dz/c.
FieldState step_rk4(const FieldState& state, double dt, double cfl_limit = 1.0);

// Q = sum_sites rho dz with the representation's density form. Conserved by
// the evolution (pseudo-Hermiticity), including evanescent content.
double charge(const FieldState& state);

// sum_sites psi^dag psi dz. NOT conserved when evanescent content is present.
double total_norm(const FieldState& state);

std::vector<double> density_profile(const FieldState& state);
// z-current carrying the momentum sign, so that d rho/dt + d j/dz = 0 holds
// for both equations.
std::vector<double> current_profile(const FieldState& state);

// Max-norm residual of the discrete continuity equation between two states
// one step apart: |(rho_after - rho_before)/dt + D_z j| with the current
// averaged between the two times and D_z the central difference.
double continuity_residual(const FieldState& before, const FieldState& after);

// Zeroes every Fourier mode with |k| < m_s. Idempotent; commutes with
// step_spectral on the retained modes.
FieldState project_propagating(const FieldState& state);

// Largest spectral coefficient magnitude among evanescent modes (0 if none).
double max_evanescent_amplitude(const FieldState& state);

// Representation changes, site by site. Charge, current and the evolution
// commute with these maps.
FieldState to_weyl_state(const FieldState& state);  // requires dirac input
FieldState to_dirac_state(const FieldState& state); // requires weyl input

// Circular-mean position of the |psi|^2 weight, in [0, length).
double centroid(const FieldState& state);

enum class Integrator { spectral, rk4 };
enum class EvanescentPolicy { warn, project, fail };

struct EvolveOptions {
    double dt = 1e-3;
    int steps = 0;
    Integrator integrator = Integrator::spectral;
    EvanescentPolicy policy = EvanescentPolicy::warn;
    double amplitude_cap = kDefaultAmplitudeCap;
    double cfl_limit = 1.0;
    int report_every = 1;
};

struct ReportRow {
    int step;
    double time;
    double charge;
    double norm;
    double continuity_residual;
    double max_evanescent_amp;
    double centroid;
    double centroid_speed; // between consecutive reported rows, units of c
};

struct EvolutionReport {
    std::vector<ReportRow> rows;

    static const char* csv_header();
    void write_csv(std::ostream& out) const;
    // Straight-line centroid speed between the first and last rows, with
    // periodic unwrapping accumulated row to row.
    double mean_centroid_speed(double box_length) const;
};

struct EvolveResult {
    FieldState final_state;
    EvolutionReport report;
};

// Runs `steps` steps from `initial`, reporting every report_every-th step
// (step 0 and the last step always included). Policy `project` removes
// evanescent modes up front; `fail` throws BlowupError as soon as any
// evanescent coefficient is present above rounding noise.
EvolveResult evolve(const FieldState& initial, const EvolveOptions& options);

} // namespace sdirac
