#include "sdirac/evolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <memory>
#include <ostream>
#include <random>

#include "sdirac/errors.hpp"
#include "sdirac/spinor_algebra.hpp"
#include "sdirac/weyl.hpp"

namespace sdirac {

namespace {

constexpr c64 kImag{0.0, 1.0};

// One shared in-place FFT workspace per grid size. FFTW plan creation is
// not reentrant, so the spectral operations are single-threaded by design.
struct FftPlans {
    int n = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd{};
    fftw_plan bwd{};

    explicit FftPlans(int n_points) : n(n_points) {
        buf = fftw_alloc_complex(static_cast<std::size_t>(n));
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~FftPlans() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;
};

FftPlans& plans_for(int n) {
    static std::map<int, std::unique_ptr<FftPlans>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftPlans>(n);
    return *slot;
}

void run_fft(std::vector<c64>& data, bool forward) {
    FftPlans& p = plans_for(static_cast<int>(data.size()));
    // std::complex<double> is layout-compatible with fftw_complex.
    std::memcpy(p.buf, data.data(), sizeof(c64) * data.size());
    fftw_execute(forward ? p.fwd : p.bwd);
    std::memcpy(static_cast<void*>(data.data()), p.buf, sizeof(c64) * data.size());
}

Species species_of(int momentum_sign) {
    if (momentum_sign == 1) return Species::antineutrino;
    if (momentum_sign == -1) return Species::neutrino;
    throw DomainError("momentum_sign must be +1 or -1");
}

Matrix4c mode_hamiltonian(double k, double m_s, int s, Representation rep) {
    const Matrix2c sk = pauli(3) * c64(s * k);
    const Matrix2c m = Matrix2c::identity() * c64(m_s);
    if (rep == Representation::dirac)
        return Matrix4c::from_blocks({}, sk + m, sk + m * c64(-1.0), {});
    return Matrix4c::from_blocks(sk, m * c64(-1.0), m, sk * c64(-1.0));
}

// Exact exp(-i H dt) via H^2 = (k^2 - m_s^2) I: a cosine/sinc pair above
// threshold, cosh/sinh below, and I - i dt H at the nilpotent threshold.
Matrix4c mode_propagator(double k, double m_s, int s, Representation rep, double dt) {
    const double d = k * k - m_s * m_s;
    double c0, c1;
    if (d > 0.0) {
        const double w = std::sqrt(d);
        c0 = std::cos(w * dt);
        c1 = std::sin(w * dt) / w;
    } else if (d < 0.0) {
        const double mu = std::sqrt(-d);
        c0 = std::cosh(mu * dt);
        c1 = std::sinh(mu * dt) / mu;
    } else {
        c0 = 1.0;
        c1 = dt;
    }
    return Matrix4c::identity() * c64(c0) + mode_hamiltonian(k, m_s, s, rep) * (-kImag * c64(c1));
}

// Branch eigenvector of the mode Hamiltonian in the dirac representation,
// valid in every regime: the closed-form normalization where it is defined
// (m_s > 0), a unit-norm continuation otherwise. Below threshold the energy
// continues to eps * i |E|.
Vec4c branch_vector(double k, double m_s, int s, int helicity, int energy_sign) {
    const double kappa = std::abs(k);
    const Vec2c w = helicity_spinor({0.0, 0.0, k >= 0.0 ? 1.0 : -1.0}, helicity);
    const double d = kappa * kappa - m_s * m_s;
    const c64 lambda = d >= 0.0 ? c64(energy_sign * std::sqrt(d), 0.0)
                                : c64(0.0, energy_sign * std::sqrt(-d));
    const double denom = kappa + m_s;
    const c64 ratio = denom > 0.0 ? lambda / denom : c64(0.0);
    const double n = m_s > 0.0 ? std::sqrt((kappa + m_s) / (2.0 * m_s)) : 1.0 / std::sqrt(2.0);

    Vec2c upper, lower;
    if (s * helicity == 1) {
        upper = c64(n) * w;
        lower = (c64(n) * ratio) * w;
    } else {
        upper = (c64(-n) * ratio) * w;
        lower = c64(n) * w;
    }
    return {upper[0], upper[1], lower[0], lower[1]};
}

void check_momentum_sign(int s) {
    if (s != 1 && s != -1) throw DomainError("momentum_sign must be +1 or -1");
}

void check_mass(double m_s) {
    if (!(m_s >= 0.0) || !std::isfinite(m_s)) throw DomainError("m_s must be finite and >= 0");
}

FieldState blank_state(const Grid1D& grid, double m_s, int momentum_sign, Representation rep) {
    check_mass(m_s);
    check_momentum_sign(momentum_sign);
    FieldState st;
    st.grid = grid;
    st.m_s = m_s;
    st.momentum_sign = momentum_sign;
    st.representation = rep;
    for (auto& comp : st.values) comp.assign(static_cast<std::size_t>(grid.n_points()), c64(0.0));
    return st;
}

// e^{i 2 pi modej/n} with the angle reduced exactly before evaluation.
c64 mode_phase(long long mode, long long site, int n) {
    const long long r = ((mode * site) % n + n) % n;
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n));
}

using Values = std::array<std::vector<c64>, 4>;

// Time derivative of the first-order equation with a central-difference
// spatial derivative. Representation fixes which pointwise form applies.
void rk4_rhs(const FieldState& meta, const Values& y, Values& out) {
    const int n = meta.grid.n_points();
    const double inv2dz = 1.0 / (2.0 * meta.grid.dz());
    const double s = static_cast<double>(meta.momentum_sign);
    const c64 im(0.0, meta.m_s);
    if (meta.representation == Representation::dirac) {
        for (int j = 0; j < n; ++j) {
            const int jp = j + 1 == n ? 0 : j + 1;
            const int jm = j == 0 ? n - 1 : j - 1;
            const c64 d0 = (y[0][jp] - y[0][jm]) * inv2dz;
            const c64 d1 = (y[1][jp] - y[1][jm]) * inv2dz;
            const c64 d2 = (y[2][jp] - y[2][jm]) * inv2dz;
            const c64 d3 = (y[3][jp] - y[3][jm]) * inv2dz;
            out[0][j] = -s * d2 - im * y[2][j];
            out[1][j] = s * d3 - im * y[3][j];
            out[2][j] = -s * d0 + im * y[0][j];
            out[3][j] = s * d1 + im * y[1][j];
        }
    } else {
        const Species sp = species_of(meta.momentum_sign);
        for (int j = 0; j < n; ++j) {
            const int jp = j + 1 == n ? 0 : j + 1;
            const int jm = j == 0 ? n - 1 : j - 1;
            const WeylPair w{{y[0][j], y[1][j]}, {y[2][j], y[3][j]}};
            const WeylPair dw{{(y[0][jp] - y[0][jm]) * inv2dz, (y[1][jp] - y[1][jm]) * inv2dz},
                              {(y[2][jp] - y[2][jm]) * inv2dz, (y[3][jp] - y[3][jm]) * inv2dz}};
            const WeylRhs r = coupled_weyl_rhs(w, dw, meta.m_s, sp);
            out[0][j] = r.dxi_dt[0];
            out[1][j] = r.dxi_dt[1];
            out[2][j] = r.deta_dt[0];
            out[3][j] = r.deta_dt[1];
        }
    }
}

struct SpectralExtrema {
    double max_all = 0.0;
    double max_evanescent = 0.0;
    std::vector<int> evanescent_modes; // signed indices with nonzero amplitude
};

SpectralExtrema spectral_extrema(const FieldState& state, double floor_amp) {
    const auto coefs = spectrum(state);
    const int n = state.grid.n_points();
    SpectralExtrema ex;
    for (int b = 0; b < n; ++b) {
        double amp = 0.0;
        for (int c = 0; c < 4; ++c) amp = std::max(amp, std::abs(coefs[c][b]));
        ex.max_all = std::max(ex.max_all, amp);
        if (std::abs(state.grid.wavenumber(b)) < state.m_s) {
            ex.max_evanescent = std::max(ex.max_evanescent, amp);
            if (amp > floor_amp) ex.evanescent_modes.push_back(state.grid.signed_mode(b));
        }
    }
    return ex;
}

} // namespace

Grid1D::Grid1D(int n_points, double dz) : n_points_(n_points), dz_(dz) {
    if (n_points < 8 || (n_points & (n_points - 1)) != 0)
        throw DomainError("Grid1D: n_points must be a power of two >= 8");
    if (!(dz > 0.0) || !std::isfinite(dz)) throw DomainError("Grid1D: dz must be finite and > 0");
}

int Grid1D::signed_mode(int bin) const {
    if (bin < 0 || bin >= n_points_) throw DomainError("Grid1D: FFT bin out of range");
    return bin < n_points_ / 2 ? bin : bin - n_points_;
}

double Grid1D::wavenumber(int bin) const {
    return 2.0 * M_PI * signed_mode(bin) / (n_points_ * dz_);
}

int Grid1D::bin_of_mode(int mode_index) const {
    if (mode_index < -n_points_ / 2 || mode_index >= n_points_ / 2)
        throw DomainError("Grid1D: mode index out of [-n/2, n/2)");
    return mode_index >= 0 ? mode_index : mode_index + n_points_;
}

const char* representation_name(Representation r) {
    return r == Representation::dirac ? "dirac" : "weyl";
}

std::array<std::vector<c64>, 4> spectrum(const FieldState& state) {
    std::array<std::vector<c64>, 4> coefs;
    const double scale = 1.0 / state.grid.n_points();
    for (int c = 0; c < 4; ++c) {
        coefs[c] = state.values[c];
        run_fft(coefs[c], true);
        for (auto& v : coefs[c]) v *= scale;
    }
    return coefs;
}

FieldState state_from_spectrum(const Grid1D& grid, const std::array<std::vector<c64>, 4>& coefs,
                               double m_s, int momentum_sign, Representation representation,
                               double time) {
    FieldState st = blank_state(grid, m_s, momentum_sign, representation);
    st.time = time;
    for (int c = 0; c < 4; ++c) {
        if (coefs[c].size() != static_cast<std::size_t>(grid.n_points()))
            throw DomainError("state_from_spectrum: coefficient array size mismatch");
        st.values[c] = coefs[c];
        run_fft(st.values[c], false);
    }
    return st;
}

FieldState init_plane_wave(const Grid1D& grid, int mode_index, int branch, double m_s,
                           int momentum_sign) {
    if (branch < 1 || branch > 4) throw DomainError("init_plane_wave: branch must be 1..4");
    const int helicity = branch == 1 || branch == 3 ? +1 : -1;
    const int energy_sign = branch <= 2 ? +1 : -1;
    const double k = grid.wavenumber(grid.bin_of_mode(mode_index));
    // Validates the propagating regime and m_s > 0.
    const PlaneWaveSolution sol =
        plane_wave_solution(k, m_s, helicity, energy_sign, species_of(momentum_sign));
    FieldState st = blank_state(grid, m_s, momentum_sign, Representation::dirac);
    const int n = grid.n_points();
    for (int j = 0; j < n; ++j) {
        const c64 phase = mode_phase(mode_index, j, n);
        for (int c = 0; c < 4; ++c) st.values[c][j] = sol.bispinor.c[c] * phase;
    }
    return st;
}

FieldState init_mode_spinor(const Grid1D& grid, int mode_index, const Vec4c& amplitude,
                            double m_s, int momentum_sign, Representation representation) {
    (void)grid.bin_of_mode(mode_index); // range check
    FieldState st = blank_state(grid, m_s, momentum_sign, representation);
    const int n = grid.n_points();
    for (int j = 0; j < n; ++j) {
        const c64 phase = mode_phase(mode_index, j, n);
        for (int c = 0; c < 4; ++c) st.values[c][j] = amplitude[c] * phase;
    }
    return st;
}

PacketInit init_gaussian_packet(const Grid1D& grid, double k0, double width, int branch,
                                double m_s, int momentum_sign) {
    if (!(width > 0.0)) throw DomainError("init_gaussian_packet: width must be > 0");
    if (branch < 1 || branch > 4) throw DomainError("init_gaussian_packet: branch must be 1..4");
    const int helicity = branch == 1 || branch == 3 ? +1 : -1;
    const int energy_sign = branch <= 2 ? +1 : -1;
    check_mass(m_s);
    check_momentum_sign(momentum_sign);

    const int n = grid.n_points();
    const double z_center = grid.length() / 4.0;
    std::array<std::vector<c64>, 4> coefs;
    for (auto& c : coefs) c.assign(static_cast<std::size_t>(n), c64(0.0));

    double weight_total = 0.0;
    double weight_evanescent = 0.0;
    for (int b = 0; b < n; ++b) {
        const double k = grid.wavenumber(b);
        const double arg = (k - k0) * width;
        const double envelope = std::exp(-arg * arg / 4.0);
        if (envelope == 0.0) continue;
        const c64 amp = envelope * std::polar(1.0, -k * z_center);
        const Vec4c v = branch_vector(k, m_s, momentum_sign, helicity, energy_sign);
        double vnorm_sq = 0.0;
        for (int c = 0; c < 4; ++c) {
            coefs[c][b] = amp * v[c];
            vnorm_sq += std::norm(v[c]);
        }
        const double weight = envelope * envelope * vnorm_sq;
        weight_total += weight;
        if (std::abs(k) < m_s) weight_evanescent += weight;
    }

    PacketInit out{state_from_spectrum(grid, coefs, m_s, momentum_sign, Representation::dirac),
                   weight_total > 0.0 ? weight_evanescent / weight_total : 0.0};
    return out;
}

FieldState init_random(const Grid1D& grid, double m_s, int momentum_sign, std::uint64_t seed) {
    FieldState st = blank_state(grid, m_s, momentum_sign, Representation::dirac);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& comp : st.values)
        for (auto& v : comp) v = c64(u(rng), u(rng));
    return st;
}

FieldState step_spectral(const FieldState& state, double dt, double amplitude_cap) {
    if (!(amplitude_cap > 0.0)) throw DomainError("step_spectral: amplitude cap must be > 0");
    auto coefs = spectrum(state);
    const int n = state.grid.n_points();
    std::vector<int> offenders;
    for (int b = 0; b < n; ++b) {
        const double k = state.grid.wavenumber(b);
        const Matrix4c u =
            mode_propagator(k, state.m_s, state.momentum_sign, state.representation, dt);
        const Vec4c v = u * Vec4c{coefs[0][b], coefs[1][b], coefs[2][b], coefs[3][b]};
        bool over = false;
        for (int c = 0; c < 4; ++c) {
            coefs[c][b] = v[c];
            if (!(std::abs(v[c]) <= amplitude_cap)) over = true;
        }
        if (over) offenders.push_back(state.grid.signed_mode(b));
    }
    if (!offenders.empty()) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "step_spectral: %zu mode(s) exceeded the amplitude cap %g",
                      offenders.size(), amplitude_cap);
        throw BlowupError(msg, std::move(offenders));
    }
    return state_from_spectrum(state.grid, coefs, state.m_s, state.momentum_sign,
                               state.representation, state.time + dt);
}

FieldState step_rk4(const FieldState& state, double dt, double cfl_limit) {
    if (!(cfl_limit > 0.0)) throw DomainError("step_rk4: cfl_limit must be > 0");
    if (std::abs(dt) > cfl_limit * state.grid.dz())
        throw StabilityError("step_rk4: dt exceeds the stability bound cfl_limit * dz/c");
    const int n = state.grid.n_points();
    auto alloc = [&] {
        Values v;
        for (auto& comp : v) comp.assign(static_cast<std::size_t>(n), c64(0.0));
        return v;
    };
    Values k1 = alloc(), k2 = alloc(), k3 = alloc(), k4 = alloc(), tmp = alloc();

    auto blend = [&](const Values& base, const Values& slope, double f, Values& out) {
        for (int c = 0; c < 4; ++c)
            for (int j = 0; j < n; ++j) out[c][j] = base[c][j] + f * slope[c][j];
    };

    rk4_rhs(state, state.values, k1);
    blend(state.values, k1, dt / 2.0, tmp);
    rk4_rhs(state, tmp, k2);
    blend(state.values, k2, dt / 2.0, tmp);
    rk4_rhs(state, tmp, k3);
    blend(state.values, k3, dt, tmp);
    rk4_rhs(state, tmp, k4);

    FieldState out = state;
    out.time = state.time + dt;
    const double f = dt / 6.0;
    for (int c = 0; c < 4; ++c)
        for (int j = 0; j < n; ++j)
            out.values[c][j] =
                state.values[c][j] + f * (k1[c][j] + 2.0 * k2[c][j] + 2.0 * k3[c][j] + k4[c][j]);
    return out;
}

std::vector<double> density_profile(const FieldState& state) {
    const int n = state.grid.n_points();
    std::vector<double> rho(static_cast<std::size_t>(n));
    const auto& v = state.values;
    if (state.representation == Representation::dirac) {
        for (int j = 0; j < n; ++j)
            rho[j] = 2.0 * std::real(std::conj(v[0][j]) * v[2][j] + std::conj(v[1][j]) * v[3][j]);
    } else {
        for (int j = 0; j < n; ++j)
            rho[j] = std::norm(v[0][j]) + std::norm(v[1][j]) - std::norm(v[2][j]) -
                     std::norm(v[3][j]);
    }
    return rho;
}

std::vector<double> current_profile(const FieldState& state) {
    const int n = state.grid.n_points();
    std::vector<double> j_z(static_cast<std::size_t>(n));
    const auto& v = state.values;
    const double s = static_cast<double>(state.momentum_sign);
    // gamma5 alpha3 has the same diag(sigma3, sigma3) form in both
    // representations, so the component expression is shared.
    for (int j = 0; j < n; ++j)
        j_z[j] = s * (std::norm(v[0][j]) - std::norm(v[1][j]) + std::norm(v[2][j]) -
                      std::norm(v[3][j]));
    return j_z;
}

double charge(const FieldState& state) {
    const auto rho = density_profile(state);
    double q = 0.0;
    for (const double r : rho) q += r;
    return q * state.grid.dz();
}

double total_norm(const FieldState& state) {
    double s = 0.0;
    for (const auto& comp : state.values)
        for (const auto& v : comp) s += std::norm(v);
    return s * state.grid.dz();
}

double continuity_residual(const FieldState& before, const FieldState& after) {
    if (!(before.grid == after.grid))
        throw DomainError("continuity_residual: mismatched grids");
    if (before.representation != after.representation ||
        before.momentum_sign != after.momentum_sign || before.m_s != after.m_s)
        throw DomainError("continuity_residual: states solve different equations");
    const double dt = after.time - before.time;
    if (dt == 0.0) throw DomainError("continuity_residual: states are not one step apart");

    const auto rho_b = density_profile(before);
    const auto rho_a = density_profile(after);
    const auto j_b = current_profile(before);
    const auto j_a = current_profile(after);
    const int n = before.grid.n_points();
    const double inv2dz = 1.0 / (2.0 * before.grid.dz());
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const int jp = j + 1 == n ? 0 : j + 1;
        const int jm = j == 0 ? n - 1 : j - 1;
        const double div_j = ((j_b[jp] + j_a[jp]) - (j_b[jm] + j_a[jm])) * 0.5 * inv2dz;
        worst = std::max(worst, std::abs((rho_a[j] - rho_b[j]) / dt + div_j));
    }
    return worst;
}

FieldState project_propagating(const FieldState& state) {
    auto coefs = spectrum(state);
    const int n = state.grid.n_points();
    for (int b = 0; b < n; ++b)
        if (std::abs(state.grid.wavenumber(b)) < state.m_s)
            for (int c = 0; c < 4; ++c) coefs[c][b] = c64(0.0);
    return state_from_spectrum(state.grid, coefs, state.m_s, state.momentum_sign,
                               state.representation, state.time);
}

double max_evanescent_amplitude(const FieldState& state) {
    return spectral_extrema(state, 0.0).max_evanescent;
}

FieldState to_weyl_state(const FieldState& state) {
    if (state.representation != Representation::dirac)
        throw DomainError("to_weyl_state: input must be in the dirac representation");
    FieldState out = state;
    out.representation = Representation::weyl;
    const int n = state.grid.n_points();
    const double f = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        const Vec4c v = state.site(j);
        out.set_site(j, {f * (v[0] + v[2]), f * (v[1] + v[3]), f * (v[0] - v[2]),
                         f * (v[1] - v[3])});
    }
    return out;
}

FieldState to_dirac_state(const FieldState& state) {
    if (state.representation != Representation::weyl)
        throw DomainError("to_dirac_state: input must be in the weyl representation");
    FieldState out = state;
    out.representation = Representation::dirac;
    const int n = state.grid.n_points();
    const double f = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        const Vec4c v = state.site(j);
        out.set_site(j, {f * (v[0] + v[2]), f * (v[1] + v[3]), f * (v[0] - v[2]),
                         f * (v[1] - v[3])});
    }
    return out;
}

double centroid(const FieldState& state) {
    const int n = state.grid.n_points();
    const double length = state.grid.length();
    c64 acc(0.0);
    for (int j = 0; j < n; ++j) {
        double w = 0.0;
        for (int c = 0; c < 4; ++c) w += std::norm(state.values[c][j]);
        acc += w * std::polar(1.0, 2.0 * M_PI * state.grid.z(j) / length);
    }
    if (std::abs(acc) == 0.0) return 0.0;
    double pos = length / (2.0 * M_PI) * std::arg(acc);
    if (pos < 0.0) pos += length;
    return pos;
}

const char* EvolutionReport::csv_header() {
    return "step,time,Q,norm,continuity_residual,max_evanescent_amp,centroid,centroid_speed";
}

void EvolutionReport::write_csv(std::ostream& out) const {
    out << csv_header() << '\n';
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%d,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g", r.step,
                      r.time, r.charge, r.norm, r.continuity_residual, r.max_evanescent_amp,
                      r.centroid, r.centroid_speed);
        out << line << '\n';
    }
}

double EvolutionReport::mean_centroid_speed(double box_length) const {
    if (rows.size() < 2) return 0.0;
    double displacement = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double delta = rows[i].centroid - rows[i - 1].centroid;
        delta -= box_length * std::round(delta / box_length);
        displacement += delta;
    }
    const double elapsed = rows.back().time - rows.front().time;
    return elapsed != 0.0 ? displacement / elapsed : 0.0;
}

EvolveResult evolve(const FieldState& initial, const EvolveOptions& options) {
    if (options.steps < 0) throw DomainError("evolve: steps must be >= 0");
    if (!(options.dt > 0.0)) throw DomainError("evolve: dt must be > 0");
    if (options.report_every < 1) throw DomainError("evolve: report_every must be >= 1");

    FieldState state = initial;
    if (options.policy == EvanescentPolicy::project) state = project_propagating(state);

    auto fail_check = [&](const FieldState& st) {
        if (options.policy != EvanescentPolicy::fail) return;
        const SpectralExtrema probe = spectral_extrema(st, 0.0);
        const double floor_amp = 1e-12 * probe.max_all;
        if (probe.max_evanescent > floor_amp) {
            SpectralExtrema ex = spectral_extrema(st, floor_amp);
            throw BlowupError("evolve: evanescent content present under the fail policy",
                              std::move(ex.evanescent_modes));
        }
    };
    fail_check(state);

    EvolveResult result;
    const double length = state.grid.length();
    double prev_centroid = centroid(state);
    double prev_time = state.time;

    auto make_row = [&](int step, double residual) {
        ReportRow row;
        row.step = step;
        row.time = state.time;
        row.charge = charge(state);
        row.norm = total_norm(state);
        row.continuity_residual = residual;
        row.max_evanescent_amp = max_evanescent_amplitude(state);
        row.centroid = centroid(state);
        if (step == 0) {
            row.centroid_speed = 0.0;
        } else {
            double delta = row.centroid - prev_centroid;
            delta -= length * std::round(delta / length);
            row.centroid_speed = delta / (state.time - prev_time);
        }
        prev_centroid = row.centroid;
        prev_time = state.time;
        result.report.rows.push_back(row);
    };

    make_row(0, 0.0);
    for (int step = 1; step <= options.steps; ++step) {
        const bool reported = step % options.report_every == 0 || step == options.steps;
        FieldState before = reported ? state : FieldState{};
        state = options.integrator == Integrator::spectral
                    ? step_spectral(state, options.dt, options.amplitude_cap)
                    : step_rk4(state, options.dt, options.cfl_limit);
        fail_check(state);
        if (reported) make_row(step, continuity_residual(before, state));
    }
    result.final_state = std::move(state);
    return result;
}

} // namespace sdirac
