#include "sdirac/spinor_algebra.hpp"

#include <cmath>
#include <limits>

#include "sdirac/errors.hpp"

namespace sdirac {

namespace {

constexpr c64 kI{0.0, 1.0};

// Helicity-up spinor for direction phat: sigma.phat w = +w. Built from
// half-angle trig, stable for any direction including phat = -z.
Vec2c helicity_up(const ThreeVector& phat) {
    const double c = phat.z;
    const double rho = std::sqrt(phat.x * phat.x + phat.y * phat.y);
    const double ch = std::sqrt(std::max(0.0, (1.0 + c) / 2.0));
    const double sh = std::sqrt(std::max(0.0, (1.0 - c) / 2.0));
    const c64 phase = rho > 0.0 ? c64(phat.x / rho, phat.y / rho) : c64(1.0, 0.0);
    return {c64(ch, 0.0), phase * sh};
}

Vec2c helicity_down(const ThreeVector& phat) {
    const double c = phat.z;
    const double rho = std::sqrt(phat.x * phat.x + phat.y * phat.y);
    const double ch = std::sqrt(std::max(0.0, (1.0 + c) / 2.0));
    const double sh = std::sqrt(std::max(0.0, (1.0 - c) / 2.0));
    const c64 phase = rho > 0.0 ? c64(phat.x / rho, -phat.y / rho) : c64(1.0, 0.0);
    return {-phase * sh, c64(ch, 0.0)};
}

ThreeVector unit_or_z(const ThreeVector& v) {
    const double n = v.norm();
    return n > 0.0 ? v / n : ThreeVector{0.0, 0.0, 1.0};
}

Vec4c stack(const Vec2c& upper, const Vec2c& lower) {
    return {upper[0], upper[1], lower[0], lower[1]};
}

void push_check(AlgebraReport& rep, std::string name, const Matrix4c& lhs, const Matrix4c& rhs) {
    const double dev = max_abs_diff(lhs, rhs);
    rep.checks.push_back({std::move(name), dev, dev == 0.0});
}

} // namespace

Vec2c helicity_spinor(const ThreeVector& direction, int helicity) {
    if (helicity != 1 && helicity != -1)
        throw DomainError("helicity_spinor: helicity must be +1 or -1");
    const ThreeVector nhat = unit_or_z(direction);
    return helicity > 0 ? helicity_up(nhat) : helicity_down(nhat);
}

Matrix2c pauli(int i) {
    switch (i) {
        case 1: return {{c64(0), c64(1), c64(1), c64(0)}};
        case 2: return {{c64(0), -kI, kI, c64(0)}};
        case 3: return {{c64(1), c64(0), c64(0), c64(-1)}};
        default: throw DomainError("pauli: index must be 1, 2 or 3");
    }
}

Matrix2c pauli_dot(const ThreeVector& p) {
    return pauli(1) * c64(p.x) + pauli(2) * c64(p.y) + pauli(3) * c64(p.z);
}

const Matrix4c& MatrixBasis::alpha(int i) const {
    switch (i) {
        case 1: return alpha1;
        case 2: return alpha2;
        case 3: return alpha3;
        default: throw DomainError("MatrixBasis::alpha: index must be 1, 2 or 3");
    }
}

MatrixBasis build_basis() {
    const Matrix2c id2 = Matrix2c::identity();
    const Matrix2c zero2{};
    const Matrix2c neg_id2 = id2 * c64(-1.0);

    MatrixBasis b;
    b.alpha1 = Matrix4c::from_blocks(zero2, pauli(1), pauli(1), zero2);
    b.alpha2 = Matrix4c::from_blocks(zero2, pauli(2), pauli(2), zero2);
    b.alpha3 = Matrix4c::from_blocks(zero2, pauli(3), pauli(3), zero2);
    b.beta = Matrix4c::from_blocks(id2, zero2, zero2, neg_id2);
    b.beta_s = Matrix4c::from_blocks(zero2, id2, neg_id2, zero2);
    b.gamma5 = Matrix4c::from_blocks(zero2, id2, id2, zero2);
    b.identity = Matrix4c::identity();
    return b;
}

Matrix4c anticommutator(const Matrix4c& a, const Matrix4c& b) { return a * b + b * a; }

bool AlgebraReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

AlgebraReport verify_algebra(const MatrixBasis& basis) {
    AlgebraReport rep;
    const Matrix4c id = Matrix4c::identity();

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const Matrix4c expected = i == j ? id * c64(2.0) : Matrix4c::zero();
            push_check(rep,
                       "{alpha_" + std::to_string(i) + ", alpha_" + std::to_string(j) + "} = " +
                           (i == j ? "2 I" : "0"),
                       anticommutator(basis.alpha(i), basis.alpha(j)), expected);
        }
    for (int i = 1; i <= 3; ++i)
        push_check(rep, "{alpha_" + std::to_string(i) + ", beta_s} = 0",
                   anticommutator(basis.alpha(i), basis.beta_s), Matrix4c::zero());

    push_check(rep, "beta_s^2 = -I", basis.beta_s * basis.beta_s, id * c64(-1.0));
    push_check(rep, "beta_s = beta gamma5", basis.beta_s, basis.beta * basis.gamma5);
    push_check(rep, "beta_s^dag = -beta_s", basis.beta_s.adjoint(), basis.beta_s * c64(-1.0));
    push_check(rep, "beta^dag = beta", basis.beta.adjoint(), basis.beta);
    push_check(rep, "gamma5^dag = gamma5", basis.gamma5.adjoint(), basis.gamma5);
    push_check(rep, "gamma5^2 = I", basis.gamma5 * basis.gamma5, id);
    return rep;
}

HamiltonianMatrix hamiltonian(const ThreeVector& p, double m_s, int momentum_sign) {
    if (momentum_sign != 1 && momentum_sign != -1)
        throw DomainError("hamiltonian: momentum_sign must be +1 or -1");
    if (!(m_s > 0.0)) throw DomainError("hamiltonian: m_s must be > 0");
    const Matrix2c k = pauli_dot(p) * c64(static_cast<double>(momentum_sign));
    const Matrix2c m = Matrix2c::identity() * c64(m_s);
    // [[0, s sigma.p + m], [s sigma.p - m, 0]]
    return {Matrix4c::from_blocks({}, k + m, k + (m * c64(-1.0)), {}), p, m_s, momentum_sign};
}

std::array<Eigenpair, 4> eigen_solve(const HamiltonianMatrix& h) {
    const double kappa = h.p.norm();
    const double m = h.m_s;
    const ThreeVector phat = kappa > 0.0 ? h.p / kappa : ThreeVector{0.0, 0.0, 1.0};
    const double d = kappa * kappa - m * m;
    // E = sqrt(D) continued through threshold: real above, +i|.| below.
    const c64 e = d >= 0.0 ? c64(std::sqrt(d), 0.0) : c64(0.0, std::sqrt(-d));

    std::array<Eigenpair, 4> out;
    std::size_t slot = 0;
    for (int helicity : {+1, -1}) {
        const Vec2c w = helicity > 0 ? helicity_up(phat) : helicity_down(phat);
        const double coupl = h.momentum_sign * helicity * kappa + m; // s h kappa + m
        for (const c64 lambda : {e, -e}) {
            Vec4c v;
            if (lambda == c64(0.0)) {
                // Defective block at |p| = m_s c: kernel vector only.
                v = coupl != 0.0 ? stack(w, {c64(0.0), c64(0.0)})
                                 : stack({c64(0.0), c64(0.0)}, w);
            } else {
                const c64 ratio = lambda / coupl; // coupl = 0 only when lambda = 0
                v = stack(w, {ratio * w[0], ratio * w[1]});
                const double n = norm(v);
                v = (1.0 / n) * v;
            }
            out[slot++] = {lambda, v, helicity};
        }
    }

    // Closed form is exact; fall back to a numerical nullspace if a residual
    // ever exceeds the contract.
    const double hnorm = frobenius_norm(h.matrix);
    for (auto& pair : out) {
        Vec4c r = h.matrix * pair.eigenvector - pair.eigenvalue * pair.eigenvector;
        if (norm(r) > 1e-12 * hnorm) {
            pair.eigenvector = nullspace_vector(h.matrix, pair.eigenvalue);
        }
    }
    return out;
}

Vec4c nullspace_vector(const Matrix4c& m, c64 lambda) {
    Matrix4c a = m;
    for (std::size_t i = 0; i < 4; ++i) a(i, i) -= lambda;

    double scale = max_abs(a);
    if (scale == 0.0) return {c64(1.0), c64(0.0), c64(0.0), c64(0.0)};
    const double tol = 1e-10 * scale;

    auto eliminate = [&](int skip_col) -> std::array<int, 4> {
        Matrix4c w = a;
        std::array<int, 4> pivot_row_of_col{-1, -1, -1, -1};
        std::array<bool, 4> row_used{};
        for (int col = 0; col < 4; ++col) {
            if (col == skip_col) continue;
            int best = -1;
            double bestv = tol;
            for (int r = 0; r < 4; ++r)
                if (!row_used[r] && std::abs(w(r, col)) > bestv) {
                    best = r;
                    bestv = std::abs(w(r, col));
                }
            if (best < 0) continue;
            row_used[best] = true;
            pivot_row_of_col[col] = best;
            for (int r = 0; r < 4; ++r) {
                if (r == best || w(r, col) == c64(0.0)) continue;
                const c64 f = w(r, col) / w(best, col);
                for (int c = 0; c < 4; ++c) w(r, c) -= f * w(best, c);
                w(r, col) = 0.0;
            }
        }
        a = w;
        return pivot_row_of_col;
    };

    Matrix4c saved = a;
    std::array<int, 4> pivots = eliminate(-1);
    int free_col = -1;
    for (int col = 0; col < 4; ++col)
        if (pivots[col] < 0) {
            free_col = col;
            break;
        }
    if (free_col < 0) {
        // Numerically full rank: free the weakest pivot column and redo.
        double worst = std::numeric_limits<double>::infinity();
        for (int col = 0; col < 4; ++col) {
            const double pv = std::abs(a(pivots[col], col));
            if (pv < worst) {
                worst = pv;
                free_col = col;
            }
        }
        a = saved;
        pivots = eliminate(free_col);
    }

    Vec4c x{};
    x[free_col] = 1.0;
    for (int col = 0; col < 4; ++col) {
        if (col == free_col || pivots[col] < 0) continue;
        const int r = pivots[col];
        x[col] = -a(r, free_col) / a(r, col);
    }
    const double n = norm(x);
    return (1.0 / n) * x;
}

} // namespace sdirac
