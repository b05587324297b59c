#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace sdirac {

using c64 = std::complex<double>;

using Vec2c = std::array<c64, 2>;
using Vec4c = std::array<c64, 4>;

// 2x2 complex matrix, row major.
struct Matrix2c {
    std::array<c64, 4> a{};

    constexpr c64& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
    constexpr const c64& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }

    static constexpr Matrix2c identity() { return {{c64(1), c64(0), c64(0), c64(1)}}; }
};

inline Matrix2c operator*(const Matrix2c& m, c64 s) {
    Matrix2c r;
    for (std::size_t i = 0; i < 4; ++i) r.a[i] = m.a[i] * s;
    return r;
}

inline Matrix2c operator+(const Matrix2c& m, const Matrix2c& n) {
    Matrix2c r;
    for (std::size_t i = 0; i < 4; ++i) r.a[i] = m.a[i] + n.a[i];
    return r;
}

inline Matrix2c operator*(const Matrix2c& m, const Matrix2c& n) {
    Matrix2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, 0) * n(0, j) + m(i, 1) * n(1, j);
    return r;
}

inline Vec2c operator*(const Matrix2c& m, const Vec2c& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

// 4x4 complex matrix, row major.
struct Matrix4c {
    std::array<c64, 16> a{};

    constexpr c64& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
    constexpr const c64& operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }

    static constexpr Matrix4c zero() { return {}; }

    static Matrix4c identity() {
        Matrix4c m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    // [[ul, ur], [ll, lr]] in 2x2 blocks.
    static Matrix4c from_blocks(const Matrix2c& ul, const Matrix2c& ur,
                                const Matrix2c& ll, const Matrix2c& lr) {
        Matrix4c m;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                m(r, c) = ul(r, c);
                m(r, c + 2) = ur(r, c);
                m(r + 2, c) = ll(r, c);
                m(r + 2, c + 2) = lr(r, c);
            }
        return m;
    }

    Matrix4c adjoint() const {
        Matrix4c m;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }
};

inline Matrix4c operator+(const Matrix4c& m, const Matrix4c& n) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = m.a[i] + n.a[i];
    return r;
}

inline Matrix4c operator-(const Matrix4c& m, const Matrix4c& n) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = m.a[i] - n.a[i];
    return r;
}

inline Matrix4c operator*(const Matrix4c& m, c64 s) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = m.a[i] * s;
    return r;
}

inline Matrix4c operator*(c64 s, const Matrix4c& m) { return m * s; }

inline Matrix4c operator*(const Matrix4c& m, const Matrix4c& n) {
    Matrix4c r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const c64 mik = m(i, k);
            for (std::size_t j = 0; j < 4; ++j) r(i, j) += mik * n(k, j);
        }
    return r;
}

inline Vec4c operator*(const Matrix4c& m, const Vec4c& v) {
    Vec4c r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
    return r;
}

inline Vec2c operator+(const Vec2c& u, const Vec2c& v) { return {u[0] + v[0], u[1] + v[1]}; }

inline Vec2c operator-(const Vec2c& u, const Vec2c& v) { return {u[0] - v[0], u[1] - v[1]}; }

inline Vec2c operator*(c64 s, const Vec2c& v) { return {s * v[0], s * v[1]}; }

inline c64 inner(const Vec2c& u, const Vec2c& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

inline double norm(const Vec2c& v) { return std::sqrt(std::real(inner(v, v))); }

inline Vec4c operator+(const Vec4c& u, const Vec4c& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

inline Vec4c operator-(const Vec4c& u, const Vec4c& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

inline Vec4c operator*(c64 s, const Vec4c& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }

// <u, v> with the physicists' convention (conjugate-linear in u).
inline c64 inner(const Vec4c& u, const Vec4c& v) {
    c64 s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline double norm(const Vec4c& v) { return std::sqrt(std::real(inner(v, v))); }

inline double max_abs(const Matrix4c& m) {
    double r = 0.0;
    for (const auto& e : m.a) r = std::max(r, std::abs(e));
    return r;
}

inline double max_abs_diff(const Matrix4c& m, const Matrix4c& n) { return max_abs(m - n); }

inline double frobenius_norm(const Matrix4c& m) {
    double s = 0.0;
    for (const auto& e : m.a) s += std::norm(e);
    return std::sqrt(s);
}

// Largest singular value via power iteration on A^dag A. The matrices in
// this toolkit are tiny and well conditioned; 200 iterations is far past
// convergence for any of them.
double spectral_norm(const Matrix4c& m);

} // namespace sdirac
