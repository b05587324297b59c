#pragma once

#include <cmath>
#include <stdexcept>

namespace sdirac {

// Cartesian 3-vector. Units are contextual: positions in hbar*c/eV,
// momenta in eV, velocities in units of c.
struct ThreeVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr ThreeVector() = default;
    constexpr ThreeVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr ThreeVector operator+(const ThreeVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr ThreeVector operator-(const ThreeVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr ThreeVector operator-() const { return {-x, -y, -z}; }
    constexpr ThreeVector operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr ThreeVector operator/(double s) const { return {x / s, y / s, z / s}; }

    constexpr double dot(const ThreeVector& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    constexpr double norm_sq() const { return dot(*this); }

    // Unit vector along *this. Throws for the zero vector.
    ThreeVector unit() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("unit(): zero vector has no direction");
        return *this / n;
    }
};

constexpr ThreeVector operator*(double s, const ThreeVector& v) { return v * s; }

inline double dot(const ThreeVector& a, const ThreeVector& b) { return a.dot(b); }

} // namespace sdirac
