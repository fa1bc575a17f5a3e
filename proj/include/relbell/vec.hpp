#pragma once

#include <array>
#include <cmath>

#include "relbell/errors.hpp"

namespace relbell {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Vec3 operator*(double s, const Vec3& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    friend Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Overflow-safe Euclidean norm.
inline double norm(const Vec3& v) { return std::hypot(v.x, v.y, v.z); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    return {v.x / n, v.y / n, v.z / n};
}

// Measurement axis. Construction guarantees unit length to 1e-9; from() rejects,
// normalized() repairs.
struct UnitVec3 {
    Vec3 v;

    static UnitVec3 from(const Vec3& u) {
        const double n = norm(u);
        if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
            throw DomainError("axis is not unit length");
        }
        return UnitVec3{normalized(u)};
    }
    static UnitVec3 from(double x, double y, double z) {
        return from(Vec3{x, y, z});
    }
    static UnitVec3 normalized(const Vec3& u) {
        return UnitVec3{relbell::normalized(u)};
    }

    double x() const { return v.x; }
    double y() const { return v.y; }
    double z() const { return v.z; }
};

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
    double operator()(int r, int c) const {
        return m[static_cast<size_t>(3 * r + c)];
    }

    static Mat3 identity() {
        return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
    }

    // Active rotation about the y axis: maps +z toward +x for positive angles.
    static Mat3 rotation_y(double angle) {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return Mat3{{c, 0, s, 0, 1, 0, -s, 0, c}};
    }

    // Same rotation specified by (sin, cos) directly; avoids the roundoff of
    // reconstituting trig values from an angle near a multiple of pi/2.
    static Mat3 rotation_y_from_sincos(double s, double c) {
        return Mat3{{c, 0, s, 0, 1, 0, -s, 0, c}};
    }

    static Mat3 rotation_z(double angle) {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
    }

    Mat3 transposed() const {
        const Mat3& a = *this;
        return Mat3{{a(0, 0), a(1, 0), a(2, 0),
                     a(0, 1), a(1, 1), a(2, 1),
                     a(0, 2), a(1, 2), a(2, 2)}};
    }

    double det() const {
        const Mat3& a = *this;
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        }
    }
    return r;
}

// Row-major 4x4 matrix acting on four-vectors ordered (t, x, y, z).
struct Mat4 {
    std::array<double, 16> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    double operator()(int r, int c) const {
        return m[static_cast<size_t>(4 * r + c)];
    }

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }

    // Embeds a spatial rotation into the (x, y, z) block.
    static Mat4 from_rotation(const Mat3& rot) {
        Mat4 r = identity();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) r(i + 1, j + 1) = rot(i, j);
        }
        return r;
    }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    }
    return r;
}

}  // namespace relbell
