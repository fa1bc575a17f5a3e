#include "relbell/spinobs.hpp"

#include <cmath>

namespace relbell {

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
    r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
    r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
    r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
    return r;
}

Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

Mat2c operator*(Complex s, const Mat2c& a) {
    Mat2c r;
    for (size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
    return r;
}

SpinObservable boost_axis_czachor(const UnitVec3& a, Rapidity xi) {
    const double ch = std::cosh(xi.value);
    const double sh = std::sinh(xi.value);
    SpinObservable o;
    o.vec = {a.x(), a.y(), a.z() * ch};
    o.norm = std::hypot(1.0, sh * a.z());
    return o;
}

// Entries of the axis -> effective-vector map. Written in terms of
// (sin, cos) of theta_Lambda and cosh(eta); the particle-2 variant flips the
// off-diagonal x-z entries because its momentum points the opposite way.
static Mat3 axis_map(double s, double t, double c, Side side) {
    const double diag_x = t * t - c * s * s;
    const double diag_z = -(s * s - c * t * t);
    const double off = (1.0 + c) * s * t;
    Mat3 m;
    if (side == Side::particle1) {
        m = Mat3{{diag_x, 0, -off, 0, 1, 0, off, 0, diag_z}};
    } else {
        m = Mat3{{diag_x, 0, off, 0, 1, 0, -off, 0, diag_z}};
    }
    return m;
}

Mat3 axis_map_matrix(const DerivedKinematics& kin, Side side) {
    return axis_map(kin.sin_theta, kin.cos_theta, kin.cosh_eta, side);
}

Mat3 axis_map_matrix_unequal(Rapidity xi, double theta) {
    return axis_map(std::sin(theta), std::cos(theta), std::cosh(xi.value),
                    Side::particle1);
}

ObservablePair observable_vectors_general(const UnitVec3& a, const UnitVec3& b,
                                          const DerivedKinematics& kin) {
    const Mat3 m = axis_map_matrix(kin, Side::particle1);
    const Mat3 n = axis_map_matrix(kin, Side::particle2);
    ObservablePair p;
    p.first.vec = m * a.v;
    p.second.vec = n * b.v;
    // Component of each axis along its particle's boosted momentum sets how
    // much the norm grows; hypot keeps this finite up to the rapidity cap.
    const double proj_a = a.x() * kin.sin_theta + a.z() * kin.cos_theta;
    const double proj_b = -b.x() * kin.sin_theta + b.z() * kin.cos_theta;
    p.first.norm = std::hypot(1.0, kin.sinh_eta * proj_a);
    p.second.norm = std::hypot(1.0, kin.sinh_eta * proj_b);
    return p;
}

SpinObservable observable_vectors_unequal(const UnitVec3& a, Rapidity xi,
                                          double theta) {
    const double s = std::sin(theta);
    const double t = std::cos(theta);
    SpinObservable o;
    o.vec = axis_map(s, t, std::cosh(xi.value), Side::particle1) * a.v;
    o.norm = std::hypot(1.0, std::sinh(xi.value) * (a.x() * s + a.z() * t));
    return o;
}

Mat2c observable_matrix(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 1e-12)) {
        throw DomainError("degenerate direction: |v| <= 1e-12");
    }
    const double ux = v.x / n;
    const double uy = v.y / n;
    const double uz = v.z / n;
    Mat2c m;
    m(0, 0) = Complex(uz, 0.0);
    m(0, 1) = Complex(ux, -uy);
    m(1, 0) = Complex(ux, uy);
    m(1, 1) = Complex(-uz, 0.0);
    return m;
}

}  // namespace relbell
