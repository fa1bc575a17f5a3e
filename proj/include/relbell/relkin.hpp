#pragma once

#include "relbell/errors.hpp"
#include "relbell/vec.hpp"

namespace relbell {

// Largest accepted input rapidity. cosh²(RAPIDITY_CAP) still fits in a double,
// so every closed form below stays finite on the legal domain; anything larger
// is rejected instead of silently saturated.
inline constexpr double RAPIDITY_CAP = 300.0;

/**
 * Dimensionless boost parameter, tanh(value) = v/c.
 *
 * Signed values are allowed so that inverse boosts can be written as
 * boost_z(-xi); scenario inputs are validated to be nonnegative separately.
 */
struct Rapidity {
    double value = 0.0;

    Rapidity() = default;
    explicit Rapidity(double v) : value(v) {
        if (!std::isfinite(v) || std::abs(v) > RAPIDITY_CAP) {
            throw DomainError("rapidity must be finite with |value| <= 300");
        }
    }
};

/** Contravariant four-vector in natural units, ordered (t, x, y, z). */
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double minkowski_norm2() const { return t * t - x * x - y * y - z * z; }
    Vec3 spatial() const { return {x, y, z}; }
};

inline FourVector operator*(const Mat4& m, const FourVector& v) {
    return {m(0, 0) * v.t + m(0, 1) * v.x + m(0, 2) * v.y + m(0, 3) * v.z,
            m(1, 0) * v.t + m(1, 1) * v.x + m(1, 2) * v.y + m(1, 3) * v.z,
            m(2, 0) * v.t + m(2, 1) * v.x + m(2, 2) * v.y + m(2, 3) * v.z,
            m(3, 0) * v.t + m(3, 1) * v.x + m(3, 2) * v.y + m(3, 3) * v.z};
}

/**
 * Kinematic quantities for the two-particle setup: particles counter-moving
 * along +/-z with rapidity xi, watched from a frame boosted along -x with
 * rapidity chi.
 *
 * eta is the particle rapidity seen by the moving observer, theta_Lambda the
 * polar angle of the boosted momentum, omega_p the Wigner rotation angle.
 * The cached sin/cos pairs are exact at the axis-aligned limits (chi = 0 or
 * xi = 0), where recomputing them from the angles would leak roundoff scaled
 * by cosh(eta).
 */
struct DerivedKinematics {
    double xi = 0.0;
    double chi = 0.0;
    double eta = 0.0;
    double theta_Lambda = 0.0;
    double omega_p = 0.0;

    double cosh_eta = 1.0;
    double sinh_eta = 0.0;
    double sin_theta = 0.0;
    double cos_theta = 1.0;
    double sin_omega = 0.0;
    double cos_omega = 1.0;
};

/** Rapidity with tanh(result) = beta; rejects |beta| >= 1. */
Rapidity rapidity_from_beta(double beta);

/**
 * Pure boost along z. Applied to (0,0,0,1) it gives (-sinh xi, 0, 0, cosh xi);
 * boost_z(-xi) is its inverse.
 */
Mat4 boost_z(Rapidity xi);

/** R_z(phi) * R_y(theta): rotates +z into the direction (theta, phi). */
Mat3 rotation_to_momentum(double theta_p, double phi_p);

/** Wigner angle atan2(sinh xi * sinh chi, cosh xi + cosh chi), in [0, pi/2). */
double wigner_angle(Rapidity xi, Rapidity chi);

/** All derived kinematics for nonnegative (xi, chi). */
DerivedKinematics derived_kinematics(Rapidity xi, Rapidity chi);

}  // namespace relbell
