#include "relbell/relkin.hpp"

#include <cmath>

namespace relbell {

Rapidity rapidity_from_beta(double beta) {
    if (!std::isfinite(beta) || std::abs(beta) >= 1.0) {
        throw DomainError("speed must satisfy |beta| < 1");
    }
    return Rapidity(std::atanh(beta));
}

Mat4 boost_z(Rapidity xi) {
    const double ch = std::cosh(xi.value);
    const double sh = std::sinh(xi.value);
    Mat4 b = Mat4::identity();
    b(0, 0) = ch;
    b(0, 3) = -sh;
    b(3, 0) = -sh;
    b(3, 3) = ch;
    return b;
}

Mat3 rotation_to_momentum(double theta_p, double phi_p) {
    return Mat3::rotation_z(phi_p) * Mat3::rotation_y(theta_p);
}

double wigner_angle(Rapidity xi, Rapidity chi) {
    return std::atan2(std::sinh(xi.value) * std::sinh(chi.value),
                      std::cosh(xi.value) + std::cosh(chi.value));
}

DerivedKinematics derived_kinematics(Rapidity xi, Rapidity chi) {
    if (xi.value < 0.0 || chi.value < 0.0) {
        throw DomainError("derived kinematics expects nonnegative rapidities");
    }
    DerivedKinematics k;
    k.xi = xi.value;
    k.chi = chi.value;

    const double cosh_xi = std::cosh(xi.value);
    const double cosh_chi = std::cosh(chi.value);
    const double sinh_xi = std::sinh(xi.value);
    const double sinh_chi = std::sinh(chi.value);

    k.cosh_eta = cosh_xi * cosh_chi;
    // sqrt(c-1)*sqrt(c+1) instead of sqrt(c*c-1): c*c can overflow near the cap.
    k.sinh_eta = std::sqrt(k.cosh_eta - 1.0) * std::sqrt(k.cosh_eta + 1.0);
    k.eta = std::acosh(k.cosh_eta);

    // theta_Lambda from the components of tan(theta) = sinh(chi)/tanh(xi);
    // atan2 keeps the xi -> 0 limit (theta = pi/2) exact.
    const double tz = std::tanh(xi.value);
    k.theta_Lambda = std::atan2(sinh_chi, tz);
    const double rt = std::hypot(sinh_chi, tz);
    if (rt > 0.0) {
        k.sin_theta = sinh_chi / rt;
        k.cos_theta = tz / rt;
    } else {
        k.sin_theta = 0.0;  // both rapidities zero: direction degenerates to +z
        k.cos_theta = 1.0;
    }

    const double num = sinh_xi * sinh_chi;
    const double den = cosh_xi + cosh_chi;
    k.omega_p = std::atan2(num, den);
    const double ro = std::hypot(num, den);
    k.sin_omega = num / ro;
    k.cos_omega = den / ro;
    return k;
}

}  // namespace relbell
