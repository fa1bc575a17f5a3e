#include "relbell/expectation.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "relbell/errors.hpp"
#include "relbell/spinobs.hpp"

namespace relbell {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_range(double value, double lo, double hi, const char* what) {
    if (!(value >= lo && value <= hi)) {
        throw DomainError(std::string(what) + " out of range");
    }
}

}  // namespace

void validate(const Scenario& scenario) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Czachor>) {
                require_range(s.xi.value, 0.0, RAPIDITY_CAP, "rapidity xi");
            } else if constexpr (std::is_same_v<T, OppositeBoost>) {
                require_range(s.xi.value, 0.0, RAPIDITY_CAP, "rapidity xi");
                require_range(s.chi.value, 0.0, RAPIDITY_CAP, "rapidity chi");
            } else {
                require_range(s.xi_p.value, 0.0, RAPIDITY_CAP, "rapidity xi_p");
                require_range(s.xi_q.value, 0.0, RAPIDITY_CAP, "rapidity xi_q");
                require_range(s.theta_p, 0.0, kPi, "angle theta_p");
                require_range(s.theta_q, 0.0, kPi, "angle theta_q");
            }
        },
        scenario);
}

BoostedCoefficients boosted_coefficients(BellKind state, double sin_omega,
                                         double cos_omega) {
    // cos/sin of the doubled Wigner angle. The double-angle forms stay exact
    // when sin_omega and cos_omega are exact (axis-aligned limits), which the
    // reduction tests rely on.
    const double c2 = 1.0 - 2.0 * sin_omega * sin_omega;
    const double s2 = 2.0 * sin_omega * cos_omega;
    switch (state) {
        case BellKind::phi_plus:
            return {c2, -1.0, c2, s2};
        case BellKind::phi_minus:
            // Boost-invariant state; its correlation tensor diag(-1, 1, 1)
            // follows from the amplitudes (uu - dd)/sqrt(2) and is confirmed
            // by the matrix oracle. No Wigner-angle terms appear.
            return {-1.0, 1.0, 1.0, 0.0};
        case BellKind::psi_plus:
            return {1.0, 1.0, -1.0, 0.0};
        case BellKind::psi_minus:
            return {-c2, -1.0, -c2, -s2};
    }
    throw DomainError("invalid Bell state");
}

double expect_nonrel(BellKind state, const UnitVec3& a, const UnitVec3& b) {
    const double xx = a.x() * b.x();
    const double yy = a.y() * b.y();
    const double zz = a.z() * b.z();
    switch (state) {
        case BellKind::phi_plus:
            return xx - yy + zz;
        case BellKind::phi_minus:
            return -xx + yy + zz;
        case BellKind::psi_plus:
            return xx + yy - zz;
        case BellKind::psi_minus:
            return -xx - yy - zz;
    }
    throw DomainError("invalid Bell state");
}

double expect_czachor(const UnitVec3& a, const UnitVec3& b, Rapidity xi) {
    const double ch = std::cosh(xi.value);
    const double sh = std::sinh(xi.value);
    // Each product is written with a's component first, which makes the
    // expression bitwise symmetric under exchange of a and b.
    const double num =
        a.x() * b.x() + a.y() * b.y() + (a.z() * b.z()) * (ch * ch);
    const double denom =
        std::hypot(1.0, sh * a.z()) * std::hypot(1.0, sh * b.z());
    return -num / denom;
}

double expect_boosted(BellKind state, const UnitVec3& a, const UnitVec3& b,
                      Rapidity xi, Rapidity chi) {
    const DerivedKinematics kin = derived_kinematics(xi, chi);
    const ObservablePair pair = observable_vectors_general(a, b, kin);
    // The mapped vectors have length equal to the stored norms, so the
    // correlator is evaluated on unit directions; every intermediate stays
    // bounded by 1 even at extreme rapidities.
    const Vec3 A = pair.first.unit();
    const Vec3 B = pair.second.unit();
    const BoostedCoefficients c =
        boosted_coefficients(state, kin.sin_omega, kin.cos_omega);
    return c.xx * (A.x * B.x) + c.yy * (A.y * B.y) + c.zz * (A.z * B.z) +
           c.xz * (A.x * B.z - A.z * B.x);
}

double expect_unequal(const UnitVec3& a, const UnitVec3& b, Rapidity xi_p,
                      double theta_p, Rapidity xi_q, double theta_q) {
    const SpinObservable oa = observable_vectors_unequal(a, xi_p, theta_p);
    const SpinObservable ob = observable_vectors_unequal(b, xi_q, theta_q);
    return -dot(oa.unit(), ob.unit());
}

double expect_scenario(const Scenario& scenario, BellKind state,
                       const UnitVec3& a, const UnitVec3& b) {
    validate(scenario);
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Czachor>) {
                if (state == BellKind::psi_minus) {
                    return expect_czachor(a, b, s.xi);
                }
                // With the observers at rest the Wigner angle vanishes and
                // both momentum directions share one axis map, so the
                // co-moving scenario is the chi=0 slice of the general
                // correlator.
                return expect_boosted(state, a, b, s.xi, Rapidity{});
            } else if constexpr (std::is_same_v<T, OppositeBoost>) {
                return expect_boosted(state, a, b, s.xi, s.chi);
            } else {
                if (state != BellKind::psi_minus) {
                    throw UnsupportedCombination(
                        "unequal-momenta correlator is defined only for the "
                        "singlet state");
                }
                return expect_unequal(a, b, s.xi_p, s.theta_p, s.xi_q,
                                      s.theta_q);
            }
        },
        scenario);
}

double bell_observable(const Scenario& scenario, BellKind state,
                       const MeasurementAxes& axes) {
    const double e1 = expect_scenario(scenario, state, axes.a, axes.b);
    const double e2 = expect_scenario(scenario, state, axes.a, axes.b_prime);
    const double e3 = expect_scenario(scenario, state, axes.a_prime, axes.b);
    const double e4 =
        expect_scenario(scenario, state, axes.a_prime, axes.b_prime);
    // Pairing the terms keeps the canonical maximal-violation case exact:
    // there e1 == e2 and e3 == -e4, so both partial sums are exact doubles.
    return (e1 + e2) + (e3 - e4);
}

double bell_czachor_closed(Rapidity xi) {
    if (!(xi.value >= 0.0)) {
        throw DomainError("rapidity must be nonnegative");
    }
    const double ch = std::cosh(xi.value);
    const double sh = std::sinh(xi.value);
    return -2.0 * (1.0 + ch) / std::sqrt(2.0 + sh * sh);
}

double bell_general_closed(Rapidity xi, Rapidity chi) {
    const DerivedKinematics kin = derived_kinematics(xi, chi);
    const double s = kin.sin_theta;
    const double t = kin.cos_theta;
    const double s2 = s * s;
    // cosh(eta) enters only multiplied by cos(theta); the grouped products
    // stay below overflow for all capped rapidities while naive cosh^2 terms
    // do not.
    const double u = kin.cosh_eta * t;  // cosh(eta) * cos(theta)
    const double m = u * t - s2;        // cosh(eta) cos^2 - sin^2
    const double vst = s * (t + u);     // (1 + cosh(eta)) sin cos
    const double cos2w = 1.0 - 2.0 * kin.sin_omega * kin.sin_omega;
    const double sin2w = 2.0 * kin.sin_omega * kin.cos_omega;

    const double denom1 = std::sqrt(1.0 + s2 + u * u);
    const double denom2 = std::sqrt(s2 + u * u);
    const double braces =
        (m * m - vst * vst) * cos2w - 2.0 * m * vst * sin2w;
    return -2.0 / denom1 - 2.0 * (braces / (denom1 * denom2));
}

MeasurementAxes canonical_axes() {
    return canonical_axes_for(BellKind::psi_minus);
}

MeasurementAxes canonical_axes_for(BellKind state) {
    // These components are unit length by construction (sqrt(0.5) is the
    // correctly rounded 1/sqrt(2)), so they bypass from(): renormalizing
    // through an inexact computed norm would only perturb the last ulp and
    // spoil the exact zero-rapidity Bell value.
    const double r = std::sqrt(0.5);
    const UnitVec3 a{{0.0, r, r}};
    const UnitVec3 a_prime{{0.0, -r, r}};
    const UnitVec3 y_plus{{0.0, 1.0, 0.0}};
    const UnitVec3 y_minus{{0.0, -1.0, 0.0}};
    const UnitVec3 z_plus{{0.0, 0.0, 1.0}};
    const UnitVec3 z_minus{{0.0, 0.0, -1.0}};
    // The (b, b') choices below give C = -4r for each state's correlation
    // tensor: diag(-1,-1,-1), diag(1,1,-1), diag(1,-1,1), diag(-1,1,1).
    switch (state) {
        case BellKind::psi_minus:
            return {a, a_prime, z_plus, y_plus};
        case BellKind::psi_plus:
            return {a, a_prime, z_plus, y_minus};
        case BellKind::phi_plus:
            return {a, a_prime, z_minus, y_plus};
        case BellKind::phi_minus:
            return {a, a_prime, z_minus, y_minus};
    }
    throw DomainError("invalid Bell state");
}

}  // namespace relbell
