#pragma once

#include <variant>

#include "relbell/relkin.hpp"
#include "relbell/vec.hpp"

namespace relbell {

// The four maximally entangled two-qubit states, standard phase conventions.
enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

// A CHSH measurement configuration: two directions per observer.
struct MeasurementAxes {
    UnitVec3 a;
    UnitVec3 a_prime;
    UnitVec3 b;
    UnitVec3 b_prime;
};

// Both EPR particles move along +z with rapidity xi; observers at rest.
struct Czachor {
    Rapidity xi;
};

// Particles move along +/-z with rapidity xi; both observers boosted along -x
// with rapidity chi.
struct OppositeBoost {
    Rapidity xi;
    Rapidity chi;
};

// Particles move with independent rapidities along directions tilted by
// theta_p / theta_q from +z in the x-z plane; observers at rest.
struct Unequal {
    Rapidity xi_p;
    double theta_p = 0.0;
    Rapidity xi_q;
    double theta_q = 0.0;
};

using Scenario = std::variant<Czachor, OppositeBoost, Unequal>;

// Throws DomainError unless all rapidities are in [0, RAPIDITY_CAP] and all
// tilt angles are in [0, pi].
void validate(const Scenario& scenario);

// Coefficients of the boosted correlator on the basis
// (Ax*Bx, Ay*By, Az*Bz, Ax*Bz - Az*Bx), as functions of the Wigner angle.
// For phi_minus and psi_plus the coefficients carry no omega dependence and
// the cross term is identically zero; tests rely on that structural fact.
struct BoostedCoefficients {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
    double xz = 0.0;
};

BoostedCoefficients boosted_coefficients(BellKind state, double sin_omega,
                                         double cos_omega);

// Rest-frame correlator <a.sigma x b.sigma> for the given Bell state.
double expect_nonrel(BellKind state, const UnitVec3& a, const UnitVec3& b);

// Singlet correlator when both particles move along +z with rapidity xi and
// spin is measured with the relativistic spin observable.
// Symmetric under exchange of a and b.
double expect_czachor(const UnitVec3& a, const UnitVec3& b, Rapidity xi);

// Correlator for any Bell state with particles along +/-z (rapidity xi) and
// observers boosted along -x (rapidity chi).
double expect_boosted(BellKind state, const UnitVec3& a, const UnitVec3& b,
                      Rapidity xi, Rapidity chi);

// Singlet correlator for particles with independent momenta in the x-z plane,
// observers at rest (no Wigner rotation of the state).
double expect_unequal(const UnitVec3& a, const UnitVec3& b, Rapidity xi_p,
                      double theta_p, Rapidity xi_q, double theta_q);

// Single-pair correlator dispatched to the scenario's closed form.  Throws
// UnsupportedCombination for scenario/state pairs without one (non-singlet
// unequal momenta).
double expect_scenario(const Scenario& scenario, BellKind state,
                       const UnitVec3& a, const UnitVec3& b);

// CHSH combination E(a,b) + E(a,b') + E(a',b) - E(a',b') using the
// scenario's correlator.
double bell_observable(const Scenario& scenario, BellKind state,
                       const MeasurementAxes& axes);

// Closed form of the CHSH value at canonical axes in the Czachor scenario:
// -2(1+cosh xi)/sqrt(2+sinh^2 xi).
double bell_czachor_closed(Rapidity xi);

// Closed form of the CHSH value at canonical axes in the opposite-boost
// scenario, written directly in terms of the derived kinematics.
double bell_general_closed(Rapidity xi, Rapidity chi);

// Singlet axes giving the maximal rest-frame violation C = -2*sqrt(2):
// a=(0,1,1)/sqrt2, a'=(0,-1,1)/sqrt2, b=z, b'=y.
MeasurementAxes canonical_axes();

// Per-state axes giving C = -2*sqrt(2) in the rest frame.  The observer
// directions differ between states because the rest-frame correlators carry
// different signs on the y and z terms.
MeasurementAxes canonical_axes_for(BellKind state);

}  // namespace relbell
