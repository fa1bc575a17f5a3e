#pragma once

#include "relbell/expectation.hpp"
#include "relbell/relkin.hpp"
#include "relbell/vec.hpp"

namespace relbell {

/**
 * A pair of measurement directions that restores the rest-frame correlator in
 * a boosted frame. residual is the largest componentwise deviation between the
 * forward-mapped corrected directions and their targets, over both particles;
 * it is a self-check of the linear solve and stays far below 1e-9.
 */
struct CorrectedPair {
    UnitVec3 a_c;
    UnitVec3 b_c;
    double residual = 0.0;
};

// Corrected axis for the co-moving scenario. Closed form: divide the z
// component by cosh(xi) and renormalize; this is the exact inverse of the
// axis stretch caused by the boost.
UnitVec3 corrected_axis_czachor(const UnitVec3& a, Rapidity xi);

// Corrected axes for the opposite-boost scenario. For psi_minus and phi_plus
// the targets are the input axes rotated about y by the Wigner angle (+omega
// for particle 1, -omega for particle 2), because the boost mixes those two
// states; phi_minus and psi_plus are boost-invariant and keep the plain axes
// as targets. Each corrected axis is the unit solution of (axis map) * x
// proportional to target.
CorrectedPair corrected_axes_general(BellKind state, const UnitVec3& a,
                                     const UnitVec3& b, Rapidity xi,
                                     Rapidity chi);

// Corrected axes for the unequal-momenta scenario (singlet only; the
// observers are at rest so no Wigner rotation enters the targets).
CorrectedPair corrected_axes_unequal(const UnitVec3& a, const UnitVec3& b,
                                     Rapidity xi_p, double theta_p,
                                     Rapidity xi_q, double theta_q);

// The state's canonical axes with every direction corrected for the given
// scenario; evaluating the Bell observable on the result restores the
// maximal violation -2*sqrt(2).
MeasurementAxes corrected_canonical_axes(BellKind state,
                                         const Scenario& scenario);

// |C| evaluated with the provided (presumably corrected) axes.
double verify_max_violation(BellKind state, const Scenario& scenario,
                            const MeasurementAxes& axes);

}  // namespace relbell
