#include "relbell/corrected.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "relbell/errors.hpp"
#include "relbell/spinobs.hpp"

namespace relbell {
namespace {

// Unit solution of map * x proportional to target (positive factor). The map
// is block diagonal: the x-z block has determinant block_det >= 1 and the y
// axis passes through untouched, so the inverse is written out directly.
// Entries of the inverse stay O(1) because the adjugate grows exactly as fast
// as the determinant; nothing here can overflow at capped rapidities.
UnitVec3 solve_axis_map(const Mat3& map, double block_det, const Vec3& target) {
    const Vec3 raw{(map(2, 2) * target.x - map(0, 2) * target.z) / block_det,
                   target.y,
                   (-map(2, 0) * target.x + map(0, 0) * target.z) / block_det};
    return UnitVec3::normalized(raw);
}

// Largest componentwise deviation between the forward-mapped corrected axis
// and its target direction.
double forward_residual(const Mat3& map, const UnitVec3& corrected,
                        const Vec3& target) {
    const Vec3 mapped = normalized(map * corrected.v);
    return std::max({std::abs(mapped.x - target.x),
                     std::abs(mapped.y - target.y),
                     std::abs(mapped.z - target.z)});
}

bool wigner_mixed(BellKind state) {
    return state == BellKind::psi_minus || state == BellKind::phi_plus;
}

}  // namespace

UnitVec3 corrected_axis_czachor(const UnitVec3& a, Rapidity xi) {
    const double ch = std::cosh(xi.value);
    // Inverse of diag(1, 1, cosh xi), renormalized. Dividing before taking
    // the norm keeps the z component exact at a = z even when cosh is huge.
    return UnitVec3::normalized(Vec3{a.x(), a.y(), a.z() / ch});
}

CorrectedPair corrected_axes_general(BellKind state, const UnitVec3& a,
                                     const UnitVec3& b, Rapidity xi,
                                     Rapidity chi) {
    const DerivedKinematics kin = derived_kinematics(xi, chi);
    const Mat3 map_a = axis_map_matrix(kin, Side::particle1);
    const Mat3 map_b = axis_map_matrix(kin, Side::particle2);

    Vec3 target_a = a.v;
    Vec3 target_b = b.v;
    if (wigner_mixed(state)) {
        const Mat3 rot_plus =
            Mat3::rotation_y_from_sincos(kin.sin_omega, kin.cos_omega);
        const Mat3 rot_minus =
            Mat3::rotation_y_from_sincos(-kin.sin_omega, kin.cos_omega);
        target_a = rot_plus * target_a;
        target_b = rot_minus * target_b;
    }

    CorrectedPair result;
    result.a_c = solve_axis_map(map_a, kin.cosh_eta, target_a);
    result.b_c = solve_axis_map(map_b, kin.cosh_eta, target_b);
    result.residual = std::max(forward_residual(map_a, result.a_c, target_a),
                               forward_residual(map_b, result.b_c, target_b));
    return result;
}

CorrectedPair corrected_axes_unequal(const UnitVec3& a, const UnitVec3& b,
                                     Rapidity xi_p, double theta_p,
                                     Rapidity xi_q, double theta_q) {
    const Mat3 map_a = axis_map_matrix_unequal(xi_p, theta_p);
    const Mat3 map_b = axis_map_matrix_unequal(xi_q, theta_q);

    CorrectedPair result;
    result.a_c = solve_axis_map(map_a, std::cosh(xi_p.value), a.v);
    result.b_c = solve_axis_map(map_b, std::cosh(xi_q.value), b.v);
    result.residual = std::max(forward_residual(map_a, result.a_c, a.v),
                               forward_residual(map_b, result.b_c, b.v));
    return result;
}

MeasurementAxes corrected_canonical_axes(BellKind state,
                                         const Scenario& scenario) {
    validate(scenario);
    const MeasurementAxes axes = canonical_axes_for(state);
    return std::visit(
        [&](const auto& s) -> MeasurementAxes {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Czachor>) {
                // chi = 0 makes the general solve collapse to the closed-form
                // axis correction for every state (the Wigner angle vanishes).
                const CorrectedPair ab = corrected_axes_general(
                    state, axes.a, axes.b, s.xi, Rapidity{});
                const CorrectedPair primes = corrected_axes_general(
                    state, axes.a_prime, axes.b_prime, s.xi, Rapidity{});
                return {ab.a_c, primes.a_c, ab.b_c, primes.b_c};
            } else if constexpr (std::is_same_v<T, OppositeBoost>) {
                const CorrectedPair ab =
                    corrected_axes_general(state, axes.a, axes.b, s.xi, s.chi);
                const CorrectedPair primes = corrected_axes_general(
                    state, axes.a_prime, axes.b_prime, s.xi, s.chi);
                return {ab.a_c, primes.a_c, ab.b_c, primes.b_c};
            } else {
                if (state != BellKind::psi_minus) {
                    throw UnsupportedCombination(
                        "unequal-momenta correction is defined only for the "
                        "singlet state");
                }
                const CorrectedPair ab = corrected_axes_unequal(
                    axes.a, axes.b, s.xi_p, s.theta_p, s.xi_q, s.theta_q);
                const CorrectedPair primes = corrected_axes_unequal(
                    axes.a_prime, axes.b_prime, s.xi_p, s.theta_p, s.xi_q,
                    s.theta_q);
                return {ab.a_c, primes.a_c, ab.b_c, primes.b_c};
            }
        },
        scenario);
}

double verify_max_violation(BellKind state, const Scenario& scenario,
                            const MeasurementAxes& axes) {
    return std::abs(bell_observable(scenario, state, axes));
}

}  // namespace relbell
