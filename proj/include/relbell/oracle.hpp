#pragma once

#include <cstdint>
#include <utility>

#include "relbell/expectation.hpp"
#include "relbell/relkin.hpp"
#include "relbell/spinobs.hpp"
#include "relbell/vec.hpp"

namespace relbell {

/**
 * Two-qubit amplitudes over the product basis (|uu>, |ud>, |du>, |dd>),
 * particle 1 as the left factor; u/d are the sigma_z eigenstates. This is the
 * brute-force side of the library: every closed-form correlator is checked
 * against 4x4 matrix expectation values built from these states.
 */
struct TwoQubitState {
    std::array<Complex, 4> amp{};
};

double state_norm(const TwoQubitState& s);

Mat2c pauli_x();
Mat2c pauli_y();
Mat2c pauli_z();

// Standard amplitudes of the four Bell states, unit norm.
TwoQubitState bell_state(BellKind kind);

// State after both particles pick up the Wigner rotation omega: psi_minus and
// phi_plus rotate into each other by the angle omega, phi_minus and psi_plus
// are invariant. The physically realized angles lie in [0, pi/2).
TwoQubitState transform_bell(BellKind kind, double omega);

// The per-particle rotations (exp(-i omega sigma_y/2), exp(+i omega sigma_y/2))
// for particles moving along +z and -z. Applying them as a tensor product must
// reproduce transform_bell; the sign split between the particles is fixed by
// that requirement.
std::pair<Mat2c, Mat2c> per_particle_wigner(double omega);

// (op1 x op2) applied to a two-qubit state.
TwoQubitState kron_apply(const Mat2c& op1, const Mat2c& op2,
                         const TwoQubitState& s);

// <state| op_a x op_b |state> for Hermitian single-qubit operators.
// Throws InvalidOperator if either operator deviates from Hermitian by more
// than 1e-10, DomainError for a non-normalized state, NumericalFailure if the
// sandwich has a nonvanishing imaginary part.
double expect_matrix(const TwoQubitState& state, const Mat2c& op_a,
                     const Mat2c& op_b);

// Largest amplitude deviation across the five operator identities that
// reduce the boosted singlet correlator to its closed form: each
// sigma_i x sigma_j applied to the transformed singlet must equal a fixed
// (cos omega, sin omega) combination of the plain singlet and phi_plus
// states.
double sigma_relation_deviation(double omega);

// True when all five identities hold within 1e-12 per amplitude.
bool verify_sigma_relations(double omega);

// Monte-Carlo estimate of expect_matrix for spectrum-{+1,-1} operators:
// n outcomes sampled from the joint Born distribution with a seeded
// generator; deterministic for fixed seed.
double sample_outcomes(const TwoQubitState& state, const Mat2c& op_a,
                       const Mat2c& op_b, std::uint64_t n, std::uint64_t seed);

// Full brute-force correlator for the opposite-boost scenario: per-particle
// Wigner rotation of the state, observable matrices from the mapped
// measurement directions, 4x4 sandwich. Must agree with expect_boosted.
double oracle_boosted_expectation(BellKind state, const UnitVec3& a,
                                  const UnitVec3& b, Rapidity xi,
                                  Rapidity chi);

}  // namespace relbell
