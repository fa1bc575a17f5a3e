#pragma once

#include <array>
#include <cstdint>

#include "relbell/expectation.hpp"
#include "relbell/vec.hpp"

namespace relbell {

// Spherical parameterization of a CHSH configuration: (theta, phi) for each
// of a, a', b, b' in that order. theta in [0, pi], phi in [0, 2pi).
struct AxisAngles {
    std::array<double, 8> angles{};
};

struct OptimizationReport {
    MeasurementAxes best_axes;
    double best_value = 0.0;  // |C| at best_axes
    std::uint64_t iterations = 0;  // summed over all restarts
    std::uint64_t restarts = 0;
    bool converged = false;  // simplex of the winning restart collapsed
};

// (sin t cos p, sin t sin p, cos t).
UnitVec3 spherical_to_unit(double theta, double phi);

MeasurementAxes axes_from_angles(const AxisAngles& angles);
AxisAngles angles_from_axes(const MeasurementAxes& axes);

/**
 * Multi-start simplex descent on -|C| over the eight axis angles. The start
 * list is deterministic: the scenario's corrected canonical axes first, the
 * raw canonical axes second, then seed-derived random configurations up to
 * the requested restart count. A restart converges when its simplex diameter
 * falls below tol (iteration cap 5000); the best restart wins, ties broken by
 * the earlier start. best_value is the objective value evaluated at the
 * returned axes, so recomputing the Bell observable there reproduces it
 * exactly.
 */
OptimizationReport maximize_bell(const Scenario& scenario, BellKind state,
                                 std::uint64_t restarts, std::uint64_t seed,
                                 double tol);

}  // namespace relbell
