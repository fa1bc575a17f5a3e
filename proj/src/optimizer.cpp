#include "relbell/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relbell/corrected.hpp"
#include "relbell/errors.hpp"
#include "relbell/rng.hpp"

namespace relbell {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoSqrt2 = 2.8284271247461903;
constexpr int kDim = 8;
constexpr std::uint64_t kMaxIterations = 5000;

// Reflection, expansion, contraction, shrink.
constexpr double kAlpha = 1.0;
constexpr double kGamma = 2.0;
constexpr double kRho = 0.5;
constexpr double kSigma = 0.5;
constexpr double kInitialEdge = 0.2;

struct RestartResult {
    AxisAngles best_point;
    double best_f = 0.0;
    std::uint64_t iterations = 0;
    bool converged = false;
};

double simplex_diameter(const std::vector<AxisAngles>& points) {
    double diameter = 0.0;
    for (int k = 0; k < kDim; ++k) {
        double lo = points[0].angles[static_cast<size_t>(k)];
        double hi = lo;
        for (const AxisAngles& p : points) {
            lo = std::min(lo, p.angles[static_cast<size_t>(k)]);
            hi = std::max(hi, p.angles[static_cast<size_t>(k)]);
        }
        diameter = std::max(diameter, hi - lo);
    }
    return diameter;
}

template <typename F>
RestartResult nelder_mead(const F& objective, const AxisAngles& start,
                          double tol) {
    std::vector<AxisAngles> point(kDim + 1, start);
    std::vector<double> value(kDim + 1);
    for (int i = 1; i <= kDim; ++i) {
        point[static_cast<size_t>(i)].angles[static_cast<size_t>(i - 1)] +=
            kInitialEdge;
    }
    for (int i = 0; i <= kDim; ++i) {
        value[static_cast<size_t>(i)] = objective(point[static_cast<size_t>(i)]);
    }

    std::array<size_t, kDim + 1> order;
    RestartResult result;
    while (result.iterations < kMaxIterations) {
        for (size_t i = 0; i <= kDim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return value[a] < value[b]; });
        if (simplex_diameter(point) < tol) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        const size_t best = order[0];
        const size_t worst = order[kDim];
        const size_t second_worst = order[kDim - 1];

        AxisAngles centroid{};
        for (size_t i = 0; i <= kDim; ++i) {
            if (i == worst) continue;
            for (int k = 0; k < kDim; ++k) {
                centroid.angles[static_cast<size_t>(k)] +=
                    point[i].angles[static_cast<size_t>(k)] / kDim;
            }
        }
        const auto blend = [&](double coef) {
            AxisAngles p;
            for (int k = 0; k < kDim; ++k) {
                const size_t ks = static_cast<size_t>(k);
                p.angles[ks] = centroid.angles[ks] +
                               coef * (centroid.angles[ks] -
                                       point[worst].angles[ks]);
            }
            return p;
        };

        const AxisAngles reflected = blend(kAlpha);
        const double f_reflected = objective(reflected);
        if (f_reflected < value[best]) {
            const AxisAngles expanded = blend(kGamma);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                point[worst] = expanded;
                value[worst] = f_expanded;
            } else {
                point[worst] = reflected;
                value[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < value[second_worst]) {
            point[worst] = reflected;
            value[worst] = f_reflected;
            continue;
        }
        const bool outside = f_reflected < value[worst];
        const AxisAngles contracted = blend(outside ? kRho : -kRho);
        const double f_contracted = objective(contracted);
        if (f_contracted < (outside ? f_reflected : value[worst])) {
            point[worst] = contracted;
            value[worst] = f_contracted;
            continue;
        }
        for (size_t i = 0; i <= kDim; ++i) {
            if (i == best) continue;
            for (int k = 0; k < kDim; ++k) {
                const size_t ks = static_cast<size_t>(k);
                point[i].angles[ks] =
                    point[best].angles[ks] +
                    kSigma * (point[i].angles[ks] - point[best].angles[ks]);
            }
            value[i] = objective(point[i]);
        }
    }

    size_t best = 0;
    for (size_t i = 1; i <= kDim; ++i) {
        if (value[i] < value[best]) best = i;
    }
    result.best_point = point[best];
    result.best_f = value[best];
    return result;
}

double wrap_phi(double phi) {
    const double wrapped = std::fmod(phi, 2.0 * kPi);
    return wrapped < 0.0 ? wrapped + 2.0 * kPi : wrapped;
}

}  // namespace

UnitVec3 spherical_to_unit(double theta, double phi) {
    const double st = std::sin(theta);
    return UnitVec3::normalized(
        Vec3{st * std::cos(phi), st * std::sin(phi), std::cos(theta)});
}

MeasurementAxes axes_from_angles(const AxisAngles& a) {
    return {spherical_to_unit(a.angles[0], a.angles[1]),
            spherical_to_unit(a.angles[2], a.angles[3]),
            spherical_to_unit(a.angles[4], a.angles[5]),
            spherical_to_unit(a.angles[6], a.angles[7])};
}

AxisAngles angles_from_axes(const MeasurementAxes& axes) {
    const auto to_angles = [](const UnitVec3& u, double* out) {
        out[0] = std::atan2(std::hypot(u.x(), u.y()), u.z());
        out[1] = wrap_phi(std::atan2(u.y(), u.x()));
    };
    AxisAngles a;
    to_angles(axes.a, &a.angles[0]);
    to_angles(axes.a_prime, &a.angles[2]);
    to_angles(axes.b, &a.angles[4]);
    to_angles(axes.b_prime, &a.angles[6]);
    return a;
}

OptimizationReport maximize_bell(const Scenario& scenario, BellKind state,
                                 std::uint64_t restarts, std::uint64_t seed,
                                 double tol) {
    if (restarts == 0) {
        throw DomainError("restart count must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    validate(scenario);

    const auto objective = [&](const AxisAngles& angles) {
        return -std::abs(bell_observable(scenario, state,
                                         axes_from_angles(angles)));
    };

    std::vector<AxisAngles> starts;
    starts.push_back(
        angles_from_axes(corrected_canonical_axes(state, scenario)));
    if (restarts >= 2) {
        starts.push_back(angles_from_axes(canonical_axes_for(state)));
    }
    SplitMix64 rng(seed);
    while (starts.size() < restarts) {
        AxisAngles a;
        for (int k = 0; k < kDim; k += 2) {
            a.angles[static_cast<size_t>(k)] = rng.uniform(0.0, kPi);
            a.angles[static_cast<size_t>(k + 1)] = rng.uniform(0.0, 2.0 * kPi);
        }
        starts.push_back(a);
    }

    OptimizationReport report;
    report.restarts = restarts;
    bool have_best = false;
    RestartResult best;
    for (const AxisAngles& start : starts) {
        const RestartResult r = nelder_mead(objective, start, tol);
        report.iterations += r.iterations;
        if (!have_best || r.best_f < best.best_f) {
            best = r;
            have_best = true;
        }
    }
    report.best_axes = axes_from_angles(best.best_point);
    report.best_value = -best.best_f;
    report.converged = best.converged;
    if (report.best_value > kTwoSqrt2 + 1e-9) {
        throw NumericalFailure("Bell value exceeds the quantum bound");
    }
    return report;
}

}  // namespace relbell
