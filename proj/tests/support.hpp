#pragma once

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relbell/rng.hpp"
#include "relbell/vec.hpp"

namespace relbell::test {

inline constexpr double kTwoSqrtTwo = 2.8284271247461903;

inline UnitVec3 random_axis(SplitMix64& rng) {
    return UnitVec3::normalized(rng.unit_vector());
}

inline double max_component_diff(const Vec3& u, const Vec3& v) {
    return std::max({std::abs(u.x - v.x), std::abs(u.y - v.y),
                     std::abs(u.z - v.z)});
}

inline double max_component_diff(const UnitVec3& u, const UnitVec3& v) {
    return max_component_diff(u.v, v.v);
}

}  // namespace relbell::test
