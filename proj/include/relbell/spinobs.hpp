#pragma once

#include <complex>

#include "relbell/relkin.hpp"
#include "relbell/vec.hpp"

namespace relbell {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<Complex, 4> m{};

    Complex& operator()(int r, int c) { return m[static_cast<size_t>(2 * r + c)]; }
    Complex operator()(int r, int c) const {
        return m[static_cast<size_t>(2 * r + c)];
    }

    static Mat2c identity() { return Mat2c{{1.0, 0.0, 0.0, 1.0}}; }
};

Mat2c operator*(const Mat2c& a, const Mat2c& b);
Mat2c operator+(const Mat2c& a, const Mat2c& b);
Mat2c operator*(Complex s, const Mat2c& a);

/**
 * Effective spin-measurement direction after the momentum-dependent mapping,
 * kept unnormalized together with its norm. The realized observable is
 * (vec . sigma)/norm with eigenvalues +1 and -1.
 */
struct SpinObservable {
    Vec3 vec;
    double norm = 1.0;

    Vec3 unit() const { return {vec.x / norm, vec.y / norm, vec.z / norm}; }
};

struct ObservablePair {
    SpinObservable first;   // particle moving along +z
    SpinObservable second;  // particle moving along -z
};

enum class Side { particle1, particle2 };

/**
 * Axis transformation for a particle boosted along its own momentum (+z) with
 * observers at rest: vec = (a_x, a_y, a_z cosh xi).
 */
SpinObservable boost_axis_czachor(const UnitVec3& a, Rapidity xi);

/**
 * Effective vectors A, B for the counter-moving pair watched from the moving
 * frame. A = M a and B = N b with M, N from axis_map_matrix; norms equal
 * sqrt(1 + sinh^2(eta) proj^2) where proj is the axis component along the
 * boosted momentum direction.
 */
ObservablePair observable_vectors_general(const UnitVec3& a, const UnitVec3& b,
                                          const DerivedKinematics& kin);

/**
 * Effective vector for one particle with momentum direction theta in the x-z
 * plane and rapidity xi, observer at rest.
 */
SpinObservable observable_vectors_unequal(const UnitVec3& a, Rapidity xi,
                                          double theta);

/**
 * The 3x3 matrix realizing the axis -> effective-vector map for one particle.
 * The y row and column are identity; the x-z block has determinant cosh(eta),
 * so the map is invertible for every boost.
 */
Mat3 axis_map_matrix(const DerivedKinematics& kin, Side side);

/** Same map for a single particle with free momentum angle (unequal momenta). */
Mat3 axis_map_matrix_unequal(Rapidity xi, double theta);

/** (v . sigma)/|v| as an explicit matrix. Hermitian, traceless, involutory. */
Mat2c observable_matrix(const Vec3& v);

}  // namespace relbell
