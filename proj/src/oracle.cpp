#include "relbell/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "relbell/errors.hpp"
#include "relbell/rng.hpp"

namespace relbell {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Complex inner(const TwoQubitState& lhs, const TwoQubitState& rhs) {
    Complex sum = 0.0;
    for (size_t i = 0; i < 4; ++i) sum += std::conj(lhs.amp[i]) * rhs.amp[i];
    return sum;
}

void require_hermitian(const Mat2c& op) {
    const double asym = std::max({std::abs(op(0, 1) - std::conj(op(1, 0))),
                                  std::abs(op(0, 0).imag()),
                                  std::abs(op(1, 1).imag())});
    if (asym > 1e-10) {
        throw InvalidOperator("operator is not Hermitian");
    }
}

}  // namespace

double state_norm(const TwoQubitState& s) {
    double sum = 0.0;
    for (const Complex& c : s.amp) sum += std::norm(c);
    return std::sqrt(sum);
}

Mat2c pauli_x() { return Mat2c{{0.0, 1.0, 1.0, 0.0}}; }

Mat2c pauli_y() {
    return Mat2c{{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}};
}

Mat2c pauli_z() { return Mat2c{{1.0, 0.0, 0.0, -1.0}}; }

TwoQubitState bell_state(BellKind kind) {
    switch (kind) {
        case BellKind::phi_plus:
            return {{kInvSqrt2, 0.0, 0.0, kInvSqrt2}};
        case BellKind::phi_minus:
            return {{kInvSqrt2, 0.0, 0.0, -kInvSqrt2}};
        case BellKind::psi_plus:
            return {{0.0, kInvSqrt2, kInvSqrt2, 0.0}};
        case BellKind::psi_minus:
            return {{0.0, kInvSqrt2, -kInvSqrt2, 0.0}};
    }
    throw DomainError("invalid Bell state");
}

TwoQubitState transform_bell(BellKind kind, double omega) {
    if (!std::isfinite(omega)) {
        throw DomainError("rotation angle must be finite");
    }
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    const TwoQubitState phi_plus = bell_state(BellKind::phi_plus);
    const TwoQubitState psi_minus = bell_state(BellKind::psi_minus);
    TwoQubitState out;
    switch (kind) {
        case BellKind::phi_plus:
            for (size_t i = 0; i < 4; ++i) {
                out.amp[i] = c * phi_plus.amp[i] - s * psi_minus.amp[i];
            }
            return out;
        case BellKind::psi_minus:
            for (size_t i = 0; i < 4; ++i) {
                out.amp[i] = c * psi_minus.amp[i] + s * phi_plus.amp[i];
            }
            return out;
        case BellKind::phi_minus:
        case BellKind::psi_plus:
            return bell_state(kind);
    }
    throw DomainError("invalid Bell state");
}

std::pair<Mat2c, Mat2c> per_particle_wigner(double omega) {
    const double c = std::cos(0.5 * omega);
    const double s = std::sin(0.5 * omega);
    // exp(-i omega sigma_y / 2) and its inverse; both real rotations.
    const Mat2c forward{{c, -s, s, c}};
    const Mat2c backward{{c, s, -s, c}};
    return {forward, backward};
}

TwoQubitState kron_apply(const Mat2c& op1, const Mat2c& op2,
                         const TwoQubitState& s) {
    TwoQubitState out;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            Complex sum = 0.0;
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    sum += op1(i, j) * op2(k, l) *
                           s.amp[static_cast<size_t>(2 * j + l)];
                }
            }
            out.amp[static_cast<size_t>(2 * i + k)] = sum;
        }
    }
    return out;
}

double expect_matrix(const TwoQubitState& state, const Mat2c& op_a,
                     const Mat2c& op_b) {
    require_hermitian(op_a);
    require_hermitian(op_b);
    if (std::abs(state_norm(state) - 1.0) > 1e-12) {
        throw DomainError("state is not normalized");
    }
    const Complex value = inner(state, kron_apply(op_a, op_b, state));
    if (std::abs(value.imag()) >= 1e-12) {
        throw NumericalFailure("correlator has a nonvanishing imaginary part");
    }
    return value.real();
}

double sigma_relation_deviation(double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    const TwoQubitState transformed =
        transform_bell(BellKind::psi_minus, omega);
    const TwoQubitState psi_minus = bell_state(BellKind::psi_minus);
    const TwoQubitState phi_plus = bell_state(BellKind::phi_plus);

    const struct {
        Mat2c op1, op2;
        double coef_psi_minus, coef_phi_plus;
    } relations[] = {
        {pauli_x(), pauli_x(), -c, s},
        {pauli_y(), pauli_y(), -c, -s},
        {pauli_z(), pauli_z(), -c, s},
        {pauli_x(), pauli_z(), -s, -c},
        {pauli_z(), pauli_x(), s, c},
    };
    double deviation = 0.0;
    for (const auto& rel : relations) {
        const TwoQubitState lhs = kron_apply(rel.op1, rel.op2, transformed);
        for (size_t i = 0; i < 4; ++i) {
            const Complex expected = rel.coef_psi_minus * psi_minus.amp[i] +
                                     rel.coef_phi_plus * phi_plus.amp[i];
            deviation = std::max(deviation, std::abs(lhs.amp[i] - expected));
        }
    }
    return deviation;
}

bool verify_sigma_relations(double omega) {
    return sigma_relation_deviation(omega) <= 1e-12;
}

double sample_outcomes(const TwoQubitState& state, const Mat2c& op_a,
                       const Mat2c& op_b, std::uint64_t n,
                       std::uint64_t seed) {
    if (n == 0) {
        throw DomainError("sample count must be positive");
    }
    require_hermitian(op_a);
    require_hermitian(op_b);

    const Mat2c id = Mat2c::identity();
    const auto projector = [&](const Mat2c& op, double sign) {
        Mat2c p;
        for (size_t i = 0; i < 4; ++i) p.m[i] = 0.5 * (id.m[i] + sign * op.m[i]);
        return p;
    };

    // Joint Born probabilities for the four (+/-1, +/-1) outcome pairs.
    double prob[4];
    double product[4];
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double sign_a = (i & 2) ? -1.0 : 1.0;
        const double sign_b = (i & 1) ? -1.0 : 1.0;
        const Complex p = inner(state, kron_apply(projector(op_a, sign_a),
                                                  projector(op_b, sign_b),
                                                  state));
        prob[i] = std::max(0.0, p.real());
        product[i] = sign_a * sign_b;
        total += prob[i];
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw NumericalFailure("outcome probabilities do not sum to one");
    }

    double cdf[4];
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += prob[i] / total;
        cdf[i] = acc;
    }
    cdf[3] = 1.0;

    SplitMix64 rng(seed);
    std::int64_t sum = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const double u = rng.uniform();
        int bin = 0;
        while (bin < 3 && u >= cdf[bin]) ++bin;
        sum += static_cast<std::int64_t>(product[bin]);
    }
    return static_cast<double>(sum) / static_cast<double>(n);
}

double oracle_boosted_expectation(BellKind state, const UnitVec3& a,
                                  const UnitVec3& b, Rapidity xi,
                                  Rapidity chi) {
    const DerivedKinematics kin = derived_kinematics(xi, chi);
    const ObservablePair vectors = observable_vectors_general(a, b, kin);
    const auto [u1, u2] = per_particle_wigner(kin.omega_p);
    const TwoQubitState boosted = kron_apply(u1, u2, bell_state(state));
    return expect_matrix(boosted, observable_matrix(vectors.first.vec),
                         observable_matrix(vectors.second.vec));
}

}  // namespace relbell
