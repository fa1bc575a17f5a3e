#include "support.hpp"

#include <array>
#include <cmath>

#include "relbell/expectation.hpp"
#include "relbell/oracle.hpp"

using namespace relbell;
using relbell::test::kTwoSqrtTwo;
using relbell::test::random_axis;

namespace {

constexpr std::array<BellKind, 4> kStates = {
    BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
    BellKind::psi_minus};

// Rest-frame correlation tensors, diagonal for every Bell state.
std::array<double, 3> tensor_diagonal(BellKind state) {
    switch (state) {
        case BellKind::phi_plus: return {1.0, -1.0, 1.0};
        case BellKind::phi_minus: return {-1.0, 1.0, 1.0};
        case BellKind::psi_plus: return {1.0, 1.0, -1.0};
        default: return {-1.0, -1.0, -1.0};
    }
}

}  // namespace

TEST_CASE("rest-frame correlator realizes the diagonal correlation tensor") {
    const UnitVec3 axes[3] = {UnitVec3{{1.0, 0.0, 0.0}},
                              UnitVec3{{0.0, 1.0, 0.0}},
                              UnitVec3{{0.0, 0.0, 1.0}}};
    for (BellKind state : kStates) {
        const std::array<double, 3> diag = tensor_diagonal(state);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double e = expect_nonrel(state, axes[i], axes[j]);
                CHECK(e == (i == j ? diag[static_cast<size_t>(i)] : 0.0));
            }
        }
    }
}

TEST_CASE("rest-frame correlator agrees with the matrix sandwich") {
    SplitMix64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const BellKind state = kStates[i % 4];
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double closed = expect_nonrel(state, a, b);
        const double matrix = expect_matrix(
            bell_state(state), observable_matrix(a.v),
            observable_matrix(b.v));
        CHECK(std::abs(closed - matrix) <= 1e-12);
        CHECK(std::abs(closed) <= 1.0 + 1e-15);
    }
}

TEST_CASE("aligned-boost correlator fixed points") {
    const UnitVec3 x{{1.0, 0.0, 0.0}};
    const UnitVec3 z{{0.0, 0.0, 1.0}};
    // Axes orthogonal to the momentum never decohere.
    CHECK(expect_czachor(x, x, Rapidity{0.0}) == -1.0);
    CHECK(expect_czachor(x, x, Rapidity{2.0}) == -1.0);
    CHECK(expect_czachor(x, x, Rapidity{300.0}) == -1.0);
    // Axes along the momentum rescale in numerator and denominator alike.
    CHECK(std::abs(expect_czachor(z, z, Rapidity{1.0}) + 1.0) <= 1e-12);
    CHECK(std::abs(expect_czachor(z, z, Rapidity{5.0}) + 1.0) <= 1e-12);
}

TEST_CASE("aligned-boost correlator reference value") {
    const double r = std::sqrt(0.5);
    const UnitVec3 a{{0.0, r, r}};
    const UnitVec3 z{{0.0, 0.0, 1.0}};
    CHECK(std::abs(expect_czachor(a, z, Rapidity{1.0}) -
                   (-0.83918894010337897)) <= 5e-16);
}

TEST_CASE("aligned-boost correlator is exchange symmetric and flat at zero boost") {
    SplitMix64 rng(32);
    for (int i = 0; i < 50; ++i) {
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double xi = rng.uniform(0.0, 4.0);
        CHECK(expect_czachor(a, b, Rapidity{xi}) ==
              expect_czachor(b, a, Rapidity{xi}));
        CHECK(expect_czachor(a, b, Rapidity{0.0}) == -dot(a.v, b.v));
    }
}

TEST_CASE("boosted coefficients are omega-free for the invariant states") {
    SplitMix64 rng(33);
    for (int i = 0; i < 25; ++i) {
        const double omega = rng.uniform(0.0, 1.5);
        const double s = std::sin(omega);
        const double c = std::cos(omega);
        const BoostedCoefficients fm = boosted_coefficients(BellKind::phi_minus, s, c);
        CHECK(fm.xx == -1.0);
        CHECK(fm.yy == 1.0);
        CHECK(fm.zz == 1.0);
        CHECK(fm.xz == 0.0);
        const BoostedCoefficients sp = boosted_coefficients(BellKind::psi_plus, s, c);
        CHECK(sp.xx == 1.0);
        CHECK(sp.yy == 1.0);
        CHECK(sp.zz == -1.0);
        CHECK(sp.xz == 0.0);
        // The two mixing states differ only by an overall sign pattern.
        const BoostedCoefficients fp = boosted_coefficients(BellKind::phi_plus, s, c);
        const BoostedCoefficients sm = boosted_coefficients(BellKind::psi_minus, s, c);
        CHECK(fp.xx == -sm.xx);
        CHECK(fp.zz == -sm.zz);
        CHECK(fp.xz == -sm.xz);
        CHECK(fp.yy == -1.0);
        CHECK(sm.yy == -1.0);
        CHECK(std::abs(fp.xx - (1.0 - 2.0 * s * s)) <= 1e-15);
        CHECK(std::abs(fp.xz - 2.0 * s * c) <= 1e-15);
    }
}

TEST_CASE("opposite-boost correlator reduces to the aligned form at chi 0") {
    SplitMix64 rng(34);
    for (int i = 0; i < 100; ++i) {
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double xi = rng.uniform(0.0, 4.0);
        const double general =
            expect_boosted(BellKind::psi_minus, a, b, Rapidity{xi}, Rapidity{0.0});
        CHECK(std::abs(general - expect_czachor(a, b, Rapidity{xi})) <= 1e-12);
    }
}

TEST_CASE("opposite-boost correlator at xi 0 depends on chi only via the axis maps") {
    SplitMix64 rng(35);
    for (int i = 0; i < 50; ++i) {
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double chi = rng.uniform(0.0, 4.0);
        const double ch = std::cosh(chi);
        const double sh = std::sinh(chi);
        // At xi = 0 the momenta are deflected fully into the observer's motion:
        // the stretch acts on the x components and no Wigner mixing occurs.
        const double num = a.x() * b.x() * ch * ch + a.y() * b.y() + a.z() * b.z();
        const double denom = std::hypot(1.0, sh * a.x()) * std::hypot(1.0, sh * b.x());
        const double expected = -num / denom;
        const double got =
            expect_boosted(BellKind::psi_minus, a, b, Rapidity{0.0}, Rapidity{chi});
        CHECK(std::abs(got - expected) <= 1e-12);
    }
}

TEST_CASE("opposite-boost correlator agrees with the matrix oracle") {
    SplitMix64 rng(36);
    double worst = 0.0;
    for (int i = 0; i < 250; ++i) {
        const BellKind state = kStates[i % 4];
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double xi = rng.uniform(0.0, 3.0);
        const double chi = rng.uniform(0.0, 3.0);
        const double closed =
            expect_boosted(state, a, b, Rapidity{xi}, Rapidity{chi});
        const double oracle =
            oracle_boosted_expectation(state, a, b, Rapidity{xi}, Rapidity{chi});
        worst = std::max(worst, std::abs(closed - oracle));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("scenario dispatch covers every closed form") {
    SplitMix64 rng(37);
    const UnitVec3 a = random_axis(rng);
    const UnitVec3 b = random_axis(rng);
    CHECK(expect_scenario(Czachor{Rapidity{1.5}}, BellKind::psi_minus, a, b) ==
          expect_czachor(a, b, Rapidity{1.5}));
    CHECK(expect_scenario(Czachor{Rapidity{1.5}}, BellKind::phi_plus, a, b) ==
          expect_boosted(BellKind::phi_plus, a, b, Rapidity{1.5}, Rapidity{0.0}));
    CHECK(expect_scenario(OppositeBoost{Rapidity{1.0}, Rapidity{2.0}},
                          BellKind::psi_plus, a, b) ==
          expect_boosted(BellKind::psi_plus, a, b, Rapidity{1.0}, Rapidity{2.0}));
    CHECK(expect_scenario(
              Unequal{Rapidity{1.0}, 0.3, Rapidity{2.0}, 1.1},
              BellKind::psi_minus, a, b) ==
          expect_unequal(a, b, Rapidity{1.0}, 0.3, Rapidity{2.0}, 1.1));
    CHECK_THROWS_AS(expect_scenario(
                        Unequal{Rapidity{1.0}, 0.0, Rapidity{1.0}, 0.0},
                        BellKind::phi_plus, a, b),
                    UnsupportedCombination);
}

TEST_CASE("independent-momenta correlator limits") {
    SplitMix64 rng(38);
    for (int i = 0; i < 40; ++i) {
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        // At zero rapidity the axis map degenerates to a rotation by twice
        // the momentum angle (the direction enters the map once on each side
        // of the stretch), so the correlator is the singlet one between the
        // doubly rotated axes, not between a and b themselves.
        const auto rot2 = [](const Vec3& v, double theta) {
            const double ca = std::cos(2.0 * theta);
            const double sa = std::sin(2.0 * theta);
            return Vec3{v.x * ca - v.z * sa, v.y, v.x * sa + v.z * ca};
        };
        CHECK(std::abs(expect_unequal(a, b, Rapidity{0.0}, 0.7, Rapidity{0.0},
                                      2.1) +
                       dot(rot2(a.v, 0.7), rot2(b.v, 2.1))) <= 1e-12);
        // Back-to-back momenta along z with equal rapidity reproduce the
        // opposite-boost scenario watched from the rest frame.
        const double xi = rng.uniform(0.0, 3.0);
        const double pair = expect_unequal(a, b, Rapidity{xi}, 0.0,
                                           Rapidity{xi}, 3.14159265358979323846);
        const double slice = expect_boosted(BellKind::psi_minus, a, b,
                                            Rapidity{xi}, Rapidity{0.0});
        CHECK(std::abs(pair - slice) <= 1e-10);
    }
}

TEST_CASE("independent-momenta correlator matches a direct matrix sandwich") {
    SplitMix64 rng(39);
    for (int i = 0; i < 40; ++i) {
        const UnitVec3 a = random_axis(rng);
        const UnitVec3 b = random_axis(rng);
        const double xi_p = rng.uniform(0.0, 3.0);
        const double xi_q = rng.uniform(0.0, 3.0);
        const double th_p = rng.uniform(0.0, 3.1);
        const double th_q = rng.uniform(0.0, 3.1);
        const SpinObservable oa = observable_vectors_unequal(a, Rapidity{xi_p}, th_p);
        const SpinObservable ob = observable_vectors_unequal(b, Rapidity{xi_q}, th_q);
        const double matrix = expect_matrix(bell_state(BellKind::psi_minus),
                                            observable_matrix(oa.vec),
                                            observable_matrix(ob.vec));
        CHECK(std::abs(expect_unequal(a, b, Rapidity{xi_p}, th_p, Rapidity{xi_q},
                                      th_q) - matrix) <= 1e-12);
    }
}

TEST_CASE("canonical axes reach the maximal violation exactly at rest") {
    for (BellKind state : kStates) {
        const MeasurementAxes axes = canonical_axes_for(state);
        CHECK(bell_observable(Czachor{Rapidity{0.0}}, state, axes) ==
              -2.0 * std::sqrt(2.0));
        CHECK(bell_observable(OppositeBoost{Rapidity{0.0}, Rapidity{0.0}}, state,
                              axes) == -2.0 * std::sqrt(2.0));
    }
}

TEST_CASE("canonical axes geometry") {
    const MeasurementAxes axes = canonical_axes();
    const double r = std::sqrt(0.5);
    CHECK(axes.a.y() == r);
    CHECK(axes.a.z() == r);
    CHECK(axes.a_prime.y() == -r);
    CHECK(axes.a_prime.z() == r);
    CHECK(axes.b.z() == 1.0);
    CHECK(axes.b_prime.y() == 1.0);
    CHECK(dot(axes.a.v, axes.a_prime.v) == 0.0);
    CHECK(dot(axes.b.v, axes.b_prime.v) == 0.0);
    // The generic accessor is the singlet configuration.
    const MeasurementAxes singlet = canonical_axes_for(BellKind::psi_minus);
    CHECK(test::max_component_diff(axes.a, singlet.a) == 0.0);
    CHECK(test::max_component_diff(axes.b, singlet.b) == 0.0);
    CHECK(test::max_component_diff(axes.b_prime, singlet.b_prime) == 0.0);
}

TEST_CASE("bell observable along the aligned-boost curve") {
    // Reference value on the generic evaluation path.
    CHECK(std::abs(bell_observable(Czachor{Rapidity{2.0}}, BellKind::psi_minus,
                                   canonical_axes()) -
                   (-2.4466504336339483)) <= 5e-16);
    for (double xi : {0.0, 0.25, 0.5, 1.0, 1.7, 2.0, 3.0, 5.0, 10.0}) {
        const double curve = bell_observable(Czachor{Rapidity{xi}},
                                             BellKind::psi_minus, canonical_axes());
        CHECK(std::abs(curve - bell_czachor_closed(Rapidity{xi})) <= 1e-12);
    }
}

TEST_CASE("bell observable never exceeds the quantum bound") {
    SplitMix64 rng(40);
    for (int i = 0; i < 120; ++i) {
        const MeasurementAxes axes{random_axis(rng), random_axis(rng),
                                   random_axis(rng), random_axis(rng)};
        const BellKind state = kStates[i % 4];
        const Scenario scenario =
            (i % 2 == 0)
                ? Scenario{Czachor{Rapidity{rng.uniform(0.0, 3.0)}}}
                : Scenario{OppositeBoost{Rapidity{rng.uniform(0.0, 3.0)},
                                         Rapidity{rng.uniform(0.0, 3.0)}}};
        const double c = bell_observable(scenario, state, axes);
        CHECK(std::abs(c) <= kTwoSqrtTwo + 1e-9);
    }
}

TEST_CASE("closed aligned-boost curve against frozen references") {
    const double expected[] = {-2.8284271247461903, -2.8233521670410662,
                               -2.7660578382976801, -2.4466504336339487,
                               -2.0267665593851771, -2.0001815914733125, -2.0};
    const double xs[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 40.0};
    for (int i = 0; i < 7; ++i) {
        CHECK(std::abs(bell_czachor_closed(Rapidity{xs[i]}) - expected[i]) <=
              1e-12);
    }
    // The violation decays monotonically toward the classical bound.
    for (int i = 1; i < 7; ++i) {
        CHECK(bell_czachor_closed(Rapidity{xs[i]}) >
              bell_czachor_closed(Rapidity{xs[i - 1]}));
    }
    CHECK(std::abs(bell_czachor_closed(Rapidity{40.0}) + 2.0) <= 1e-8);
    CHECK_THROWS_AS(bell_czachor_closed(Rapidity{-0.5}), DomainError);
}

TEST_CASE("closed opposite-boost surface reduces to its edges") {
    for (int i = 0; i < 20; ++i) {
        const double xi = 0.21 * i;
        CHECK(std::abs(bell_general_closed(Rapidity{xi}, Rapidity{0.0}) -
                       bell_czachor_closed(Rapidity{xi})) <= 1e-12);
        const double chi = 0.21 * i;
        CHECK(std::abs(bell_general_closed(Rapidity{0.0}, Rapidity{chi}) +
                       kTwoSqrtTwo) <= 1e-10);
    }
    CHECK(std::isfinite(
        bell_general_closed(Rapidity{RAPIDITY_CAP}, Rapidity{RAPIDITY_CAP})));
}

TEST_CASE("closed opposite-boost surface matches the generic evaluation") {
    SplitMix64 rng(41);
    for (int i = 0; i < 25; ++i) {
        const double xi = rng.uniform(0.0, 3.0);
        const double chi = rng.uniform(0.0, 3.0);
        const double generic = bell_observable(
            OppositeBoost{Rapidity{xi}, Rapidity{chi}}, BellKind::psi_minus,
            canonical_axes());
        CHECK(std::abs(generic - bell_general_closed(Rapidity{xi}, Rapidity{chi})) <=
              1e-10);
    }
}

TEST_CASE("scenario validation rejects out-of-range parameters") {
    CHECK_THROWS_AS(validate(Czachor{Rapidity{-1.0}}), DomainError);
    CHECK_THROWS_AS(validate(OppositeBoost{Rapidity{1.0}, Rapidity{-0.1}}),
                    DomainError);
    CHECK_THROWS_AS(validate(Unequal{Rapidity{1.0}, -0.1, Rapidity{1.0}, 0.0}),
                    DomainError);
    CHECK_THROWS_AS(validate(Unequal{Rapidity{1.0}, 0.0, Rapidity{1.0}, 3.5}),
                    DomainError);
    CHECK_NOTHROW(validate(Czachor{Rapidity{0.0}}));
    CHECK_NOTHROW(validate(Unequal{Rapidity{1.0}, 0.0, Rapidity{1.0},
                                   3.14159265358979323846}));
}
