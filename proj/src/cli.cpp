#include "relbell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relbell/corrected.hpp"
#include "relbell/errors.hpp"
#include "relbell/expectation.hpp"
#include "relbell/optimizer.hpp"
#include "relbell/oracle.hpp"
#include "relbell/relkin.hpp"
#include "relbell/rng.hpp"

namespace relbell {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

BellKind parse_state(const std::string& name) {
    if (name == "phi+") return BellKind::phi_plus;
    if (name == "phi-") return BellKind::phi_minus;
    if (name == "psi+") return BellKind::psi_plus;
    if (name == "psi-") return BellKind::psi_minus;
    throw DomainError("unknown Bell state: " + name);
}

Vec3 parse_triple(const std::string& text) {
    if (std::count(text.begin(), text.end(), ',') != 2) {
        throw DomainError("malformed vector (expected 'x,y,z'): " + text);
    }
    const size_t c1 = text.find(',');
    const size_t c2 = text.find(',', c1 + 1);
    const std::string fields[3] = {text.substr(0, c1),
                                   text.substr(c1 + 1, c2 - c1 - 1),
                                   text.substr(c2 + 1)};
    Vec3 v;
    double* const components[3] = {&v.x, &v.y, &v.z};
    for (int i = 0; i < 3; ++i) {
        const std::string& field = fields[i];
        char* parse_end = nullptr;
        *components[i] =
            field.empty() ? 0.0 : std::strtod(field.c_str(), &parse_end);
        if (field.empty() || parse_end != field.c_str() + field.size()) {
            throw DomainError("malformed vector (expected 'x,y,z'): " + text);
        }
    }
    return v;
}

UnitVec3 parse_axis(const std::string& text, bool allow_normalize) {
    const Vec3 v = parse_triple(text);
    const double n = norm(v);
    if (!std::isfinite(n) || n == 0.0) {
        throw DomainError("axis has no direction: " + text);
    }
    const double deviation = std::abs(n - 1.0);
    if (deviation <= 1e-6 || (allow_normalize && deviation <= 1e-3)) {
        return UnitVec3::normalized(v);
    }
    throw DomainError(allow_normalize
                          ? "axis is too far from unit length: " + text
                          : "axis is not unit length (pass --normalize to "
                            "accept small deviations): " +
                                text);
}

// Options shared by every command that evaluates a scenario.
struct ScenarioOpts {
    std::string kind;
    double xi = 0.0;
    double chi = 0.0;
    double beta = 0.0;
    double obs_beta = 0.0;
    double xi_p = 0.0;
    double theta_p = 0.0;
    double xi_q = 0.0;
    double theta_q = 0.0;
    bool degrees = false;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* obs_beta_opt = nullptr;
};

void add_scenario_options(CLI::App* cmd, ScenarioOpts& o) {
    cmd->add_option("--scenario", o.kind,
                    "boost scenario: czachor, opposite, or unequal")
        ->required()
        ->check(CLI::IsMember({"czachor", "opposite", "unequal"}));
    auto* xi =
        cmd->add_option("--xi", o.xi, "particle rapidity (czachor/opposite)");
    o.beta_opt = cmd->add_option("--beta", o.beta,
                                 "particle speed in units of c, |beta| < 1 "
                                 "(alternative to --xi)")
                     ->excludes(xi);
    auto* chi =
        cmd->add_option("--chi", o.chi, "observer rapidity (opposite)");
    o.obs_beta_opt =
        cmd->add_option("--obs-beta", o.obs_beta,
                        "observer speed in units of c (alternative to --chi)")
            ->excludes(chi);
    cmd->add_option("--xi-p", o.xi_p, "first particle rapidity (unequal)");
    cmd->add_option("--theta-p", o.theta_p,
                    "first particle direction from +z in the x-z plane "
                    "(unequal)");
    cmd->add_option("--xi-q", o.xi_q, "second particle rapidity (unequal)");
    cmd->add_option("--theta-q", o.theta_q,
                    "second particle direction from +z (unequal)");
    cmd->add_flag("--degrees", o.degrees,
                  "interpret --theta-p/--theta-q as degrees");
}

Scenario build_scenario(const ScenarioOpts& o) {
    const double angle_scale = o.degrees ? kPi / 180.0 : 1.0;
    const double xi =
        o.beta_opt->count() > 0 ? rapidity_from_beta(o.beta).value : o.xi;
    const double chi = o.obs_beta_opt->count() > 0
                           ? rapidity_from_beta(o.obs_beta).value
                           : o.chi;
    Scenario scenario;
    if (o.kind == "czachor") {
        scenario = Czachor{Rapidity(xi)};
    } else if (o.kind == "opposite") {
        scenario = OppositeBoost{Rapidity(xi), Rapidity(chi)};
    } else {
        scenario = Unequal{Rapidity(o.xi_p), o.theta_p * angle_scale,
                           Rapidity(o.xi_q), o.theta_q * angle_scale};
    }
    validate(scenario);
    return scenario;
}

void add_state_option(CLI::App* cmd, std::string& state) {
    cmd->add_option("--state", state,
                    "Bell state: phi+, phi-, psi+, psi- (default psi-)")
        ->check(CLI::IsMember({"phi+", "phi-", "psi+", "psi-"}));
}

void print_vector(std::ostream& out, const UnitVec3& v) {
    out << fmt(v.x()) << ' ' << fmt(v.y()) << ' ' << fmt(v.z()) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Bell-test observables for relativistically boosted "
                 "entangled pairs"};
    app.name("relbell");
    app.require_subcommand(1);

    // wigner
    auto* wigner_cmd = app.add_subcommand(
        "wigner", "Wigner rotation angle for the standard boost geometry");
    double w_xi = 0.0, w_chi = 0.0, w_beta = 0.0, w_obs_beta = 0.0;
    auto* w_xi_opt =
        wigner_cmd->add_option("--xi", w_xi, "particle rapidity");
    auto* w_beta_opt =
        wigner_cmd->add_option("--beta", w_beta,
                               "particle speed in units of c")
            ->excludes(w_xi_opt);
    auto* w_chi_opt =
        wigner_cmd->add_option("--chi", w_chi, "observer rapidity");
    auto* w_obs_beta_opt =
        wigner_cmd->add_option("--obs-beta", w_obs_beta,
                               "observer speed in units of c")
            ->excludes(w_chi_opt);

    // expect
    auto* expect_cmd = app.add_subcommand(
        "expect", "joint spin correlator for one pair of axes");
    ScenarioOpts expect_scenario_opts;
    add_scenario_options(expect_cmd, expect_scenario_opts);
    std::string expect_state = "psi-";
    add_state_option(expect_cmd, expect_state);
    std::string expect_axis_a, expect_axis_b;
    expect_cmd->add_option("--axis-a", expect_axis_a, "axis a as 'x,y,z'")
        ->required();
    expect_cmd->add_option("--axis-b", expect_axis_b, "axis b as 'x,y,z'")
        ->required();
    bool expect_normalize = false;
    expect_cmd->add_flag("--normalize", expect_normalize,
                         "renormalize axes within 1e-3 of unit length");

    // bell
    auto* bell_cmd =
        app.add_subcommand("bell", "CHSH Bell observable for four axes");
    ScenarioOpts bell_scenario_opts;
    add_scenario_options(bell_cmd, bell_scenario_opts);
    std::string bell_state_name = "psi-";
    add_state_option(bell_cmd, bell_state_name);
    std::string bell_axes[4];
    bell_cmd->add_option("--axis-a", bell_axes[0], "axis a as 'x,y,z'");
    bell_cmd->add_option("--axis-a-prime", bell_axes[1],
                         "axis a' as 'x,y,z'");
    bell_cmd->add_option("--axis-b", bell_axes[2], "axis b as 'x,y,z'");
    bell_cmd->add_option("--axis-b-prime", bell_axes[3],
                         "axis b' as 'x,y,z'");
    bool bell_canonical = false;
    bell_cmd->add_flag("--canonical", bell_canonical,
                       "use the state's canonical maximal-violation axes");
    bool bell_normalize = false;
    bell_cmd->add_flag("--normalize", bell_normalize,
                       "renormalize axes within 1e-3 of unit length");

    // correct
    auto* correct_cmd = app.add_subcommand(
        "correct", "measurement axes restoring the rest-frame correlator");
    ScenarioOpts correct_scenario_opts;
    add_scenario_options(correct_cmd, correct_scenario_opts);
    std::string correct_state = "psi-";
    add_state_option(correct_cmd, correct_state);
    std::string correct_axis_a, correct_axis_b;
    correct_cmd->add_option("--axis", correct_axis_a,
                            "axis to correct (observer a) as 'x,y,z'")
        ->required();
    correct_cmd->add_option("--axis-b", correct_axis_b,
                            "axis to correct for observer b");
    double correct_tol = 1e-9;
    correct_cmd->add_option("--tol", correct_tol,
                            "largest acceptable solve residual");
    bool correct_normalize = false;
    correct_cmd->add_flag("--normalize", correct_normalize,
                          "renormalize axes within 1e-3 of unit length");

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep",
        "CSV of raw and corrected Bell values over a rapidity grid");
    double sweep_xi_min = 0.0, sweep_xi_max = 3.0;
    double sweep_chi_min = 0.0, sweep_chi_max = 0.0;
    std::uint32_t sweep_xi_steps = 7, sweep_chi_steps = 1;
    sweep_cmd->add_option("--xi-min", sweep_xi_min, "first particle rapidity");
    sweep_cmd->add_option("--xi-max", sweep_xi_max, "last particle rapidity");
    sweep_cmd->add_option("--xi-steps", sweep_xi_steps,
                          "number of particle-rapidity grid points");
    sweep_cmd->add_option("--chi-min", sweep_chi_min,
                          "first observer rapidity");
    sweep_cmd->add_option("--chi-max", sweep_chi_max,
                          "last observer rapidity");
    sweep_cmd->add_option("--chi-steps", sweep_chi_steps,
                          "number of observer-rapidity grid points");
    std::string sweep_state = "psi-";
    add_state_option(sweep_cmd, sweep_state);
    std::string sweep_out;
    sweep_cmd->add_option("--out", sweep_out,
                          "output path (stdout when omitted)");

    // optimize
    auto* optimize_cmd = app.add_subcommand(
        "optimize", "search measurement axes maximizing |C|");
    ScenarioOpts optimize_scenario_opts;
    add_scenario_options(optimize_cmd, optimize_scenario_opts);
    std::string optimize_state = "psi-";
    add_state_option(optimize_cmd, optimize_state);
    std::uint64_t optimize_restarts = 4;
    optimize_cmd->add_option("--restarts", optimize_restarts,
                             "number of local searches");
    std::uint64_t optimize_seed = 42;
    optimize_cmd->add_option("--seed", optimize_seed,
                             "seed for the random restarts");
    double optimize_tol = 1e-10;
    optimize_cmd->add_option("--tol", optimize_tol,
                             "simplex-diameter convergence threshold");
    bool optimize_strict = false;
    optimize_cmd->add_flag("--strict", optimize_strict,
                           "exit with status 3 unless converged");

    // check
    auto* check_cmd = app.add_subcommand(
        "check", "randomized self-check of closed forms against the "
                 "matrix oracle");
    std::uint64_t check_seed = 42;
    check_cmd->add_option("--seed", check_seed, "seed for random inputs");
    std::uint64_t check_trials = 1000;
    check_cmd->add_option("--trials", check_trials,
                          "number of random correlator comparisons");
    bool check_inject_fault = false;
    check_cmd->add_flag("--inject-fault", check_inject_fault)->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(wigner_cmd)) {
            const double xi = w_beta_opt->count() > 0
                                  ? rapidity_from_beta(w_beta).value
                                  : w_xi;
            const double chi = w_obs_beta_opt->count() > 0
                                   ? rapidity_from_beta(w_obs_beta).value
                                   : w_chi;
            out << fmt(wigner_angle(Rapidity(xi), Rapidity(chi))) << '\n';
            return 0;
        }

        if (app.got_subcommand(expect_cmd)) {
            const Scenario scenario = build_scenario(expect_scenario_opts);
            const BellKind state = parse_state(expect_state);
            const UnitVec3 a = parse_axis(expect_axis_a, expect_normalize);
            const UnitVec3 b = parse_axis(expect_axis_b, expect_normalize);
            out << fmt(expect_scenario(scenario, state, a, b)) << '\n';
            return 0;
        }

        if (app.got_subcommand(bell_cmd)) {
            const Scenario scenario = build_scenario(bell_scenario_opts);
            const BellKind state = parse_state(bell_state_name);
            MeasurementAxes axes;
            if (bell_canonical) {
                axes = canonical_axes_for(state);
            } else {
                for (const std::string& text : bell_axes) {
                    if (text.empty()) {
                        throw DomainError(
                            "provide --canonical or all four of --axis-a, "
                            "--axis-a-prime, --axis-b, --axis-b-prime");
                    }
                }
                axes = {parse_axis(bell_axes[0], bell_normalize),
                        parse_axis(bell_axes[1], bell_normalize),
                        parse_axis(bell_axes[2], bell_normalize),
                        parse_axis(bell_axes[3], bell_normalize)};
            }
            out << fmt(bell_observable(scenario, state, axes)) << '\n';
            return 0;
        }

        if (app.got_subcommand(correct_cmd)) {
            const Scenario scenario = build_scenario(correct_scenario_opts);
            const BellKind state = parse_state(correct_state);
            const UnitVec3 a = parse_axis(correct_axis_a, correct_normalize);

            if (std::holds_alternative<Czachor>(scenario) &&
                correct_axis_b.empty()) {
                print_vector(out, corrected_axis_czachor(
                                      a, std::get<Czachor>(scenario).xi));
                return 0;
            }
            if (correct_axis_b.empty()) {
                throw DomainError(
                    "this scenario corrects axes in pairs; pass --axis-b");
            }
            const UnitVec3 b = parse_axis(correct_axis_b, correct_normalize);
            CorrectedPair pair;
            if (std::holds_alternative<Czachor>(scenario)) {
                pair = corrected_axes_general(
                    state, a, b, std::get<Czachor>(scenario).xi, Rapidity{});
            } else if (std::holds_alternative<OppositeBoost>(scenario)) {
                const auto& s = std::get<OppositeBoost>(scenario);
                pair = corrected_axes_general(state, a, b, s.xi, s.chi);
            } else {
                if (state != BellKind::psi_minus) {
                    throw UnsupportedCombination(
                        "unequal-momenta correction is defined only for the "
                        "singlet state");
                }
                const auto& s = std::get<Unequal>(scenario);
                pair = corrected_axes_unequal(a, b, s.xi_p, s.theta_p, s.xi_q,
                                              s.theta_q);
            }
            if (!(pair.residual <= correct_tol)) {
                throw NumericalFailure("corrected-axis residual " +
                                       fmt(pair.residual) +
                                       " exceeds tolerance");
            }
            print_vector(out, pair.a_c);
            print_vector(out, pair.b_c);
            return 0;
        }

        if (app.got_subcommand(sweep_cmd)) {
            if (sweep_xi_steps == 0 || sweep_chi_steps == 0) {
                throw DomainError("grid step counts must be positive");
            }
            const BellKind state = parse_state(sweep_state);
            std::ofstream file;
            std::ostream* os = &out;
            if (!sweep_out.empty()) {
                file.open(sweep_out, std::ios::binary);
                if (!file) {
                    throw DomainError("cannot open output file: " + sweep_out);
                }
                os = &file;
            }
            const auto grid = [](double lo, double hi, std::uint32_t steps,
                                 std::uint32_t i) {
                return steps == 1 ? lo
                                  : lo + (hi - lo) * static_cast<double>(i) /
                                             static_cast<double>(steps - 1);
            };
            *os << "xi,chi,omega,bell_raw,bell_corrected\n";
            for (std::uint32_t i = 0; i < sweep_xi_steps; ++i) {
                for (std::uint32_t j = 0; j < sweep_chi_steps; ++j) {
                    const Rapidity xi(grid(sweep_xi_min, sweep_xi_max,
                                           sweep_xi_steps, i));
                    const Rapidity chi(grid(sweep_chi_min, sweep_chi_max,
                                            sweep_chi_steps, j));
                    const Scenario scenario = OppositeBoost{xi, chi};
                    validate(scenario);
                    const double omega = wigner_angle(xi, chi);
                    const double raw = bell_observable(
                        scenario, state, canonical_axes_for(state));
                    const double corrected = bell_observable(
                        scenario, state,
                        corrected_canonical_axes(state, scenario));
                    *os << fmt(xi.value) << ',' << fmt(chi.value) << ','
                        << fmt(omega) << ',' << fmt(raw) << ','
                        << fmt(corrected) << '\n';
                }
            }
            os->flush();
            if (!os->good()) {
                throw DomainError("failed writing sweep output");
            }
            return 0;
        }

        if (app.got_subcommand(optimize_cmd)) {
            const Scenario scenario = build_scenario(optimize_scenario_opts);
            const BellKind state = parse_state(optimize_state);
            const OptimizationReport report = maximize_bell(
                scenario, state, optimize_restarts, optimize_seed,
                optimize_tol);
            out << "best " << fmt(report.best_value) << '\n';
            out << "a ";
            print_vector(out, report.best_axes.a);
            out << "a_prime ";
            print_vector(out, report.best_axes.a_prime);
            out << "b ";
            print_vector(out, report.best_axes.b);
            out << "b_prime ";
            print_vector(out, report.best_axes.b_prime);
            out << "iterations " << report.iterations << '\n';
            out << "restarts " << report.restarts << '\n';
            out << "converged " << (report.converged ? 1 : 0) << '\n';
            if (optimize_strict && !report.converged) {
                throw NumericalFailure(
                    "optimizer did not converge within the iteration cap");
            }
            return 0;
        }

        // check
        if (check_trials == 0) {
            throw DomainError("trial count must be positive");
        }
        SplitMix64 rng(check_seed);
        const BellKind kinds[4] = {BellKind::phi_plus, BellKind::phi_minus,
                                   BellKind::psi_plus, BellKind::psi_minus};
        const auto state_name = [](BellKind k) -> const char* {
            switch (k) {
                case BellKind::phi_plus: return "phi+";
                case BellKind::phi_minus: return "phi-";
                case BellKind::psi_plus: return "psi+";
                case BellKind::psi_minus: return "psi-";
            }
            return "?";
        };
        const auto triple = [](const UnitVec3& u) {
            return fmt(u.x()) + "," + fmt(u.y()) + "," + fmt(u.z());
        };

        double correlator_dev = 0.0;
        std::string worst_tuple;
        for (std::uint64_t t = 0; t < check_trials; ++t) {
            const BellKind state = kinds[rng.next() % 4];
            const Rapidity xi(rng.uniform(0.0, 5.0));
            const Rapidity chi(rng.uniform(0.0, 5.0));
            const UnitVec3 a = UnitVec3::normalized(rng.unit_vector());
            const UnitVec3 b = UnitVec3::normalized(rng.unit_vector());
            double reference = oracle_boosted_expectation(state, a, b, xi, chi);
            if (check_inject_fault) reference = -reference;
            const double closed = expect_boosted(state, a, b, xi, chi);
            const double dev = std::abs(closed - reference);
            if (dev > correlator_dev) {
                correlator_dev = dev;
                worst_tuple = std::string("state=") + state_name(state) +
                              " xi=" + fmt(xi.value) +
                              " chi=" + fmt(chi.value) + " a=" + triple(a) +
                              " b=" + triple(b);
            }
        }

        double transform_dev = 0.0;
        double sigma_dev = 0.0;
        for (int t = 0; t < 50; ++t) {
            const double omega = rng.uniform(0.0, kPi / 2.0);
            const auto [u1, u2] = per_particle_wigner(omega);
            for (const BellKind kind : kinds) {
                const TwoQubitState direct =
                    kron_apply(u1, u2, bell_state(kind));
                const TwoQubitState table = transform_bell(kind, omega);
                for (size_t i = 0; i < 4; ++i) {
                    transform_dev =
                        std::max(transform_dev,
                                 std::abs(direct.amp[i] - table.amp[i]));
                }
            }
            sigma_dev = std::max(sigma_dev, sigma_relation_deviation(omega));
        }

        out << "correlator max deviation " << fmt(correlator_dev) << '\n';
        out << "transform max deviation " << fmt(transform_dev) << '\n';
        out << "sigma max deviation " << fmt(sigma_dev) << '\n';
        if (correlator_dev > 1e-10 || transform_dev > 1e-12 ||
            sigma_dev > 1e-12) {
            if (correlator_dev > 1e-10 && !worst_tuple.empty()) {
                err << "fail: " << worst_tuple << '\n';
            }
            throw NumericalFailure("self-check deviation above tolerance");
        }
        return 0;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace relbell
