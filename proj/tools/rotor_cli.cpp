// rotor: scenario simulation and verification front end.
//
// Subcommands:
//   simulate        integrate a scenario and write the trajectory CSV
//   verify-algebra  run the full bracket/Casimir claim list, emit JSON
//   rank            Jacobian rank certification at a chosen state
//   resonance       best rational approximation of Omega/omega

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "rotor/rotor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

using nlohmann::ordered_json;

ordered_json params_json(const rotor::Parameters& p) {
    return {{"mass", rotor::to_string(p.mass)},
            {"omega", rotor::to_string(p.omega)},
            {"inertia", rotor::to_string(p.inertia)},
            {"gravity", rotor::to_string(p.gravity)}};
}

void write_output(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_simulate(const std::string& config_path, const std::string& out_path) {
    rotor::ScenarioConfig sc = rotor::load_scenario(config_path);
    rotor::Trajectory traj =
        rotor::simulate(sc.potential, sc.params, sc.initial.to_double(), sc.dt, sc.t_final,
                        sc.sample_stride, sc.tracked, sc.method);
    std::ofstream out(out_path);
    if (!out) throw rotor::ConfigError("cannot open output file: " + out_path);
    rotor::write_csv(traj, out);
    std::cout << "wrote " << traj.times.size() << " samples to " << out_path << "\n";
    if (!sc.tracked.empty()) {
        rotor::DriftReport rep = rotor::drift_report(traj);
        for (const auto& [name, e] : rep.entries)
            std::cout << "drift " << name << ": max_abs=" << rotor::format_g17(e.max_abs_deviation)
                      << " max_rel=" << rotor::format_g17(e.max_rel_deviation) << "\n";
    }
    return kExitOk;
}

int cmd_verify_algebra(const std::string& config_path, const std::string& out_path) {
    rotor::ScenarioConfig sc = rotor::load_scenario(config_path);
    rotor::Parameters grav = sc.params;
    if (grav.gravity == 0) grav.gravity = rotor::Rational(49, 5);  // nontrivial gravity for the primed claims
    auto claims = rotor::run_algebra_claims(sc.params, grav);

    ordered_json report;
    report["schema"] = 1;
    report["parameters"] = params_json(sc.params);
    report["gravity_parameters"] = params_json(grav);
    report["claims"] = ordered_json::array();
    bool all_pass = true;
    for (const auto& c : claims) {
        report["claims"].push_back({{"claim-id", c.id},
                                    {"description", c.description},
                                    {"status", c.pass ? "pass" : "fail"},
                                    {"residual-term-count", c.residual_terms},
                                    {"details", c.details}});
        std::cout << (c.pass ? "pass  " : "FAIL  ") << c.id << "\n";
        all_pass = all_pass && c.pass;
    }
    write_output(report, out_path);
    return all_pass ? kExitOk : kExitNotFound;
}

int cmd_rank(const std::string& config_path, const std::string& out_path) {
    rotor::ScenarioConfig sc = rotor::load_scenario(config_path);
    std::vector<std::string> names = sc.analysis.integrals;
    if (names.empty()) names = {"F1", "F2", "G1", "G2", "P_1_1"};
    std::vector<rotor::Observable> obs;
    for (const auto& n : names) obs.push_back(rotor::resolve_observable(n, sc.params));

    rotor::ExactState state;
    if (sc.analysis.state) {
        state = *sc.analysis.state;
    } else {
        // documented generic resonant state: p_theta = I*omega puts the rotor
        // on the (1,1) resonant level set; the spatial part avoids symmetry.
        state = {rotor::Rational(1), rotor::Rational(1, 2), rotor::Rational(0),
                 rotor::Rational(1, 3), rotor::Rational(1, 5), sc.params.inertia * sc.params.omega};
    }
    rotor::RankReport rep = rotor::rank_exact_report(names, obs, state);

    ordered_json j;
    j["schema"] = 1;
    j["observables"] = names;
    j["mode"] = rep.mode;
    j["state"] = {rotor::format_g17(rep.state.x),  rotor::format_g17(rep.state.y),
                  rotor::format_g17(rep.state.theta), rotor::format_g17(rep.state.px),
                  rotor::format_g17(rep.state.py), rotor::format_g17(rep.state.ptheta)};
    j["rank"] = rep.rank;
    if (sc.analysis.expected_rank) j["expected_rank"] = *sc.analysis.expected_rank;
    write_output(j, out_path);
    std::cout << "rank = " << rep.rank << "\n";
    if (sc.analysis.expected_rank && *sc.analysis.expected_rank != rep.rank) return kExitNotFound;
    return kExitOk;
}

int cmd_resonance(double capital_omega, double omega, long max_den, double tol,
                  const std::string& out_path) {
    rotor::ResonanceResult r = rotor::resonance_detect(capital_omega, omega, max_den, tol);
    ordered_json j;
    j["schema"] = 1;
    j["capital_omega"] = r.capital_omega;
    j["omega"] = r.omega;
    j["m"] = r.m;
    j["n"] = r.n;
    j["max_denominator"] = r.max_denominator;
    j["abs_error"] = r.abs_error;
    j["found"] = r.found;
    write_output(j, out_path);
    return r.found ? kExitOk : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor-extended planar Hamiltonian systems: simulation and verification"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    double capital_omega = 0, omega = 1, tol = 1e-9;
    long max_den = 100;

    auto* sim = app.add_subcommand("simulate", "integrate a scenario, write trajectory CSV");
    sim->add_option("--config", config_path, "scenario config file")->required();
    sim->add_option("--out", out_path, "output CSV path")->required();

    auto* ver = app.add_subcommand("verify-algebra", "verify the bracket/Casimir claim list");
    ver->add_option("--config", config_path, "scenario config file")->required();
    ver->add_option("--out", out_path, "JSON report path (stdout when omitted)");

    auto* rnk = app.add_subcommand("rank", "Jacobian rank certification");
    rnk->add_option("--config", config_path, "scenario config file")->required();
    rnk->add_option("--out", out_path, "JSON report path (stdout when omitted)");

    auto* res = app.add_subcommand("resonance", "detect Omega/omega ~ m/n");
    res->add_option("--capital-omega", capital_omega, "rotor angular velocity Omega")->required();
    res->add_option("--omega", omega, "orbital frequency")->required();
    res->add_option("--max-den", max_den, "denominator bound");
    res->add_option("--tol", tol, "acceptance tolerance on |Omega/omega - m/n|");
    res->add_option("--out", out_path, "JSON output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_path);
        if (ver->parsed()) return cmd_verify_algebra(config_path, out_path);
        if (rnk->parsed()) return cmd_rank(config_path, out_path);
        if (res->parsed()) return cmd_resonance(capital_omega, omega, max_den, tol, out_path);
    } catch (const rotor::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rotor::SingularEvaluation& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
