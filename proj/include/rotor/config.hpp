#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotor/dynamics.hpp"
#include "rotor/model.hpp"

namespace rotor {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

namespace cfg {

struct Value {
    enum Kind { Number, String, Array } kind = Number;
    std::string raw;            // Number (verbatim literal) or String contents
    std::vector<Value> items;   // Array
};

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline Value parse_value(const std::string& text);

inline std::vector<Value> split_array(const std::string& inner) {
    std::vector<Value> items;
    int depth = 0;
    bool in_str = false;
    std::string cur;
    for (char ch : inner) {
        if (ch == '"' ) in_str = !in_str;
        if (!in_str) {
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                if (!trim(cur).empty()) items.push_back(parse_value(trim(cur)));
                cur.clear();
                continue;
            }
        }
        cur += ch;
    }
    if (!trim(cur).empty()) items.push_back(parse_value(trim(cur)));
    return items;
}

inline Value parse_value(const std::string& text) {
    Value v;
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        v.kind = Value::String;
        v.raw = text.substr(1, text.size() - 2);
    } else if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw ConfigError("unterminated array: " + text);
        v.kind = Value::Array;
        v.items = split_array(text.substr(1, text.size() - 2));
    } else {
        v.kind = Value::Number;
        v.raw = text;
        try {
            (void)std::stod(text);
        } catch (...) {
            throw ConfigError("not a number: '" + text + "'");
        }
    }
    return v;
}

/// Sectioned key = value text (TOML-like subset: scalars, strings, arrays).
inline std::map<std::string, std::map<std::string, Value>> parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::map<std::string, std::map<std::string, Value>> sections;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // keep '#' inside quotes
            bool in_str = false;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (line[i] == '"') in_str = !in_str;
                if (line[i] == '#' && !in_str) { line = line.substr(0, i); break; }
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            sections[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        if (section.empty()) throw ConfigError("key '" + key + "' outside any section");
        if (sections[section].count(key)) throw ConfigError("duplicate key '" + section + "." + key + "'");
        sections[section][key] = parse_value(trim(line.substr(eq + 1)));
    }
    return sections;
}

/// Rational from either a quoted "p/q" string or a numeric literal (decimals
/// are converted exactly).
inline Rational as_rational(const Value& v, const std::string& key) {
    try {
        return parse_rational(v.raw);
    } catch (const std::exception& e) {
        throw ConfigError("bad rational for '" + key + "': " + e.what());
    }
}

inline double as_double(const Value& v, const std::string& key) {
    if (v.kind == Value::Array) throw ConfigError("'" + key + "' must be a number");
    try {
        if (v.kind == Value::String) return to_double(parse_rational(v.raw));
        return std::stod(v.raw);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "' must be a number");
    }
}

}  // namespace cfg

struct AnalysisConfig {
    std::vector<std::string> integrals;
    std::vector<std::pair<long, long>> candidates;
    long max_denominator = 100;
    double tolerance = 1e-9;
    std::optional<int> expected_rank;
    std::optional<ExactState> state;  // rank evaluation state (theta must be 0)
};

struct ScenarioConfig {
    Parameters params;
    bool omega_exact = true;  // false when omega came from a non-square k/M
    PotentialSpec potential;
    ExactState initial;
    double dt = 1e-3;
    double t_final = 6.283185307179586;
    long sample_stride = 1;
    Method method = Method::Verlet;
    std::vector<std::string> tracked;
    AnalysisConfig analysis;
};

namespace cfg {

inline void check_keys(const std::map<std::string, Value>& sec, const std::string& name,
                       const std::set<std::string>& allowed) {
    for (const auto& [k, _] : sec)
        if (!allowed.count(k)) throw ConfigError("unknown key '" + name + "." + k + "'");
}

}  // namespace cfg

inline ScenarioConfig load_scenario(const std::string& path) {
    using cfg::Value;
    auto sections = cfg::parse_file(path);
    for (const auto& [name, _] : sections)
        if (name != "parameters" && name != "potential" && name != "initial_state" && name != "run" &&
            name != "analysis")
            throw ConfigError("unknown section '" + name + "'");

    ScenarioConfig sc;

    // [parameters]
    if (sections.count("parameters")) {
        auto& sec = sections["parameters"];
        cfg::check_keys(sec, "parameters",
                        {"mass", "omega", "k", "inertia", "rod_length", "gravity", "omega_x", "omega_y"});
        if (sec.count("omega") && sec.count("k")) throw ConfigError("give exactly one of parameters.omega / parameters.k");
        if (sec.count("inertia") && sec.count("rod_length"))
            throw ConfigError("give exactly one of parameters.inertia / parameters.rod_length");
        if (sec.count("mass")) sc.params.mass = cfg::as_rational(sec["mass"], "parameters.mass");
        if (sec.count("omega")) sc.params.omega = cfg::as_rational(sec["omega"], "parameters.omega");
        if (sec.count("k")) {
            Rational ratio = cfg::as_rational(sec["k"], "parameters.k") / sc.params.mass;
            Rational root;
            if (exact_sqrt(ratio, root)) {
                sc.params.omega = root;
            } else {
                sc.params.omega = Rational(std::sqrt(to_double(ratio)));  // float fallback, exact dyadic
                sc.omega_exact = false;
            }
        }
        if (sec.count("inertia")) sc.params.inertia = cfg::as_rational(sec["inertia"], "parameters.inertia");
        if (sec.count("rod_length"))
            sc.params.inertia = rod_inertia(sc.params.mass, cfg::as_rational(sec["rod_length"], "parameters.rod_length"));
        if (sec.count("gravity")) sc.params.gravity = cfg::as_rational(sec["gravity"], "parameters.gravity");
        if (sec.count("omega_x")) sc.params.omega_x = cfg::as_rational(sec["omega_x"], "parameters.omega_x");
        if (sec.count("omega_y")) sc.params.omega_y = cfg::as_rational(sec["omega_y"], "parameters.omega_y");
        try {
            sc.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(std::string("parameters: ") + e.what());
        }
    }

    // [potential]
    if (sections.count("potential")) {
        auto& sec = sections["potential"];
        cfg::check_keys(sec, "potential", {"variant", "alpha", "beta", "gamma"});
        if (!sec.count("variant")) throw ConfigError("potential.variant is required");
        std::string v = sec["variant"].raw;
        if (v == "isotropic") sc.potential = PotentialSpec::isotropic();
        else if (v == "gravity") sc.potential = PotentialSpec::gravity();
        else if (v == "anisotropic") sc.potential = PotentialSpec::anisotropic();
        else if (v == "sw1") sc.potential.kind = PotentialKind::SW_I;
        else if (v == "sw2") sc.potential.kind = PotentialKind::SW_II;
        else if (v == "sw3") sc.potential.kind = PotentialKind::SW_III;
        else if (v == "sw4") sc.potential.kind = PotentialKind::SW_IV;
        else throw ConfigError("unknown potential.variant '" + v + "'");
        if (sec.count("alpha")) sc.potential.alpha = cfg::as_double(sec["alpha"], "potential.alpha");
        if (sec.count("beta")) sc.potential.beta = cfg::as_double(sec["beta"], "potential.beta");
        if (sec.count("gamma")) sc.potential.gamma = cfg::as_double(sec["gamma"], "potential.gamma");
        if (sc.potential.oscillator_family() && (sec.count("alpha") || sec.count("beta") || sec.count("gamma")))
            throw ConfigError("potential." + v + " takes no alpha/beta/gamma coefficients");
    }

    // [initial_state]
    if (sections.count("initial_state")) {
        auto& sec = sections["initial_state"];
        cfg::check_keys(sec, "initial_state", {"x", "y", "theta", "px", "py", "ptheta"});
        auto get = [&](const char* key, Rational& out) {
            if (sec.count(key)) out = cfg::as_rational(sec[key], std::string("initial_state.") + key);
        };
        get("x", sc.initial.x);
        get("y", sc.initial.y);
        get("theta", sc.initial.theta);
        get("px", sc.initial.px);
        get("py", sc.initial.py);
        get("ptheta", sc.initial.ptheta);
    }

    // [run]
    if (sections.count("run")) {
        auto& sec = sections["run"];
        cfg::check_keys(sec, "run", {"dt", "t_final", "sample_stride", "method", "tracked"});
        if (sec.count("dt")) sc.dt = cfg::as_double(sec["dt"], "run.dt");
        if (sec.count("t_final")) sc.t_final = cfg::as_double(sec["t_final"], "run.t_final");
        if (sec.count("sample_stride"))
            sc.sample_stride = static_cast<long>(cfg::as_double(sec["sample_stride"], "run.sample_stride"));
        if (sec.count("method")) {
            std::string m = sec["method"].raw;
            if (m == "analytic") sc.method = Method::Analytic;
            else if (m == "verlet") sc.method = Method::Verlet;
            else throw ConfigError("run.method must be \"analytic\" or \"verlet\"");
        }
        if (sec.count("tracked")) {
            if (sec["tracked"].kind != Value::Array) throw ConfigError("run.tracked must be an array");
            for (const auto& item : sec["tracked"].items) sc.tracked.push_back(item.raw);
        }
        if (sc.dt <= 0) throw ConfigError("run.dt must be positive");
        if (sc.t_final <= 0) throw ConfigError("run.t_final must be positive");
        if (sc.sample_stride < 1) throw ConfigError("run.sample_stride must be >= 1");
    }

    // [analysis]
    if (sections.count("analysis")) {
        auto& sec = sections["analysis"];
        cfg::check_keys(sec, "analysis",
                        {"integrals", "candidates", "max_denominator", "tolerance", "expected_rank", "state"});
        if (sec.count("integrals"))
            for (const auto& item : sec["integrals"].items) sc.analysis.integrals.push_back(item.raw);
        if (sec.count("candidates")) {
            for (const auto& pair : sec["candidates"].items) {
                if (pair.kind != Value::Array || pair.items.size() != 2)
                    throw ConfigError("analysis.candidates entries must be [m, n] pairs");
                sc.analysis.candidates.emplace_back(
                    static_cast<long>(cfg::as_double(pair.items[0], "analysis.candidates.m")),
                    static_cast<long>(cfg::as_double(pair.items[1], "analysis.candidates.n")));
            }
        }
        if (sec.count("max_denominator"))
            sc.analysis.max_denominator =
                static_cast<long>(cfg::as_double(sec["max_denominator"], "analysis.max_denominator"));
        if (sec.count("tolerance")) sc.analysis.tolerance = cfg::as_double(sec["tolerance"], "analysis.tolerance");
        if (sec.count("expected_rank"))
            sc.analysis.expected_rank = static_cast<int>(cfg::as_double(sec["expected_rank"], "analysis.expected_rank"));
        if (sec.count("state")) {
            if (sec["state"].kind != Value::Array || sec["state"].items.size() != 6)
                throw ConfigError("analysis.state must be [x, y, theta, px, py, ptheta]");
            ExactState st;
            Rational* slots[6] = {&st.x, &st.y, &st.theta, &st.px, &st.py, &st.ptheta};
            for (int i = 0; i < 6; ++i)
                *slots[i] = cfg::as_rational(sec["state"].items[static_cast<std::size_t>(i)], "analysis.state");
            sc.analysis.state = st;
        }
    }
    return sc;
}

}  // namespace rotor
