#include "core/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "core/initial_conditions.hpp"
#include "core/snapshot.hpp"

namespace cosmofv {

namespace {

const char* known_keys[] = {
    "test", "N", "Ny", "eps", "k", "kappa", "regime", "t0", "t_end", "snapshots",
    "scheme", "space_order", "integrator", "b_profile", "cfl", "allow_cfl_above_half",
    "theta", "alpha_src", "m", "M", "c_t", "dt_floor", "dt_cap",
    "paper_literal_psi", "paper_literal_q1", "format_version"};

bool key_known(const std::string& k) {
    for (const char* s : known_keys)
        if (k == s) return true;
    return false;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line = 0;  // 0 for defaults
};

using EntryMap = std::map<std::string, Entry>;

double parse_double(const std::string& key, const Entry& e) {
    char* end = nullptr;
    const double v = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0')
        throw ConfigError("invalid number for " + key + ": '" + e.value + "'", e.line);
    return v;
}

int parse_int(const std::string& key, const Entry& e) {
    char* end = nullptr;
    const long v = std::strtol(e.value.c_str(), &end, 10);
    if (end == e.value.c_str() || *end != '\0')
        throw ConfigError("invalid integer for " + key + ": '" + e.value + "'", e.line);
    return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const Entry& e) {
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + e.value + "'", e.line);
}

std::vector<double> parse_list(const std::string& key, const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("empty entry in " + key, e.line);
        out.push_back(parse_double(key, {item, e.line}));
    }
    return out;
}

int line_of(const EntryMap& m, const std::string& key) {
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second.line;
}

}  // namespace

Config parse_config(const std::string& text) {
    EntryMap entries;
    std::stringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", line_no);
        if (!key_known(key)) throw ConfigError("unknown key '" + key + "'", line_no);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
        if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
        entries[key] = {value, line_no};
    }

    const auto test_it = entries.find("test");
    if (test_it == entries.end()) throw ConfigError("missing required key 'test'");
    const BuiltinTest* test = find_builtin(test_it->second.value);
    if (!test)
        throw ConfigError("unknown test '" + test_it->second.value + "' (see list-tests)",
                          test_it->second.line);

    // Defaults from the test definition, then explicit overrides on top.
    EntryMap resolved;
    for (const auto& [k, v] : test->defaults) resolved[k] = {v, 0};
    for (const auto& [k, e] : entries) resolved[k] = e;

    Config cfg;
    cfg.test = test->id;
    cfg.dim = test->dim;

    auto get = [&](const std::string& key) -> const Entry* {
        const auto it = resolved.find(key);
        return it == resolved.end() ? nullptr : &it->second;
    };

    if (const Entry* e = get("N")) cfg.n = parse_int("N", *e);
    if (cfg.n < 3) throw ConfigError("N must be at least 3", line_of(resolved, "N"));
    cfg.ny = cfg.dim == 2 ? cfg.n : 0;
    if (const Entry* e = get("Ny")) {
        if (cfg.dim != 2) throw ConfigError("Ny applies to 2D tests only", e->line);
        cfg.ny = parse_int("Ny", *e);
        if (cfg.ny < 3) throw ConfigError("Ny must be at least 3", e->line);
    }

    if (const Entry* e = get("eps")) cfg.params.eps = parse_double("eps", *e);
    if (const Entry* e = get("k")) cfg.params.k = parse_double("k", *e);
    if (const Entry* e = get("kappa")) cfg.params.kappa = parse_double("kappa", *e);
    if (cfg.params.eps < 0.0) throw ConfigError("eps must be >= 0", line_of(resolved, "eps"));
    if (!(cfg.params.k > 0.0)) throw ConfigError("k must be positive", line_of(resolved, "k"));
    if (cfg.params.eps > 0.0 && !(cfg.params.k < 1.0 / cfg.params.eps))
        throw ConfigError("k must be below the light speed 1/eps", line_of(resolved, "k"));
    if (!(cfg.params.kappa > 0.0))
        throw ConfigError("kappa must be positive", line_of(resolved, "kappa"));

    if (const Entry* e = get("regime")) {
        if (e->value == "expanding") cfg.regime = Regime::expanding;
        else if (e->value == "contracting") cfg.regime = Regime::contracting;
        else if (e->value == "static") cfg.regime = Regime::static_bg;
        else throw ConfigError("regime must be expanding, contracting or static", e->line);
    }

    cfg.t0 = cfg.regime == Regime::contracting ? -1.0 : 1.0;
    if (const Entry* e = get("t0")) {
        const double t0 = parse_double("t0", *e);
        if (cfg.regime == Regime::expanding && t0 != 1.0)
            throw ConfigError("expanding runs start at t0 = 1", e->line);
        if (cfg.regime == Regime::contracting && t0 != -1.0)
            throw ConfigError("contracting runs start at t0 = -1", e->line);
        cfg.t0 = t0;
    }

    if (const Entry* e = get("t_end")) cfg.t_end = parse_double("t_end", *e);
    if (!(cfg.t_end > cfg.t0))
        throw ConfigError("t_end must exceed t0", line_of(resolved, "t_end"));
    if (cfg.regime == Regime::contracting && !(cfg.t_end < 0.0))
        throw ConfigError("contracting runs need t_end < 0", line_of(resolved, "t_end"));

    if (const Entry* e = get("snapshots")) cfg.snapshots = parse_list("snapshots", *e);
    std::sort(cfg.snapshots.begin(), cfg.snapshots.end());
    for (double s : cfg.snapshots)
        if (!(s > cfg.t0) || !(s <= cfg.t_end))
            throw ConfigError("snapshot time " + format_g17(s) + " outside (t0, t_end]",
                              line_of(resolved, "snapshots"));

    if (const Entry* e = get("scheme")) {
        if (e->value == "hll") cfg.scheme = SchemeKind::hll;
        else if (e->value == "wb_hll") cfg.scheme = SchemeKind::wb_hll;
        else throw ConfigError("scheme must be hll or wb_hll", e->line);
    }
    if (const Entry* e = get("space_order")) {
        cfg.space_order = parse_int("space_order", *e);
        if (cfg.space_order != 1 && cfg.space_order != 2)
            throw ConfigError("space_order must be 1 or 2", e->line);
    }
    if (const Entry* e = get("integrator")) {
        if (e->value == "euler") cfg.integrator = Integrator::forward_euler;
        else if (e->value == "rk4") cfg.integrator = Integrator::rk4;
        else if (e->value == "ssprk3") cfg.integrator = Integrator::ssp_rk3;
        else throw ConfigError("integrator must be euler, rk4 or ssprk3", e->line);
    }
    if (const Entry* e = get("b_profile")) {
        if (e->value == "flat") cfg.b_profile = BProfile::flat;
        else if (e->value == "sin2pi") cfg.b_profile = BProfile::sin_2pi;
        else if (e->value == "sincos") cfg.b_profile = BProfile::sin_cos;
        else if (e->value == "gauss2d") cfg.b_profile = BProfile::gauss_2d;
        else throw ConfigError("unknown b_profile '" + e->value + "'", e->line);
        if (cfg.b_profile == BProfile::gauss_2d && cfg.dim != 2)
            throw ConfigError("b_profile gauss2d applies to 2D tests only", e->line);
    }

    if (const Entry* e = get("allow_cfl_above_half"))
        cfg.allow_cfl_above_half = parse_bool("allow_cfl_above_half", *e);
    if (const Entry* e = get("cfl")) cfg.cfl = parse_double("cfl", *e);
    if (!(cfg.cfl > 0.0) || !(cfg.cfl < 1.0))
        throw ConfigError("cfl must lie in (0, 1)", line_of(resolved, "cfl"));
    if (cfg.cfl >= 0.5 && !cfg.allow_cfl_above_half)
        throw ConfigError("cfl >= 0.5 requires allow_cfl_above_half = true",
                          line_of(resolved, "cfl"));

    if (const Entry* e = get("theta")) cfg.numerics.theta = parse_double("theta", *e);
    if (cfg.numerics.theta < 0.0)
        throw ConfigError("theta must be >= 0", line_of(resolved, "theta"));
    if (const Entry* e = get("alpha_src")) cfg.numerics.alpha_src = parse_double("alpha_src", *e);
    if (!(cfg.numerics.alpha_src > 0.0))
        throw ConfigError("alpha_src must be positive", line_of(resolved, "alpha_src"));
    if (const Entry* e = get("m")) cfg.numerics.blend_m = parse_double("m", *e);
    if (const Entry* e = get("M")) cfg.numerics.blend_big_m = parse_double("M", *e);
    if (!(cfg.numerics.blend_m > 0.0) || !(cfg.numerics.blend_big_m > cfg.numerics.blend_m))
        throw ConfigError("blend thresholds need 0 < m < M",
                          std::max(line_of(resolved, "m"), line_of(resolved, "M")));
    if (const Entry* e = get("c_t")) cfg.c_t = parse_double("c_t", *e);
    if (!(cfg.c_t > 0.0) || !(cfg.c_t < 1.0))
        throw ConfigError("c_t must lie in (0, 1)", line_of(resolved, "c_t"));
    if (const Entry* e = get("dt_floor")) cfg.dt_floor = parse_double("dt_floor", *e);
    if (cfg.dt_floor < 0.0)
        throw ConfigError("dt_floor must be >= 0", line_of(resolved, "dt_floor"));
    if (const Entry* e = get("dt_cap")) cfg.dt_cap = parse_double("dt_cap", *e);
    if (cfg.dt_cap < 0.0) throw ConfigError("dt_cap must be >= 0", line_of(resolved, "dt_cap"));
    if (const Entry* e = get("paper_literal_psi"))
        cfg.numerics.paper_literal_psi = parse_bool("paper_literal_psi", *e);
    if (const Entry* e = get("paper_literal_q1"))
        cfg.numerics.paper_literal_q1 = parse_bool("paper_literal_q1", *e);
    if (const Entry* e = get("format_version")) cfg.format_version = parse_int("format_version", *e);
    if (cfg.format_version != 1)
        throw ConfigError("unsupported format_version", line_of(resolved, "format_version"));

    cfg.numerics.scheme = cfg.scheme;
    cfg.numerics.space_order = cfg.space_order;
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RunSpec make_run_spec(const Config& cfg) {
    RunSpec spec;
    spec.dim = cfg.dim;
    spec.n = cfg.n;
    spec.ny = cfg.ny;
    spec.params = cfg.params;
    spec.geom.regime = cfg.regime;
    spec.geom.kappa = cfg.params.kappa;
    spec.geom.b_kind = cfg.b_profile;
    spec.scheme = cfg.numerics;
    spec.method = cfg.integrator;
    spec.ctrl.cfl = cfg.cfl;
    spec.ctrl.dt_floor = cfg.dt_floor;
    spec.ctrl.dt_cap = cfg.dt_cap > 0.0 ? cfg.dt_cap : std::numeric_limits<double>::infinity();
    spec.ctrl.contracting_guard = cfg.c_t;
    spec.ctrl.t_end = cfg.t_end;
    spec.t0 = cfg.t0;
    spec.t_end = cfg.t_end;
    spec.snapshot_times = cfg.snapshots;
    spec.test_id = cfg.test;

    auto add = [&](const std::string& k, const std::string& v) { spec.echo.push_back({k, v}); };
    add("test", cfg.test);
    add("N", std::to_string(cfg.n));
    if (cfg.dim == 2) add("Ny", std::to_string(cfg.ny));
    add("eps", format_g17(cfg.params.eps));
    add("k", format_g17(cfg.params.k));
    add("kappa", format_g17(cfg.params.kappa));
    add("regime", to_string(cfg.regime));
    add("t0", format_g17(cfg.t0));
    add("t_end", format_g17(cfg.t_end));
    if (!cfg.snapshots.empty()) {
        std::string list;
        for (std::size_t i = 0; i < cfg.snapshots.size(); ++i) {
            if (i) list += ',';
            list += format_g17(cfg.snapshots[i]);
        }
        add("snapshots", list);
    }
    add("scheme", to_string(cfg.scheme));
    add("space_order", std::to_string(cfg.space_order));
    add("integrator", to_string(cfg.integrator));
    add("b_profile", to_string(cfg.b_profile));
    add("cfl", format_g17(cfg.cfl));
    add("theta", format_g17(cfg.numerics.theta));
    add("alpha_src", format_g17(cfg.numerics.alpha_src));
    add("m", format_g17(cfg.numerics.blend_m));
    add("M", format_g17(cfg.numerics.blend_big_m));
    add("c_t", format_g17(cfg.c_t));
    add("paper_literal_psi", cfg.numerics.paper_literal_psi ? "true" : "false");
    add("paper_literal_q1", cfg.numerics.paper_literal_q1 ? "true" : "false");
    return spec;
}

std::string describe_builtin_tests() {
    std::string out;
    for (const auto& t : builtin_tests()) {
        out += t.id + " (" + std::to_string(t.dim) + "D): " + t.summary + "\n";
        out += "  defaults:";
        for (const auto& [k, v] : t.defaults) out += " " + k + "=" + v;
        out += "\n";
    }
    return out;
}

}  // namespace cosmofv
