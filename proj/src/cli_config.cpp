#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ringkepler/cli.hpp"
#include "ringkepler/error.hpp"

namespace ringkepler::cli {

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "s",         "s2",        "c1",     "c2",       "format",         "output",       "n-max",
        "basis",     "n",         "j",      "m",        "n1",             "n2",           "m-parabolic",
        "m-spherical", "grid",    "r-min",  "r-max",    "r",              "theta",        "theta-min",
        "theta-max", "phi",       "points", "tol",      "tol-identity",   "tol-quadrature", "tol-fd",
        "tol-x",     "tol-slope",
    };
    return keys;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_known(const std::string& key) {
    const auto& k = known_keys();
    return std::find(k.begin(), k.end(), key) != k.end();
}

double parse_real(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x)) {
        throw ConfigError(key + ": expected a finite real number, got '" + v + "'");
    }
    return x;
}

long long parse_integer(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size()) throw ConfigError(key + ": expected an integer, got '" + v + "'");
    return x;
}

HalfInt parse_half(const std::string& key, const std::string& v) {
    try {
        return HalfInt::parse(v);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

std::vector<HalfInt> parse_half_list(const std::string& key, const std::string& v) {
    std::vector<HalfInt> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_half(key, trim(item)));
    return out;
}

class Resolver {
public:
    explicit Resolver(const std::vector<Layer>& layers) : layers_(layers) {}

    const std::string* find(const std::string& key) const {
        for (const auto& layer : layers_) {
            auto it = layer.find(key);
            if (it != layer.end()) return &it->second;
        }
        return nullptr;
    }

    std::optional<double> real(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<double>(parse_real(key, *v)) : std::nullopt;
    }
    std::optional<HalfInt> half(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<HalfInt>(parse_half(key, *v)) : std::nullopt;
    }
    std::optional<long long> integer(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<long long>(parse_integer(key, *v)) : std::nullopt;
    }

    // A specific key beats the catch-all within one layer; layers keep their order.
    std::optional<double> tolerance(const std::string& key) const {
        for (const auto& layer : layers_) {
            for (const std::string& k : {key, std::string("tol")}) {
                auto it = layer.find(k);
                if (it != layer.end()) return parse_real(k, it->second);
            }
        }
        return std::nullopt;
    }

    HalfInt charge() const {
        for (const auto& layer : layers_) {
            const bool has_s = layer.count("s") > 0;
            const bool has_s2 = layer.count("s2") > 0;
            if (has_s && has_s2) throw ConfigError("give the monopole charge as either s or s2, not both");
            if (has_s2) return HalfInt::from_twice(static_cast<int>(parse_integer("s2", layer.at("s2"))));
            if (has_s) return parse_half("s", layer.at("s"));
        }
        return HalfInt::from_int(0);
    }

private:
    const std::vector<Layer>& layers_;
};

template <class Enum>
Enum pick(const std::string& key, const std::string& v, std::initializer_list<std::pair<const char*, Enum>> options) {
    std::string allowed;
    for (const auto& [name, value] : options) {
        if (v == name) return value;
        allowed += (allowed.empty() ? "" : "|") + std::string(name);
    }
    throw ConfigError(key + ": expected " + allowed + ", got '" + v + "'");
}

HalfInt require_level(const char* key, std::optional<HalfInt> n, const ModelParams& params) {
    if (!n) throw ConfigError(std::string(key) + " is required for this command");
    const HalfInt lowest = params.s.abs() + HalfInt::from_int(1);
    if (!n->same_parity(params.s)) {
        throw ConfigError(std::string(key) + " = " + n->str() + " must differ from s = " + params.s.str() +
                          " by an integer");
    }
    if (*n < lowest) throw ConfigError(std::string(key) + " = " + n->str() + " must be at least |s| + 1 = " + lowest.str());
    return *n;
}

}  // namespace

Layer parse_config_text(const std::string& text, const std::string& origin) {
    Layer out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!is_known(key)) throw ConfigError(where + ": unknown key '" + key + "'");
        if (out.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        out[key] = value;
    }
    return out;
}

Layer read_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

Layer environment_layer() {
    static const std::pair<const char*, const char*> vars[] = {
        {"RINGKEPLER_TOL_ALL", "tol"},          {"RINGKEPLER_TOL_IDENTITY", "tol-identity"},
        {"RINGKEPLER_TOL_QUADRATURE", "tol-quadrature"}, {"RINGKEPLER_TOL_FD", "tol-fd"},
        {"RINGKEPLER_TOL_X", "tol-x"},          {"RINGKEPLER_TOL_SLOPE", "tol-slope"},
    };
    Layer out;
    for (const auto& [var, key] : vars) {
        if (const char* v = std::getenv(var)) out[key] = v;
    }
    return out;
}

RunConfig resolve(Command command, const std::vector<Layer>& layers) {
    const Resolver r(layers);
    RunConfig cfg;
    cfg.command = command;
    try {
        cfg.params = validate_params(r.charge(), r.real("c1").value_or(0.0), r.real("c2").value_or(0.0));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    const ModelParams& p = cfg.params;

    cfg.format = command == Command::verify ? Format::json : Format::csv;
    if (const auto* v = r.find("format")) cfg.format = pick<Format>("format", *v, {{"csv", Format::csv}, {"json", Format::json}});
    if (const auto* v = r.find("output")) cfg.output = *v;

    const std::pair<const char*, double Tolerances::*> tols[] = {
        {"tol-identity", &Tolerances::identity}, {"tol-quadrature", &Tolerances::quadrature},
        {"tol-fd", &Tolerances::fd},             {"tol-x", &Tolerances::x},
        {"tol-slope", &Tolerances::slope},
    };
    for (const auto& [key, member] : tols) {
        if (auto t = r.tolerance(key)) {
            if (*t < 0.0) throw ConfigError(std::string(key) + " must be nonnegative");
            cfg.tolerances.*member = *t;
        }
    }

    cfg.n = r.half("n");
    cfg.j = r.half("j");
    cfg.m_parabolic = r.half("m-parabolic");
    cfg.m_spherical = r.half("m-spherical");
    if (auto v = r.integer("n1")) cfg.n1 = static_cast<int>(*v);
    if (auto v = r.integer("n2")) cfg.n2 = static_cast<int>(*v);

    switch (command) {
        case Command::spectrum:
        case Command::verify: {
            const HalfInt fallback = p.s.abs() + HalfInt::from_int(3);
            cfg.n_max = require_level("n-max", r.half("n-max").value_or(fallback), p);
            if (const auto* v = r.find("m")) cfg.m_filter = parse_half_list("m", *v);
            if (const auto* v = r.find("basis")) {
                cfg.basis = pick<Basis>("basis", *v,
                                        {{"spherical", Basis::spherical}, {"parabolic", Basis::parabolic}, {"both", Basis::both}});
            }
            break;
        }
        case Command::enumerate: {
            cfg.n = require_level("n", cfg.n, p);
            cfg.basis = Basis::both;
            if (const auto* v = r.find("basis")) {
                cfg.basis = pick<Basis>("basis", *v,
                                        {{"spherical", Basis::spherical}, {"parabolic", Basis::parabolic}, {"both", Basis::both}});
            }
            break;
        }
        case Command::interbasis: {
            cfg.n = require_level("n", cfg.n, p);
            cfg.m = r.half("m");
            const std::optional<HalfInt> mp = cfg.m_parabolic ? cfg.m_parabolic : cfg.m;
            const std::optional<HalfInt> ms = cfg.m_spherical ? cfg.m_spherical : cfg.m;
            if (!mp || !ms) throw ConfigError("interbasis needs m (or both m-parabolic and m-spherical)");
            if (*mp != *ms) {
                throw ConfigError("selection rule: parabolic m = " + mp->str() + " and spherical m = " + ms->str() +
                                  " differ, the overlap block is empty");
            }
            cfg.m = mp;
            const auto allowed = allowed_m(p, *cfg.n);
            if (std::find(allowed.begin(), allowed.end(), *cfg.m) == allowed.end()) {
                throw ConfigError("m = " + cfg.m->str() + " is not allowed at n = " + cfg.n->str());
            }
            break;
        }
        case Command::eval: {
            cfg.basis = Basis::spherical;
            if (const auto* v = r.find("basis")) {
                cfg.basis = pick<Basis>("basis", *v, {{"spherical", Basis::spherical}, {"parabolic", Basis::parabolic}});
            }
            cfg.m = r.half("m");
            if (!cfg.m) throw ConfigError("eval needs m");
            try {
                if (cfg.basis == Basis::spherical) {
                    if (!cfg.n || !cfg.j) throw ConfigError("spherical eval needs n, j and m");
                    check_state(p, SphericalState{*cfg.n, *cfg.j, *cfg.m});
                    energy(p, *cfg.m, *cfg.n);
                } else {
                    if (!cfg.n1 || !cfg.n2) throw ConfigError("parabolic eval needs n1, n2 and m");
                    const ParabolicState st{*cfg.n1, *cfg.n2, *cfg.m};
                    check_state(p, st);
                    energy(p, st.m, principal_number(p, st));
                }
            } catch (const std::logic_error& e) {
                throw ConfigError(std::string("invalid quantum numbers: ") + e.what());
            }
            if (const auto* v = r.find("grid")) cfg.grid = pick<EvalGrid>("grid", *v, {{"ray", EvalGrid::ray}, {"theta", EvalGrid::theta}});
            cfg.r_min = r.real("r-min").value_or(cfg.r_min);
            cfg.r_max = r.real("r-max").value_or(cfg.r_max);
            cfg.r = r.real("r").value_or(cfg.r);
            cfg.theta = r.real("theta").value_or(cfg.theta);
            cfg.theta_min = r.real("theta-min").value_or(cfg.theta_min);
            cfg.theta_max = r.real("theta-max").value_or(std::numbers::pi);
            cfg.phi = r.real("phi").value_or(cfg.phi);
            if (auto v = r.integer("points")) cfg.points = static_cast<int>(*v);
            if (cfg.points < 1 || cfg.points > 1000000) throw ConfigError("points must lie in [1, 1000000]");
            auto in_theta = [](double t) { return t >= 0.0 && t <= std::numbers::pi; };
            if (cfg.grid == EvalGrid::ray) {
                if (!(cfg.r_min > 0.0) || cfg.r_max < cfg.r_min) throw ConfigError("need 0 < r-min <= r-max");
                if (!in_theta(cfg.theta)) throw ConfigError("theta must lie in [0, pi]");
            } else {
                if (!(cfg.r > 0.0)) throw ConfigError("r must be positive");
                if (!in_theta(cfg.theta_min) || !in_theta(cfg.theta_max) || cfg.theta_max < cfg.theta_min) {
                    throw ConfigError("need 0 <= theta-min <= theta-max <= pi");
                }
            }
            break;
        }
    }
    return cfg;
}

}  // namespace ringkepler::cli
