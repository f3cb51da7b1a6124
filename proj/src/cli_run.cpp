#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "ringkepler/cli.hpp"

namespace ringkepler::cli {

namespace {

struct Subcommand {
    CLI::App* app = nullptr;
    Command command = Command::spectrum;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::string config_path;

    void add(const std::string& key, const std::string& help) {
        options[key] = app->add_option("--" + key, values[key], help);
    }

    Layer given() const {
        Layer out;
        for (const auto& [key, opt] : options) {
            if (opt->count() > 0) out[key] = values.at(key);
        }
        return out;
    }
};

void add_common(Subcommand& sc) {
    sc.add("s2", "twice the monopole charge, e.g. 1 for s = 1/2");
    sc.add("s", "monopole charge as an integer or a fraction k/2");
    sc.add("c1", "ring-shape strength c1 >= 0");
    sc.add("c2", "ring-shape strength c2 >= 0");
    sc.add("format", "csv or json");
    sc.add("output", "write to this file instead of stdout");
    sc.app->add_option("--config", sc.config_path, "flat key = value file; command-line flags take precedence");
}

void add_tolerances(Subcommand& sc) {
    sc.add("tol", "set every tolerance");
    sc.add("tol-identity", "closed-form identities (default 1e-10)");
    sc.add("tol-quadrature", "quadrature norms and unitarity (default 1e-8)");
    sc.add("tol-fd", "finite-difference eigenvalues and residuals (default 1e-6)");
    sc.add("tol-x", "extra integral eigenvalues (default 1e-5)");
    sc.add("tol-slope", "distance of the convergence order from 2 (default 0.2)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of the generalized MIC-Kepler system", "ringkepler"};
    app.require_subcommand(1, 1);

    std::vector<Subcommand> subs(5);
    subs[0].app = app.add_subcommand("spectrum", "energies and separation constants up to n-max");
    subs[0].command = Command::spectrum;
    subs[1].app = app.add_subcommand("eval", "sample one state along a ray or a theta scan");
    subs[1].command = Command::eval;
    subs[2].app = app.add_subcommand("verify", "run the numerical verification suite");
    subs[2].command = Command::verify;
    subs[3].app = app.add_subcommand("interbasis", "parabolic-spherical overlap matrix at fixed (n, m)");
    subs[3].command = Command::interbasis;
    subs[4].app = app.add_subcommand("enumerate", "list the spherical and parabolic states of level n");
    subs[4].command = Command::enumerate;
    for (auto& sc : subs) add_common(sc);

    subs[0].add("n-max", "highest principal number (default |s| + 3)");
    subs[0].add("m", "comma-separated list of m values to keep");
    subs[0].add("basis", "spherical, parabolic or both");

    subs[1].add("basis", "spherical (default) or parabolic");
    subs[1].add("n", "principal number of a spherical state");
    subs[1].add("j", "angular number of a spherical state");
    subs[1].add("m", "azimuthal number");
    subs[1].add("n1", "parabolic number along xi");
    subs[1].add("n2", "parabolic number along eta");
    subs[1].add("grid", "ray (fixed theta, r from r-min to r-max) or theta (fixed r)");
    subs[1].add("r-min", "first radius of a ray (default 0.1)");
    subs[1].add("r-max", "last radius of a ray (default 10)");
    subs[1].add("r", "radius of a theta scan (default 1)");
    subs[1].add("theta", "polar angle of a ray (default 0.5)");
    subs[1].add("theta-min", "first angle of a theta scan (default 0)");
    subs[1].add("theta-max", "last angle of a theta scan (default pi)");
    subs[1].add("phi", "azimuth of every sample (default 0)");
    subs[1].add("points", "number of samples (default 50)");

    subs[2].add("n-max", "highest principal number (default |s| + 3)");
    add_tolerances(subs[2]);

    subs[3].add("n", "principal number");
    subs[3].add("m", "azimuthal number shared by both bases");
    subs[3].add("m-parabolic", "azimuthal number of the parabolic states");
    subs[3].add("m-spherical", "azimuthal number of the spherical states");

    subs[4].add("n", "principal number");
    subs[4].add("basis", "spherical, parabolic or both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    Subcommand* chosen = nullptr;
    for (auto& sc : subs) {
        if (sc.app->parsed()) chosen = &sc;
    }

    try {
        std::vector<Layer> layers{chosen->given()};
        if (!chosen->config_path.empty()) layers.push_back(read_config_file(chosen->config_path));
        layers.push_back(environment_layer());
        const RunConfig cfg = resolve(chosen->command, layers);

        bool passed = true;
        Document doc;
        switch (cfg.command) {
            case Command::spectrum: doc = cmd_spectrum(cfg); break;
            case Command::eval: doc = cmd_eval(cfg); break;
            case Command::verify: doc = cmd_verify(cfg, passed); break;
            case Command::interbasis: doc = cmd_interbasis(cfg); break;
            case Command::enumerate: doc = cmd_enumerate(cfg); break;
        }
        const std::string text = cfg.format == Format::json ? to_json(doc) : to_csv(doc);
        if (cfg.output.empty()) {
            out << text;
            out.flush();
        } else {
            std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
            if (!file) throw ConfigError("cannot open output file '" + cfg.output + "'");
            file << text;
            if (!file.flush()) throw std::runtime_error("failed writing '" + cfg.output + "'");
        }
        if (!passed) {
            err << "ringkepler: verification failed\n";
            return kNumericalFailure;
        }
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "ringkepler: error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::logic_error& e) {
        // Domain, range and parity violations all stem from the requested labels.
        err << "ringkepler: error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "ringkepler: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace ringkepler::cli
