#pragma once

#include <iosfwd>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ringkepler/model.hpp"
#include "ringkepler/verify.hpp"

namespace ringkepler::cli {

enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kConfigError = 2 };

/// Raised for anything the user can fix in the configuration; maps to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { spectrum, eval, verify, interbasis, enumerate };
enum class Format { csv, json };
enum class Basis { spherical, parabolic, both };
enum class EvalGrid { ray, theta };

/// Fully resolved and validated settings for one invocation.
struct RunConfig {
    Command command = Command::spectrum;
    ModelParams params;
    Format format = Format::csv;
    std::string output;  ///< empty means stdout

    // spectrum, verify
    std::optional<HalfInt> n_max;
    std::vector<HalfInt> m_filter;
    Basis basis = Basis::spherical;

    // eval, interbasis, enumerate
    std::optional<HalfInt> n;
    std::optional<HalfInt> j;
    std::optional<HalfInt> m;
    std::optional<int> n1;
    std::optional<int> n2;
    std::optional<HalfInt> m_parabolic;
    std::optional<HalfInt> m_spherical;

    // eval sampling
    EvalGrid grid = EvalGrid::ray;
    double r_min = 0.1;
    double r_max = 10.0;
    double r = 1.0;
    double theta = 0.5;
    double theta_min = 0.0;
    double theta_max = std::numbers::pi;
    double phi = 0.0;
    int points = 50;

    Tolerances tolerances;
};

/// Raw key/value settings from one source. Keys are the long flag names
/// without leading dashes, e.g. "n-max" or "tol-fd".
using Layer = std::map<std::string, std::string>;

/// Every key accepted on the command line or in a config file.
const std::vector<std::string>& known_keys();

/// Flat "key = value" file; '#' starts a comment, blank lines are skipped.
/// Unknown keys and malformed lines throw ConfigError.
Layer parse_config_text(const std::string& text, const std::string& origin = "config");
Layer read_config_file(const std::string& path);

/// RINGKEPLER_TOL_{ALL,IDENTITY,QUADRATURE,FD,X,SLOPE} from the environment.
Layer environment_layer();

/// Resolves layers ordered from highest to lowest precedence into a config.
RunConfig resolve(Command command, const std::vector<Layer>& layers_high_to_low);

/// One output cell: empty, integer, real, text or flag.
using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

/// Result of a command: a table plus metadata describing it.
struct Document {
    std::string schema;       ///< e.g. "ringkepler.spectrum/1"
    std::string conventions;  ///< one-line description for the CSV header
    std::vector<std::pair<std::string, Cell>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

Document cmd_spectrum(const RunConfig& cfg);
Document cmd_eval(const RunConfig& cfg);
Document cmd_enumerate(const RunConfig& cfg);
Document cmd_interbasis(const RunConfig& cfg);
/// passed receives whether every check passed.
Document cmd_verify(const RunConfig& cfg, bool& passed);

/// "%.16e" for finite reals; "nan", "inf", "-inf" otherwise (null in JSON).
std::string format_real(double v);
std::string to_csv(const Document& doc);
std::string to_json(const Document& doc);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringkepler::cli
