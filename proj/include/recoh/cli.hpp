#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "recoh/quadrature.hpp"

namespace recoh::cli {

// All inputs are dimensionless groups. Runs work in units T = 1, so
// omega_bar = omega_bar_T, R = ratio_RT, lambda = 2 pi / omega_bar and
// V = lambda^3 / lambda3_over_V. Emission times are given as t0 * omega_bar.
struct Parameters {
  double r = 1.0;
  double theta = 0.0;
  double omega_bar_T = 3.34;
  double ratio_RT = 0.1;
  double lambda3_over_V = 1.0;
  double t0_omega = 0.0;
  double delta_omega_ratio = 0.1;
  double solid_angle = 0.1;
  double R_over_lambda = 1.0;
};

enum class Command { SingleMode, Band, Oracle, EstimateCavity, EstimateEmptySpace, Sweep };

struct SweepAxis {
  std::string name;  // parameter flag name, e.g. "omega-bar-T"
  std::vector<double> values;
};

struct RunConfig {
  Command command = Command::SingleMode;
  Parameters params;
  int t0_grid = 32;
  int modes = 256;
  std::string grid = "default";
  std::vector<SweepAxis> axes;
  QuadratureConfig quadrature;
  std::string output;  // empty: standard output
};

/// Invalid configuration; the message names the field (and file line when
/// the value came from a config file).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;
inline constexpr int exit_numerical = 2;

/// Names accepted by --axis and the [sweep] config section.
const std::vector<std::string>& parameter_names();

/// Parameter field by flag name; throws ConfigError for unknown names.
double& parameter(Parameters& params, const std::string& name);

/// "a,b,c" (explicit list), "start:stop:count" (linear) or
/// "start:stop:count:log" (geometric).
std::vector<double> parse_grid(const std::string& spec);

/// "name=grid".
SweepAxis parse_axis(const std::string& spec);

struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  int line;
};

/// Plain-text key = value file with [section] headers; '#' and ';' start comments.
std::vector<ConfigEntry> read_config_file(const std::string& path);

void validate(const RunConfig& config);

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double value);

/// Executes a validated configuration, writing CSV to `out` (or config.output).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line front end: parses, applies the config file, validates, runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recoh::cli
