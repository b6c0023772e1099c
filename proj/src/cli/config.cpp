#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "recoh/cli.hpp"
#include "recoh/constants.hpp"
#include "recoh/errors.hpp"

namespace recoh::cli {

namespace {

using Field = double Parameters::*;

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table{
      {"r", &Parameters::r},
      {"theta", &Parameters::theta},
      {"omega-bar-T", &Parameters::omega_bar_T},
      {"ratio-RT", &Parameters::ratio_RT},
      {"lambda3-over-V", &Parameters::lambda3_over_V},
      {"t0-omega", &Parameters::t0_omega},
      {"delta-omega-ratio", &Parameters::delta_omega_ratio},
      {"solid-angle", &Parameters::solid_angle},
      {"R-over-lambda", &Parameters::R_over_lambda},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("not a number: '" + t + "'");
  return v;
}

int parse_count(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("not an integer: '" + t + "'");
  return v;
}

void check_field(const std::string& name, double v) {
  auto fail = [&](const char* why) {
    throw ConfigError("field '" + name + "': " + why + " (got " + format_number(v) + ")");
  };
  if (!std::isfinite(v)) fail("must be finite");
  if (name == "r" && v < 0.0) fail("must be >= 0");
  if (name == "delta-omega-ratio" && !(v > 0.0 && v < 1.0)) fail("must lie in (0, 1)");
  if ((name == "omega-bar-T" || name == "ratio-RT" || name == "lambda3-over-V" ||
       name == "solid-angle" || name == "R-over-lambda") &&
      !(v > 0.0))
    fail("must be > 0");
}

}  // namespace

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : fields()) n.push_back(k);
    return n;
  }();
  return names;
}

double& parameter(Parameters& params, const std::string& name) {
  const auto it = fields().find(name);
  if (it == fields().end()) throw ConfigError("unknown parameter '" + name + "'");
  return params.*(it->second);
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(trim(p));
    const bool log = parts.size() == 4 && parts[3] == "log";
    if (parts.size() != 3 && !log) throw ConfigError("grid '" + spec + "': expected start:stop:count[:log]");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const int n = parse_count(parts[2]);
    if (n < 1) throw ConfigError("grid '" + spec + "': count must be >= 1");
    if (log && !(a > 0.0 && b > 0.0)) throw ConfigError("grid '" + spec + "': log grid needs positive ends");
    for (int i = 0; i < n; ++i) {
      const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      values.push_back(log ? a * std::pow(b / a, f) : a + (b - a) * f);
    }
    return values;
  }
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ',');) values.push_back(parse_number(p));
  if (values.empty()) throw ConfigError("grid '" + spec + "' is empty");
  return values;
}

SweepAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError("axis '" + spec + "': expected name=grid");
  SweepAxis axis{trim(spec.substr(0, eq)), {}};
  if (!fields().contains(axis.name)) throw ConfigError("axis '" + axis.name + "': unknown parameter");
  try {
    axis.values = parse_grid(spec.substr(eq + 1));
  } catch (const ConfigError& e) {
    throw ConfigError("axis '" + axis.name + "': " + e.what());
  }
  return axis;
}

std::vector<ConfigEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("field 'config': cannot read '" + path + "'");
  std::vector<ConfigEntry> entries;
  std::string section;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    const std::string text = trim(comment == std::string::npos ? line : line.substr(0, comment));
    if (text.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(text.substr(1, text.size() - 2));
      if (section != "params" && section != "sweep" && section != "quadrature" && section != "output")
        throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside of a [section]");
    entries.push_back({section, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line_no});
  }
  return entries;
}

void validate(const RunConfig& config) {
  const bool sweep = config.command == Command::Sweep;
  for (const auto& name : parameter_names()) {
    const bool swept = std::any_of(config.axes.begin(), config.axes.end(),
                                   [&](const SweepAxis& a) { return a.name == name; });
    if (!swept) check_field(name, parameter(const_cast<Parameters&>(config.params), name));
  }
  if (!sweep && config.params.r > max_squeeze)
    throw ConfigError("field 'r': exceeds the squeeze cap");
  if (config.t0_grid < 1) throw ConfigError("field 't0-grid': must be >= 1");
  if (config.modes < 1) throw ConfigError("field 'modes': must be >= 1");
  if (config.command == Command::Oracle && config.grid != "default")
    throw ConfigError("field 'grid': only 'default' is available");
  if (config.axes.size() > 3) throw ConfigError("field 'axis': at most 3 swept dimensions");
  if (sweep && config.axes.empty()) throw ConfigError("field 'axis': sweep needs at least one axis");
  for (std::size_t i = 0; i < config.axes.size(); ++i) {
    const SweepAxis& a = config.axes[i];
    if (a.values.empty()) throw ConfigError("axis '" + a.name + "': empty grid");
    for (std::size_t j = 0; j < i; ++j)
      if (config.axes[j].name == a.name) throw ConfigError("axis '" + a.name + "': declared twice");
    for (double v : a.values) check_field(a.name, v);
  }
  try {
    config.quadrature.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("quadrature: ") + e.what());
  }
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace recoh::cli
