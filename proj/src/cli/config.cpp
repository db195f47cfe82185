#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cascade/cli.hpp"
#include "cascade/params.hpp"

namespace cascade::cli {

namespace {

constexpr std::size_t kDefaultTauPoints = 601;
constexpr double kDefaultTauMaxFactor = 6.0;  // τ_max = 6/Γ
constexpr std::size_t kDefaultOmegaPoints = 2001;
constexpr double kSpectrumMargin = 0.3;  // ps⁻¹ beyond ±Δ

}  // namespace

std::string_view name(Preset preset) noexcept {
  switch (preset) {
    case Preset::Spectrum: return "spectrum";
    case Preset::BareG2: return "bare-g2";
    case Preset::DressedPP: return "dressed-pp";
    case Preset::DressedP0: return "dressed-p0";
    case Preset::Mixture: return "mixture";
    case Preset::Sweep: return "sweep";
  }
  return "?";
}

std::string_view name(Format format) noexcept {
  return format == Format::Csv ? "csv" : "json";
}

Preset parse_preset(std::string_view text) {
  for (auto p : {Preset::Spectrum, Preset::BareG2, Preset::DressedPP, Preset::DressedP0,
                 Preset::Mixture, Preset::Sweep})
    if (name(p) == text) return p;
  throw ConfigError("unknown preset '" + std::string(text) +
                    "' (spectrum, bare-g2, dressed-pp, dressed-p0, mixture, sweep)");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ConfigError("unknown format '" + std::string(text) + "' (csv, json)");
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(count);
  const double step = count > 1 ? (max - min) / static_cast<double>(count - 1) : 0.0;
  for (std::size_t i = 0; i < count; ++i) out[i] = min + step * static_cast<double>(i);
  if (count > 1) out.back() = max;
  return out;
}

std::vector<double> default_drives(Preset preset) {
  switch (preset) {
    case Preset::Sweep: return {0.05, 0.1, 0.2, 0.3};
    case Preset::Mixture: return {0.1, 0.3};
    case Preset::Spectrum: return {0.05, 0.3};
    default: return {0.1};
  }
}

std::vector<double> RunConfig::resolved_drives() const {
  return drives ? *drives : default_drives(preset);
}

GridSpec RunConfig::resolved_grid() const {
  GridSpec g;
  if (preset == Preset::Spectrum) {
    g.min = grid_min.value_or(-delta - kSpectrumMargin);
    g.max = grid_max.value_or(delta + kSpectrumMargin);
    g.count = points.value_or(kDefaultOmegaPoints);
  } else {
    g.min = grid_min.value_or(0.0);
    g.max = grid_max.value_or(kDefaultTauMaxFactor / (2.0 * gamma_X));
    g.count = points.value_or(kDefaultTauPoints);
  }
  return g;
}

RunConfig parse_config(std::string_view json_text) {
  using nlohmann::json;
  static const std::set<std::string> known = {"preset",   "omega_l",   "delta",     "gamma_x",
                                              "tau_min",  "tau_max",   "omega_min", "omega_max",
                                              "points",   "format",    "out",       "strict"};
  RunConfig cfg;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, _] : j.items())
      if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    if (j.contains("preset")) cfg.preset = parse_preset(j.at("preset").get<std::string>());
    if (j.contains("omega_l")) cfg.drives = j.at("omega_l").get<std::vector<double>>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    if (j.contains("gamma_x")) cfg.gamma_X = j.at("gamma_x").get<double>();
    const bool spectrum = cfg.preset == Preset::Spectrum;
    for (const char* key : spectrum ? std::array{"tau_min", "tau_max"}
                                    : std::array{"omega_min", "omega_max"})
      if (j.contains(key))
        throw ConfigError(std::string("key '") + key + "' does not apply to preset " +
                          std::string(name(cfg.preset)));
    const char* min_key = spectrum ? "omega_min" : "tau_min";
    const char* max_key = spectrum ? "omega_max" : "tau_max";
    if (j.contains(min_key)) cfg.grid_min = j.at(min_key).get<double>();
    if (j.contains(max_key)) cfg.grid_max = j.at(max_key).get<double>();
    if (j.contains("points")) cfg.points = j.at("points").get<std::size_t>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
    if (j.contains("strict")) cfg.strict = j.at("strict").get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

void check(const RunConfig& config) {
  const auto drives = config.resolved_drives();
  if (drives.empty()) throw ConfigError("drive list is empty; give at least one --omega-l");
  for (double w : drives) {
    try {
      SystemParams(w, config.delta, config.gamma_X);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  const GridSpec g = config.resolved_grid();
  if (g.count < 2) throw ConfigError("grid needs at least 2 points");
  if (!std::isfinite(g.min) || !std::isfinite(g.max) || !(g.max > g.min))
    throw ConfigError("grid max must exceed grid min");
  if (config.preset != Preset::Spectrum && g.min < 0.0)
    throw ConfigError("tau grid must start at tau >= 0");
}

std::vector<std::string> validate(const RunConfig& config) {
  std::vector<std::string> warnings;
  for (double w : config.resolved_drives()) {
    if (w > config.delta / 3.0) {
      std::ostringstream msg;
      msg << "omega_L = " << w << " exceeds delta/3 = " << config.delta / 3.0
          << "; closed forms are outside their adiabatic range";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

CurveDeviation compare_curves(const std::vector<double>& tau, const std::vector<double>& numeric,
                              const std::vector<double>& analytic) {
  if (tau.size() != numeric.size() || tau.size() != analytic.size())
    throw std::invalid_argument("compare_curves: size mismatch");
  CurveDeviation d;
  double sq = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const double diff = numeric[i] - analytic[i];
    const double rel = std::abs(diff) / std::max(std::abs(analytic[i]), 1.0);
    if (rel > d.max_rel) {
      d.max_rel = rel;
      d.tau_at_max = tau[i];
    }
    sq += diff * diff;
  }
  d.l2 = tau.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(tau.size()));
  return d;
}

bool DeviationReport::acceptable() const {
  return std::all_of(curves.begin(), curves.end(), [](const auto& c) { return c.acceptable(); });
}

std::string_view build_id() noexcept {
#ifdef CASCADE_GIT_DESCRIBE
  return CASCADE_GIT_DESCRIBE;
#else
  return "unknown";
#endif
}

}  // namespace cascade::cli
