#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cascade::cli {

enum class Preset { Spectrum, BareG2, DressedPP, DressedP0, Mixture, Sweep };
enum class Format { Csv, Json };

std::string_view name(Preset preset) noexcept;
std::string_view name(Format format) noexcept;
/// Throws ConfigError for unknown names.
Preset parse_preset(std::string_view text);
Format parse_format(std::string_view text);

// Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kInvalidConfig = 2;
constexpr int kSolverFailure = 3;
constexpr int kIoFailure = 4;
constexpr int kQuality = 5;  // only under --strict
}  // namespace exit_code

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;

  std::vector<double> points() const;
};

/// Unset optionals take per-preset defaults when the run is resolved.
struct RunConfig {
  Preset preset = Preset::BareG2;
  double delta = 3.0;       // ps⁻¹
  double gamma_X = 0.001;   // ps⁻¹
  std::optional<std::vector<double>> drives;  // Ω_L values, ps⁻¹
  std::optional<double> grid_min;  // τ [ps] or ω [ps⁻¹]
  std::optional<double> grid_max;
  std::optional<std::size_t> points;
  std::filesystem::path out_dir = ".";
  Format format = Format::Csv;
  bool strict = false;

  /// Drive list after applying the preset default.
  std::vector<double> resolved_drives() const;
  /// τ grid (ps) or, for the spectrum preset, ω grid (ps⁻¹).
  GridSpec resolved_grid() const;
};

/// Default drive list of each preset.
std::vector<double> default_drives(Preset preset);

/// Reads a JSON run description. Keys: preset, omega_l (array), delta,
/// gamma_x, tau_min, tau_max, omega_min, omega_max, points, format, out,
/// strict. Throws ConfigError on malformed input.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view json_text);

/// Structural checks (drives non-empty, count ≥ 2, max > min, valid
/// physical parameters). Throws ConfigError.
void check(const RunConfig& config);

/// One warning per drive with Ω_L > Δ/3. Never throws for valid configs.
std::vector<std::string> validate(const RunConfig& config);

struct CurveDeviation {
  std::string preset;
  double omega_L = 0.0;
  std::string curve;
  double max_rel = 0.0;   // max |num − ana| / max(|ana|, 1)
  double l2 = 0.0;        // root mean square of num − ana
  double tau_at_max = 0.0;
  bool adiabatic = false;

  /// Within the 3% agreement bound, or outside the adiabatic regime.
  bool acceptable() const { return !adiabatic || max_rel <= 0.03; }
};

struct DeviationReport {
  std::vector<CurveDeviation> curves;
  bool acceptable() const;
};

/// Deviation of `numeric` from `analytic` on grid `tau`. Sizes must match.
CurveDeviation compare_curves(const std::vector<double>& tau, const std::vector<double>& numeric,
                              const std::vector<double>& analytic);

/// Runs the preset, writes one data file per drive plus a report file, and
/// returns an exit code. Diagnostics go to `log`.
int run(const RunConfig& config, std::ostream& log);

/// Version string written into file headers.
std::string_view build_id() noexcept;

}  // namespace cascade::cli
