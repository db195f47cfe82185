#include <iostream>

#include <CLI11.hpp>

#include "cascade/cli.hpp"

int main(int argc, char** argv) {
  using namespace cascade::cli;

  CLI::App app{"Correlation and spectrum runs for the driven biexciton cascade"};
  std::string config_file;
  std::string preset;
  std::vector<double> drives;
  double delta = 0.0;
  double gamma_x = 0.0;
  double tau_max = 0.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
  std::size_t points = 0;
  std::string format;
  std::string out;
  bool strict = false;

  app.add_option("--config", config_file, "JSON run description; flags override its values");
  auto* o_preset = app.add_option("--preset", preset,
                                  "spectrum | bare-g2 | dressed-pp | dressed-p0 | mixture | sweep");
  auto* o_drive = app.add_option("--omega-l", drives, "drive amplitude in ps^-1 (repeatable)")
                      ->allow_extra_args(false);
  auto* o_delta = app.add_option("--delta", delta, "exciton detuning in ps^-1 (default 3.0)");
  auto* o_gamma = app.add_option("--gamma-x", gamma_x, "exciton decay rate in ps^-1 (default 0.001)");
  auto* o_tau = app.add_option("--tau-max", tau_max, "largest delay in ps (default 6/Gamma)");
  auto* o_wmin = app.add_option("--omega-min", omega_min, "spectrum grid start in ps^-1");
  auto* o_wmax = app.add_option("--omega-max", omega_max, "spectrum grid end in ps^-1");
  auto* o_points = app.add_option("--points", points, "grid points");
  auto* o_format = app.add_option("--format", format, "csv | json");
  auto* o_out = app.add_option("--out", out, "output directory");
  app.add_flag("--strict", strict, "exit 5 when an adiabatic curve misses the 3% bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::kOk : exit_code::kInvalidConfig;
  }

  RunConfig cfg;
  try {
    if (!config_file.empty()) cfg = load_config(config_file);
    if (*o_preset) cfg.preset = parse_preset(preset);
    if (*o_drive) cfg.drives = drives;
    if (*o_delta) cfg.delta = delta;
    if (*o_gamma) cfg.gamma_X = gamma_x;
    if (*o_tau) cfg.grid_max = tau_max;
    if (*o_wmin) cfg.grid_min = omega_min;
    if (*o_wmax) cfg.grid_max = omega_max;
    if (*o_points) cfg.points = points;
    if (*o_format) cfg.format = parse_format(format);
    if (*o_out) cfg.out_dir = out;
    if (strict) cfg.strict = true;
    const bool spectrum = cfg.preset == Preset::Spectrum;
    if (spectrum && *o_tau) throw ConfigError("--tau-max does not apply to the spectrum preset");
    if (!spectrum && (*o_wmin || *o_wmax))
      throw ConfigError("--omega-min/--omega-max apply only to the spectrum preset");
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::kInvalidConfig;
  }
  return run(cfg, std::cerr);
}
