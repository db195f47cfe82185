#include <exception>
#include <fstream>
#include <map>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "cascade/analytic.hpp"
#include "cascade/cli.hpp"
#include "cascade/correlations.hpp"
#include "cascade/error.hpp"
#include "cascade/kernels.hpp"

namespace cascade::cli {

namespace {

using AnalyticFn = double (*)(double, const SystemParams&);

// A plotted curve: the numeric value is the mean of the g² series of
// `mixture` (one entry for a single detection sequence).
struct CurveDef {
  std::string name;
  std::vector<DetectionSequence> mixture;
  AnalyticFn analytic;
};

std::vector<CurveDef> curves_for(Preset preset) {
  namespace s = sequences;
  namespace a = analytic;
  const std::vector<CurveDef> bare = {{"g2_BVVG", {s::bvvg()}, a::g2_bvvg},
                                      {"g2_VGGB", {s::vggb()}, a::g2_vggb}};
  const std::vector<CurveDef> pp = {{"g2_+VV+", {s::pvvp()}, a::g2_plus_vv_plus},
                                    {"g2_V++V", {s::vppv()}, a::g2_v_plus_plus_v}};
  const std::vector<CurveDef> p0 = {{"g2_+VV0", {s::pvvz()}, a::g2_plus_vv_plus},
                                    {"g2_V0+V", {s::vzpv()}, a::g2_v_plus_zero_v}};
  switch (preset) {
    case Preset::BareG2: return bare;
    case Preset::DressedPP: return pp;
    case Preset::DressedP0: return p0;
    case Preset::Mixture:
      return {{"g2_EX_forward", {s::pvvp(), s::zvvz(), s::pvvz(), s::zvvp()}, a::g2_ex_forward},
              {"g2_EX_backward", {s::vppv(), s::v00v(), s::vpzv(), s::vzpv()}, a::g2_ex_backward}};
    case Preset::Sweep: {
      std::vector<CurveDef> all = bare;
      all.insert(all.end(), pp.begin(), pp.end());
      all.insert(all.end(), p0.begin(), p0.end());
      return all;
    }
    case Preset::Spectrum: break;
  }
  return {};
}

struct Table {
  std::string x_name;
  std::vector<double> x;
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  std::vector<std::string> notes;  // extra header lines
};

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::vector<std::string> header_lines(const RunConfig& cfg, const SystemParams& p,
                                      const GridSpec& grid) {
  const bool spectrum = cfg.preset == Preset::Spectrum;
  return {
      fmt::format("cascade {}", build_id()),
      fmt::format("preset: {}", name(cfg.preset)),
      fmt::format("omega_L [ps^-1]: {}", num(p.omega_L())),
      fmt::format("delta [ps^-1]: {}", num(p.delta())),
      fmt::format("gamma_X [ps^-1]: {}", num(p.gamma_X())),
      fmt::format("Omega = 2 omega_L^2/delta [ps^-1]: {}", num(p.omega_eff())),
      fmt::format("Gamma = 2 gamma_X [ps^-1]: {}", num(p.gamma_eff())),
      fmt::format("alpha = Gamma^2/Omega^2: {}", num(p.alpha())),
      fmt::format("adiabatic_valid (omega_L <= delta/3): {}", p.adiabatic_valid()),
      fmt::format("grid: {} from {} to {}, {} points", spectrum ? "omega [ps^-1]" : "tau [ps]",
                  num(grid.min), num(grid.max), grid.count),
  };
}

void write_table(const std::filesystem::path& path, const RunConfig& cfg,
                 const std::vector<std::string>& header, const Table& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::filesystem::filesystem_error("cannot open for writing", path,
                                                    std::make_error_code(std::errc::io_error));
  if (cfg.format == Format::Csv) {
    for (const auto& h : header) out << "# " << h << '\n';
    for (const auto& n : t.notes) out << "# " << n << '\n';
    out << t.x_name;
    for (const auto& [n, _] : t.columns) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < t.x.size(); ++i) {
      out << num(t.x[i]);
      for (const auto& [_, v] : t.columns) out << ',' << num(v[i]);
      out << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["header"] = header;
    j["notes"] = t.notes;
    j["data"][t.x_name] = t.x;
    for (const auto& [n, v] : t.columns) j["data"][n] = v;
    out << j.dump(2) << '\n';
  }
  if (!out) throw std::filesystem::filesystem_error("write failed", path,
                                                    std::make_error_code(std::errc::io_error));
}

void write_report(const std::filesystem::path& path, const RunConfig& cfg,
                  const DeviationReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::filesystem::filesystem_error("cannot open for writing", path,
                                                    std::make_error_code(std::errc::io_error));
  if (cfg.format == Format::Csv) {
    out << "# cascade " << build_id() << '\n';
    out << "# deviation = |numeric - analytic| / max(|analytic|, 1); bound 0.03 when adiabatic\n";
    out << "preset,omega_L,curve,max_rel_dev,l2_dev,tau_at_max_ps,adiabatic,within_bound\n";
    for (const auto& c : report.curves)
      out << c.preset << ',' << num(c.omega_L) << ',' << c.curve << ',' << num(c.max_rel) << ','
          << num(c.l2) << ',' << num(c.tau_at_max) << ',' << (c.adiabatic ? 1 : 0) << ','
          << (c.acceptable() ? 1 : 0) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["build"] = build_id();
    j["acceptable"] = report.acceptable();
    j["curves"] = nlohmann::ordered_json::array();
    for (const auto& c : report.curves) {
      nlohmann::ordered_json e;
      e["preset"] = c.preset;
      e["omega_L"] = c.omega_L;
      e["curve"] = c.curve;
      e["max_rel_dev"] = c.max_rel;
      e["l2_dev"] = c.l2;
      e["tau_at_max_ps"] = c.tau_at_max;
      e["adiabatic"] = c.adiabatic;
      e["within_bound"] = c.acceptable();
      j["curves"].push_back(e);
    }
    out << j.dump(2) << '\n';
  }
  if (!out) throw std::filesystem::filesystem_error("write failed", path,
                                                    std::make_error_code(std::errc::io_error));
}

std::filesystem::path data_path(const RunConfig& cfg, double drive) {
  return cfg.out_dir /
         fmt::format("{}_omegaL_{}.{}", name(cfg.preset), num(drive), name(cfg.format));
}

void run_spectrum(const RunConfig& cfg, DeviationReport&) {
  const GridSpec grid = cfg.resolved_grid();
  const std::vector<double> omega = grid.points();
  for (double drive : cfg.resolved_drives()) {
    const SystemParams p(drive, cfg.delta, cfg.gamma_X);
    Table t;
    t.x_name = "omega";
    t.x = omega;
    auto sh = power_spectrum(p, Polarization::H, omega);
    auto sv = power_spectrum(p, Polarization::V, omega);
    std::vector<double> total(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) total[i] = sh[i] + sv[i];
    std::string peaks;
    for (std::size_t i : find_peaks(total)) peaks += (peaks.empty() ? "" : " ") + num(omega[i]);
    t.notes.push_back("peaks of S_total [ps^-1]: " + (peaks.empty() ? std::string("none") : peaks));
    t.columns = {{"S_H", std::move(sh)}, {"S_V", std::move(sv)}, {"S_total", std::move(total)}};
    write_table(data_path(cfg, drive), cfg, header_lines(cfg, p, grid), t);
  }
}

void run_correlations(const RunConfig& cfg, DeviationReport& report) {
  const GridSpec grid = cfg.resolved_grid();
  const std::vector<double> tau = grid.points();
  const auto drives = cfg.resolved_drives();
  const auto curves = curves_for(cfg.preset);

  std::vector<kernels::G2Task> tasks;
  for (double drive : drives) {
    const SystemParams p(drive, cfg.delta, cfg.gamma_X);
    for (const auto& c : curves)
      for (const auto& seq : c.mixture) tasks.push_back({p, seq});
  }
  const auto series = kernels::g2_batch_omp(tasks, tau);

  std::size_t next = 0;
  for (double drive : drives) {
    const SystemParams p(drive, cfg.delta, cfg.gamma_X);
    Table t;
    t.x_name = "tau";
    t.x = tau;
    for (const auto& c : curves) {
      std::vector<double> numeric(tau.size(), 0.0);
      for (std::size_t m = 0; m < c.mixture.size(); ++m) {
        const auto& v = series[next++].values;
        for (std::size_t i = 0; i < tau.size(); ++i) numeric[i] += v[i];
      }
      for (auto& v : numeric) v /= static_cast<double>(c.mixture.size());
      std::vector<double> ana(tau.size());
      for (std::size_t i = 0; i < tau.size(); ++i) ana[i] = c.analytic(tau[i], p);

      CurveDeviation d = compare_curves(tau, numeric, ana);
      d.preset = std::string(name(cfg.preset));
      d.omega_L = drive;
      d.curve = c.name;
      d.adiabatic = p.adiabatic_valid();
      report.curves.push_back(d);

      t.columns.emplace_back(c.name + "_numeric", std::move(numeric));
      t.columns.emplace_back(c.name + "_analytic", std::move(ana));
    }
    write_table(data_path(cfg, drive), cfg, header_lines(cfg, p, grid), t);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  try {
    check(config);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::kInvalidConfig;
  }
  for (const auto& w : validate(config)) log << "warning: " << w << '\n';

  DeviationReport report;
  try {
    std::filesystem::create_directories(config.out_dir);
    if (config.preset == Preset::Spectrum)
      run_spectrum(config, report);
    else
      run_correlations(config, report);
    write_report(config.out_dir / fmt::format("{}_report.{}", name(config.preset),
                                              name(config.format)),
                 config, report);
  } catch (const std::filesystem::filesystem_error& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::kIoFailure;
  } catch (const Error& e) {
    log << "error: solver failed: " << e.what() << '\n';
    return exit_code::kSolverFailure;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::kSolverFailure;
  }

  for (const auto& c : report.curves)
    if (!c.acceptable())
      log << fmt::format("quality: {} at omega_L = {} deviates by {:.3g} (tau = {} ps)\n", c.curve,
                         num(c.omega_L), c.max_rel, num(c.tau_at_max));
  if (config.strict && !report.acceptable()) return exit_code::kQuality;
  return exit_code::kOk;
}

}  // namespace cascade::cli
