// radsol: command-line driver for the radiating-solitary-wave toy model.
//
// Subcommands: theta, simulate, volterra, sigma, fit, report.
// Exit codes: 0 success, 1 usage/IO error, 2 numerical failure.
// RADSOL_THREADS caps internal parallelism; outputs are byte-identical for
// any thread count.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radsol/asymptotics.hpp"
#include "radsol/io.hpp"
#include "radsol/profile.hpp"
#include "radsol/sim_field.hpp"
#include "radsol/sim_volterra.hpp"
#include "radsol/spectral.hpp"

#define RADSOL_VERSION "1.0.0"

namespace fs = std::filesystem;
using namespace radsol;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::pair<double, double> parse_range(const std::string& s, const char* what) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError(std::string(what) + " expects lo:hi, got '" + s + "'");
  try {
    const double lo = std::stod(s.substr(0, colon));
    const double hi = std::stod(s.substr(colon + 1));
    if (!(hi > lo)) throw std::invalid_argument("hi <= lo");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + " expects lo:hi, got '" + s + "'");
  }
}

// Config precedence: command-line flags override the --config file, which
// overrides defaults. Section [command] first, then top-level keys.
class ConfigLayer {
 public:
  ConfigLayer(const CLI::App* sub, const std::string& path) : sub_(sub) {
    if (!path.empty()) {
      if (!fs::exists(path)) throw std::runtime_error("config file not found: " + path);
      manifest_ = io::Manifest::load(path);
    }
  }

  template <typename T>
  void apply(const std::string& flag, const std::string& key, T& value) const {
    if (sub_->count("--" + flag) > 0) return;  // explicit flag wins
    const std::string raw = manifest_.has(sub_->get_name(), key)
                                ? manifest_.get(sub_->get_name(), key)
                                : manifest_.get("", key);
    if (raw.empty()) return;
    if constexpr (std::is_same_v<T, std::string>) {
      value = raw;
    } else if constexpr (std::is_same_v<T, bool>) {
      value = (raw == "true" || raw == "1");
    } else if constexpr (std::is_same_v<T, int>) {
      value = std::stoi(raw);
    } else {
      value = std::stod(raw);
    }
  }

 private:
  const CLI::App* sub_;
  io::Manifest manifest_;
};

// One manifest per output directory. Commands own their section; the shared
// profile/omega keys must agree across commands writing into the same
// directory so a report describes one coherent run.
void note_command(io::Manifest& m, const std::string& command) {
  const std::string have = m.get("", "commands");
  if (have.empty()) {
    m.set("", "commands", command);
  } else if ((" " + have + " ").find(" " + command + " ") == std::string::npos &&
             ("," + have + ",").find("," + command + ",") == std::string::npos) {
    m.set("", "commands", have + "," + command);
  }
}

io::Manifest open_manifest(const fs::path& dir, const std::string& profile, double omega) {
  io::Manifest m = io::Manifest::load(dir / "manifest.txt");
  const std::string prev_profile = m.get("", "profile");
  const std::string prev_omega = m.get("", "omega");
  if (!prev_profile.empty() && prev_profile != profile)
    throw std::runtime_error("manifest in " + dir.string() + " was written for profile '" +
                             prev_profile + "'; refusing to mix with '" + profile + "'");
  if (!prev_omega.empty() && std::stod(prev_omega) != omega)
    throw std::runtime_error("manifest in " + dir.string() + " was written for omega = " +
                             prev_omega + "; refusing to mix with omega = " + io::g17(omega));
  m.set("", "code_version", RADSOL_VERSION);
  m.set("", "profile", profile);
  m.set("", "omega", io::g17(omega));
  return m;
}

fs::path ensure_dir(const std::string& out) {
  fs::path dir(out);
  if (!dir.empty()) fs::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------- theta ---

struct ThetaOpts {
  std::string profile = "sech";
  double omega = 2.0;
  std::string out = ".";
  std::string config;
};

int cmd_theta(const CLI::App* sub, ThetaOpts& o) {
  Timer timer;
  ConfigLayer cfg(sub, o.config);
  cfg.apply("profile", "profile", o.profile);
  cfg.apply("omega", "omega", o.omega);
  cfg.apply("out", "out", o.out);

  const Profile p = Profile::from_name(o.profile);
  const ThetaResult th = find_theta(p, o.omega);
  const double t95 = th.theta > 0 ? std::log(20.0 / 19.0) / th.theta
                                  : std::numeric_limits<double>::infinity();

  std::cout << "profile            " << o.profile << "\n"
            << "omega              " << io::g17(o.omega) << "\n"
            << "theta              " << io::g17(th.theta) << "\n"
            << "theta_asymptotic   " << io::g17(th.theta_asymptotic) << "\n"
            << "residue            " << io::g17(th.residue) << "\n"
            << "newton_iters       " << th.newton_iters
            << (th.used_bisection ? "  (bisection fallback)" : "") << "\n"
            << "final_residual     " << io::g17(th.final_residual) << "\n"
            << "t_95pct            " << io::g17(t95)
            << "   (time for a to reach 95% of a0)\n";

  const fs::path dir = ensure_dir(o.out);
  io::write_csv(dir / "theta.csv",
                "omega (model units),theta (1/time),theta_asymptotic (1/time),residue "
                "(dimensionless),newton_iters,final_residual,t_95pct (time)",
                {{o.omega, th.theta, th.theta_asymptotic, th.residue,
                  static_cast<double>(th.newton_iters), th.final_residual, t95}});
  io::Manifest m = open_manifest(dir, o.profile, o.omega);
  note_command(m, "theta");
  m.erase_section("theta");
  m.set("theta", "profile", o.profile);
  m.set("theta", "omega", io::g17(o.omega));
  m.set("theta", "out", o.out);
  m.set("theta", "wall_time_s", io::g17(timer.seconds()));
  m.save(dir / "manifest.txt");
  return 0;
}

// ------------------------------------------------------------- simulate ---

struct SimulateOpts {
  std::string profile = "sech";
  double omega = 2.0;
  double a0 = 1.0;
  double t_final = 200.0;
  double dt = 0.0;
  int stride = 1;
  std::string frames;
  bool check = false;
  double energy_tol = 1e-7;
  std::string out = ".";
  std::string config;
};

int cmd_simulate(const CLI::App* sub, SimulateOpts& o) {
  Timer timer;
  ConfigLayer cfg(sub, o.config);
  cfg.apply("profile", "profile", o.profile);
  cfg.apply("omega", "omega", o.omega);
  cfg.apply("a0", "a0", o.a0);
  cfg.apply("t-final", "t_final", o.t_final);
  cfg.apply("dt", "dt", o.dt);
  cfg.apply("stride", "stride", o.stride);
  cfg.apply("frames", "frames", o.frames);
  cfg.apply("check", "check", o.check);
  cfg.apply("energy-tol", "energy_tol", o.energy_tol);
  cfg.apply("out", "out", o.out);

  SimConfig sc;
  sc.profile = Profile::from_name(o.profile);
  sc.omega = o.omega;
  sc.a0 = o.a0;
  sc.t_final = o.t_final;
  sc.dt = o.dt;
  sc.sample_stride = o.stride;
  if (!o.frames.empty()) {
    const auto [lo, hi] = parse_range(o.frames, "--frames");
    sc.frames = FrameWindow{lo, hi};
  }

  const RunResult res = run(sc);

  const fs::path dir = ensure_dir(o.out);
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(res.a_series.size()));
  for (int i = 0; i < res.a_series.size(); ++i)
    rows.push_back({res.a_series.t(i), res.a_series[i], res.energy_series[i]});
  io::write_csv(dir / "a_series.csv",
                "t (model units),a (dimensionless),E (dimensionless)", rows);

  if (!res.frames.empty()) {
    const FrameSlice& fr = res.frames.back();
    std::vector<std::vector<double>> frows;
    frows.reserve(static_cast<std::size_t>(fr.size()));
    for (int k = 0; k < fr.size(); ++k)
      frows.push_back({fr.l(k), fr.psi[static_cast<std::size_t>(k)].real(),
                       fr.psi[static_cast<std::size_t>(k)].imag()});
    io::write_csv(dir / "frame.csv",
                  "l (moving frame; x - t),re_psi (dimensionless),im_psi (dimensionless)",
                  frows);
  }

  io::Manifest m = open_manifest(dir, o.profile, o.omega);
  note_command(m, "simulate");
  m.erase_section("simulate");
  m.set("simulate", "profile", o.profile);
  m.set("simulate", "omega", io::g17(o.omega));
  m.set("simulate", "a0", io::g17(o.a0));
  m.set("simulate", "t_final", io::g17(o.t_final));
  m.set("simulate", "dt", io::g17(sc.dt_or_default()));
  m.set("simulate", "dx", io::g17(sc.dt_or_default()));
  m.set("simulate", "stride", std::to_string(o.stride));
  if (!o.frames.empty()) m.set("simulate", "frames", o.frames);
  m.set("simulate", "energy_tol", io::g17(o.energy_tol));
  m.set("simulate", "energy_drift", io::g17(res.max_energy_drift));
  m.set("simulate", "out", o.out);
  m.set("simulate", "wall_time_s", io::g17(timer.seconds()));
  m.save(dir / "manifest.txt");

  std::cout << "steps              " << static_cast<int>(std::ceil(o.t_final / sc.dt_or_default() - 1e-9)) << "\n"
            << "grid points        " << res.final_state.grid.n_points << "\n"
            << "final a            " << io::g17(res.final_state.a) << "\n"
            << "max energy drift   " << io::g17(res.max_energy_drift) << "\n";

  if (o.check && res.max_energy_drift > o.energy_tol)
    throw numeric_error("energy drift " + io::g17(res.max_energy_drift) + " exceeds tolerance " +
                        io::g17(o.energy_tol));
  return 0;
}

// ------------------------------------------------------------- volterra ---

struct VolterraOpts {
  std::string profile = "sech";
  double omega = 2.0;
  double a0 = 1.0;
  double t_final = 200.0;
  double dt = 0.0;
  bool check = false;
  double residual_tol = 1e-2;
  std::string out = ".";
  std::string config;
};

int cmd_volterra(const CLI::App* sub, VolterraOpts& o) {
  Timer timer;
  ConfigLayer cfg(sub, o.config);
  cfg.apply("profile", "profile", o.profile);
  cfg.apply("omega", "omega", o.omega);
  cfg.apply("a0", "a0", o.a0);
  cfg.apply("t-final", "t_final", o.t_final);
  cfg.apply("dt", "dt", o.dt);
  cfg.apply("check", "check", o.check);
  cfg.apply("residual-tol", "residual_tol", o.residual_tol);
  cfg.apply("out", "out", o.out);

  RenewalConfig rc;
  rc.profile = Profile::from_name(o.profile);
  rc.omega = o.omega;
  rc.a0 = o.a0;
  rc.t_final = o.t_final;
  rc.dt = o.dt;

  const TimeSeries a = solve_renewal(rc);

  const fs::path dir = ensure_dir(o.out);
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(a.size()));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < a.size(); ++i) rows.push_back({a.t(i), a[i], nan});
  io::write_csv(dir / "a_series.csv",
                "t (model units),a (dimensionless),E (dimensionless; nan = not tracked)", rows);

  io::Manifest m = open_manifest(dir, o.profile, o.omega);
  note_command(m, "volterra");
  m.erase_section("volterra");
  m.set("volterra", "profile", o.profile);
  m.set("volterra", "omega", io::g17(o.omega));
  m.set("volterra", "a0", io::g17(o.a0));
  m.set("volterra", "t_final", io::g17(o.t_final));
  m.set("volterra", "dt", io::g17(rc.dt_or_default()));
  m.set("volterra", "residual_tol", io::g17(o.residual_tol));
  m.set("volterra", "out", o.out);

  std::cout << "steps              " << a.size() - 1 << "\n"
            << "final a            " << io::g17(a[a.size() - 1]) << "\n";

  double residual = std::numeric_limits<double>::quiet_NaN();
  if (o.check) {
    residual = residual_delay_ode(a, rc);
    m.set("volterra", "delay_residual", io::g17(residual));
    std::cout << "delay residual     " << io::g17(residual) << "\n";
  }
  m.set("volterra", "wall_time_s", io::g17(timer.seconds()));
  m.save(dir / "manifest.txt");

  if (o.check && residual > o.residual_tol)
    throw numeric_error("delay-equation residual " + io::g17(residual) + " exceeds tolerance " +
                        io::g17(o.residual_tol));
  return 0;
}

// ---------------------------------------------------------------- sigma ---

struct SigmaOpts {
  std::string profile = "sech";
  double omega = 2.0;
  std::string window = "-40:10";
  double dl = 0.0;
  std::string out = ".";
  std::string config;
};

int cmd_sigma(const CLI::App* sub, SigmaOpts& o) {
  Timer timer;
  ConfigLayer cfg(sub, o.config);
  cfg.apply("profile", "profile", o.profile);
  cfg.apply("omega", "omega", o.omega);
  cfg.apply("frames", "frames", o.window);
  cfg.apply("dl", "dl", o.dl);
  cfg.apply("out", "out", o.out);

  const Profile p = Profile::from_name(o.profile);
  const auto [l_min, l_max] = parse_range(o.window, "--frames");
  const double dl = o.dl > 0 ? o.dl : kPi / (10.0 * o.omega);

  const ThetaResult th = find_theta(p, o.omega);
  const SigmaProfile sp = sigma_profile(p, th, o.omega, l_min, l_max, dl);

  const fs::path dir = ensure_dir(o.out);
  std::vector<std::vector<double>> rows;
  rows.reserve(sp.l_grid.size());
  for (std::size_t i = 0; i < sp.l_grid.size(); ++i)
    rows.push_back({sp.l_grid[i], sp.sigma[i].real(), sp.sigma[i].imag()});
  io::write_csv(dir / "sigma.csv",
                "l (moving frame; x - t),re_sigma (dimensionless),im_sigma (dimensionless)",
                rows);

  const double left_edge = std::abs(sp.sigma.front());
  std::cout << "theta              " << io::g17(th.theta) << "\n"
            << "residue            " << io::g17(th.residue) << "\n"
            << "left-edge |sigma|  " << io::g17(left_edge) << "\n"
            << "far-field 2pi q^   " << io::g17(std::abs(sp.far_field_ref)) << "\n";

  io::Manifest m = open_manifest(dir, o.profile, o.omega);
  note_command(m, "sigma");
  m.erase_section("sigma");
  m.set("sigma", "profile", o.profile);
  m.set("sigma", "omega", io::g17(o.omega));
  m.set("sigma", "frames", o.window);
  m.set("sigma", "dl", io::g17(dl));
  m.set("sigma", "theta", io::g17(th.theta));
  m.set("sigma", "residue", io::g17(th.residue));
  m.set("sigma", "out", o.out);
  m.set("sigma", "wall_time_s", io::g17(timer.seconds()));
  m.save(dir / "manifest.txt");
  return 0;
}

// ------------------------------------------------------------------ fit ---

struct FitOpts {
  std::string window;
  std::string out = ".";
  std::string config;
};

int cmd_fit(const CLI::App* sub, FitOpts& o) {
  Timer timer;
  ConfigLayer cfg(sub, o.config);
  cfg.apply("window", "window", o.window);
  cfg.apply("out", "out", o.out);

  const fs::path dir(o.out);
  const fs::path series_path = dir / "a_series.csv";
  if (!fs::exists(series_path))
    throw std::runtime_error("fit: " + series_path.string() + " not found (run simulate or volterra first)");

  const auto rows = io::read_csv(series_path);
  if (rows.size() < 3) throw std::runtime_error("fit: series too short in " + series_path.string());
  TimeSeries a;
  a.t0 = rows[0][0];
  a.dt = rows[1][0] - rows[0][0];
  for (const auto& r : rows) {
    if (r.size() < 2) throw std::runtime_error("fit: malformed row in a_series.csv");
    a.values.push_back(r[1]);
  }

  double w_lo, w_hi;
  if (!o.window.empty()) {
    std::tie(w_lo, w_hi) = parse_range(o.window, "--window");
  } else {
    std::tie(w_lo, w_hi) = default_fit_window(a.t_final());
  }

  const FitResult fr = fit_decay(a, w_lo, w_hi);
  std::cout << "rate               " << io::g17(fr.rate) << "\n"
            << "prefactor          " << io::g17(fr.prefactor) << "\n"
            << "window             [" << io::g17(fr.t_lo) << ", " << io::g17(fr.t_hi) << "]\n"
            << "rms log residual   " << io::g17(fr.rms_log_residual) << "\n"
            << "samples used       " << fr.n_used << "\n";

  io::write_csv(dir / "fit.csv",
                "rate (1/time),prefactor (dimensionless),window_lo (model units),window_hi "
                "(model units),rms_log_residual,n_samples",
                {{fr.rate, fr.prefactor, fr.t_lo, fr.t_hi, fr.rms_log_residual,
                  static_cast<double>(fr.n_used)}});

  io::Manifest m = io::Manifest::load(dir / "manifest.txt");
  m.set("", "code_version", RADSOL_VERSION);
  note_command(m, "fit");
  m.erase_section("fit");
  if (!o.window.empty()) m.set("fit", "window", o.window);
  m.set("fit", "rate", io::g17(fr.rate));
  m.set("fit", "prefactor", io::g17(fr.prefactor));
  m.set("fit", "out", o.out);
  m.set("fit", "wall_time_s", io::g17(timer.seconds()));
  m.save(dir / "manifest.txt");
  return 0;
}

// --------------------------------------------------------------- report ---

struct ReportOpts {
  std::string out = ".";
  std::string config;
};

int cmd_report(const CLI::App*, ReportOpts& o) {
  const fs::path dir(o.out);
  std::vector<std::string> missing;
  for (const char* name : {"a_series.csv", "frame.csv", "sigma.csv", "fit.csv", "manifest.txt"})
    if (!fs::exists(dir / name)) missing.push_back(name);
  if (!missing.empty()) {
    std::cerr << "report: missing inputs in " << dir.string() << ":";
    for (const auto& name : missing) std::cerr << " " << name;
    std::cerr << "\n";
    return 1;
  }

  const io::Manifest m = io::Manifest::load(dir / "manifest.txt");
  const std::string profile_name = m.get("", "profile", "sech");
  const double omega = std::stod(m.get("", "omega", "2"));
  const double theta_ref = theta_asymptotic(Profile::from_name(profile_name), omega);
  const auto fit_rows = io::read_csv(dir / "fit.csv");
  const double prefactor = fit_rows.empty() || fit_rows[0].size() < 2 ? 1.0 : fit_rows[0][1];

  std::ofstream gp(dir / "report.gp", std::ios::binary | std::ios::trunc);
  if (!gp) throw std::runtime_error("cannot write report.gp in " + dir.string());
  gp << "# four-panel summary for profile=" << profile_name << " omega=" << io::g17(omega)
     << "\n"
     << "# render with:  gnuplot report.gp   (writes report.png)\n"
     << "set terminal png size 1400,1000\n"
     << "set output 'report.png'\n"
     << "set datafile separator ','\n"
     << "theta_ref = " << io::g17(theta_ref) << "\n"
     << "pref = " << io::g17(prefactor) << "\n"
     << "stats 'a_series.csv' skip 1 using 1 name 'AT' nooutput\n"
     << "stats 'frame.csv' skip 1 using 1 name 'FR' nooutput\n"
     << "set multiplot layout 2,2 title 'radiating solitary wave: " << profile_name
     << ", omega = " << io::g17(omega) << "'\n"
     << "set xlabel 't'\n"
     << "set logscale y\n"
     << "set ylabel '|a(t)|'\n"
     << "set title 'amplitude decay (semilog) with reference slope'\n"
     << "plot 'a_series.csv' skip 1 using 1:(abs($2)) with lines title 'a(t)', \\\n"
     << "     pref*exp(-theta_ref*x) with lines dashtype 2 title '2 pi^2 qhat(w)^2 slope'\n"
     << "unset logscale y\n"
     << "set title 'early-time amplitude'\n"
     << "set ylabel 'a(t)'\n"
     << "set xrange [0:0.1*AT_max]\n"
     << "plot 'a_series.csv' skip 1 using 1:2 with lines title 'a(t)'\n"
     << "set xrange [FR_min:FR_max]\n"
     << "set xlabel 'l = x - t'\n"
     << "set ylabel 'psi'\n"
     << "set title 'oscillator field near the leading edge (final time)'\n"
     << "plot 'frame.csv' skip 1 using 1:2 with lines title 'Re psi', \\\n"
     << "     'frame.csv' skip 1 using 1:3 with lines title 'Im psi'\n"
     << "set ylabel 'sigma'\n"
     << "set title 'asymptotic tail profile sigma(l)'\n"
     << "plot 'sigma.csv' skip 1 using 1:2 with lines title 'Re sigma', \\\n"
     << "     'sigma.csv' skip 1 using 1:3 with lines title 'Im sigma'\n"
     << "unset multiplot\n";
  if (!gp) throw std::runtime_error("write failed for report.gp");
  std::cout << "wrote " << (dir / "report.gp").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driven-oscillator model of a radiating solitary wave"};
  app.set_version_flag("--version", RADSOL_VERSION);
  app.require_subcommand(1);

  ThetaOpts to;
  CLI::App* theta_cmd = app.add_subcommand("theta", "decay rate, residue and 95% lifetime");
  theta_cmd->add_option("--profile", to.profile, "sech|gaussian|peakon|tent");
  theta_cmd->add_option("--omega", to.omega, "oscillator frequency")->check(CLI::PositiveNumber);
  theta_cmd->add_option("--out", to.out, "output directory");
  theta_cmd->add_option("--config", to.config, "key = value config file");

  SimulateOpts so;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "RK4 field simulation");
  sim_cmd->add_option("--profile", so.profile, "sech|gaussian|peakon|tent");
  sim_cmd->add_option("--omega", so.omega, "oscillator frequency")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--a0", so.a0, "initial amplitude");
  sim_cmd->add_option("--t-final", so.t_final, "simulation horizon")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--dt", so.dt, "time step (default pi/(10 omega); dx is locked to dt)");
  sim_cmd->add_option("--stride", so.stride, "sample every N steps")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--frames", so.frames, "moving-frame window l_min:l_max");
  sim_cmd->add_flag("--check", so.check, "fail (exit 2) on invariant breach");
  sim_cmd->add_option("--energy-tol", so.energy_tol, "relative energy drift tolerance for --check");
  sim_cmd->add_option("--out", so.out, "output directory");
  sim_cmd->add_option("--config", so.config, "key = value config file");

  VolterraOpts vo;
  CLI::App* vol_cmd = app.add_subcommand("volterra", "renewal-equation solve for a(t)");
  vol_cmd->add_option("--profile", vo.profile, "sech|gaussian|peakon|tent");
  vol_cmd->add_option("--omega", vo.omega, "oscillator frequency")->check(CLI::PositiveNumber);
  vol_cmd->add_option("--a0", vo.a0, "initial amplitude");
  vol_cmd->add_option("--t-final", vo.t_final, "horizon")->check(CLI::PositiveNumber);
  vol_cmd->add_option("--dt", vo.dt, "time step (default pi/(20 omega))");
  vol_cmd->add_flag("--check", vo.check, "verify the delay-equation residual (exit 2 on breach)");
  vol_cmd->add_option("--residual-tol", vo.residual_tol, "delay residual tolerance for --check");
  vol_cmd->add_option("--out", vo.out, "output directory");
  vol_cmd->add_option("--config", vo.config, "key = value config file");

  SigmaOpts go;
  CLI::App* sigma_cmd = app.add_subcommand("sigma", "asymptotic tail profile sigma(l)");
  sigma_cmd->add_option("--profile", go.profile, "sech|gaussian|peakon|tent");
  sigma_cmd->add_option("--omega", go.omega, "oscillator frequency")->check(CLI::PositiveNumber);
  sigma_cmd->add_option("--frames", go.window, "l window l_min:l_max");
  sigma_cmd->add_option("--dl", go.dl, "l spacing (default pi/(10 omega))");
  sigma_cmd->add_option("--out", go.out, "output directory");
  sigma_cmd->add_option("--config", go.config, "key = value config file");

  FitOpts fo;
  CLI::App* fit_cmd = app.add_subcommand("fit", "log-linear decay fit of a_series.csv");
  fit_cmd->add_option("--window", fo.window, "fit window t_lo:t_hi (default 0.2:0.9 of span)");
  fit_cmd->add_option("--out", fo.out, "directory holding a_series.csv");
  fit_cmd->add_option("--config", fo.config, "key = value config file");

  ReportOpts ro;
  CLI::App* rep_cmd = app.add_subcommand("report", "gnuplot script with the four-panel figure");
  rep_cmd->add_option("dir", ro.out, "run directory (positional)");
  rep_cmd->add_option("--out", ro.out, "run directory");
  rep_cmd->add_option("--config", ro.config, "unused; accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (theta_cmd->parsed()) return cmd_theta(theta_cmd, to);
    if (sim_cmd->parsed()) return cmd_simulate(sim_cmd, so);
    if (vol_cmd->parsed()) return cmd_volterra(vol_cmd, vo);
    if (sigma_cmd->parsed()) return cmd_sigma(sigma_cmd, go);
    if (fit_cmd->parsed()) return cmd_fit(fit_cmd, fo);
    if (rep_cmd->parsed()) return cmd_report(rep_cmd, ro);
  } catch (const numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
