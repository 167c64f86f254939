#include "radsol/sim_field.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "radsol/parallel.hpp"
#include "radsol/quadrature.hpp"

namespace radsol {

namespace {

constexpr double kSupportTol = 1e-14;
constexpr std::size_t kChunk = 4096;

// Window of grid indices where |q(x - t)| can exceed kSupportTol; outside it
// the drive and the coupling integrand are below double noise.
struct DriveWindow {
  int lo = 0, hi = -1;  // inclusive; empty when hi < lo
  int count() const { return hi - lo + 1; }
};

DriveWindow drive_window(const Grid& g, double t, double radius) {
  DriveWindow w;
  w.lo = std::max(0, static_cast<int>(std::floor((t - radius - g.x_min) / g.dx)));
  w.hi = std::min(g.n_points - 1, static_cast<int>(std::ceil((t + radius - g.x_min) / g.dx)));
  if (w.count() >= 3 && w.count() % 2 == 0) ++w.lo;  // odd sample count for Simpson
  return w;
}

void apply_rhs(const Profile& p, double omega, const Grid& g, std::span<const cplx> psi,
               double a, double t_eval, double support_radius, double& da,
               std::span<cplx> dpsi) {
  const std::size_t n = psi.size();
  // free rotation everywhere
  par::for_chunks(n, kChunk, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t j = lo; j < hi; ++j)
      dpsi[j] = cplx(-omega * psi[j].imag(), omega * psi[j].real());
  });

  const DriveWindow w = drive_window(g, t_eval, support_radius);
  if (w.count() < 3) {
    da = 0.0;
    return;
  }
  // drive and coupling only where q(x - t) is resolvable
  std::vector<double> qv(static_cast<std::size_t>(w.count()));
  par::for_chunks(qv.size(), kChunk, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t k = lo; k < hi; ++k) {
      const int j = w.lo + static_cast<int>(k);
      const double q = p.q(g.x(j) - t_eval);
      qv[k] = q;
      dpsi[static_cast<std::size_t>(j)] += omega * a * q;
    }
  });
  da = -simpson_indexed(w.count(), g.dx,
                        [&](int k) {
                          return psi[static_cast<std::size_t>(w.lo + k)].real() *
                                 qv[static_cast<std::size_t>(k)];
                        }) /
       omega;
  if (!std::isfinite(da))
    throw numeric_error("rhs: non-finite coupling integral at t = " + std::to_string(t_eval));
}

struct Rk4Workspace {
  std::vector<cplx> k1, k2, k3, k4, stage;
  double support_radius = 0.0;

  void resize(std::size_t n) {
    k1.resize(n);
    k2.resize(n);
    k3.resize(n);
    k4.resize(n);
    stage.resize(n);
  }

  void step(FieldState& s, const SimConfig& cfg, double dt) {
    const std::size_t n = s.psi.size();
    resize(n);
    double da1, da2, da3, da4;

    apply_rhs(cfg.profile, cfg.omega, s.grid, s.psi, s.a, s.t, support_radius, da1, k1);

    auto blend = [&](std::span<const cplx> k, double c) {
      par::for_chunks(n, kChunk, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t j = lo; j < hi; ++j) stage[j] = s.psi[j] + c * k[j];
      });
    };

    blend(k1, 0.5 * dt);
    apply_rhs(cfg.profile, cfg.omega, s.grid, stage, s.a + 0.5 * dt * da1, s.t + 0.5 * dt,
              support_radius, da2, k2);
    blend(k2, 0.5 * dt);
    apply_rhs(cfg.profile, cfg.omega, s.grid, stage, s.a + 0.5 * dt * da2, s.t + 0.5 * dt,
              support_radius, da3, k3);
    blend(k3, dt);
    apply_rhs(cfg.profile, cfg.omega, s.grid, stage, s.a + dt * da3, s.t + dt, support_radius,
              da4, k4);

    const double c = dt / 6.0;
    par::for_chunks(n, kChunk, [&](std::size_t lo, std::size_t hi, std::size_t) {
      for (std::size_t j = lo; j < hi; ++j)
        s.psi[j] += c * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
    });
    s.a += c * (da1 + 2.0 * (da2 + da3) + da4);
    s.t += dt;
    if (!std::isfinite(s.a))
      throw numeric_error("step_rk4: amplitude went non-finite at t = " + std::to_string(s.t));
  }
};

}  // namespace

Grid Grid::for_run(const Profile& p, double t_final, double dx) {
  if (!(dx > 0) || !(t_final > 0)) throw std::invalid_argument("Grid::for_run: need positive dx and t_final");
  const double R = p.support_radius(kSupportTol);
  Grid g;
  g.dx = dx;
  const long long m_lo = -static_cast<long long>(std::ceil((R + 5.0) / dx));
  g.x_min = static_cast<double>(m_lo) * dx;
  int panels = static_cast<int>(std::ceil((t_final + R + 5.0 - g.x_min) / dx));
  if (panels % 2 != 0) ++panels;
  g.n_points = panels + 1;
  g.x_max = g.x_min + panels * dx;
  g.validate();
  return g;
}

void Grid::validate() const {
  if (!(dx > 0) || n_points < 3 || (n_points - 1) % 2 != 0)
    throw std::invalid_argument("Grid: need dx > 0 and an even panel count");
}

void rhs(const FieldState& state, const SimConfig& cfg, double t_eval, double& da,
         std::span<cplx> dpsi) {
  state.grid.validate();
  if (dpsi.size() != state.psi.size()) throw std::invalid_argument("rhs: dpsi size mismatch");
  apply_rhs(cfg.profile, cfg.omega, state.grid, state.psi, state.a, t_eval,
            cfg.profile.support_radius(kSupportTol), da, dpsi);
}

FieldState step_rk4(const FieldState& state, const SimConfig& cfg) {
  FieldState next = state;
  Rk4Workspace ws;
  ws.support_radius = cfg.profile.support_radius(kSupportTol);
  ws.step(next, cfg, cfg.dt_or_default());
  return next;
}

double energy(const FieldState& state, const SimConfig& cfg) {
  state.grid.validate();
  const double field = simpson_indexed(state.grid.n_points, state.grid.dx, [&](int j) {
    return std::norm(state.psi[static_cast<std::size_t>(j)]);
  });
  return 0.5 * state.a * state.a + field / (2.0 * cfg.omega * cfg.omega);
}

FieldState initial_state(const SimConfig& cfg) {
  const double dt = cfg.dt_or_default();
  FieldState s;
  s.t = 0.0;
  s.a = cfg.a0;
  s.grid = Grid::for_run(cfg.profile, cfg.t_final, dt);
  s.psi.assign(static_cast<std::size_t>(s.grid.n_points), cplx(0.0, 0.0));
  if (cfg.psi0) {
    for (int j = 0; j < s.grid.n_points; ++j)
      s.psi[static_cast<std::size_t>(j)] = cfg.psi0(s.grid.x(j));
  }
  return s;
}

RunResult run(const SimConfig& cfg) {
  if (!(cfg.omega > 0)) throw std::invalid_argument("run: omega must be positive");
  if (cfg.sample_stride < 1) throw std::invalid_argument("run: sample_stride must be >= 1");
  const double dt = cfg.dt_or_default();
  const int n_steps = static_cast<int>(std::ceil(cfg.t_final / dt - 1e-9));

  RunResult out;
  out.a_series.t0 = out.energy_series.t0 = 0.0;
  out.a_series.dt = out.energy_series.dt = cfg.sample_stride * dt;

  FieldState s = initial_state(cfg);
  Rk4Workspace ws;
  ws.support_radius = cfg.profile.support_radius(kSupportTol);

  // frame window snapped onto the index lattice (dx = dt makes x - t exact)
  const long long m_x = static_cast<long long>(std::llround(s.grid.x_min / dt));
  long long m_lo = 0, m_hi = -1;
  std::vector<int> frame_steps;
  if (cfg.frames) {
    m_lo = static_cast<long long>(std::floor(cfg.frames->l_min / dt));
    m_hi = static_cast<long long>(std::ceil(cfg.frames->l_max / dt));
    std::vector<double> times = cfg.frame_times;
    if (times.empty()) times.push_back(n_steps * dt);
    for (double tf : times) {
      int step = static_cast<int>(std::llround(tf / dt));
      step = std::clamp(step, 0, n_steps);
      frame_steps.push_back(step);
    }
    std::sort(frame_steps.begin(), frame_steps.end());
    frame_steps.erase(std::unique(frame_steps.begin(), frame_steps.end()), frame_steps.end());
  }

  auto capture_frame = [&](int step) {
    FrameSlice fr;
    fr.t = step * dt;
    fr.l_min = static_cast<double>(m_lo) * dt;
    fr.dl = dt;
    const long long j0 = step + m_lo - m_x;
    const long long j1 = step + m_hi - m_x;
    if (j0 < 0 || j1 >= s.grid.n_points)
      throw std::invalid_argument("run: frame window leaves the grid at t = " + std::to_string(fr.t));
    fr.psi.assign(s.psi.begin() + j0, s.psi.begin() + j1 + 1);
    out.frames.push_back(std::move(fr));
  };

  double e0 = 0.0;
  auto record = [&](int step) {
    const double e = energy(s, cfg);
    if (!std::isfinite(e))
      throw numeric_error("run: non-finite energy at t = " + std::to_string(s.t));
    if (step == 0) e0 = e;
    out.a_series.values.push_back(s.a);
    out.energy_series.values.push_back(e);
    const double drift = e0 > 0.0 ? std::fabs(e - e0) / e0 : std::fabs(e - e0);
    out.max_energy_drift = std::max(out.max_energy_drift, drift);
  };

  if (n_steps * dt + ws.support_radius > s.grid.x_max)
    std::cerr << "run: wave support reaches x_max = " << s.grid.x_max
              << " before t = " << n_steps * dt << "; results near the end are clipped\n";

  record(0);
  auto frame_it = frame_steps.begin();
  if (frame_it != frame_steps.end() && *frame_it == 0) {
    capture_frame(0);
    ++frame_it;
  }
  for (int step = 1; step <= n_steps; ++step) {
    ws.step(s, cfg, dt);
    if (step % cfg.sample_stride == 0) record(step);
    if (frame_it != frame_steps.end() && *frame_it == step) {
      capture_frame(step);
      ++frame_it;
    }
  }
  out.final_state = std::move(s);
  return out;
}

}  // namespace radsol
