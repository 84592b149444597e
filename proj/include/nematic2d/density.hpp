#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "nematic2d/cgsolve.hpp"
#include "nematic2d/grid.hpp"
#include "nematic2d/ops.hpp"

namespace nematic2d {

/// One step of d/dt rho + div(rho v) = eps Lap rho with zero-flux walls.
/// Conservative first-order upwind advection (explicit) followed by an
/// implicit backward-Euler diffusion solve.
struct DensityStepConfig {
  double eps = 0.0;
  double dt = 1e-2;
  double linear_tol = 1e-10;
};

namespace detail {

/// Conservative upwind divergence of rho*v using face velocities; the flux
/// through the box walls is zero, so the trapezoid-weighted mass telescopes
/// exactly.
inline std::vector<double> upwind_flux_divergence(const ScalarField& rho,
                                                  const VectorField2& v) {
  const GridSpec& g = rho.grid;
  const int npx = g.npx(), npy = g.npy();
  const double hx = g.hx(), hy = g.hy();
  const bool torus = g.kind == DomainKind::PeriodicTorus;
  std::vector<double> out(g.nodes(), 0.0);

  // x-direction faces
  const int nfx = torus ? npx : npx - 1;
  for (int j = 0; j < npy; ++j) {
    for (int i = 0; i < nfx; ++i) {
      const int ip = torus ? (i + 1) % npx : i + 1;
      const double vel = 0.5 * (v.u[g.idx(i, j)] + v.u[g.idx(ip, j)]);
      const double flux = vel * (vel >= 0.0 ? rho.values[g.idx(i, j)]
                                            : rho.values[g.idx(ip, j)]);
      // the y-weight cancels between the two face contributions
      const double wl = (!torus && i == 0) ? 0.5 : 1.0;
      const double wr = (!torus && ip == npx - 1) ? 0.5 : 1.0;
      out[g.idx(i, j)] += flux / (hx * wl);
      out[g.idx(ip, j)] -= flux / (hx * wr);
    }
  }
  // y-direction faces
  const int nfy = torus ? npy : npy - 1;
  for (int j = 0; j < nfy; ++j) {
    const int jp = torus ? (j + 1) % npy : j + 1;
    for (int i = 0; i < npx; ++i) {
      const double vel = 0.5 * (v.w[g.idx(i, j)] + v.w[g.idx(i, jp)]);
      const double flux = vel * (vel >= 0.0 ? rho.values[g.idx(i, j)]
                                            : rho.values[g.idx(i, jp)]);
      const double wl = (!torus && j == 0) ? 0.5 : 1.0;
      const double wr = (!torus && jp == npy - 1) ? 0.5 : 1.0;
      out[g.idx(i, j)] += flux / (hy * wl);
      out[g.idx(i, jp)] -= flux / (hy * wr);
    }
  }
  return out;
}

}  // namespace detail

inline ScalarField density_step(const ScalarField& rho, const VectorField2& v,
                                const DensityStepConfig& cfg) {
  rho.check();
  v.check();
  require_same_grid(rho.grid, v.grid, "density_step");
  if (!(cfg.dt > 0.0)) throw StructuralError("density_step: dt must be > 0");
  if (cfg.eps < 0.0) throw StructuralError("density_step: eps must be >= 0");
  const GridSpec& g = rho.grid;
  for (double r : rho.values)
    if (!(r > 0.0)) throw DomainError("density_step: density must be positive");

  // CFL check for the explicit upwind advection.
  double speed = 0.0;
  for (std::size_t k = 0; k < g.nodes(); ++k)
    speed = std::max(speed,
                     std::fabs(v.u[k]) / g.hx() + std::fabs(v.w[k]) / g.hy());
  if (speed > 0.0 && cfg.dt * speed > 0.9)
    throw SchemeViolation("density_step: CFL violation, dt " +
                          std::to_string(cfg.dt) + " exceeds 0.9/" +
                          std::to_string(speed));

  ScalarField star(g);
  std::vector<double> divf = detail::upwind_flux_divergence(rho, v);
  for (std::size_t k = 0; k < g.nodes(); ++k)
    star.values[k] = rho.values[k] - cfg.dt * divf[k];

  ScalarField out = star;
  if (cfg.eps > 0.0) {
    CgResult cr = solve_helmholtz(g, 1.0, cfg.eps * cfg.dt, star.values, out.values,
                                  HelmholtzBc::NeumannOrPeriodic, cfg.linear_tol);
    if (!cr.converged)
      throw SolverError("density_step: diffusion solve did not converge",
                        cr.residual);
  }
  for (std::size_t k = 0; k < g.nodes(); ++k)
    if (!(out.values[k] > 0.0))
      throw SchemeViolation("density_step: nonpositive output density at node " +
                            std::to_string(k));
  return out;
}

struct DensityBoundsReport {
  bool ok = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  int step = -1;
  std::size_t node = 0;
  std::string detail;
};

/// Two-sided pointwise bound along a trajectory:
///   rho_min e^{-int ||v||_W1inf} <= rho(t) <= rho_max e^{+int ||v||_W1inf},
/// with the time integral accumulated by the left rectangle rule.
inline DensityBoundsReport density_bounds_check(
    const std::vector<ScalarField>& rho_path,
    const std::vector<VectorField2>& v_path, double dt, double rho0_min,
    double rho0_max) {
  if (rho_path.empty() || v_path.size() + 1 < rho_path.size())
    throw StructuralError("density_bounds_check: path length mismatch");
  DensityBoundsReport rep;
  double accum = 0.0;  // int_0^t ||v||_W1inf ds
  for (std::size_t s = 0; s < rho_path.size(); ++s) {
    const double lo = rho0_min * std::exp(-accum);
    const double hi = rho0_max * std::exp(accum);
    const ScalarField& r = rho_path[s];
    for (std::size_t k = 0; k < r.values.size(); ++k) {
      const double m = std::min(r.values[k] - lo, hi - r.values[k]);
      if (m < rep.worst_margin) {
        rep.worst_margin = m;
        rep.step = static_cast<int>(s);
        rep.node = k;
      }
    }
    if (s < v_path.size()) accum += dt * norms(v_path[s]).w1inf;
  }
  if (rep.worst_margin < 0.0) {
    rep.ok = false;
    rep.detail = "bound violated at step " + std::to_string(rep.step) + ", node " +
                 std::to_string(rep.node) + ", margin " +
                 std::to_string(rep.worst_margin);
  }
  return rep;
}

}  // namespace nematic2d
