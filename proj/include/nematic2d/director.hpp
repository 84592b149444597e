#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nematic2d/cgsolve.hpp"
#include "nematic2d/grid.hpp"
#include "nematic2d/ops.hpp"

namespace nematic2d {

/// Controls for the per-step Picard linearization of
///   d/dt d + v.grad d = theta (Lap d + |grad d|^2 d).
/// In shifted mode the stored unknown is d - e2 and the nonlinearity is
/// theta |grad d|^2 (d + e2), the Cauchy-problem variant.
struct PicardConfig {
  int max_iters = 50;
  double contraction_tol = 1e-9;
  bool renormalize = true;
  double theta = 1.0;
  bool shifted = false;
  double linear_tol = 1e-12;

  void validate() const {
    if (max_iters < 1) throw StructuralError("PicardConfig: max_iters must be >= 1");
    if (!(contraction_tol > 0.0))
      throw StructuralError("PicardConfig: contraction_tol must be > 0");
  }
};

class PicardNonConvergence : public SolverError {
public:
  explicit PicardNonConvergence(double residual)
      : SolverError(
            "director_step: Picard iteration did not converge (last relative "
            "H1 update " +
                std::to_string(residual) + "); reduce dt",
            residual) {}
};

struct DirectorStepResult {
  DirectorField d;
  int iters = 0;
  double last_update = 0.0;  // relative H1 change of the final iterate
};

namespace detail {

inline double h1_norm_sq(const GridSpec& g, const std::vector<double>& a1,
                         const std::vector<double>& a2) {
  std::vector<double> g1x = ddx(g, a1), g1y = ddy(g, a1);
  std::vector<double> g2x = ddx(g, a2), g2y = ddy(g, a2);
  double s = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      s += w * (a1[k] * a1[k] + a2[k] * a2[k] + g1x[k] * g1x[k] + g1y[k] * g1y[k] +
                g2x[k] * g2x[k] + g2y[k] * g2y[k]);
    }
  return s;
}

/// Backward-Euler component solve (1/dt) c - theta Lap c = rhs. On the box the
/// boundary trace of `bc_carrier` is frozen into the solution.
inline void implicit_heat_solve(const GridSpec& g, double dt, double theta,
                                const std::vector<double>& rhs,
                                const std::vector<double>& bc_carrier,
                                std::vector<double>& out, double linear_tol) {
  const double alpha = 1.0 / dt;
  if (g.kind == DomainKind::PeriodicTorus) {
    CgResult cr = solve_helmholtz(g, alpha, theta, rhs, out,
                                  HelmholtzBc::NeumannOrPeriodic, linear_tol);
    if (!cr.converged)
      throw SolverError("director_step: linear solve did not converge", cr.residual);
    return;
  }
  // Dirichlet box: solve for the interior deviation z with the boundary values
  // of bc_carrier moved to the right-hand side.
  const int npx = g.npx(), npy = g.npy();
  std::vector<double> ext(g.nodes(), 0.0);
  for (int i = 0; i < npx; ++i) {
    ext[g.idx(i, 0)] = bc_carrier[g.idx(i, 0)];
    ext[g.idx(i, npy - 1)] = bc_carrier[g.idx(i, npy - 1)];
  }
  for (int j = 0; j < npy; ++j) {
    ext[g.idx(0, j)] = bc_carrier[g.idx(0, j)];
    ext[g.idx(npx - 1, j)] = bc_carrier[g.idx(npx - 1, j)];
  }
  // rhs for the interior problem: rhs - (alpha I - theta Lap) ext, where the
  // Laplacian of ext only feeds boundary values into wall-adjacent rows.
  std::vector<double> b(g.nodes(), 0.0);
  const double hx2 = g.hx() * g.hx(), hy2 = g.hy() * g.hy();
  for (int j = 1; j < npy - 1; ++j)
    for (int i = 1; i < npx - 1; ++i) {
      double lap_ext = (ext[g.idx(i + 1, j)] + ext[g.idx(i - 1, j)]) / hx2 +
                       (ext[g.idx(i, j + 1)] + ext[g.idx(i, j - 1)]) / hy2;
      b[g.idx(i, j)] = rhs[g.idx(i, j)] + theta * lap_ext;
    }
  std::vector<double> z(g.nodes(), 0.0);
  for (int j = 1; j < npy - 1; ++j)
    for (int i = 1; i < npx - 1; ++i)
      z[g.idx(i, j)] = out[g.idx(i, j)];  // warm start from caller's guess
  CgResult cr =
      solve_helmholtz(g, alpha, theta, b, z, HelmholtzBc::Dirichlet0, linear_tol);
  if (!cr.converged)
    throw SolverError("director_step: linear solve did not converge", cr.residual);
  for (std::size_t k = 0; k < g.nodes(); ++k) out[k] = z[k] + ext[k];
}

inline void renormalize_nodes(DirectorField& d, bool shifted) {
  for (std::size_t k = 0; k < d.d1.size(); ++k) {
    const double a = d.d1[k];
    const double b = d.d2[k] + (shifted ? 1.0 : 0.0);
    const double n = std::sqrt(a * a + b * b);
    if (n > 0.0) {
      d.d1[k] = a / n;
      d.d2[k] = b / n - (shifted ? 1.0 : 0.0);
    }
  }
}

struct PicardTrace {
  std::vector<double> update_h1;  // ||d^k - d^{k-1}||_H1 per iterate
};

inline DirectorStepResult picard_step(const DirectorField& d, const VectorField2& v,
                                      const PicardConfig& cfg, double dt,
                                      PicardTrace* trace, bool throw_on_failure) {
  cfg.validate();
  d.check();
  v.check();
  require_same_grid(d.grid, v.grid, "director_step");
  if (!(dt > 0.0)) throw StructuralError("director_step: dt must be > 0");
  const GridSpec& g = d.grid;

  DirectorField cur = d;
  std::vector<double> rhs1(g.nodes()), rhs2(g.nodes());
  DirectorStepResult res;
  for (int it = 0; it < cfg.max_iters; ++it) {
    // frozen source from the previous iterate
    std::vector<double> g1x = ddx(g, cur.d1), g1y = ddy(g, cur.d1);
    std::vector<double> g2x = ddx(g, cur.d2), g2y = ddy(g, cur.d2);
    std::vector<double> adv1 = advect(v, cur.d1), adv2 = advect(v, cur.d2);
    for (std::size_t k = 0; k < g.nodes(); ++k) {
      const double gd2 = g1x[k] * g1x[k] + g1y[k] * g1y[k] + g2x[k] * g2x[k] +
                         g2y[k] * g2y[k];
      rhs1[k] = d.d1[k] / dt + cfg.theta * gd2 * cur.d1[k] - adv1[k];
      rhs2[k] = d.d2[k] / dt +
                cfg.theta * gd2 * (cur.d2[k] + (cfg.shifted ? 1.0 : 0.0)) -
                adv2[k];
    }
    DirectorField next = cur;
    implicit_heat_solve(g, dt, cfg.theta, rhs1, d.d1, next.d1, cfg.linear_tol);
    implicit_heat_solve(g, dt, cfg.theta, rhs2, d.d2, next.d2, cfg.linear_tol);

    std::vector<double> diff1(g.nodes()), diff2(g.nodes());
    for (std::size_t k = 0; k < g.nodes(); ++k) {
      diff1[k] = next.d1[k] - cur.d1[k];
      diff2[k] = next.d2[k] - cur.d2[k];
    }
    const double upd = std::sqrt(h1_norm_sq(g, diff1, diff2));
    const double ref = std::sqrt(h1_norm_sq(g, next.d1, next.d2));
    const double rel = upd / (ref > 0.0 ? ref : 1.0);
    if (trace) trace->update_h1.push_back(upd);
    cur = std::move(next);
    res.iters = it + 1;
    res.last_update = rel;
    if (rel <= cfg.contraction_tol) {
      if (cfg.renormalize) renormalize_nodes(cur, cfg.shifted);
      res.d = std::move(cur);
      return res;
    }
  }
  if (throw_on_failure) throw PicardNonConvergence(res.last_update);
  if (cfg.renormalize) renormalize_nodes(cur, cfg.shifted);
  res.d = std::move(cur);
  return res;
}

}  // namespace detail

inline DirectorStepResult director_step(const DirectorField& d,
                                        const VectorField2& v,
                                        const PicardConfig& cfg, double dt) {
  return detail::picard_step(d, v, cfg, dt, nullptr, /*throw_on_failure=*/true);
}

/// Max over the path of the nodewise unit-constraint residual ||d|^2 - 1|.
inline double unit_constraint_residual(const std::vector<DirectorField>& path) {
  double worst = 0.0;
  for (const DirectorField& d : path) worst = std::max(worst, d.unit_residual());
  return worst;
}

struct AngleMinimumReport {
  bool ok = true;
  double min_d2 = 1.0;
  int step = -1;
  int i = 0, j = 0;
  std::string detail;
};

/// Maximum principle for the second component: min d2(t) >= d02_min - tol.
inline AngleMinimumReport angle_minimum_check(const std::vector<DirectorField>& path,
                                              double d02_min,
                                              double angle_tol = 1e-8) {
  AngleMinimumReport rep;
  for (std::size_t s = 0; s < path.size(); ++s) {
    const GridSpec& g = path[s].grid;
    for (int j = 0; j < g.npy(); ++j)
      for (int i = 0; i < g.npx(); ++i) {
        const double v = path[s].d2[g.idx(i, j)];
        if (v < rep.min_d2) {
          rep.min_d2 = v;
          rep.step = static_cast<int>(s);
          rep.i = i;
          rep.j = j;
        }
      }
  }
  if (rep.min_d2 < d02_min - angle_tol) {
    rep.ok = false;
    rep.detail = "d2 minimum " + std::to_string(rep.min_d2) + " below bound " +
                 std::to_string(d02_min) + " at step " + std::to_string(rep.step) +
                 ", node (" + std::to_string(rep.i) + "," + std::to_string(rep.j) +
                 ")";
  }
  return rep;
}

/// Successive Picard update ratios ||d^{k+1}-d^k||_H1 / ||d^k-d^{k-1}||_H1.
/// Diagnostic only; never throws on a non-contractive regime.
inline std::vector<double> picard_contraction_probe(const DirectorField& d,
                                                    const VectorField2& v,
                                                    PicardConfig cfg, double dt) {
  cfg.contraction_tol = 1e-300;  // effectively run out the full iteration budget
  detail::PicardTrace trace;
  try {
    detail::picard_step(d, v, cfg, dt, &trace, /*throw_on_failure=*/false);
  } catch (const SolverError&) {
    // linear-solve trouble still yields whatever ratios were collected
  }
  std::vector<double> ratios;
  for (std::size_t k = 1; k < trace.update_h1.size(); ++k) {
    if (trace.update_h1[k - 1] > 0.0)
      ratios.push_back(trace.update_h1[k] / trace.update_h1[k - 1]);
  }
  return ratios;
}

}  // namespace nematic2d
