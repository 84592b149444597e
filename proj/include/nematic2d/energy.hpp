#pragma once

#include <cmath>

#include "nematic2d/grid.hpp"
#include "nematic2d/ops.hpp"
#include "nematic2d/params.hpp"

namespace nematic2d {

/// Relative vacuum threshold: nodes with rho <= vacuum_threshold(max rho)
/// contribute no kinetic energy and must carry zero momentum.
inline double vacuum_threshold(double rho_max) { return 1e-12 * rho_max; }

/// Pressure potential
///   Q(s) = A/(gamma-1) * (s^gamma - gamma s rho_inf^{gamma-1}
///          + (gamma-1) rho_inf^gamma),
/// nonnegative for s >= 0 with Q(rho_inf) = 0.
inline double q_potential(double s, const PhysParams& p) {
  if (s < 0.0) throw DomainError("q_potential: density must be nonnegative");
  const double g = p.gamma;
  return p.A / (g - 1.0) *
         (std::pow(s, g) - g * s * std::pow(p.rho_inf, g - 1.0) +
          (g - 1.0) * std::pow(p.rho_inf, g));
}

namespace detail {

inline double kinetic_density(double rho, double mu_x, double mu_y, double rho_vac) {
  if (rho <= rho_vac) {
    if (std::fabs(mu_x) > 1e-10 || std::fabs(mu_y) > 1e-10)
      throw DomainError("total_energy: nonzero momentum on a vacuum node");
    return 0.0;
  }
  return 0.5 * (mu_x * mu_x + mu_y * mu_y) / rho;
}

}  // namespace detail

/// Total energy
///   E = int [ |m|^2/(2 rho) 1_{rho>0} + Q(rho) + nu theta |grad d|^2 / 2 ].
inline double total_energy(const ScalarField& rho, const VectorField2& m,
                           const DirectorField& d, const PhysParams& p) {
  require_same_grid(rho.grid, m.grid, "total_energy");
  require_same_grid(rho.grid, d.grid, "total_energy");
  const GridSpec& g = rho.grid;
  double rho_max = 0.0;
  for (double r : rho.values) {
    if (r < 0.0) throw DomainError("total_energy: negative density node");
    rho_max = std::max(rho_max, r);
  }
  const double rho_vac = vacuum_threshold(rho_max);

  std::vector<double> d1x = ddx(g, d.d1), d1y = ddy(g, d.d1);
  std::vector<double> d2x = ddx(g, d.d2), d2y = ddy(g, d.d2);
  double e = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      double val = detail::kinetic_density(rho.values[k], m.u[k], m.w[k], rho_vac);
      val += q_potential(rho.values[k], p);
      const double gd2 = d1x[k] * d1x[k] + d1y[k] * d1y[k] + d2x[k] * d2x[k] +
                         d2y[k] * d2y[k];
      val += 0.5 * p.nu * p.theta * gd2;
      e += w * val;
    }
  return e;
}

/// Tension field Delta d + |grad d|^2 d (theta applied by callers).
inline VectorField2 tension_field(const DirectorField& d) {
  d.check();
  const GridSpec& g = d.grid;
  ScalarField c1{g}, c2{g};
  c1.values = d.d1;
  c2.values = d.d2;
  ScalarField l1 = laplacian(c1), l2 = laplacian(c2);
  std::vector<double> d1x = ddx(g, d.d1), d1y = ddy(g, d.d1);
  std::vector<double> d2x = ddx(g, d.d2), d2y = ddy(g, d.d2);
  VectorField2 out(g);
  for (std::size_t k = 0; k < g.nodes(); ++k) {
    const double gd2 = d1x[k] * d1x[k] + d1y[k] * d1y[k] + d2x[k] * d2x[k] +
                       d2y[k] * d2y[k];
    out.u[k] = l1.values[k] + gd2 * d.d1[k];
    out.w[k] = l2.values[k] + gd2 * d.d2[k];
  }
  return out;
}

/// Dissipation
///   F = int [ mu |grad v|^2 + (lambda+mu) |div v|^2
///             + theta |Delta d + |grad d|^2 d|^2 ].
inline double dissipation(const VectorField2& v, const DirectorField& d,
                          const PhysParams& p) {
  require_same_grid(v.grid, d.grid, "dissipation");
  const GridSpec& g = v.grid;
  std::vector<double> ux = ddx(g, v.u), uy = ddy(g, v.u);
  std::vector<double> wx = ddx(g, v.w), wy = ddy(g, v.w);
  VectorField2 ten = tension_field(d);
  double f = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      const double gv2 =
          ux[k] * ux[k] + uy[k] * uy[k] + wx[k] * wx[k] + wy[k] * wy[k];
      const double dv = ux[k] + wy[k];
      const double t2 = ten.u[k] * ten.u[k] + ten.w[k] * ten.w[k];
      f += w * (p.mu * gv2 + (p.lambda + p.mu) * dv * dv + p.theta * t2);
    }
  return f;
}

/// Modified energy of the artificial-pressure level:
///   E_delta = int [ |m|^2/(2 rho) 1_{rho>0} + A/(gamma-1) rho^gamma
///                   + delta/(beta-1) rho^beta + nu |grad d|^2 / 2 ].
/// Note the director weight is nu (not nu*theta) and the pressure potential is
/// the pure power, both as used by the artificial-level inequality.
inline double modified_energy(const ScalarField& rho, const VectorField2& m,
                              const DirectorField& d, const PhysParams& p,
                              const SchemeParams& s) {
  require_same_grid(rho.grid, m.grid, "modified_energy");
  require_same_grid(rho.grid, d.grid, "modified_energy");
  const GridSpec& g = rho.grid;
  double rho_max = 0.0;
  for (double r : rho.values) {
    if (r < 0.0) throw DomainError("modified_energy: negative density node");
    rho_max = std::max(rho_max, r);
  }
  const double rho_vac = vacuum_threshold(rho_max);

  std::vector<double> d1x = ddx(g, d.d1), d1y = ddy(g, d.d1);
  std::vector<double> d2x = ddx(g, d.d2), d2y = ddy(g, d.d2);
  double e = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      const double r = rho.values[k];
      double val = detail::kinetic_density(r, m.u[k], m.w[k], rho_vac);
      val += p.A / (p.gamma - 1.0) * std::pow(r, p.gamma);
      if (s.delta > 0.0) val += s.delta / (s.beta - 1.0) * std::pow(r, s.beta);
      const double gd2 = d1x[k] * d1x[k] + d1y[k] * d1y[k] + d2x[k] * d2x[k] +
                         d2y[k] * d2y[k];
      val += 0.5 * p.nu * gd2;
      e += w * val;
    }
  return e;
}

}  // namespace nematic2d
