#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "nematic2d/grid.hpp"

namespace nematic2d {

// Centered second-order differences in the interior, one-sided second-order at
// Dirichlet walls, wrap-around on the torus. All reductions run in a fixed
// row-major order so repeated evaluations are bit-identical.

namespace detail {

inline void ddx_into(const GridSpec& g, const std::vector<double>& f,
                     std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double h2 = 2.0 * g.hx();
  if (g.kind == DomainKind::PeriodicTorus) {
    for (int j = 0; j < npy; ++j) {
      const std::size_t row = g.idx(0, j);
      for (int i = 0; i < npx; ++i) {
        const int ip = (i + 1 == npx) ? 0 : i + 1;
        const int im = (i == 0) ? npx - 1 : i - 1;
        out[row + i] = (f[row + ip] - f[row + im]) / h2;
      }
    }
  } else {
    for (int j = 0; j < npy; ++j) {
      const std::size_t row = g.idx(0, j);
      out[row] = (-3.0 * f[row] + 4.0 * f[row + 1] - f[row + 2]) / h2;
      for (int i = 1; i < npx - 1; ++i)
        out[row + i] = (f[row + i + 1] - f[row + i - 1]) / h2;
      out[row + npx - 1] =
          (3.0 * f[row + npx - 1] - 4.0 * f[row + npx - 2] + f[row + npx - 3]) / h2;
    }
  }
}

inline void ddy_into(const GridSpec& g, const std::vector<double>& f,
                     std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double h2 = 2.0 * g.hy();
  if (g.kind == DomainKind::PeriodicTorus) {
    for (int j = 0; j < npy; ++j) {
      const int jp = (j + 1 == npy) ? 0 : j + 1;
      const int jm = (j == 0) ? npy - 1 : j - 1;
      for (int i = 0; i < npx; ++i)
        out[g.idx(i, j)] = (f[g.idx(i, jp)] - f[g.idx(i, jm)]) / h2;
    }
  } else {
    for (int i = 0; i < npx; ++i) {
      out[g.idx(i, 0)] =
          (-3.0 * f[g.idx(i, 0)] + 4.0 * f[g.idx(i, 1)] - f[g.idx(i, 2)]) / h2;
      out[g.idx(i, npy - 1)] = (3.0 * f[g.idx(i, npy - 1)] -
                                4.0 * f[g.idx(i, npy - 2)] + f[g.idx(i, npy - 3)]) /
                               h2;
    }
    for (int j = 1; j < npy - 1; ++j)
      for (int i = 0; i < npx; ++i)
        out[g.idx(i, j)] = (f[g.idx(i, j + 1)] - f[g.idx(i, j - 1)]) / h2;
  }
}

inline void d2dx2_into(const GridSpec& g, const std::vector<double>& f,
                       std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double hh = g.hx() * g.hx();
  if (g.kind == DomainKind::PeriodicTorus) {
    for (int j = 0; j < npy; ++j) {
      const std::size_t row = g.idx(0, j);
      for (int i = 0; i < npx; ++i) {
        const int ip = (i + 1 == npx) ? 0 : i + 1;
        const int im = (i == 0) ? npx - 1 : i - 1;
        out[row + i] = (f[row + ip] - 2.0 * f[row + i] + f[row + im]) / hh;
      }
    }
  } else {
    for (int j = 0; j < npy; ++j) {
      const std::size_t row = g.idx(0, j);
      out[row] =
          (2.0 * f[row] - 5.0 * f[row + 1] + 4.0 * f[row + 2] - f[row + 3]) / hh;
      for (int i = 1; i < npx - 1; ++i)
        out[row + i] = (f[row + i + 1] - 2.0 * f[row + i] + f[row + i - 1]) / hh;
      out[row + npx - 1] = (2.0 * f[row + npx - 1] - 5.0 * f[row + npx - 2] +
                            4.0 * f[row + npx - 3] - f[row + npx - 4]) /
                           hh;
    }
  }
}

inline void d2dy2_into(const GridSpec& g, const std::vector<double>& f,
                       std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double hh = g.hy() * g.hy();
  if (g.kind == DomainKind::PeriodicTorus) {
    for (int j = 0; j < npy; ++j) {
      const int jp = (j + 1 == npy) ? 0 : j + 1;
      const int jm = (j == 0) ? npy - 1 : j - 1;
      for (int i = 0; i < npx; ++i)
        out[g.idx(i, j)] =
            (f[g.idx(i, jp)] - 2.0 * f[g.idx(i, j)] + f[g.idx(i, jm)]) / hh;
    }
  } else {
    for (int i = 0; i < npx; ++i) {
      out[g.idx(i, 0)] = (2.0 * f[g.idx(i, 0)] - 5.0 * f[g.idx(i, 1)] +
                          4.0 * f[g.idx(i, 2)] - f[g.idx(i, 3)]) /
                         hh;
      out[g.idx(i, npy - 1)] =
          (2.0 * f[g.idx(i, npy - 1)] - 5.0 * f[g.idx(i, npy - 2)] +
           4.0 * f[g.idx(i, npy - 3)] - f[g.idx(i, npy - 4)]) /
          hh;
    }
    for (int j = 1; j < npy - 1; ++j)
      for (int i = 0; i < npx; ++i)
        out[g.idx(i, j)] =
            (f[g.idx(i, j + 1)] - 2.0 * f[g.idx(i, j)] + f[g.idx(i, j - 1)]) / hh;
  }
}

}  // namespace detail

inline std::vector<double> ddx(const GridSpec& g, const std::vector<double>& f) {
  std::vector<double> out(f.size());
  detail::ddx_into(g, f, out);
  return out;
}

inline std::vector<double> ddy(const GridSpec& g, const std::vector<double>& f) {
  std::vector<double> out(f.size());
  detail::ddy_into(g, f, out);
  return out;
}

inline VectorField2 gradient(const ScalarField& f) {
  f.check();
  VectorField2 out(f.grid);
  detail::ddx_into(f.grid, f.values, out.u);
  detail::ddy_into(f.grid, f.values, out.w);
  return out;
}

inline ScalarField divergence(const VectorField2& g) {
  g.check();
  ScalarField out(g.grid);
  std::vector<double> tmp(g.grid.nodes());
  detail::ddx_into(g.grid, g.u, out.values);
  detail::ddy_into(g.grid, g.w, tmp);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += tmp[k];
  return out;
}

inline ScalarField laplacian(const ScalarField& f) {
  f.check();
  ScalarField out(f.grid);
  std::vector<double> tmp(f.grid.nodes());
  detail::d2dx2_into(f.grid, f.values, out.values);
  detail::d2dy2_into(f.grid, f.values, tmp);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += tmp[k];
  return out;
}

/// v . grad f with centered differences.
inline std::vector<double> advect(const VectorField2& v,
                                  const std::vector<double>& f) {
  std::vector<double> fx(f.size()), fy(f.size());
  detail::ddx_into(v.grid, f, fx);
  detail::ddy_into(v.grid, f, fy);
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    out[k] = v.u[k] * fx[k] + v.w[k] * fy[k];
  return out;
}

/// grad d (x) grad d - |grad d|^2 I / 2, the trace-free Ericksen stress.
/// (grad d (x) grad d)_ij = sum_k (d_i d_k)(d_j d_k) of partials; trace is
/// removed exactly nodewise.
inline TensorField2 ericksen_stress(const DirectorField& d) {
  d.check();
  const GridSpec& g = d.grid;
  std::vector<double> d1x = ddx(g, d.d1), d1y = ddy(g, d.d1);
  std::vector<double> d2x = ddx(g, d.d2), d2y = ddy(g, d.d2);
  TensorField2 out(g);
  for (std::size_t k = 0; k < g.nodes(); ++k) {
    const double txx = d1x[k] * d1x[k] + d2x[k] * d2x[k];
    const double tyy = d1y[k] * d1y[k] + d2y[k] * d2y[k];
    const double txy = d1x[k] * d1y[k] + d2x[k] * d2y[k];
    const double half = 0.5 * (txx + tyy);
    out.xx[k] = txx - half;
    out.yy[k] = tyy - half;
    out.xy[k] = txy;
  }
  return out;
}

struct FieldNorms {
  double l2 = 0.0;
  double l4 = 0.0;
  double h1_semi = 0.0;
  double linf = 0.0;
  double w1inf = 0.0;
};

inline FieldNorms norms(const ScalarField& f) {
  f.check();
  const GridSpec& g = f.grid;
  std::vector<double> fx(g.nodes()), fy(g.nodes());
  detail::ddx_into(g, f.values, fx);
  detail::ddy_into(g, f.values, fy);
  FieldNorms out;
  double s2 = 0.0, s4 = 0.0, sg = 0.0, mg = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      const double v = f.values[k];
      s2 += w * v * v;
      s4 += w * v * v * v * v;
      const double gr2 = fx[k] * fx[k] + fy[k] * fy[k];
      sg += w * gr2;
      out.linf = std::max(out.linf, std::fabs(v));
      mg = std::max(mg, std::sqrt(gr2));
    }
  out.l2 = std::sqrt(s2);
  out.l4 = std::pow(s4, 0.25);
  out.h1_semi = std::sqrt(sg);
  out.w1inf = out.linf + mg;
  return out;
}

inline FieldNorms norms(const VectorField2& f) {
  f.check();
  const GridSpec& g = f.grid;
  std::vector<double> ux(g.nodes()), uy(g.nodes()), wx(g.nodes()), wy(g.nodes());
  detail::ddx_into(g, f.u, ux);
  detail::ddy_into(g, f.u, uy);
  detail::ddx_into(g, f.w, wx);
  detail::ddy_into(g, f.w, wy);
  FieldNorms out;
  double s2 = 0.0, s4 = 0.0, sg = 0.0, mg = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      const double w = g.quad_weight(i, j);
      const double m2 = f.u[k] * f.u[k] + f.w[k] * f.w[k];
      s2 += w * m2;
      s4 += w * m2 * m2;
      const double gr2 =
          ux[k] * ux[k] + uy[k] * uy[k] + wx[k] * wx[k] + wy[k] * wy[k];
      sg += w * gr2;
      out.linf = std::max(out.linf, std::sqrt(m2));
      mg = std::max(mg, std::sqrt(gr2));
    }
  out.l2 = std::sqrt(s2);
  out.l4 = std::pow(s4, 0.25);
  out.h1_semi = std::sqrt(sg);
  out.w1inf = out.linf + mg;
  return out;
}

inline double inner(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "inner(scalar)");
  const GridSpec& g = a.grid;
  double s = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      s += g.quad_weight(i, j) * a.values[k] * b.values[k];
    }
  return s;
}

inline double inner(const VectorField2& a, const VectorField2& b) {
  require_same_grid(a.grid, b.grid, "inner(vector)");
  const GridSpec& g = a.grid;
  double s = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) {
      const std::size_t k = g.idx(i, j);
      s += g.quad_weight(i, j) * (a.u[k] * b.u[k] + a.w[k] * b.w[k]);
    }
  return s;
}

/// Quadrature of a raw node array.
inline double integrate(const GridSpec& g, const std::vector<double>& f) {
  double s = 0.0;
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) s += g.quad_weight(i, j) * f[g.idx(i, j)];
  return s;
}

/// Squared L2 norm of the Hessian, summed over components of a director field:
/// sum_{i,j,l} ||di dj d_l||^2.
inline double hessian_sq_l2(const DirectorField& d) {
  const GridSpec& g = d.grid;
  double s = 0.0;
  for (const std::vector<double>* comp : {&d.d1, &d.d2}) {
    std::vector<double> cxx(g.nodes()), cyy(g.nodes());
    detail::d2dx2_into(g, *comp, cxx);
    detail::d2dy2_into(g, *comp, cyy);
    std::vector<double> cy(g.nodes()), cxy(g.nodes());
    detail::ddy_into(g, *comp, cy);
    detail::ddx_into(g, cy, cxy);
    for (int j = 0; j < g.npy(); ++j)
      for (int i = 0; i < g.npx(); ++i) {
        const std::size_t k = g.idx(i, j);
        const double w = g.quad_weight(i, j);
        s += w * (cxx[k] * cxx[k] + cyy[k] * cyy[k] + 2.0 * cxy[k] * cxy[k]);
      }
  }
  return s;
}

}  // namespace nematic2d
