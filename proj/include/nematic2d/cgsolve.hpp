#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "nematic2d/errors.hpp"
#include "nematic2d/grid.hpp"

namespace nematic2d {

struct CgResult {
  int iters = 0;
  double residual = 0.0;  // relative to ||b||
  bool converged = false;
};

/// Conjugate gradient on an SPD operator, with an optional weighted inner
/// product (weights == nullptr means the plain dot product). Reductions are
/// sequential in index order, so results are reproducible bit for bit.
template <class Op>
CgResult conjugate_gradient(const Op& apply, const std::vector<double>& b,
                            std::vector<double>& x,
                            const std::vector<double>* weights, double rel_tol,
                            int max_iters) {
  const std::size_t n = b.size();
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& c) {
    double s = 0.0;
    if (weights)
      for (std::size_t k = 0; k < n; ++k) s += (*weights)[k] * a[k] * c[k];
    else
      for (std::size_t k = 0; k < n; ++k) s += a[k] * c[k];
    return s;
  };

  std::vector<double> r(n), p(n), ap(n);
  apply(x, ap);
  for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
  const double bnorm = std::sqrt(dot(b, b));
  const double stop = rel_tol * (bnorm > 0.0 ? bnorm : 1.0);

  double rr = dot(r, r);
  CgResult res;
  if (std::sqrt(rr) <= stop) {
    res.converged = true;
    res.residual = bnorm > 0.0 ? std::sqrt(rr) / bnorm : 0.0;
    return res;
  }
  p = r;
  for (int it = 0; it < max_iters; ++it) {
    apply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0))
      throw SolverError("conjugate_gradient: operator not positive definite",
                        std::sqrt(rr));
    const double alpha = rr / pap;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
    }
    const double rr_new = dot(r, r);
    res.iters = it + 1;
    if (std::sqrt(rr_new) <= stop) {
      res.converged = true;
      res.residual = bnorm > 0.0 ? std::sqrt(rr_new) / bnorm : 0.0;
      return res;
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
  }
  res.residual = bnorm > 0.0 ? std::sqrt(rr) / bnorm : 0.0;
  return res;
}

/// Flux-form Neumann Laplacian on the box (zero flux through the walls),
/// symmetric and mass-conserving under the trapezoid weights. On the torus
/// this degenerates to the standard periodic 5-point stencil.
inline void neumann_laplacian(const GridSpec& g, const std::vector<double>& f,
                              std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double hx = g.hx(), hy = g.hy();
  if (g.kind == DomainKind::PeriodicTorus) {
    for (int j = 0; j < npy; ++j) {
      const int jp = (j + 1 == npy) ? 0 : j + 1;
      const int jm = (j == 0) ? npy - 1 : j - 1;
      for (int i = 0; i < npx; ++i) {
        const int ip = (i + 1 == npx) ? 0 : i + 1;
        const int im = (i == 0) ? npx - 1 : i - 1;
        out[g.idx(i, j)] =
            (f[g.idx(ip, j)] - 2.0 * f[g.idx(i, j)] + f[g.idx(im, j)]) / (hx * hx) +
            (f[g.idx(i, jp)] - 2.0 * f[g.idx(i, j)] + f[g.idx(i, jm)]) / (hy * hy);
      }
    }
    return;
  }
  for (int j = 0; j < npy; ++j)
    for (int i = 0; i < npx; ++i) {
      const double wx = (i == 0 || i == npx - 1) ? 0.5 : 1.0;
      const double wy = (j == 0 || j == npy - 1) ? 0.5 : 1.0;
      double fxp = (i + 1 < npx) ? (f[g.idx(i + 1, j)] - f[g.idx(i, j)]) / hx : 0.0;
      double fxm = (i > 0) ? (f[g.idx(i, j)] - f[g.idx(i - 1, j)]) / hx : 0.0;
      double fyp = (j + 1 < npy) ? (f[g.idx(i, j + 1)] - f[g.idx(i, j)]) / hy : 0.0;
      double fym = (j > 0) ? (f[g.idx(i, j)] - f[g.idx(i, j - 1)]) / hy : 0.0;
      out[g.idx(i, j)] = (fxp - fxm) / (hx * wx) + (fyp - fym) / (hy * wy);
    }
}

/// 5-point Laplacian treating everything outside the interior as zero
/// (homogeneous Dirichlet); boundary entries of the output are forced to zero.
inline void dirichlet0_laplacian(const GridSpec& g, const std::vector<double>& f,
                                 std::vector<double>& out) {
  const int npx = g.npx(), npy = g.npy();
  const double hx2 = g.hx() * g.hx(), hy2 = g.hy() * g.hy();
  if (g.kind == DomainKind::PeriodicTorus)
    throw StructuralError("dirichlet0_laplacian requires a dirichlet-box grid");
  for (int j = 0; j < npy; ++j)
    for (int i = 0; i < npx; ++i) {
      if (i == 0 || j == 0 || i == npx - 1 || j == npy - 1) {
        out[g.idx(i, j)] = 0.0;
        continue;
      }
      auto val = [&](int ii, int jj) {
        if (ii == 0 || jj == 0 || ii == npx - 1 || jj == npy - 1) return 0.0;
        return f[g.idx(ii, jj)];
      };
      out[g.idx(i, j)] =
          (val(i + 1, j) - 2.0 * f[g.idx(i, j)] + val(i - 1, j)) / hx2 +
          (val(i, j + 1) - 2.0 * f[g.idx(i, j)] + val(i, j - 1)) / hy2;
    }
}

/// Trapezoid weight array for the weighted CG inner product.
inline std::vector<double> quad_weights(const GridSpec& g) {
  std::vector<double> w(g.nodes());
  for (int j = 0; j < g.npy(); ++j)
    for (int i = 0; i < g.npx(); ++i) w[g.idx(i, j)] = g.quad_weight(i, j);
  return w;
}

/// Solve (alpha I - beta Lap) x = b for the heat-step operators.
/// bc semantics: Neumann/periodic uses neumann_laplacian (weighted CG on the
/// box), Dirichlet0 solves only the interior unknowns of the box.
enum class HelmholtzBc { NeumannOrPeriodic, Dirichlet0 };

inline CgResult solve_helmholtz(const GridSpec& g, double alpha, double beta,
                                const std::vector<double>& b,
                                std::vector<double>& x, HelmholtzBc bc,
                                double rel_tol, int max_iters = 10000) {
  std::vector<double> lap(g.nodes());
  if (bc == HelmholtzBc::Dirichlet0 && g.kind == DomainKind::PeriodicTorus)
    bc = HelmholtzBc::NeumannOrPeriodic;
  if (bc == HelmholtzBc::NeumannOrPeriodic) {
    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
      neumann_laplacian(g, in, lap);
      for (std::size_t k = 0; k < in.size(); ++k)
        out[k] = alpha * in[k] - beta * lap[k];
    };
    std::vector<double> w = quad_weights(g);
    return conjugate_gradient(apply, b, x, &w, rel_tol, max_iters);
  }
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    dirichlet0_laplacian(g, in, lap);
    for (std::size_t k = 0; k < in.size(); ++k)
      out[k] = alpha * in[k] - beta * lap[k];
    // keep boundary entries pinned at zero
    const int npx = g.npx(), npy = g.npy();
    for (int i = 0; i < npx; ++i) {
      out[g.idx(i, 0)] = 0.0;
      out[g.idx(i, npy - 1)] = 0.0;
    }
    for (int j = 0; j < npy; ++j) {
      out[g.idx(0, j)] = 0.0;
      out[g.idx(npx - 1, j)] = 0.0;
    }
  };
  return conjugate_gradient(apply, b, x, nullptr, rel_tol, max_iters);
}

}  // namespace nematic2d
