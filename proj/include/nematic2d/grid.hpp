#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nematic2d/errors.hpp"

namespace nematic2d {

enum class DomainKind { PeriodicTorus, DirichletBox };

inline std::string to_string(DomainKind k) {
  return k == DomainKind::PeriodicTorus ? "periodic-torus" : "dirichlet-box";
}

inline DomainKind domain_kind_from_string(const std::string& s) {
  if (s == "periodic-torus") return DomainKind::PeriodicTorus;
  if (s == "dirichlet-box") return DomainKind::DirichletBox;
  throw ConfigError("unknown domain_kind '" + s +
                    "' (expected periodic-torus or dirichlet-box)");
}

/// Uniform rectangular grid. On the torus nodes are x_i = x0 + i*hx,
/// i = 0..nx-1 (the right edge wraps). On the Dirichlet box the node set
/// includes both walls: i = 0..nx, and wall values are owned by boundary
/// data, never by interior updates.
struct GridSpec {
  DomainKind kind = DomainKind::PeriodicTorus;
  double lx = 2.0 * M_PI;
  double ly = 2.0 * M_PI;
  int nx = 64;
  int ny = 64;
  double x0 = 0.0;
  double y0 = 0.0;

  GridSpec() = default;
  GridSpec(DomainKind k, double lx_, double ly_, int nx_, int ny_, double ox = 0.0,
           double oy = 0.0)
      : kind(k), lx(lx_), ly(ly_), nx(nx_), ny(ny_), x0(ox), y0(oy) {
    validate();
  }

  void validate() const {
    if (nx < 8 || ny < 8) throw StructuralError("GridSpec: nx, ny must be >= 8");
    if (!(lx > 0.0) || !(ly > 0.0))
      throw StructuralError("GridSpec: lx, ly must be positive");
  }

  double hx() const { return lx / nx; }
  double hy() const { return ly / ny; }

  /// Nodes per row / column.
  int npx() const { return kind == DomainKind::PeriodicTorus ? nx : nx + 1; }
  int npy() const { return kind == DomainKind::PeriodicTorus ? ny : ny + 1; }
  std::size_t nodes() const {
    return static_cast<std::size_t>(npx()) * static_cast<std::size_t>(npy());
  }

  double x(int i) const { return x0 + i * hx(); }
  double y(int j) const { return y0 + j * hy(); }

  /// Row-major node index (j is the slow axis).
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * npx() + i;
  }

  bool on_boundary(int i, int j) const {
    if (kind == DomainKind::PeriodicTorus) return false;
    return i == 0 || j == 0 || i == nx || j == ny;
  }

  /// Quadrature weight of node (i,j): plain sum * hx*hy on the torus,
  /// trapezoid rule on the box.
  double quad_weight(int i, int j) const {
    double w = hx() * hy();
    if (kind == DomainKind::DirichletBox) {
      if (i == 0 || i == nx) w *= 0.5;
      if (j == 0 || j == ny) w *= 0.5;
    }
    return w;
  }

  double area() const { return lx * ly; }

  bool same_as(const GridSpec& o) const {
    return kind == o.kind && lx == o.lx && ly == o.ly && nx == o.nx && ny == o.ny &&
           x0 == o.x0 && y0 == o.y0;
  }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b,
                              const char* where) {
  if (!a.same_as(b))
    throw StructuralError(std::string("grid mismatch in ") + where);
}

struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g, double fill = 0.0)
      : grid(g), values(g.nodes(), fill) {}

  double& at(int i, int j) { return values[grid.idx(i, j)]; }
  double at(int i, int j) const { return values[grid.idx(i, j)]; }

  void check() const {
    if (values.size() != grid.nodes())
      throw StructuralError("ScalarField: value array incongruent with grid");
  }

  template <class F>
  static ScalarField sample(const GridSpec& g, F&& f) {
    ScalarField out(g);
    for (int j = 0; j < g.npy(); ++j)
      for (int i = 0; i < g.npx(); ++i) out.at(i, j) = f(g.x(i), g.y(j));
    return out;
  }
};

struct VectorField2 {
  GridSpec grid;
  std::vector<double> u, w;

  VectorField2() = default;
  explicit VectorField2(const GridSpec& g, double fu = 0.0, double fw = 0.0)
      : grid(g), u(g.nodes(), fu), w(g.nodes(), fw) {}

  void check() const {
    if (u.size() != grid.nodes() || w.size() != grid.nodes())
      throw StructuralError("VectorField2: component arrays incongruent with grid");
  }

  template <class Fu, class Fw>
  static VectorField2 sample(const GridSpec& g, Fu&& fu, Fw&& fw) {
    VectorField2 out(g);
    for (int j = 0; j < g.npy(); ++j)
      for (int i = 0; i < g.npx(); ++i) {
        out.u[g.idx(i, j)] = fu(g.x(i), g.y(j));
        out.w[g.idx(i, j)] = fw(g.x(i), g.y(j));
      }
    return out;
  }
};

struct DirectorField {
  GridSpec grid;
  std::vector<double> d1, d2;

  DirectorField() = default;
  explicit DirectorField(const GridSpec& g, double f1 = 0.0, double f2 = 1.0)
      : grid(g), d1(g.nodes(), f1), d2(g.nodes(), f2) {}

  void check() const {
    if (d1.size() != grid.nodes() || d2.size() != grid.nodes())
      throw StructuralError("DirectorField: component arrays incongruent with grid");
  }

  /// Max node deviation of |d|^2 from 1.
  double unit_residual() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < d1.size(); ++k)
      worst = std::max(worst, std::fabs(d1[k] * d1[k] + d2[k] * d2[k] - 1.0));
    return worst;
  }

  void assert_unit(double unit_tol) const {
    double r = unit_residual();
    if (r > unit_tol)
      throw DomainError("DirectorField: unit-sphere constraint violated, residual " +
                        std::to_string(r));
  }

  /// Build from an angle field: d = (sin phi, cos phi), so phi = 0 is e2.
  template <class F>
  static DirectorField from_angle(const GridSpec& g, F&& phi) {
    DirectorField out(g);
    for (int j = 0; j < g.npy(); ++j)
      for (int i = 0; i < g.npx(); ++i) {
        double p = phi(g.x(i), g.y(j));
        out.d1[g.idx(i, j)] = std::sin(p);
        out.d2[g.idx(i, j)] = std::cos(p);
      }
    return out;
  }
};

/// Symmetric 2x2 tensor field (xx, xy, yy per node).
struct TensorField2 {
  GridSpec grid;
  std::vector<double> xx, xy, yy;

  TensorField2() = default;
  explicit TensorField2(const GridSpec& g)
      : grid(g), xx(g.nodes(), 0.0), xy(g.nodes(), 0.0), yy(g.nodes(), 0.0) {}
};

}  // namespace nematic2d
