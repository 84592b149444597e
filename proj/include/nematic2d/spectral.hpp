#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nematic2d/errors.hpp"
#include "nematic2d/grid.hpp"

namespace nematic2d {

// Fourier differentiation on power-of-two torus grids. Used by the inequality
// lab as the high-accuracy route for smooth periodic fields (band-limited data
// is differentiated exactly up to rounding).

namespace spectral {

inline bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 FFT; sign = -1 forward, +1 inverse (unscaled).
inline void fft_inplace(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

class Transform2D {
public:
  explicit Transform2D(const GridSpec& g) : grid_(g) {
    if (g.kind != DomainKind::PeriodicTorus)
      throw StructuralError("spectral ops require a periodic-torus grid");
    if (!is_pow2(g.nx) || !is_pow2(g.ny))
      throw StructuralError("spectral ops require power-of-two grid sizes");
  }

  std::vector<std::complex<double>> forward(const std::vector<double>& f) const {
    const int nx = grid_.nx, ny = grid_.ny;
    std::vector<std::complex<double>> hat(f.begin(), f.end());
    transform(hat, -1);
    const double scale = 1.0 / (static_cast<double>(nx) * ny);
    for (auto& c : hat) c *= scale;
    return hat;
  }

  std::vector<double> inverse(std::vector<std::complex<double>> hat) const {
    transform(hat, +1);
    std::vector<double> out(hat.size());
    for (std::size_t k = 0; k < hat.size(); ++k) out[k] = hat[k].real();
    return out;
  }

  /// Physical wavenumber along x for spectral index m (Nyquist mapped to 0 for
  /// odd-order derivatives by the callers).
  double kx(int m) const {
    const int nx = grid_.nx;
    const int mm = (m <= nx / 2) ? m : m - nx;
    return 2.0 * M_PI * mm / grid_.lx;
  }
  double ky(int m) const {
    const int ny = grid_.ny;
    const int mm = (m <= ny / 2) ? m : m - ny;
    return 2.0 * M_PI * mm / grid_.ly;
  }

  const GridSpec& grid() const { return grid_; }

private:
  void transform(std::vector<std::complex<double>>& a, int sign) const {
    const int nx = grid_.nx, ny = grid_.ny;
    std::vector<std::complex<double>> line;
    line.resize(nx);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) line[i] = a[grid_.idx(i, j)];
      fft_inplace(line, sign);
      for (int i = 0; i < nx; ++i) a[grid_.idx(i, j)] = line[i];
    }
    line.resize(ny);
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) line[j] = a[grid_.idx(i, j)];
      fft_inplace(line, sign);
      for (int j = 0; j < ny; ++j) a[grid_.idx(i, j)] = line[j];
    }
  }

  GridSpec grid_;
};

enum class Deriv { Dx, Dy, Dxx, Dyy, Dxy, Lap };

inline std::vector<double> derivative(const Transform2D& tf,
                                      const std::vector<double>& f, Deriv which) {
  const GridSpec& g = tf.grid();
  auto hat = tf.forward(f);
  const std::complex<double> I(0.0, 1.0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double kx = tf.kx(i), ky = tf.ky(j);
      // drop the unmatched Nyquist mode for odd derivatives
      const bool nyq_x = (i == g.nx / 2);
      const bool nyq_y = (j == g.ny / 2);
      std::complex<double> m;
      switch (which) {
        case Deriv::Dx: m = nyq_x ? 0.0 : I * kx; break;
        case Deriv::Dy: m = nyq_y ? 0.0 : I * ky; break;
        case Deriv::Dxx: m = -kx * kx; break;
        case Deriv::Dyy: m = -ky * ky; break;
        case Deriv::Dxy: m = (nyq_x || nyq_y) ? 0.0 : -kx * ky; break;
        case Deriv::Lap: m = -(kx * kx + ky * ky); break;
      }
      hat[g.idx(i, j)] *= m;
    }
  return tf.inverse(std::move(hat));
}

}  // namespace spectral

}  // namespace nematic2d
