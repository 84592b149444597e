#pragma once

#include <algorithm>
#include <string>

#include "nematic2d/errors.hpp"

namespace nematic2d {

/// Physical constants of the model. Validity: mu > 0, lambda + mu >= 0,
/// nu > 0, theta > 0, A > 0, gamma > 1, rho_inf >= 0.
struct PhysParams {
  double mu = 1.0;
  double lambda = 0.0;
  double nu = 1.0;
  double theta = 1.0;
  double A = 1.0;
  double gamma = 2.0;
  double rho_inf = 1.0;

  void validate() const {
    if (!(mu > 0.0)) throw ConfigError("PhysParams: mu must be > 0");
    if (!(lambda + mu >= 0.0)) throw ConfigError("PhysParams: lambda + mu must be >= 0");
    if (!(nu > 0.0)) throw ConfigError("PhysParams: nu must be > 0");
    if (!(theta > 0.0)) throw ConfigError("PhysParams: theta must be > 0");
    if (!(A > 0.0)) throw ConfigError("PhysParams: A must be > 0");
    if (!(gamma > 1.0)) throw ConfigError("PhysParams: gamma must be > 1");
    if (!(rho_inf >= 0.0)) throw ConfigError("PhysParams: rho_inf must be >= 0");
  }
};

/// Artificial/approximation parameters of the three-level scheme.
struct SchemeParams {
  double eps = 0.0;     // artificial density viscosity
  double delta = 0.0;   // artificial pressure weight
  double beta = 8.0;    // artificial pressure exponent
  int n_modes = 16;     // Galerkin dimension
  double dt = 1e-2;
  double t_end = 1.0;

  void validate(const PhysParams& p) const {
    if (!(eps >= 0.0)) throw ConfigError("SchemeParams: eps must be >= 0");
    if (!(delta >= 0.0)) throw ConfigError("SchemeParams: delta must be >= 0");
    if (delta > 0.0 && !(beta >= std::max(p.gamma, 8.0)))
      throw ConfigError("SchemeParams: beta must be >= max(gamma, 8) when delta > 0");
    if (n_modes < 1) throw ConfigError("SchemeParams: n_modes must be >= 1");
    if (!(dt > 0.0)) throw ConfigError("SchemeParams: dt must be > 0");
    if (!(t_end > 0.0)) throw ConfigError("SchemeParams: t_end must be > 0");
  }

  int steps() const { return static_cast<int>(t_end / dt + 0.5); }
};

}  // namespace nematic2d
