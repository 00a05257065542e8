#pragma once

#include "rheo/specfun.hpp"

namespace rheo {

enum class ModelKind { Becker, Lomnitz };

const char* to_string(ModelKind kind);

// Material constants of the creep law J(t) = j_u * (1 + q * psi(t/tau0)):
// un-relaxed compliance, dimensionless creep amplitude, reference time.
struct MaterialParams {
  double j_u = 1.0;
  double q = 1.0;
  double tau0 = 1.0;

  void validate() const;  // throws std::invalid_argument
};

// Tolerances and node budget for the semi-infinite spectral integral.
struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_nodes = 4096;

  void validate() const;  // throws std::invalid_argument
};

// Dimensionless creep function: Ein(t) for Becker, log(1 + t) for Lomnitz.
// psi(0) = 0; strictly increasing.
double psi(ModelKind kind, double t);

// Creep rate dpsi/dt. Equals 1 at t = 0 for both models and decays to zero
// like 1/t.
double dpsi(ModelKind kind, double t);

// Dimensional creep compliance J(t) = j_u * (1 + q * psi(t/tau0)).
double compliance(const MaterialParams& params, ModelKind kind, double t);

// Retardation spectrum over retardation time tau > 0.
//   Becker:  H(tau - 1)/tau with the H(0) = 1 convention, so the jump at
//            tau = 1 carries the peak value 1 and the spectrum is exactly
//            1/tau from there on.
//   Lomnitz: exp(-1/tau)/tau, continuous, peaked at tau = 1.
double spectrum(ModelKind kind, double tau);

// Evaluates int_0^inf R(tau) * (1 - exp(-t/tau)) dtau under the j_u*q = 1
// normalization, in which the integral reproduces psi(kind, t) exactly.
// The tail [1, inf) is folded onto (0, 1] by s = 1/tau and each finite
// piece is integrated adaptively; for Becker the piece below tau = 1
// vanishes identically. Throws ConvergenceError if cfg.max_nodes is
// exhausted before the tolerances are met.
double spectrum_reconstruct(ModelKind kind, double t,
                            const QuadratureConfig& cfg = {});

}  // namespace rheo
