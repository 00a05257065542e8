#pragma once

#include <functional>

namespace rheo {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes_used = 0;
};

// Globally adaptive Gauss-Kronrod (G7, K15) quadrature on a finite
// interval. The worst panel is bisected until the summed error estimate
// falls below max(abs_tol, rel_tol * |value|); if the node budget runs out
// first, a ConvergenceError carrying the achieved estimate is thrown.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b,
                                     double abs_tol, double rel_tol,
                                     int max_nodes);

}  // namespace rheo
