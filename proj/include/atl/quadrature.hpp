#pragma once

#include <functional>

namespace atl {

struct QuadratureResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int evaluations = 0;
};

// Globally adaptive quadrature on [a, b]: bisects the interval with the
// largest error estimate (7- vs 15-point Gauss-Legendre) until the summed
// estimate drops below tol or the evaluation budget runs out.
// Throws ToleranceNotMetError when the budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    int max_evaluations = 200000);

}  // namespace atl
