#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sticky {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod quadrature (15-point panels, recursive bisection)
// over [a, b].  Refines until the reported error estimate satisfies
// err <= abs_tol + rel_tol * |I|; throws with the residual estimate if the
// panel budget cannot reach the tolerance.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    double rel_tol, unsigned max_depth = 18) {
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: requires a <= b");
  if (a == b) return {0.0, 0.0};

  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  double tol = rel_tol > 0.0 ? rel_tol : 1e-6;
  double value = 0.0;
  double err = 0.0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    value = gk::integrate(f, a, b, max_depth, tol, &err);
    if (err <= abs_tol + rel_tol * std::abs(value)) return {value, err};
    tol *= 1.0 / 64.0;
    if (tol < 1e-16) break;
  }
  throw std::runtime_error("integrate_adaptive: quadrature did not converge, residual estimate " +
                           std::to_string(err));
}

}  // namespace sticky
