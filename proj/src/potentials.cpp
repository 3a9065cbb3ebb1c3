#include "sticky/potentials.hpp"

#include <cmath>
#include <stdexcept>

#include "sticky/quadrature.hpp"

namespace sticky {

namespace {
constexpr double kSqrtPi = 1.7724538509055160272981674833411;
}

void validate(const PotentialSpec& spec) {
  if (!(spec.depth >= 0.0)) throw std::invalid_argument("PotentialSpec: depth must be >= 0");
  if (!(spec.range > 0.0)) throw std::invalid_argument("PotentialSpec: range must be > 0");
  if (!(spec.offset >= 0.0)) throw std::invalid_argument("PotentialSpec: offset must be >= 0");
  if (!(spec.kappa >= 0.0)) throw std::invalid_argument("PotentialSpec: kappa must be >= 0");
  if (!(spec.layer_width > 0.0))
    throw std::invalid_argument("PotentialSpec: layer_width must be > 0");
}

double solve_range_from_kappa(double kappa, double depth) {
  if (!(kappa > 0.0))
    throw std::invalid_argument("solve_range_from_kappa: kappa must be > 0 (kappa = 0 needs an infinite range)");
  if (!(depth > 0.0)) throw std::invalid_argument("solve_range_from_kappa: depth must be > 0");
  return kSqrtPi * std::exp(depth) / (kappa * std::sqrt(depth));
}

double solve_depth_from_range(double kappa, double range) {
  if (!(kappa > 0.0) || !(range > 0.0))
    throw std::invalid_argument("solve_depth_from_range: kappa and range must be > 0");
  // g(D) = e^D / sqrt(D) is increasing for D > 1/2; bisect on g(D) = target.
  const double target = range * kappa / kSqrtPi;
  if (target < std::exp(0.5) / std::sqrt(0.5))
    throw std::invalid_argument("solve_depth_from_range: no depth > 1/2 matches these parameters");
  double lo = 0.5, hi = 1.0;
  auto g = [](double d) { return std::exp(d) / std::sqrt(d); };
  while (g(hi) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

PotentialSpec from_kappa(PotentialFamily family, double kappa, double depth) {
  PotentialSpec spec;
  spec.family = family;
  spec.depth = depth;
  spec.range = solve_range_from_kappa(kappa, depth);
  spec.offset = 1.0 / spec.range;
  spec.kappa = kappa;
  spec.layer_width = 1.0 / std::sqrt(spec.range);
  return spec;
}

}  // namespace

PotentialSpec morse_from_kappa(double kappa, double depth) {
  return from_kappa(PotentialFamily::Morse, kappa, depth);
}

PotentialSpec lj_from_kappa(double kappa, double depth) {
  return from_kappa(PotentialFamily::LennardJones, kappa, depth);
}

PotentialSpec free_potential() {
  return PotentialSpec{PotentialFamily::Morse, 0.0, 1.0, 0.0, 0.0, 1.0};
}

bool sticky_consistent(const PotentialSpec& spec, double rel_tol) {
  if (!(spec.depth > 0.0) || !(spec.kappa > 0.0)) return false;
  const double implied = kSqrtPi * std::exp(spec.depth) / (spec.range * std::sqrt(spec.depth));
  return std::abs(implied - spec.kappa) <= rel_tol * spec.kappa;
}

double sticky_integral(const PotentialSpec& spec, double layer_width) {
  if (!(layer_width > 0.0))
    throw std::invalid_argument("sticky_integral: layer width must be > 0");
  auto integrand = [&spec](double x) { return std::exp(-energy(spec, x)); };
  return integrate_adaptive(integrand, 0.0, layer_width, 1e-10, 0.0).value;
}

}  // namespace sticky
