#pragma once

#include <cmath>
#include <stdexcept>

namespace sticky {

enum class PotentialFamily { Morse, LennardJones };

// Short-ranged attractive well on the half-line.  The (kappa, depth)
// parameterization ties the well width and depth together so that
// \int_0^eps exp(-U) dx -> kappa as the layer width eps -> 0.
//
// depth == 0 encodes free diffusion (U == 0); see free_potential().
struct PotentialSpec {
  PotentialFamily family = PotentialFamily::Morse;
  double depth = 0.0;        // well depth D_e (dimensionless energy)
  double range = 1.0;        // decay rate a (Morse) or exponent m (LJ)
  double offset = 0.0;       // x0, location of the minimum
  double kappa = 0.0;        // sticky parameter targeted by the family
  double layer_width = 1.0;  // eps, boundary-layer width
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const PotentialSpec& spec);

// Closed form a = sqrt(pi) e^{D} / (kappa sqrt(D)); kappa = 0 would need an
// infinite range and is rejected.
double solve_range_from_kappa(double kappa, double depth);

// Inverse of the relation above: solves e^{D} / sqrt(D) = range*kappa/sqrt(pi)
// for the depth D > 1/2 (the branch on which the relation is increasing).
double solve_depth_from_range(double kappa, double range);

// Sticky-consistent constructors: range from the closed form, minimum at
// x0 = 1/range, layer width eps = 1/sqrt(range).
PotentialSpec morse_from_kappa(double kappa, double depth);
PotentialSpec lj_from_kappa(double kappa, double depth);

// U == 0: free (purely reflecting) diffusion, kappa = 0.
PotentialSpec free_potential();

// True when e^{D} sqrt(pi) / (range sqrt(D)) matches kappa to rel_tol.
bool sticky_consistent(const PotentialSpec& spec, double rel_tol = 1e-10);

// Morse well: U(x) = D (1 - e^{-a(x-x0)})^2 - D.
inline double morse_energy(const PotentialSpec& spec, double x) {
  if (spec.family != PotentialFamily::Morse)
    throw std::invalid_argument("morse_energy: spec is not a Morse potential");
  const double e = std::exp(-spec.range * (x - spec.offset));
  const double g = 1.0 - e;
  return spec.depth * (g * g - 1.0);
}

// -dU/dx = -2 D a e^{-a(x-x0)} (1 - e^{-a(x-x0)}).
inline double morse_force(const PotentialSpec& spec, double x) {
  if (spec.family != PotentialFamily::Morse)
    throw std::invalid_argument("morse_force: spec is not a Morse potential");
  if (spec.depth == 0.0) return 0.0;
  const double e = std::exp(-spec.range * (x - spec.offset));
  return -2.0 * spec.depth * spec.range * e * (1.0 - e);
}

// Generalized Lennard-Jones(2m, m) well with s = x - x0 + 1:
// U(x) = D (s^{-2m} - 2 s^{-m}).  Powers go through exp(m log s) so large m
// cannot overflow intermediate pow() calls; s <= 0 is a domain error.
inline double lj_energy(const PotentialSpec& spec, double x) {
  if (spec.family != PotentialFamily::LennardJones)
    throw std::invalid_argument("lj_energy: spec is not a Lennard-Jones potential");
  const double s = x - spec.offset + 1.0;
  if (s <= 0.0) throw std::domain_error("lj_energy: x - x0 + 1 must be positive");
  const double mls = spec.range * std::log(s);
  const double em = std::exp(-mls);
  const double e2m = std::exp(-2.0 * mls);
  return spec.depth * (e2m - 2.0 * em);
}

// -dU/dx = (2 m D / s) (s^{-2m} - s^{-m}).
inline double lj_force(const PotentialSpec& spec, double x) {
  if (spec.family != PotentialFamily::LennardJones)
    throw std::invalid_argument("lj_force: spec is not a Lennard-Jones potential");
  if (spec.depth == 0.0) return 0.0;
  const double s = x - spec.offset + 1.0;
  if (s <= 0.0) throw std::domain_error("lj_force: x - x0 + 1 must be positive");
  const double mls = spec.range * std::log(s);
  const double em = std::exp(-mls);
  const double e2m = std::exp(-2.0 * mls);
  return 2.0 * spec.range * spec.depth / s * (e2m - em);
}

inline double energy(const PotentialSpec& spec, double x) {
  if (spec.depth == 0.0) return 0.0;
  return spec.family == PotentialFamily::Morse ? morse_energy(spec, x) : lj_energy(spec, x);
}

inline double force(const PotentialSpec& spec, double x) {
  if (spec.depth == 0.0) return 0.0;
  return spec.family == PotentialFamily::Morse ? morse_force(spec, x) : lj_force(spec, x);
}

// \int_0^eps e^{-U(x)} dx by adaptive quadrature (absolute tolerance 1e-10).
// Converges to the spec's kappa as eps -> 0 for sticky-consistent specs.
double sticky_integral(const PotentialSpec& spec, double layer_width);

}  // namespace sticky
