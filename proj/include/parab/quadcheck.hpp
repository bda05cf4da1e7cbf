#pragma once

#include <cstdint>
#include <vector>

#include "parab/gpoly.hpp"
#include "parab/moments.hpp"
#include "parab/surface_fun.hpp"

namespace parab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // positive, summing to 1
};

// N-point Gauss rule for the normalized weight t^p (1-t)^q on [0,1].
QuadratureRule gauss_jacobi01(double p, double q, int N);
// N-point Gauss rule for the normalized weight t^a e^{-t} on [0,inf).
QuadratureRule gauss_laguerre(double a, int N);

// Max relative error of the rule on t^k, k <= 2N-1, against the exact
// normalized moments of the weight it was built for.
double rule_exactness_error(const QuadratureRule& rule, bool laguerre, const Rat& p, const Rat& q);

struct SphereRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;  // positive, summing to 1
};

// Rule on S^{d-1}, d in {1,2,3}, exact for polynomial integrands of degree
// <= deg against the normalized surface measure.
SphereRule sphere_rule(int d, int deg);

// Quadrature versions of the moment engine, same normalization conventions.
// N is the node count of each 1-d rule; sphere resolution is derived from the
// integrand degree.
double numeric_moment(const DomainSpec& dom, const MomentKey& key, const WeightShift& shift,
                      int N);
double numeric_integral(const DomainSpec& dom, const GPoly& p, const WeightShift& shift, int N);
double numeric_inner(const DomainSpec& dom, const GPoly& p, const GPoly& q,
                     const WeightShift& shift, int N);
double numeric_surface_inner(const DomainSpec& dom, const SurfaceFun& f, const SurfaceFun& g,
                             const WeightShift& shift, int N);

struct CrosscheckReport {
  DomainSpec dom;
  int moment_trials = 0;
  int odd_moments = 0;    // exact-zero moments, checked at 1e-12 against an even-envelope scale
  int skipped_keys = 0;   // keys the exact engine flags as non-representable
  int cert_trials = 0;
  double tol = 0;
  double max_rel_moment = 0;
  double max_abs_odd = 0;
  double max_rel_certificate = 0;
  bool pass = false;
};

// trials random shifted moments plus trials/5 random Bernstein certificates,
// exact engine vs quadrature; tolerance 1e-10 bounded / 1e-8 unbounded.
CrosscheckReport crosscheck(const DomainSpec& dom, int trials, std::uint64_t seed);

}  // namespace parab
