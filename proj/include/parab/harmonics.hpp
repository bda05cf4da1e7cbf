#pragma once

#include <vector>

#include "parab/gpoly.hpp"
#include "parab/rational.hpp"

namespace parab {

// Moment of x^alpha over the unit sphere S^{d-1} against the normalized
// surface measure (total mass 1). Zero when any alpha_i is odd; otherwise
// prod_i Gamma(beta_i+1/2)/Gamma(1/2) * Gamma(d/2)/Gamma(|beta|+d/2) with
// beta = alpha/2.
Rat sphere_moment(const std::vector<int>& alpha, int d);

// L^2(S^{d-1}) inner product of two x-only polynomials (normalized measure).
Rat sphere_inner(const GPoly& p, const GPoly& q);

// Orthogonal (not normalized) basis of the space of degree-m harmonic
// polynomials in d variables, built from the exact kernel of the Laplacian on
// degree-m monomials followed by Gram-Schmidt on the sphere. Elements are
// scaled to integer coefficients with positive leading coefficient.
struct HarmonicBasis {
  int d = 0;
  int m = 0;
  std::vector<GPoly> elems;
  std::vector<Rat> norm2;  // sphere_inner(elems[l], elems[l])
};

long harmonic_dim(int d, int m);
const HarmonicBasis& harmonic_basis(int d, int m);

// Coefficients of y (x-only, homogeneous harmonic of degree m) in
// harmonic_basis(d, m); throws std::domain_error if y is not in the span.
std::vector<Rat> harmonic_coeffs(int d, int m, const GPoly& y);

}  // namespace parab
