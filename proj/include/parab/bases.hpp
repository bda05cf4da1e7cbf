#pragma once

#include <cstdint>
#include <vector>

#include "parab/gpoly.hpp"
#include "parab/moments.hpp"
#include "parab/surface_fun.hpp"

namespace parab {

// Compositions k of m into d parts, lexicographically descending.
std::vector<std::vector<int>> compositions(int d, int m);

// Degree-m element of the orthogonal basis on the unit ball with weight
// (1-|x|^2)^(mu-1/2): product of Gegenbauer factors
//   prod_j C_{k_j}^{lambda_j}(x_j / sqrt(S_{j-1})) S_{j-1}^{k_j/2},
// S_j = 1 - x_1^2 - ... - x_j^2, lambda_j = mu + |k^{j+1}| + (d-j)/2.
GPoly ball_element(int d, const Rat& mu, const std::vector<int>& k);

struct BallBasis {
  int d = 0;
  Rat mu;
  int m = 0;
  std::vector<std::vector<int>> idx;
  std::vector<GPoly> elems;
};
const BallBasis& ball_basis(int d, const Rat& mu, int m);

// Degree-n solid basis element with ball block m and composition k of m:
// radial(t) * t^{m/2} P_k(x/sqrt(t)), radial a Jacobi polynomial in t of
// degree n-m for the bounded kind and a Laguerre polynomial for the
// unbounded kind.
GPoly solid_element(const DomainSpec& dom, int n, int m, const std::vector<int>& k);

// Degree-n surface basis element with harmonic block (m, l).
SurfaceFun surface_element(const DomainSpec& dom, int n, int m, int l);

// Seeded random polynomial with coefficients num/den, num in [-10,10],
// den in [1,10]; never identically zero. Ball kind: x-only monomials of
// degree <= degree; solid kinds: monomials x^a t^j with |a|+j <= degree.
GPoly random_element(const DomainSpec& dom, int degree, std::uint64_t seed);
// Random combination of surface basis elements of degree <= degree.
SurfaceFun random_surface_element(const DomainSpec& dom, int degree, std::uint64_t seed);

}  // namespace parab
