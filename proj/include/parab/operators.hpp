#pragma once

#include "parab/gpoly.hpp"
#include "parab/moments.hpp"
#include "parab/surface_fun.hpp"

namespace parab {

// Second-order spectral operator of the domain, applied termwise. Basis
// elements of degree n and block m are eigenfunctions with eigenvalue
// -eigenvalue(dom, n, m). For the unbounded solid the first-order t-term is
// mu + (d+1)/2 - t; `laguerre_literal` drops that term, which breaks the
// eigen equations (kept to demonstrate the failure).
GPoly apply_op(const DomainSpec& dom, const GPoly& f, bool laguerre_literal = false);
SurfaceFun apply_op(const DomainSpec& dom, const SurfaceFun& f);

// Same operators assembled independently from the parabolic derivative
// D = d/dt + (1/2t)<x,grad> and the ball remainder (solids), or from D and
// genuine angular derivatives (surfaces). Used to cross-check apply_op.
GPoly apply_op_decomposed(const DomainSpec& dom, const GPoly& f);
SurfaceFun apply_op_decomposed(const DomainSpec& dom, const SurfaceFun& f);

// The parabolic derivative D f = f_t + (1/2t) <x, grad> f.
GPoly parabolic_diff(const GPoly& f);

// lambda_{m,n} >= 0 with  apply_op(element(n, m)) = -lambda * element(n, m):
//   Ball:            n(n + 2 mu + d - 1)            (m ignored)
//   SolidBounded:    n(n + gamma + mu + (d+1)/2) - m(n + mu + (gamma+d)/2)
//   SolidUnbounded:  n - m/2
//   SurfaceBounded:  n(n + gamma + d/2) - m(n + (gamma+d-1)/2)
//   SurfaceUnbounded:n - m/2
Rat eigenvalue(const DomainSpec& dom, int n, int m);

// apply_op(f) + eigenvalue * f; zero iff f is an eigenfunction.
GPoly eigen_residual(const DomainSpec& dom, const GPoly& f, int n, int m);
SurfaceFun eigen_residual(const DomainSpec& dom, const SurfaceFun& f, int n, int m);

}  // namespace parab
