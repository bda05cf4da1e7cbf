#pragma once

#include "parab/gpoly.hpp"

namespace parab {

// P_n^{(a,b)}(1-2t) as a polynomial in t; a, b > -1.
// Satisfies t(1-t)y'' + (a+1-(a+b+2)t)y' = -n(n+a+b+1)y and y(0) = binom(n+a, n).
GPoly jacobi1t(int n, const Rat& a, const Rat& b, int dim = 1);

// L_n^a(t); a > -1. Satisfies t y'' + (a+1-t)y' = -n y and y(0) = binom(n+a, n).
GPoly laguerre1(int n, const Rat& a, int dim = 1);

// C_n^lambda(x1); lambda > -1/2. Satisfies (1-u^2)y'' - (2lambda+1)u y' = -n(n+2lambda)y.
GPoly gegenbauer1(int n, const Rat& lambda, int dim = 1);

}  // namespace parab
