#include "parab/classical.hpp"

namespace parab {

namespace {

Rat constant_term(const GPoly& p) {
    return p.coeff(Mono{std::vector<int>(p.dim(), 0), 0});
}

void check_ode(const GPoly& y, const GPoly& c2, const GPoly& c1, const Rat& ev, bool in_t,
               const char* who) {
    GPoly y1 = in_t ? y.diff_t() : y.diff_x(0);
    GPoly y2 = in_t ? y1.diff_t() : y1.diff_x(0);
    GPoly res = c2 * y2 + c1 * y1 + y.scaled(ev);
    if (!res.is_zero()) throw std::logic_error(std::string(who) + ": ODE residual nonzero");
}

}  // namespace

GPoly jacobi1t(int n, const Rat& a, const Rat& b, int dim) {
    if (n < 0) throw std::invalid_argument("jacobi1t: n < 0");
    if (a <= Rat(-1) || b <= Rat(-1)) throw std::invalid_argument("jacobi1t: need a, b > -1");
    GPoly u = GPoly::constant(dim, Rat(1)) - GPoly::tpow(dim, 2).scaled(Rat(2));  // 1 - 2t
    GPoly p0 = GPoly::constant(dim, Rat(1));
    if (n == 0) return p0;
    // P_1 = ((a+b+2)u + a-b)/2
    GPoly p1 = (u.scaled(a + b + Rat(2)) + GPoly::constant(dim, a - b)).scaled(Rat(1, 2));
    for (int k = 2; k <= n; ++k) {
        // 2k(k+a+b)(2k+a+b-2) P_k =
        //   (2k+a+b-1)[(2k+a+b)(2k+a+b-2)u + a^2-b^2] P_{k-1}
        //   - 2(k+a-1)(k+b-1)(2k+a+b) P_{k-2}
        Rat s = Rat(2 * k) + a + b;
        Rat lead = Rat(2 * k) * (Rat(k) + a + b) * (s - Rat(2));
        GPoly mid = (u.scaled(s * (s - Rat(2))) + GPoly::constant(dim, a * a - b * b))
                        .scaled(s - Rat(1));
        GPoly next = mid * p1 - p0.scaled(Rat(2) * (Rat(k) + a - Rat(1)) * (Rat(k) + b - Rat(1)) * s);
        p0 = p1;
        p1 = next.scaled(Rat(1) / lead);
    }
    if (constant_term(p1) != binom_shift(a, n))
        throw std::logic_error("jacobi1t: normalization check failed");
    GPoly c2 = GPoly::tpow(dim, 2) - GPoly::tpow(dim, 4);
    GPoly c1 = GPoly::constant(dim, a + Rat(1)) - GPoly::tpow(dim, 2).scaled(a + b + Rat(2));
    check_ode(p1, c2, c1, Rat(n) * (Rat(n) + a + b + Rat(1)), true, "jacobi1t");
    return p1;
}

GPoly laguerre1(int n, const Rat& a, int dim) {
    if (n < 0) throw std::invalid_argument("laguerre1: n < 0");
    if (a <= Rat(-1)) throw std::invalid_argument("laguerre1: need a > -1");
    GPoly t = GPoly::tpow(dim, 2);
    GPoly p0 = GPoly::constant(dim, Rat(1));
    if (n == 0) return p0;
    GPoly p1 = GPoly::constant(dim, a + Rat(1)) - t;
    for (int k = 2; k <= n; ++k) {
        // k L_k = (2k-1+a-t) L_{k-1} - (k-1+a) L_{k-2}
        GPoly next = (GPoly::constant(dim, Rat(2 * k - 1) + a) - t) * p1 - p0.scaled(Rat(k - 1) + a);
        p0 = p1;
        p1 = next.scaled(Rat(1, k));
    }
    if (constant_term(p1) != binom_shift(a, n))
        throw std::logic_error("laguerre1: normalization check failed");
    GPoly c1 = GPoly::constant(dim, a + Rat(1)) - t;
    check_ode(p1, t, c1, Rat(n), true, "laguerre1");
    return p1;
}

GPoly gegenbauer1(int n, const Rat& lambda, int dim) {
    if (n < 0) throw std::invalid_argument("gegenbauer1: n < 0");
    if (lambda <= Rat(-1, 2)) throw std::invalid_argument("gegenbauer1: need lambda > -1/2");
    GPoly u = GPoly::var(dim, 0);
    GPoly p0 = GPoly::constant(dim, Rat(1));
    if (n == 0) return p0;
    GPoly p1 = u.scaled(Rat(2) * lambda);
    for (int k = 2; k <= n; ++k) {
        // k C_k = 2(k+lambda-1)u C_{k-1} - (k+2lambda-2) C_{k-2}
        GPoly next = u.scaled(Rat(2) * (Rat(k) + lambda - Rat(1))) * p1 -
                     p0.scaled(Rat(k) + Rat(2) * lambda - Rat(2));
        p0 = p1;
        p1 = next.scaled(Rat(1, k));
    }
    GPoly one = GPoly::constant(dim, Rat(1));
    GPoly c2 = one - u * u;
    GPoly c1 = u.scaled(-(Rat(2) * lambda + Rat(1)));
    check_ode(p1, c2, c1, Rat(n) * (Rat(n) + Rat(2) * lambda), false, "gegenbauer1");
    return p1;
}

}  // namespace parab
