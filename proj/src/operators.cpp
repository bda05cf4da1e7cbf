#include "parab/operators.hpp"

#include <stdexcept>

namespace parab {

namespace {

// t Delta_x - <x,grad>^2 - (2mu + d - 1) <x,grad>: the ball operator acting on
// the rescaled variable y = x/sqrt(t).
GPoly ball_bracket(const GPoly& f, const Rat& mu, int d) {
  return f.laplace_x().mul_tpow(2) - f.euler().euler() -
         f.euler().scaled(Rat(2) * mu + Rat(d - 1));
}

GPoly tp(int dim, int j2) { return GPoly::tpow(dim, j2); }

}  // namespace

GPoly parabolic_diff(const GPoly& f) {
  return f.diff_t() + f.euler().mul_tpow(-2).scaled(Rat(1, 2));
}

GPoly apply_op(const DomainSpec& dom, const GPoly& f, bool laguerre_literal) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("apply_op: surface overload takes SurfaceFun");
  if (f.dim() != dom.d) throw std::invalid_argument("apply_op: dimension mismatch");
  const int d = dom.d;
  const GPoly ft = f.diff_t();
  const GPoly eft = ft.euler();
  const GPoly lap = f.laplace_x();
  const GPoly ef = f.euler();
  switch (dom.kind) {
    case DomainKind::Ball:
      return lap - ef.euler() - ef.scaled(Rat(2) * dom.mu + Rat(d - 1));
    case DomainKind::SolidBounded: {
      GPoly r = ft.diff_t().mul_tpow(2) - ft.diff_t().mul_tpow(4);  // t(1-t) f_tt
      r += eft - eft.mul_tpow(2);                                   // (1-t) <x,grad> f_t
      r += (lap - lap.mul_tpow(2)).scaled(Rat(1, 4));               // (1-t)/4 Delta f
      r += (ft - ft.mul_tpow(2)).scaled(dom.mu + Rat(d + 1, 2));    // (mu+(d+1)/2)(1-t) f_t
      r -= (ft.mul_tpow(2).scaled(Rat(2)) + ef).scaled((dom.gamma + Rat(1)) / Rat(2));
      return r;
    }
    case DomainKind::SolidUnbounded: {
      GPoly r = ft.diff_t().mul_tpow(2) + eft + lap.scaled(Rat(1, 4)) - ef.scaled(Rat(1, 2));
      if (!laguerre_literal) r += ft.scaled(dom.mu + Rat(d + 1, 2)) - ft.mul_tpow(2);
      return r;
    }
    default:
      throw std::logic_error("apply_op: bad kind");
  }
}

SurfaceFun apply_op(const DomainSpec& dom, const SurfaceFun& f) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("apply_op: not a surface domain");
  if (f.d() != dom.d) throw std::invalid_argument("apply_op: dimension mismatch");
  const int d = dom.d;
  SurfaceFun out(d);
  for (const auto& [key, r] : f.parts()) {
    const int m = key.first;
    const GPoly r1 = r.diff_t();
    const GPoly r2 = r1.diff_t();
    const Rat ang = Rat(-m * (m + d - 2), 4);
    GPoly nr(1);
    if (dom.kind == DomainKind::SurfaceBounded) {
      nr = r2.mul_tpow(2) - r2.mul_tpow(4);
      nr += r1.scaled(Rat(d, 2)) - r1.mul_tpow(2).scaled(dom.gamma + Rat(d + 2, 2));
      nr += (r.mul_tpow(-2) - r).scaled(ang);  // (1-t)/4t Delta_0
    } else {
      nr = r2.mul_tpow(2);
      nr += r1.scaled(Rat(d, 2)) - r1.mul_tpow(2);
      nr += r.mul_tpow(-2).scaled(ang);  // 1/4t Delta_0
    }
    out.add_part(m, key.second, nr);
  }
  return out;
}

GPoly apply_op_decomposed(const DomainSpec& dom, const GPoly& f) {
  dom.validate();
  if (dom.is_surface())
    throw std::invalid_argument("apply_op_decomposed: surface overload takes SurfaceFun");
  if (f.dim() != dom.d) throw std::invalid_argument("apply_op_decomposed: dimension mismatch");
  const int d = dom.d;
  if (dom.kind == DomainKind::Ball) {
    // The ball operator in divergence form: sum_i d_i[(1-|x|^2) d_i] plus the
    // angular part sum_{i<j} D_{ij}^2, assembled from genuine derivatives.
    GPoly r(d);
    for (int i = 0; i < d; ++i) {
      const GPoly di = f.diff_x(i);
      // d_i[(1-|x|^2)^{mu+1/2} d_i f] / (1-|x|^2)^{mu-1/2}
      //   = (1-|x|^2) d_ii f - (2mu+1) x_i d_i f
      GPoly s = di.diff_x(i);
      for (int j = 0; j < d; ++j) {
        std::vector<int> a(d, 0);
        a[j] = 2;
        s -= GPoly::monomial(d, a, 0, Rat(1)) * di.diff_x(i);
      }
      std::vector<int> xi(d, 0);
      xi[i] = 1;
      s -= GPoly::monomial(d, xi, 0, Rat(2) * dom.mu + Rat(1)) * di;
      r += s;
    }
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) r += f.angular(i, j).angular(i, j);
    return r;
  }
  const GPoly df = parabolic_diff(f);
  const GPoly d2f = parabolic_diff(df);
  const GPoly bb = ball_bracket(f, dom.mu, d);
  const Rat c1 = dom.mu + Rat(d + 1, 2);
  if (dom.kind == DomainKind::SolidBounded) {
    const Rat c2 = dom.mu + dom.gamma + Rat(d + 3, 2);
    GPoly r = d2f.mul_tpow(2) - d2f.mul_tpow(4);
    r += df.scaled(c1) - df.mul_tpow(2).scaled(c2);
    r += (bb.mul_tpow(-2) - bb).scaled(Rat(1, 4));
    return r;
  }
  GPoly r = d2f.mul_tpow(2);
  r += df.scaled(c1) - df.mul_tpow(2);
  r += bb.mul_tpow(-2).scaled(Rat(1, 4));
  return r;
}

SurfaceFun apply_op_decomposed(const DomainSpec& dom, const SurfaceFun& f) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("apply_op_decomposed: not a surface domain");
  if (f.d() != dom.d) throw std::invalid_argument("apply_op_decomposed: dimension mismatch");
  const int d = dom.d;
  // Radial factor through genuine angular derivatives, no eigenvalue shortcut.
  SurfaceFun ang(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) ang += f.angular(i, j).angular(i, j);
  SurfaceFun out(d);
  if (dom.kind == DomainKind::SurfaceBounded) {
    out += f.radial_diff().radial_diff().mul_radial(tp(1, 2) - tp(1, 4));
    out += f.radial_diff().mul_radial(
        GPoly::constant(1, Rat(d, 2)) - tp(1, 2).scaled(dom.gamma + Rat(d + 2, 2)));
    out += ang.mul_radial((tp(1, -2) - GPoly::constant(1, Rat(1))).scaled(Rat(1, 4)));
  } else {
    out += f.radial_diff().radial_diff().mul_radial(tp(1, 2));
    out += f.radial_diff().mul_radial(GPoly::constant(1, Rat(d, 2)) - tp(1, 2));
    out += ang.mul_radial(tp(1, -2).scaled(Rat(1, 4)));
  }
  return out;
}

Rat eigenvalue(const DomainSpec& dom, int n, int m) {
  dom.validate();
  if (n < 0) throw std::invalid_argument("eigenvalue: n < 0");
  if (dom.kind != DomainKind::Ball && (m < 0 || m > n))
    throw std::invalid_argument("eigenvalue: need 0 <= m <= n");
  switch (dom.kind) {
    case DomainKind::Ball:
      return Rat(n) * (Rat(n) + Rat(2) * dom.mu + Rat(dom.d - 1));
    case DomainKind::SolidBounded:
      return Rat(n) * (Rat(n) + dom.gamma + dom.mu + Rat(dom.d + 1, 2)) -
             Rat(m) * (Rat(n) + dom.mu + (dom.gamma + Rat(dom.d)) / Rat(2));
    case DomainKind::SolidUnbounded:
      return Rat(n) - Rat(m, 2);
    case DomainKind::SurfaceBounded:
      return Rat(n) * (Rat(n) + dom.gamma + Rat(dom.d, 2)) -
             Rat(m) * (Rat(n) + (dom.gamma + Rat(dom.d - 1)) / Rat(2));
    case DomainKind::SurfaceUnbounded:
      return Rat(n) - Rat(m, 2);
  }
  throw std::logic_error("eigenvalue: bad kind");
}

GPoly eigen_residual(const DomainSpec& dom, const GPoly& f, int n, int m) {
  return apply_op(dom, f) + f.scaled(eigenvalue(dom, n, m));
}

SurfaceFun eigen_residual(const DomainSpec& dom, const SurfaceFun& f, int n, int m) {
  return apply_op(dom, f) + f.scaled(eigenvalue(dom, n, m));
}

}  // namespace parab
