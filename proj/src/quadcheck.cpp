#include "parab/quadcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "parab/bases.hpp"
#include "parab/bernstein.hpp"
#include "parab/float_linalg.hpp"
#include "parab/operators.hpp"

namespace parab {

namespace {

QuadratureRule golub_welsch(std::vector<double> alpha, std::vector<double> beta) {
  const int n = static_cast<int>(alpha.size());
  std::vector<double> sub(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(beta[i]);
  std::vector<double> vals;
  std::vector<std::vector<double>> vecs;
  tridiag_eigen(std::move(alpha), std::move(sub), vals, vecs);
  QuadratureRule rule;
  rule.nodes = std::move(vals);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = vecs[i][0] * vecs[i][0];
  return rule;
}

int max_xdeg(const GPoly& p) {
  int m = 0;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, mono.degx());
  return m;
}

int max_block_m(const SurfaceFun& f) {
  int m = 0;
  for (const auto& [key, r] : f.parts()) m = std::max(m, key.first);
  return m;
}

QuadratureRule t_rule(const DomainSpec& dom, int N) {
  switch (dom.kind) {
    case DomainKind::SolidBounded:
      return gauss_jacobi01(dom.d / 2.0 + dom.mu.to_double() - 0.5, dom.gamma.to_double(), N);
    case DomainKind::SolidUnbounded:
      return gauss_laguerre(dom.d / 2.0 + dom.mu.to_double() - 0.5, N);
    case DomainKind::SurfaceBounded:
      return gauss_jacobi01(dom.d / 2.0 - 1.0, dom.gamma.to_double(), N);
    case DomainKind::SurfaceUnbounded:
      return gauss_laguerre(dom.d / 2.0 - 1.0, N);
    default:
      throw std::logic_error("t_rule: ball has no t factor");
  }
}

QuadratureRule u_rule(const DomainSpec& dom, int N) {
  return gauss_jacobi01(dom.d / 2.0 - 1.0, dom.mu.to_double() - 0.5, N);
}

void check_shift(const DomainSpec& dom, const WeightShift& shift) {
  if (shift.dgamma != 0 && !dom.has_gamma())
    throw moment_error("numeric: gamma shift on a domain without a (1-t) factor");
  if (shift.dmu != 0 && !dom.has_mu()) throw moment_error("numeric: mu shift on a surface");
}

}  // namespace

QuadratureRule gauss_jacobi01(double p, double q, int N) {
  if (N < 1 || p <= -1 || q <= -1) throw std::invalid_argument("gauss_jacobi01: bad parameters");
  const double a = p, b = q;
  std::vector<double> alpha(N), beta(N > 0 ? N - 1 : 0);
  alpha[0] = (b - a) / (a + b + 2);
  for (int k = 1; k < N; ++k) {
    const double s = 2 * k + a + b;
    alpha[k] = (b * b - a * a) / (s * (s + 2));
  }
  if (N > 1) beta[0] = 4 * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 2) * (a + b + 3));
  for (int k = 2; k < N; ++k) {
    const double s = 2 * k + a + b;
    beta[k - 1] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
  }
  QuadratureRule rule = golub_welsch(std::move(alpha), std::move(beta));
  for (double& u : rule.nodes) u = (1.0 - u) / 2.0;  // map [-1,1] (weight (1-u)^p) to [0,1]
  return rule;
}

QuadratureRule gauss_laguerre(double a, int N) {
  if (N < 1 || a <= -1) throw std::invalid_argument("gauss_laguerre: bad parameters");
  std::vector<double> alpha(N), beta(N > 0 ? N - 1 : 0);
  for (int k = 0; k < N; ++k) alpha[k] = 2.0 * k + a + 1;
  for (int k = 1; k < N; ++k) beta[k - 1] = k * (k + a);
  return golub_welsch(std::move(alpha), std::move(beta));
}

double rule_exactness_error(const QuadratureRule& rule, bool laguerre, const Rat& p,
                            const Rat& q) {
  const int N = static_cast<int>(rule.nodes.size());
  double worst = 0;
  for (int k = 0; k <= 2 * N - 1; ++k) {
    const Rat exact = laguerre ? gamma_ratio(p + Rat(1), k)
                               : gamma_ratio(p + Rat(1), k) / gamma_ratio(p + q + Rat(2), k);
    double num = 0;
    for (int i = 0; i < N; ++i) num += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double e = exact.to_double();
    worst = std::max(worst, std::abs(num - e) / std::max(std::abs(e), 1e-300));
  }
  return worst;
}

SphereRule sphere_rule(int d, int deg) {
  SphereRule r;
  if (d == 1) {
    r.points = {{1.0}, {-1.0}};
    r.weights = {0.5, 0.5};
    return r;
  }
  const int M = deg + 2;
  if (d == 2) {
    for (int j = 0; j < M; ++j) {
      const double th = 2.0 * M_PI * j / M;
      r.points.push_back({std::cos(th), std::sin(th)});
      r.weights.push_back(1.0 / M);
    }
    return r;
  }
  if (d == 3) {
    const int Nz = deg / 2 + 2;
    const QuadratureRule gz = gauss_jacobi01(0.0, 0.0, Nz);  // z = 1 - 2t uniform on [-1,1]
    for (int i = 0; i < Nz; ++i) {
      const double z = 1.0 - 2.0 * gz.nodes[i];
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      for (int j = 0; j < M; ++j) {
        const double ph = 2.0 * M_PI * j / M;
        r.points.push_back({rho * std::cos(ph), rho * std::sin(ph), z});
        r.weights.push_back(gz.weights[i] / M);
      }
    }
    return r;
  }
  throw std::invalid_argument("sphere_rule: d must be 1, 2, or 3");
}

namespace {

// Tensor rule over the solid/ball parametrization x = sqrt(t u) xi, |xi| = 1
// (t fixed to 1 on the ball); fn must be polynomial in x of degree <= xdeg
// with t-powers evaluated internally.
double integral_fn(const DomainSpec& dom, const std::function<double(const std::vector<double>&, double)>& fn,
                   int xdeg, const WeightShift& shift, int N) {
  check_shift(dom, shift);
  const SphereRule sph = sphere_rule(dom.d, xdeg);
  std::vector<double> x(dom.d);

  if (dom.kind == DomainKind::Ball) {
    const QuadratureRule ur = u_rule(dom, N);
    double total = 0;
    for (int iu = 0; iu < N; ++iu) {
      const double u = ur.nodes[iu], rr = std::sqrt(u);
      const double fac = ur.weights[iu] * std::pow(1.0 - u, shift.dmu) * std::pow(u, shift.s);
      double ssum = 0;
      for (size_t k = 0; k < sph.points.size(); ++k) {
        for (int i = 0; i < dom.d; ++i) x[i] = rr * sph.points[k][i];
        ssum += sph.weights[k] * fn(x, 1.0);
      }
      total += fac * ssum;
    }
    return total;
  }

  const QuadratureRule tr = t_rule(dom, N), ur = u_rule(dom, N);
  double total = 0;
  for (int it = 0; it < N; ++it) {
    const double t = tr.nodes[it];
    const double tfac = tr.weights[it] * (dom.kind == DomainKind::SolidBounded
                                              ? std::pow(1.0 - t, shift.dgamma)
                                              : 1.0);
    for (int iu = 0; iu < N; ++iu) {
      const double u = ur.nodes[iu], rr = std::sqrt(t * u);
      const double fac = tfac * ur.weights[iu] * std::pow(t * (1.0 - u), shift.dmu) *
                         std::pow(t * u, shift.s);
      double ssum = 0;
      for (size_t k = 0; k < sph.points.size(); ++k) {
        for (int i = 0; i < dom.d; ++i) x[i] = rr * sph.points[k][i];
        ssum += sph.weights[k] * fn(x, t);
      }
      total += fac * ssum;
    }
  }
  return total;
}

}  // namespace

double numeric_integral(const DomainSpec& dom, const GPoly& p, const WeightShift& shift, int N) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("numeric_integral: surface needs SurfaceFun");
  if (p.dim() != dom.d) throw std::invalid_argument("numeric_integral: dimension mismatch");
  if (dom.kind == DomainKind::Ball && !p.is_x_only())
    throw moment_error("numeric_integral: ball integrand must be t-free");
  return integral_fn(
      dom, [&](const std::vector<double>& x, double t) { return p.eval(x, t); }, max_xdeg(p),
      shift, N);
}

double numeric_moment(const DomainSpec& dom, const MomentKey& key, const WeightShift& shift,
                      int N) {
  dom.validate();
  if (static_cast<int>(key.alpha.size()) != dom.d)
    throw std::invalid_argument("numeric_moment: alpha size mismatch");
  if (!dom.is_surface())
    return numeric_integral(dom, GPoly::monomial(dom.d, key.alpha, key.j2, Rat(1)), shift, N);
  check_shift(dom, shift);
  int adeg = 0;
  for (int a : key.alpha) adeg += a;
  const QuadratureRule tr = t_rule(dom, N);
  const SphereRule sph = sphere_rule(dom.d, adeg);
  double ssum = 0;
  for (size_t k = 0; k < sph.points.size(); ++k) {
    double v = sph.weights[k];
    for (int i = 0; i < dom.d; ++i) v *= std::pow(sph.points[k][i], key.alpha[i]);
    ssum += v;
  }
  double tsum = 0;
  const double e = (adeg + key.j2) / 2.0 + shift.s;
  for (int it = 0; it < N; ++it) {
    const double t = tr.nodes[it];
    tsum += tr.weights[it] * std::pow(t, e) *
            (dom.kind == DomainKind::SurfaceBounded ? std::pow(1.0 - t, shift.dgamma) : 1.0);
  }
  return tsum * ssum;
}

double numeric_inner(const DomainSpec& dom, const GPoly& p, const GPoly& q,
                     const WeightShift& shift, int N) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("numeric_inner: surface needs SurfaceFun");
  if (p.dim() != dom.d || q.dim() != dom.d)
    throw std::invalid_argument("numeric_inner: dimension mismatch");
  if (dom.kind == DomainKind::Ball && !(p.is_x_only() && q.is_x_only()))
    throw moment_error("numeric_inner: ball integrand must be t-free");
  return integral_fn(
      dom, [&](const std::vector<double>& x, double t) { return p.eval(x, t) * q.eval(x, t); },
      max_xdeg(p) + max_xdeg(q), shift, N);
}

double numeric_surface_inner(const DomainSpec& dom, const SurfaceFun& f, const SurfaceFun& g,
                             const WeightShift& shift, int N) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("numeric_surface_inner: not a surface");
  if (f.d() != dom.d || g.d() != dom.d)
    throw std::invalid_argument("numeric_surface_inner: dimension mismatch");
  check_shift(dom, shift);
  const QuadratureRule tr = t_rule(dom, N);
  const SphereRule sph = sphere_rule(dom.d, max_block_m(f) + max_block_m(g));
  double total = 0;
  for (int it = 0; it < N; ++it) {
    const double t = tr.nodes[it];
    const double fac =
        tr.weights[it] * std::pow(t, shift.s) *
        (dom.kind == DomainKind::SurfaceBounded ? std::pow(1.0 - t, shift.dgamma) : 1.0);
    double ssum = 0;
    for (size_t k = 0; k < sph.points.size(); ++k)
      ssum += sph.weights[k] * f.eval(sph.points[k], t) * g.eval(sph.points[k], t);
    total += fac * ssum;
  }
  return total;
}

namespace {

TheoremId crosscheck_theorem(const DomainSpec& dom) {
  switch (dom.kind) {
    case DomainKind::Ball:
      return dom.d >= 2 ? TheoremId::Ball22 : TheoremId::Ball22EvenOdd;
    case DomainKind::SolidBounded:
      return dom.d >= 2 ? TheoremId::SolidJ34 : TheoremId::SolidJ_T1only;
    case DomainKind::SolidUnbounded:
      return dom.d >= 2 ? TheoremId::SolidL39 : TheoremId::SolidL_T1only;
    case DomainKind::SurfaceBounded:
      return TheoremId::SurfJ45;
    case DomainKind::SurfaceUnbounded:
      return TheoremId::SurfL48;
  }
  throw std::logic_error("crosscheck_theorem");
}

std::vector<double> numeric_terms(TheoremId th, const GPoly& f, const DomainSpec& dom, int N) {
  const int dg = dom.kind == DomainKind::SolidBounded ? 1 : 0;
  std::vector<GPoly> di, aij;
  for (int i = 0; i < dom.d; ++i) di.push_back(f.diff_x(i));
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j) aij.push_back(f.angular(i, j));
  int dideg = 0, aijdeg = 0;
  for (const GPoly& g : di) dideg = std::max(dideg, max_xdeg(g));
  for (const GPoly& g : aij) aijdeg = std::max(aijdeg, max_xdeg(g));
  const auto sumsq = [](const std::vector<GPoly>& gs, double tpow) {
    return [&gs, tpow](const std::vector<double>& x, double t) {
      double s = 0;
      for (const GPoly& g : gs) {
        const double v = g.eval(x, t);
        s += v * v;
      }
      return s * std::pow(t, tpow);
    };
  };

  std::vector<double> out;
  switch (th) {
    case TheoremId::Ball22:
    case TheoremId::Ball22EvenOdd:
      out.push_back(integral_fn(dom, sumsq(di, 0), 2 * dideg, {0, 1, 0}, N));
      if (th == TheoremId::Ball22)
        out.push_back(integral_fn(dom, sumsq(aij, 0), 2 * aijdeg, {}, N));
      return out;
    case TheoremId::SolidJ34:
    case TheoremId::SolidL39:
    case TheoremId::SolidJ_T1only:
    case TheoremId::SolidL_T1only: {
      const GPoly df = parabolic_diff(f);
      out.push_back(integral_fn(
          dom,
          [&](const std::vector<double>& x, double t) {
            const double v = df.eval(x, t);
            return t * v * v;
          },
          2 * max_xdeg(df), {dg, 0, 0}, N));
      if (th == TheoremId::SolidJ_T1only || th == TheoremId::SolidL_T1only) return out;
      out.push_back(integral_fn(dom, sumsq(di, -1), 2 * dideg, {dg, 1, 0}, N) / 4);
      out.push_back(integral_fn(dom, sumsq(aij, -1), 2 * aijdeg, {dg, 0, 0}, N) / 4);
      return out;
    }
    default:
      throw std::logic_error("numeric_terms: unsupported theorem");
  }
}

std::vector<double> numeric_terms(TheoremId th, const SurfaceFun& f, const DomainSpec& dom,
                                  int N) {
  const bool bounded = dom.kind == DomainKind::SurfaceBounded;
  const SurfaceFun fr = f.radial_diff();
  std::vector<double> out;
  out.push_back(numeric_surface_inner(dom, fr.mul_radial(GPoly::tpow(1, 2)), fr,
                                      {bounded ? 1 : 0, 0, 0}, N));
  double a = 0;
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j) {
      const SurfaceFun aij = f.angular(i, j);
      a += numeric_surface_inner(dom, aij, aij, {0, 0, -1}, N);
      if (bounded) a -= numeric_surface_inner(dom, aij, aij, {}, N);
    }
  out.push_back(a / 4);
  (void)th;
  return out;
}

double rel_dev(double num, const Rat& exact) {
  return std::abs(num - exact.to_double()) / std::max(std::abs(exact.to_double()), 1e-30);
}

}  // namespace

CrosscheckReport crosscheck(const DomainSpec& dom, int trials, std::uint64_t seed) {
  dom.validate();
  CrosscheckReport rep;
  rep.dom = dom;
  rep.tol = dom.bounded() ? 1e-10 : 1e-8;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> adist(0, 3), jdist(0, 4), coin(0, 1);

  const int N = 32;
  for (int trial = 0; trial < trials; ++trial) {
    MomentKey key;
    WeightShift shift;
    for (int attempt = 0;; ++attempt) {
      key.alpha.assign(dom.d, 0);
      for (int i = 0; i < dom.d; ++i) key.alpha[i] = adist(rng);
      key.j2 = dom.kind == DomainKind::Ball ? 0 : 2 * jdist(rng);
      shift.dgamma = dom.has_gamma() ? coin(rng) : 0;
      shift.dmu = dom.has_mu() ? coin(rng) : 0;
      shift.s = -coin(rng);
      int adeg = 0;
      for (int a : key.alpha) adeg += a;
      if (shift.s == -1 && adeg < 2 && attempt < 64) continue;
      break;
    }
    Rat exact;
    try {
      exact = moment_shifted(dom, key, shift);
    } catch (const moment_error&) {
      ++rep.skipped_keys;
      continue;
    }
    const double num = numeric_moment(dom, key, shift, N);
    ++rep.moment_trials;
    if (exact.is_zero()) {
      // Zero by parity. The achievable accuracy scales with the magnitude the
      // t-side integral would have if the sphere part did not cancel, so
      // measure against the nearest all-even key rather than absolutely.
      ++rep.odd_moments;
      MomentKey keven = key;
      for (int& a : keven.alpha) a += a & 1;
      const double scale = std::max(1.0, std::abs(numeric_moment(dom, keven, shift, N)));
      rep.max_abs_odd = std::max(rep.max_abs_odd, std::abs(num) / scale);
    } else {
      rep.max_rel_moment = std::max(rep.max_rel_moment, rel_dev(num, exact));
    }
  }

  const TheoremId th = crosscheck_theorem(dom);
  const int certs = trials / 5;
  const int Nc = 32;
  for (int i = 0; i < certs; ++i) {
    if (dom.is_surface()) {
      const SurfaceFun f = random_surface_element(dom, 4, seed * 31 + i + 1);
      const Certificate cert = certify(th, f, dom, 4);
      const std::vector<double> numt = numeric_terms(th, f, dom, Nc);
      for (size_t k = 0; k < cert.terms.size(); ++k)
        rep.max_rel_certificate =
            std::max(rep.max_rel_certificate, rel_dev(numt[k], cert.terms[k].second));
      const double nrhs = bernstein_bound(th, dom, 4).to_double() *
                          numeric_surface_inner(dom, f, f, {}, Nc);
      rep.max_rel_certificate = std::max(rep.max_rel_certificate, rel_dev(nrhs, cert.rhs));
    } else {
      const GPoly f = random_element(dom, 4, seed * 31 + i + 1);
      const Certificate cert = certify(th, f, dom, 4);
      const std::vector<double> numt = numeric_terms(th, f, dom, Nc);
      for (size_t k = 0; k < cert.terms.size(); ++k)
        rep.max_rel_certificate =
            std::max(rep.max_rel_certificate, rel_dev(numt[k], cert.terms[k].second));
      const double nrhs =
          bernstein_bound(th, dom, 4).to_double() * numeric_inner(dom, f, f, {}, Nc);
      rep.max_rel_certificate = std::max(rep.max_rel_certificate, rel_dev(nrhs, cert.rhs));
    }
    ++rep.cert_trials;
  }

  rep.pass = rep.max_rel_moment <= rep.tol && rep.max_rel_certificate <= rep.tol &&
             rep.max_abs_odd <= 1e-12;
  return rep;
}

}  // namespace parab
