#include "parab/bernstein.hpp"

#include <cmath>
#include <stdexcept>

#include "parab/bases.hpp"
#include "parab/classical.hpp"
#include "parab/exact_linalg.hpp"
#include "parab/float_linalg.hpp"
#include "parab/harmonics.hpp"
#include "parab/parallel.hpp"

namespace parab {

namespace {

const TheoremId kAll[] = {
    TheoremId::Ball22,        TheoremId::Ball22EvenOdd, TheoremId::Ball23,
    TheoremId::Ball23EvenOdd, TheoremId::SolidJ34,      TheoremId::SolidJ35,
    TheoremId::SolidJ_T1only, TheoremId::SolidJ_gradOnly, TheoremId::SolidL39,
    TheoremId::SolidL310,     TheoremId::SolidL_T1only, TheoremId::SurfJ45,
    TheoremId::SurfJ_T1only,  TheoremId::SurfL48,       TheoremId::SurfL_T1only,
};

const char* kNames[] = {
    "Ball22",   "Ball22EvenOdd", "Ball23",        "Ball23EvenOdd", "SolidJ34",
    "SolidJ35", "SolidJ_T1only", "SolidJ_gradOnly", "SolidL39",    "SolidL310",
    "SolidL_T1only", "SurfJ45",  "SurfJ_T1only",  "SurfL48",       "SurfL_T1only",
};

// Derivative images feeding every term: f_t, <x,grad>f, the gradient, and the
// angular derivatives D_{ij} flattened over i < j.
struct Images {
  GPoly f, ft, ef;
  std::vector<GPoly> di;
  std::vector<GPoly> aij;
};

Images make_images(const GPoly& f, const DomainSpec& dom) {
  Images im{f, f.diff_t(), f.euler(), {}, {}};
  im.di.reserve(dom.d);
  for (int i = 0; i < dom.d; ++i) im.di.push_back(f.diff_x(i));
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j) im.aij.push_back(f.angular(i, j));
  return im;
}

struct SImages {
  SurfaceFun f, fr;
  std::vector<SurfaceFun> aij;
};

SImages make_simages(const SurfaceFun& f, const DomainSpec& dom) {
  SImages im{f, f.radial_diff(), {}};
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j) im.aij.push_back(f.angular(i, j));
  return im;
}

// T1 of the solid theorems: |sqrt(t(1-t)) D f|^2 with D = d_t + (2t)^{-1} E,
// expanded so every integrand keeps t-exponents >= -1; Jacobi kind carries
// the (1-t) factor as a gamma shift, Laguerre has no (1-t).
Rat solid_t1(const DomainSpec& dom, const Images& F, const Images& G) {
  const WeightShift sh{dom.kind == DomainKind::SolidBounded ? 1 : 0, 0, 0};
  Rat r = inner(dom, F.ft.mul_tpow(2), G.ft, sh);
  r += (inner(dom, F.ft, G.ef, sh) + inner(dom, G.ft, F.ef, sh)) / Rat(2);
  r += inner(dom, F.ef.mul_tpow(-2), G.ef, sh) / Rat(4);
  return r;
}

Rat solid_grad(const DomainSpec& dom, const Images& F, const Images& G) {
  const WeightShift sh{dom.kind == DomainKind::SolidBounded ? 1 : 0, 1, 0};
  Rat r(0);
  for (int i = 0; i < dom.d; ++i) r += inner(dom, F.di[i].mul_tpow(-2), G.di[i], sh);
  return r / Rat(4);
}

Rat solid_ang(const DomainSpec& dom, const Images& F, const Images& G) {
  const WeightShift sh{dom.kind == DomainKind::SolidBounded ? 1 : 0, 0, 0};
  Rat r(0);
  for (size_t k = 0; k < F.aij.size(); ++k)
    r += inner(dom, F.aij[k].mul_tpow(-2), G.aij[k], sh);
  return r / Rat(4);
}

Rat solid_euler_s(const DomainSpec& dom, const Images& F, const Images& G) {
  const WeightShift sh{dom.kind == DomainKind::SolidBounded ? 1 : 0, 1, -1};
  return inner(dom, F.ef.mul_tpow(-2), G.ef, sh) / Rat(4);
}

Rat solid_ang_s(const DomainSpec& dom, const Images& F, const Images& G) {
  const WeightShift sh{dom.kind == DomainKind::SolidBounded ? 1 : 0, 0, -1};
  Rat r(0);
  for (size_t k = 0; k < F.aij.size(); ++k) r += inner(dom, F.aij[k], G.aij[k], sh);
  return r / Rat(4);
}

std::vector<std::pair<std::string, Rat>> terms_bilinear(TheoremId th, const DomainSpec& dom,
                                                        const Images& F, const Images& G) {
  std::vector<std::pair<std::string, Rat>> out;
  switch (th) {
    case TheoremId::Ball22:
    case TheoremId::Ball22EvenOdd: {
      Rat g(0);
      for (int i = 0; i < dom.d; ++i) g += inner(dom, F.di[i], G.di[i], {0, 1, 0});
      out.emplace_back("gradient", g);
      if (th == TheoremId::Ball22) {
        Rat a(0);
        for (size_t k = 0; k < F.aij.size(); ++k) a += inner(dom, F.aij[k], G.aij[k], {});
        out.emplace_back("angular", a);
      }
      break;
    }
    case TheoremId::Ball23:
    case TheoremId::Ball23EvenOdd: {
      out.emplace_back("radial", inner(dom, F.ef, G.ef, {0, 1, -1}));
      if (th == TheoremId::Ball23) {
        Rat a(0);
        for (size_t k = 0; k < F.aij.size(); ++k)
          a += inner(dom, F.aij[k], G.aij[k], {0, 0, -1});
        out.emplace_back("angular", a);
      }
      break;
    }
    case TheoremId::SolidJ34:
    case TheoremId::SolidL39:
      out.emplace_back("T1", solid_t1(dom, F, G));
      out.emplace_back("T2", solid_grad(dom, F, G));
      out.emplace_back("T3", solid_ang(dom, F, G));
      break;
    case TheoremId::SolidJ35:
    case TheoremId::SolidL310:
      out.emplace_back("T1", solid_t1(dom, F, G));
      out.emplace_back("T2", solid_euler_s(dom, F, G));
      out.emplace_back("T3", solid_ang_s(dom, F, G));
      break;
    case TheoremId::SolidJ_T1only:
    case TheoremId::SolidL_T1only:
      out.emplace_back("T1", solid_t1(dom, F, G));
      break;
    case TheoremId::SolidJ_gradOnly:
      out.emplace_back("T2", solid_grad(dom, F, G));
      break;
    default:
      throw std::logic_error("terms_bilinear: surface theorem on solid path");
  }
  return out;
}

std::vector<std::pair<std::string, Rat>> terms_bilinear(TheoremId th, const DomainSpec& dom,
                                                        const SImages& F, const SImages& G) {
  std::vector<std::pair<std::string, Rat>> out;
  const GPoly t1p = GPoly::tpow(1, 2);
  const bool bounded = dom.kind == DomainKind::SurfaceBounded;
  out.emplace_back("T1", surface_inner(dom, F.fr.mul_radial(t1p), G.fr,
                                       {bounded ? 1 : 0, 0, 0}));
  if (th == TheoremId::SurfJ45 || th == TheoremId::SurfL48) {
    Rat a(0);
    for (size_t k = 0; k < F.aij.size(); ++k) {
      a += surface_inner(dom, F.aij[k], G.aij[k], {0, 0, -1});
      if (bounded) a -= surface_inner(dom, F.aij[k], G.aij[k], {});
    }
    out.emplace_back("T2", a / Rat(4));
  }
  return out;
}

void check_request(TheoremId th, const DomainSpec& dom, int deg, int n) {
  dom.validate();
  if (theorem_domain(th) != dom.kind)
    throw std::invalid_argument("theorem " + theorem_name(th) + " needs domain kind " +
                                domain_kind_name(theorem_domain(th)) + ", got " + dom.name());
  if (theorem_needs_d2(th) && dom.d < 2)
    throw moment_error("theorem " + theorem_name(th) +
                       " has angular or 1/|x| terms and requires d >= 2");
  if (n < 0) throw std::invalid_argument("certify: n < 0");
  if (deg > n)
    throw std::invalid_argument("certify: degree " + std::to_string(deg) + " exceeds n = " +
                                std::to_string(n));
}

Verdict classify(const Rat& lhs, const Rat& rhs) {
  if (lhs < rhs) return Verdict::StrictlyBelow;
  if (lhs == rhs) return Verdict::Equality;
  return Verdict::Violation;
}

// Substitute t -> |x|^2 into a univariate polynomial in t.
GPoly subst_norm2(const GPoly& tpoly, int d) {
  GPoly r2(d);
  for (int i = 0; i < d; ++i) {
    std::vector<int> a(d, 0);
    a[i] = 2;
    r2 += GPoly::monomial(d, a, 0, Rat(1));
  }
  GPoly out(d);
  GPoly pw = GPoly::constant(d, Rat(1));
  int have = 0;
  for (const auto& [mono, c] : tpoly.terms()) {
    if (mono.j2 % 2 != 0 || mono.j2 < 0) throw std::logic_error("subst_norm2: bad t power");
  }
  for (int j = 0;; ++j) {
    for (const auto& [mono, c] : tpoly.terms())
      if (mono.j2 == 2 * j) out += pw.scaled(c), ++have;
    if (have == static_cast<int>(tpoly.terms().size())) break;
    pw = pw * r2;
  }
  return out;
}

std::vector<GPoly> solid_monomials(const DomainSpec& dom, int n) {
  std::vector<GPoly> basis;
  for (int total = 0; total <= n; ++total) {
    const int jmax = dom.kind == DomainKind::Ball ? 0 : total;
    for (int j = 0; j <= jmax; ++j)
      for (const auto& a : compositions(dom.d, total - j))
        basis.push_back(GPoly::monomial(dom.d, a, 2 * j, Rat(1)));
  }
  return basis;
}

std::vector<SurfaceFun> surface_span(const DomainSpec& dom, int n) {
  std::vector<SurfaceFun> basis;
  for (int m = 0; m <= n; ++m)
    for (int l = 0; l < harmonic_dim(dom.d, m); ++l)
      for (int j = 0; j + m <= n; ++j) {
        SurfaceFun e(dom.d);
        e.add_part(m, l, GPoly::tpow(1, 2 * j + m));
        basis.push_back(e);
      }
  return basis;
}

RayleighResult solve_pencil(RatMat& A, RatMat& B) {
  const int dim = static_cast<int>(A.size());
  RatMat M, L;
  std::vector<Rat> D;
  try {
    reduce_pair(A, B, M, D, L);
  } catch (const std::domain_error& e) {
    throw std::runtime_error(std::string("rayleigh_max: internal error, norm Gram "
                                         "not positive definite: ") +
                             e.what());
  }
  std::vector<double> ds(dim);
  for (int i = 0; i < dim; ++i) ds[i] = std::sqrt(D[i].to_double());
  std::vector<std::vector<double>> C(dim, std::vector<double>(dim, 0.0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) C[i][j] = M[i][j].to_double() / (ds[i] * ds[j]);
  std::vector<double> vals;
  std::vector<std::vector<double>> vecs;
  sym_eigen(C, vals, vecs);

  RayleighResult res;
  res.dim = dim;
  res.value = vals.back();
  // Back-transform L^T y = D^{-1/2} w to coefficients in the assembly basis.
  const std::vector<double>& w = vecs.back();
  std::vector<double> y(dim, 0.0);
  for (int i = dim - 1; i >= 0; --i) {
    double s = w[i] / ds[i];
    for (int k = i + 1; k < dim; ++k) s -= L[k][i].to_double() * y[k];
    y[i] = s;
  }
  double mx = 0;
  for (double v : y) mx = std::max(mx, std::abs(v));
  if (mx > 0)
    for (double& v : y) v /= mx;
  res.argmax = std::move(y);
  return res;
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> v(std::begin(kAll), std::end(kAll));
  return v;
}

std::string theorem_name(TheoremId th) { return kNames[static_cast<int>(th)]; }

TheoremId theorem_from_name(const std::string& s) {
  for (size_t i = 0; i < std::size(kNames); ++i)
    if (s == kNames[i]) return static_cast<TheoremId>(i);
  throw std::invalid_argument("unknown theorem '" + s + "'");
}

DomainKind theorem_domain(TheoremId th) {
  switch (th) {
    case TheoremId::Ball22:
    case TheoremId::Ball22EvenOdd:
    case TheoremId::Ball23:
    case TheoremId::Ball23EvenOdd:
      return DomainKind::Ball;
    case TheoremId::SolidJ34:
    case TheoremId::SolidJ35:
    case TheoremId::SolidJ_T1only:
    case TheoremId::SolidJ_gradOnly:
      return DomainKind::SolidBounded;
    case TheoremId::SolidL39:
    case TheoremId::SolidL310:
    case TheoremId::SolidL_T1only:
      return DomainKind::SolidUnbounded;
    case TheoremId::SurfJ45:
    case TheoremId::SurfJ_T1only:
      return DomainKind::SurfaceBounded;
    case TheoremId::SurfL48:
    case TheoremId::SurfL_T1only:
      return DomainKind::SurfaceUnbounded;
  }
  throw std::logic_error("theorem_domain: bad id");
}

bool is_surface_theorem(TheoremId th) {
  const DomainKind k = theorem_domain(th);
  return k == DomainKind::SurfaceBounded || k == DomainKind::SurfaceUnbounded;
}

bool theorem_needs_d2(TheoremId th) {
  switch (th) {
    case TheoremId::Ball22:
    case TheoremId::Ball23:
    case TheoremId::Ball23EvenOdd:
    case TheoremId::SolidJ34:
    case TheoremId::SolidJ35:
    case TheoremId::SolidL39:
    case TheoremId::SolidL310:
    case TheoremId::SurfJ45:
    case TheoremId::SurfL48:
      return true;
    default:
      return false;
  }
}

Rat bernstein_bound(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  if (n < 0) throw std::invalid_argument("bernstein_bound: n < 0");
  const Rat rn(n);
  switch (th) {
    case TheoremId::Ball22:
    case TheoremId::Ball23:
      return rn * (rn + Rat(2) * dom.mu + Rat(dom.d - 1));
    case TheoremId::Ball22EvenOdd:
    case TheoremId::Ball23EvenOdd: {
      const Rat full = rn * (rn + Rat(2) * dom.mu + Rat(dom.d - 1));
      return n % 2 == 0 ? full : full - Rat(dom.d - 1);
    }
    case TheoremId::SolidJ34:
    case TheoremId::SolidJ35:
    case TheoremId::SolidJ_T1only:
    case TheoremId::SolidJ_gradOnly:
      return rn * (rn + dom.gamma + dom.mu + Rat(dom.d + 1, 2));
    case TheoremId::SolidL39:
    case TheoremId::SolidL310:
    case TheoremId::SolidL_T1only:
      return rn;
    case TheoremId::SurfJ45:
    case TheoremId::SurfJ_T1only:
      return rn * (rn + dom.gamma + Rat(dom.d, 2));
    case TheoremId::SurfL48:
    case TheoremId::SurfL_T1only:
      return rn;
  }
  throw std::logic_error("bernstein_bound: bad id");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::StrictlyBelow: return "StrictlyBelow";
    case Verdict::Equality: return "Equality";
    case Verdict::Violation: return "VIOLATION";
  }
  throw std::logic_error("verdict_name");
}

std::vector<std::pair<std::string, Rat>> functional_terms(TheoremId th, const GPoly& f,
                                                          const DomainSpec& dom, int n) {
  if (is_surface_theorem(th))
    throw std::invalid_argument("functional_terms: surface theorem needs a SurfaceFun");
  check_request(th, dom, f.max_grade(), n);
  if (dom.kind == DomainKind::Ball && !f.is_x_only())
    throw std::invalid_argument("functional_terms: ball polynomials must be t-free");
  if (f.dim() != dom.d) throw std::invalid_argument("functional_terms: dimension mismatch");
  const Images im = make_images(f, dom);
  return terms_bilinear(th, dom, im, im);
}

std::vector<std::pair<std::string, Rat>> functional_terms(TheoremId th, const SurfaceFun& f,
                                                          const DomainSpec& dom, int n) {
  if (!is_surface_theorem(th))
    throw std::invalid_argument("functional_terms: non-surface theorem needs a GPoly");
  check_request(th, dom, f.degree(), n);
  if (f.d() != dom.d) throw std::invalid_argument("functional_terms: dimension mismatch");
  const SImages im = make_simages(f, dom);
  return terms_bilinear(th, dom, im, im);
}

Rat functional_bilinear(TheoremId th, const GPoly& f, const GPoly& g, const DomainSpec& dom) {
  if (is_surface_theorem(th))
    throw std::invalid_argument("functional_bilinear: surface theorem needs SurfaceFuns");
  const Images F = make_images(f, dom), G = make_images(g, dom);
  Rat r(0);
  for (const auto& [name, v] : terms_bilinear(th, dom, F, G)) r += v;
  return r;
}

Rat functional_bilinear(TheoremId th, const SurfaceFun& f, const SurfaceFun& g,
                        const DomainSpec& dom) {
  if (!is_surface_theorem(th))
    throw std::invalid_argument("functional_bilinear: non-surface theorem needs GPolys");
  const SImages F = make_simages(f, dom), G = make_simages(g, dom);
  Rat r(0);
  for (const auto& [name, v] : terms_bilinear(th, dom, F, G)) r += v;
  return r;
}

Certificate certify(TheoremId th, const GPoly& f, const DomainSpec& dom, int n) {
  Certificate c{th, dom, n, functional_terms(th, f, dom, n), Rat(0), Rat(0),
                Verdict::StrictlyBelow, f.str()};
  for (const auto& [name, v] : c.terms) c.lhs += v;
  c.rhs = bernstein_bound(th, dom, n) * norm2(dom, f);
  c.verdict = classify(c.lhs, c.rhs);
  return c;
}

Certificate certify(TheoremId th, const SurfaceFun& f, const DomainSpec& dom, int n) {
  Certificate c{th, dom, n, functional_terms(th, f, dom, n), Rat(0), Rat(0),
                Verdict::StrictlyBelow, f.to_ambient().str()};
  for (const auto& [name, v] : c.terms) c.lhs += v;
  c.rhs = bernstein_bound(th, dom, n) * surface_norm2(dom, f);
  c.verdict = classify(c.lhs, c.rhs);
  return c;
}

GPoly extremal_element(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  if (is_surface_theorem(th))
    throw std::invalid_argument("extremal_element: use surface_extremal_element");
  switch (theorem_domain(th)) {
    case DomainKind::Ball: {
      if (th == TheoremId::Ball22 || th == TheoremId::Ball23) {
        GPoly f(dom.d);
        for (const GPoly& e : ball_basis(dom.d, dom.mu, n).elems) f += e;
        return f;
      }
      // Parity extremals: radial for even degree, x_1 times radial for odd.
      const int m = n / 2;
      if (n % 2 == 0) return subst_norm2(jacobi1t(m, Rat(dom.d - 2, 2), dom.mu - Rat(1, 2)), dom.d);
      return GPoly::var(dom.d, 0) *
             subst_norm2(jacobi1t(m, Rat(dom.d, 2), dom.mu - Rat(1, 2)), dom.d);
    }
    default:
      return solid_element(dom, n, 0, std::vector<int>(dom.d, 0));
  }
}

SurfaceFun surface_extremal_element(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  if (!is_surface_theorem(th))
    throw std::invalid_argument("surface_extremal_element: non-surface theorem");
  return surface_element(dom, n, 0, 0);
}

Verdict sharpness_expected(TheoremId th, int n) {
  if (n == 0) return Verdict::Equality;
  if (th == TheoremId::SolidJ_gradOnly) return Verdict::StrictlyBelow;
  if (th == TheoremId::Ball23EvenOdd && n % 2 == 1) return Verdict::StrictlyBelow;
  return Verdict::Equality;
}

Certificate sharpness_check(TheoremId th, const DomainSpec& dom, int n) {
  const Certificate cert = is_surface_theorem(th)
                               ? certify(th, surface_extremal_element(th, dom, n), dom, n)
                               : certify(th, extremal_element(th, dom, n), dom, n);
  if (th == TheoremId::SolidJ_gradOnly) {
    if (cert.verdict == Verdict::Violation)
      throw std::runtime_error("sharpness_check: VIOLATION for " + theorem_name(th));
    return cert;
  }
  if (cert.verdict != sharpness_expected(th, n))
    throw std::runtime_error("sharpness_check: " + theorem_name(th) + " n=" + std::to_string(n) +
                             " expected " + verdict_name(sharpness_expected(th, n)) + ", got " +
                             verdict_name(cert.verdict));
  return cert;
}

std::vector<SharpnessCase> sharpness_cases(TheoremId th, const DomainSpec& dom, int n) {
  std::vector<SharpnessCase> out;
  const Verdict expected = sharpness_expected(th, n);
  const bool surf = is_surface_theorem(th);
  const bool full_ball = th == TheoremId::Ball22 || th == TheoremId::Ball23;

  if (surf) {
    const SurfaceFun ex = surface_extremal_element(th, dom, n);
    out.push_back({"extremal", certify(th, ex, dom, n), expected});
    if (n >= 1) {
      SurfaceFun one(dom.d);
      one.add_part(0, 0, GPoly::constant(1, Rat(1)));
      out.push_back({"extremal + (1/7) constant",
                     certify(th, ex + one.scaled(Rat(1, 7)), dom, n), Verdict::StrictlyBelow});
      out.push_back({"top block m=n", certify(th, surface_element(dom, n, n, 0), dom, n),
                     Verdict::StrictlyBelow});
    }
    return out;
  }

  if (full_ball) {
    const BallBasis& vb = ball_basis(dom.d, dom.mu, n);
    for (size_t k = 0; k < vb.elems.size(); ++k)
      out.push_back({"basis element k=" + std::to_string(k),
                     certify(th, vb.elems[k], dom, n), Verdict::Equality});
    GPoly comb(dom.d);
    for (const GPoly& e : vb.elems) comb += e;
    out.push_back({"basis combination", certify(th, comb, dom, n), Verdict::Equality});
    if (n >= 1)
      out.push_back({"combination + (1/7) constant",
                     certify(th, comb + GPoly::constant(dom.d, Rat(1, 7)), dom, n),
                     Verdict::StrictlyBelow});
    return out;
  }

  const GPoly ex = extremal_element(th, dom, n);
  out.push_back({"extremal", certify(th, ex, dom, n), expected});
  if (n >= 1) {
    out.push_back({"extremal + (1/7) constant",
                   certify(th, ex + GPoly::constant(dom.d, Rat(1, 7)), dom, n),
                   Verdict::StrictlyBelow});
    if (theorem_domain(th) != DomainKind::Ball) {
      std::vector<int> k(dom.d, 0);
      k[0] = n;
      out.push_back({"top block m=n", certify(th, solid_element(dom, n, n, k), dom, n),
                     Verdict::StrictlyBelow});
    }
  }
  return out;
}

RayleighResult rayleigh_max(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  if (theorem_domain(th) != dom.kind)
    throw std::invalid_argument("rayleigh_max: domain kind mismatch for " + theorem_name(th));
  if (theorem_needs_d2(th) && dom.d < 2)
    throw moment_error("rayleigh_max: " + theorem_name(th) + " requires d >= 2");

  if (is_surface_theorem(th)) {
    const std::vector<SurfaceFun> basis = surface_span(dom, n);
    const int dim = static_cast<int>(basis.size());
    std::vector<SImages> im;
    im.reserve(dim);
    for (const auto& e : basis) im.push_back(make_simages(e, dom));
    RatMat A(dim, std::vector<Rat>(dim, Rat(0))), B(dim, std::vector<Rat>(dim, Rat(0)));
    parallel_for(0, dim, [&](int i) {
      for (int j = i; j < dim; ++j) {
        Rat a(0);
        for (const auto& [name, v] : terms_bilinear(th, dom, im[i], im[j])) a += v;
        A[i][j] = a;
        B[i][j] = surface_inner(dom, basis[i], basis[j]);
      }
    });
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < i; ++j) A[i][j] = A[j][i], B[i][j] = B[j][i];
    return solve_pencil(A, B);
  }

  const std::vector<GPoly> basis = solid_monomials(dom, n);
  const int dim = static_cast<int>(basis.size());
  std::vector<Images> im;
  im.reserve(dim);
  for (const auto& e : basis) im.push_back(make_images(e, dom));
  RatMat A(dim, std::vector<Rat>(dim, Rat(0))), B(dim, std::vector<Rat>(dim, Rat(0)));
  parallel_for(0, dim, [&](int i) {
    for (int j = i; j < dim; ++j) {
      Rat a(0);
      for (const auto& [name, v] : terms_bilinear(th, dom, im[i], im[j])) a += v;
      A[i][j] = a;
      B[i][j] = inner(dom, basis[i], basis[j]);
    }
  });
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j) A[i][j] = A[j][i], B[i][j] = B[j][i];
  return solve_pencil(A, B);
}

}  // namespace parab
