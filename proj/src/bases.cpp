#include "parab/bases.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "parab/classical.hpp"
#include "parab/harmonics.hpp"

namespace parab {

namespace {

GPoly gpoly_pow(const GPoly& p, int e) {
  GPoly out = GPoly::constant(p.dim(), Rat(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

Rat radial_param(const DomainSpec& dom, int m) {
  // Exponent of t in the reduced radial weight once the block of degree m is
  // integrated out: solids m + mu + (d-1)/2, surfaces m + (d-2)/2.
  if (dom.is_surface()) return Rat(m) + Rat(dom.d - 2, 2);
  return Rat(m) + dom.mu + Rat(dom.d - 1, 2);
}

}  // namespace

std::vector<std::vector<int>> compositions(int d, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(d, 0);
  k[0] = m;
  while (true) {
    out.push_back(k);
    int i = d - 2;
    while (i >= 0 && k[i] == 0) --i;
    if (i < 0) break;
    --k[i];
    int rest = m;
    for (int j = 0; j <= i; ++j) rest -= k[j];
    for (int j = i + 1; j < d; ++j) k[j] = 0;
    k[i + 1] = rest;
  }
  return out;
}

GPoly ball_element(int d, const Rat& mu, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != d) throw std::invalid_argument("ball_element: |k| != d");
  GPoly out = GPoly::constant(d, Rat(1));
  // S = 1 - x_1^2 - ... - x_{j-1}^2, extended as j advances.
  GPoly S = GPoly::constant(d, Rat(1));
  int tail = 0;
  for (int i : k) {
    if (i < 0) throw std::invalid_argument("ball_element: negative index");
    tail += i;
  }
  for (int j = 1; j <= d; ++j) {
    tail -= k[j - 1];
    const Rat lambda = mu + Rat(tail) + Rat(d - j, 2);
    if (k[j - 1] > 0) {
      const GPoly g = gegenbauer1(k[j - 1], lambda);
      GPoly factor(d);
      for (const auto& [mono, c] : g.terms()) {
        const int e = mono.a[0];
        std::vector<int> a(d, 0);
        a[j - 1] = e;
        factor += GPoly::monomial(d, a, 0, c) * gpoly_pow(S, (k[j - 1] - e) / 2);
      }
      out = out * factor;
    }
    std::vector<int> sq(d, 0);
    sq[j - 1] = 2;
    S -= GPoly::monomial(d, sq, 0, Rat(1));
  }
  return out;
}

const BallBasis& ball_basis(int d, const Rat& mu, int m) {
  thread_local std::map<std::tuple<int, std::string, int>, BallBasis> cache;
  const auto key = std::make_tuple(d, mu.str(), m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    BallBasis b;
    b.d = d;
    b.mu = mu;
    b.m = m;
    b.idx = compositions(d, m);
    for (const auto& k : b.idx) b.elems.push_back(ball_element(d, mu, k));
    it = cache.emplace(key, std::move(b)).first;
  }
  return it->second;
}

GPoly solid_element(const DomainSpec& dom, int n, int m, const std::vector<int>& k) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("solid_element: surface domain");
  if (dom.kind == DomainKind::Ball) {
    if (n != m) throw std::invalid_argument("solid_element: ball elements have n == m");
    return ball_element(dom.d, dom.mu, k);
  }
  if (m < 0 || m > n) throw std::invalid_argument("solid_element: need 0 <= m <= n");
  const Rat a = radial_param(dom, m);
  const GPoly radial = dom.kind == DomainKind::SolidBounded
                           ? jacobi1t(n - m, a, dom.gamma, dom.d)
                           : laguerre1(n - m, a, dom.d);
  return radial * parabolic_lift(ball_element(dom.d, dom.mu, k), m);
}

SurfaceFun surface_element(const DomainSpec& dom, int n, int m, int l) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("surface_element: not a surface domain");
  if (m < 0 || m > n) throw std::invalid_argument("surface_element: need 0 <= m <= n");
  const Rat a = radial_param(dom, m);
  const GPoly radial = dom.kind == DomainKind::SurfaceBounded
                           ? jacobi1t(n - m, a, dom.gamma)
                           : laguerre1(n - m, a);
  SurfaceFun f(dom.d);
  f.add_part(m, l, radial.mul_tpow(m));
  return f;
}

GPoly random_element(const DomainSpec& dom, int degree, std::uint64_t seed) {
  dom.validate();
  if (dom.is_surface())
    throw std::invalid_argument("random_element: use random_surface_element for surfaces");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 10);
  for (int attempt = 0; attempt < 64; ++attempt) {
    GPoly p(dom.d);
    for (int total = 0; total <= degree; ++total) {
      const int jmax = dom.kind == DomainKind::Ball ? 0 : total;
      for (int j = 0; j <= jmax; ++j)
        for (const auto& a : compositions(dom.d, total - j)) {
          const Rat c(num(gen), den(gen));
          if (!c.is_zero()) p.add_term(Mono{a, 2 * j}, c);
        }
    }
    if (!p.is_zero()) return p;
  }
  throw std::logic_error("random_element: could not draw nonzero polynomial");
}

SurfaceFun random_surface_element(const DomainSpec& dom, int degree, std::uint64_t seed) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("random_surface_element: not a surface");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 10);
  for (int attempt = 0; attempt < 64; ++attempt) {
    SurfaceFun f(dom.d);
    for (int n = 0; n <= degree; ++n)
      for (int m = 0; m <= n; ++m)
        for (int l = 0; l < harmonic_dim(dom.d, m); ++l) {
          const Rat c(num(gen), den(gen));
          if (!c.is_zero()) f += surface_element(dom, n, m, l).scaled(c);
        }
    if (!f.is_zero()) return f;
  }
  throw std::logic_error("random_surface_element: could not draw nonzero polynomial");
}

}  // namespace parab
