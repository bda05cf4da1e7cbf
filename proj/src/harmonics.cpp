#include "parab/harmonics.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "parab/exact_linalg.hpp"

namespace parab {

namespace {

// All alpha with |alpha| = m in d variables, lexicographically descending
// starting from (m, 0, ..., 0).
std::vector<std::vector<int>> degree_monomials(int d, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(d, 0);
  a[0] = m;
  while (true) {
    out.push_back(a);
    int i = d - 2;
    while (i >= 0 && a[i] == 0) --i;
    if (i < 0) break;
    --a[i];
    int rest = m;
    for (int j = 0; j <= i; ++j) rest -= a[j];
    for (int j = i + 1; j < d; ++j) a[j] = 0;
    a[i + 1] = rest;
  }
  return out;
}

// Divide out the integer content and fix the sign of the leading term.
GPoly primitive(const GPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [mono, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rat scale(mpq_class(den_lcm) / mpq_class(num_gcd));
  if (p.terms().begin()->second.sign() * scale.sign() < 0) scale = -scale;
  return p.scaled(scale);
}

HarmonicBasis build_basis(int d, int m) {
  HarmonicBasis b;
  b.d = d;
  b.m = m;
  if (m == 0) {
    b.elems.push_back(GPoly::constant(d, Rat(1)));
    b.norm2.push_back(Rat(1));
    return b;
  }

  const auto monos = degree_monomials(d, m);
  const int cols = static_cast<int>(monos.size());
  std::vector<GPoly> mono_polys;
  mono_polys.reserve(cols);
  for (const auto& a : monos) mono_polys.push_back(GPoly::monomial(d, a, 0, Rat(1)));

  std::vector<GPoly> kernel;
  if (m == 1) {
    kernel = mono_polys;
  } else {
    const auto rows_idx = degree_monomials(d, m - 2);
    std::map<std::vector<int>, int> row_of;
    for (int r = 0; r < static_cast<int>(rows_idx.size()); ++r) row_of[rows_idx[r]] = r;
    RatMat M(rows_idx.size(), std::vector<Rat>(cols, Rat(0)));
    for (int c = 0; c < cols; ++c) {
      const GPoly lap = mono_polys[c].laplace_x();
      for (const auto& [mono, coef] : lap.terms()) M[row_of.at(mono.a)][c] = coef;
    }
    for (const auto& v : nullspace(std::move(M), cols)) {
      GPoly y(d);
      for (int c = 0; c < cols; ++c)
        if (!v[c].is_zero()) y.add_term(Mono{monos[c], 0}, v[c]);
      kernel.push_back(std::move(y));
    }
  }

  if (static_cast<long>(kernel.size()) != harmonic_dim(d, m))
    throw std::logic_error("harmonic_basis: kernel dimension mismatch");

  for (auto& v : kernel) {
    GPoly e = v;
    for (std::size_t l = 0; l < b.elems.size(); ++l) {
      const Rat c = sphere_inner(v, b.elems[l]) / b.norm2[l];
      if (!c.is_zero()) e -= b.elems[l].scaled(c);
    }
    e = primitive(e);
    const Rat n2 = sphere_inner(e, e);
    if (n2.sign() <= 0) throw std::logic_error("harmonic_basis: degenerate element");
    b.elems.push_back(std::move(e));
    b.norm2.push_back(n2);
  }
  return b;
}

}  // namespace

Rat sphere_moment(const std::vector<int>& alpha, int d) {
  if (static_cast<int>(alpha.size()) != d) throw std::invalid_argument("sphere_moment: bad alpha");
  long total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("sphere_moment: negative exponent");
    if (a % 2 != 0) return Rat(0);
    total += a / 2;
  }
  Rat num(1);
  for (int a : alpha)
    if (a > 0) num *= gamma_ratio(Rat(1, 2), a / 2);
  return num / gamma_ratio(Rat(d, 2), total);
}

Rat sphere_inner(const GPoly& p, const GPoly& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("sphere_inner: dimension mismatch");
  if (!p.is_x_only() || !q.is_x_only())
    throw std::invalid_argument("sphere_inner: operands must not involve t");
  Rat s(0);
  std::vector<int> a(p.dim());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      bool odd = false;
      for (int i = 0; i < p.dim(); ++i) {
        a[i] = mp.a[i] + mq.a[i];
        if (a[i] % 2 != 0) { odd = true; break; }
      }
      if (odd) continue;
      s += cp * cq * sphere_moment(a, p.dim());
    }
  return s;
}

long harmonic_dim(int d, int m) {
  if (d < 1 || m < 0) throw std::invalid_argument("harmonic_dim: bad arguments");
  if (m == 0) return 1;
  if (d == 1) return m == 1 ? 1 : 0;
  const Rat dim = binom(m + d - 1, d - 1) - binom(m + d - 3, d - 1);
  return dim.num().get_si();
}

const HarmonicBasis& harmonic_basis(int d, int m) {
  thread_local std::map<std::pair<int, int>, HarmonicBasis> cache;
  auto it = cache.find({d, m});
  if (it == cache.end()) it = cache.emplace(std::make_pair(d, m), build_basis(d, m)).first;
  return it->second;
}

std::vector<Rat> harmonic_coeffs(int d, int m, const GPoly& y) {
  const HarmonicBasis& b = harmonic_basis(d, m);
  std::vector<Rat> c(b.elems.size(), Rat(0));
  GPoly rem = y;
  for (std::size_t l = 0; l < b.elems.size(); ++l) {
    c[l] = sphere_inner(y, b.elems[l]) / b.norm2[l];
    if (!c[l].is_zero()) rem -= b.elems[l].scaled(c[l]);
  }
  if (!rem.is_zero()) throw std::domain_error("harmonic_coeffs: polynomial not in harmonic span");
  return c;
}

}  // namespace parab
