#include "parab/surface_fun.hpp"

#include <stdexcept>

#include "parab/harmonics.hpp"

namespace parab {

namespace {

void check_radial(const GPoly& r, int m) {
  if (r.dim() != 1) throw std::invalid_argument("SurfaceFun: radial part must have dim 1");
  for (const auto& [mono, c] : r.terms()) {
    (void)c;
    if (mono.a[0] != 0) throw std::invalid_argument("SurfaceFun: radial part must not involve x");
    if ((mono.j2 - m) % 2 != 0)
      throw std::invalid_argument("SurfaceFun: radial exponent parity mismatch");
  }
}

}  // namespace

void SurfaceFun::add_part(int m, int l, const GPoly& radial) {
  if (m < 0 || l < 0 || l >= static_cast<int>(harmonic_dim(d_, m)))
    throw std::invalid_argument("SurfaceFun: bad block index");
  if (radial.is_zero()) return;
  check_radial(radial, m);
  auto it = parts_.find({m, l});
  if (it == parts_.end()) {
    parts_.emplace(std::make_pair(m, l), radial);
  } else {
    it->second += radial;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

SurfaceFun& SurfaceFun::operator+=(const SurfaceFun& o) {
  if (d_ != o.d_) throw std::invalid_argument("SurfaceFun: dimension mismatch");
  for (const auto& [key, r] : o.parts_) add_part(key.first, key.second, r);
  return *this;
}

SurfaceFun& SurfaceFun::operator-=(const SurfaceFun& o) {
  if (d_ != o.d_) throw std::invalid_argument("SurfaceFun: dimension mismatch");
  for (const auto& [key, r] : o.parts_) add_part(key.first, key.second, -r);
  return *this;
}

SurfaceFun SurfaceFun::scaled(const Rat& c) const {
  SurfaceFun out(d_);
  if (c.is_zero()) return out;
  for (const auto& [key, r] : parts_) out.parts_.emplace(key, r.scaled(c));
  return out;
}

SurfaceFun SurfaceFun::radial_diff() const {
  SurfaceFun out(d_);
  for (const auto& [key, r] : parts_) out.add_part(key.first, key.second, r.diff_t());
  return out;
}

SurfaceFun SurfaceFun::mul_radial(const GPoly& tpoly) const {
  if (tpoly.dim() != 1) throw std::invalid_argument("mul_radial: factor must have dim 1");
  SurfaceFun out(d_);
  for (const auto& [key, r] : parts_) out.add_part(key.first, key.second, r * tpoly);
  return out;
}

SurfaceFun SurfaceFun::angular(int i, int j) const {
  SurfaceFun out(d_);
  for (const auto& [key, r] : parts_) {
    const auto& [m, l] = key;
    const GPoly dy = harmonic_basis(d_, m).elems[l].angular(i, j);
    if (dy.is_zero()) continue;
    const auto c = harmonic_coeffs(d_, m, dy);
    for (std::size_t l2 = 0; l2 < c.size(); ++l2)
      if (!c[l2].is_zero()) out.add_part(m, static_cast<int>(l2), r.scaled(c[l2]));
  }
  return out;
}

GPoly SurfaceFun::to_ambient() const {
  GPoly out(d_);
  for (const auto& [key, r] : parts_) {
    const auto& [m, l] = key;
    GPoly amb(d_);
    for (const auto& [mono, c] : r.terms()) amb.add_term(Mono{std::vector<int>(d_, 0), mono.j2 - m}, c);
    out += amb * harmonic_basis(d_, m).elems[l];
  }
  return out;
}

SurfaceFun SurfaceFun::from_ambient(const GPoly& f) {
  SurfaceFun out(f.dim());
  const int d = f.dim();
  // Group x-monomial factors: x^b t^e = t^{e+|b|/2} xi^b on the surface, and
  // xi^b splits over harmonic degrees |b|, |b|-2, ... by sphere projection.
  for (const auto& [mono, c] : f.terms()) {
    const GPoly xb = GPoly::monomial(d, mono.a, 0, Rat(1));
    const int e2 = mono.j2 + mono.degx();
    for (int m = mono.degx(); m >= 0; m -= 2) {
      const HarmonicBasis& hb = harmonic_basis(d, m);
      for (std::size_t l = 0; l < hb.elems.size(); ++l) {
        const Rat coef = c * sphere_inner(xb, hb.elems[l]) / hb.norm2[l];
        if (coef.is_zero()) continue;
        GPoly r(1);
        r.add_term(Mono{{0}, e2}, coef);
        out.add_part(m, static_cast<int>(l), r);
      }
    }
  }
  return out;
}

int SurfaceFun::degree() const {
  int deg = 0;
  for (const auto& [key, r] : parts_)
    for (const auto& [mono, c] : r.terms()) {
      (void)c;
      deg = std::max(deg, (mono.j2 + key.first) / 2);
    }
  return deg;
}

double SurfaceFun::eval(const std::vector<double>& xi, double t) const {
  double s = 0;
  for (const auto& [key, r] : parts_)
    s += r.eval({0.0}, t) * harmonic_basis(d_, key.first).elems[key.second].eval(xi, 1.0);
  return s;
}

Rat surface_inner(const DomainSpec& dom, const SurfaceFun& f, const SurfaceFun& g,
                  const WeightShift& shift) {
  dom.validate();
  if (!dom.is_surface()) throw std::invalid_argument("surface_inner: not a surface domain");
  if (f.d() != dom.d || g.d() != dom.d)
    throw std::invalid_argument("surface_inner: dimension mismatch");
  if (shift.dmu != 0) throw std::invalid_argument("surface_inner: surfaces have no mu shift");
  Rat s(0);
  for (const auto& [key, rf] : f.parts()) {
    auto it = g.parts().find(key);
    if (it == g.parts().end()) continue;
    const Rat n2 = harmonic_basis(dom.d, key.first).norm2[key.second];
    for (const auto& [ma, ca] : rf.terms())
      for (const auto& [mb, cb] : it->second.terms())
        s += ca * cb * n2 *
             surface_tratio(dom, HalfExp{ma.j2 + mb.j2 + 2 * shift.s}, shift.dgamma);
  }
  return s;
}

Rat surface_norm2(const DomainSpec& dom, const SurfaceFun& f) {
  return surface_inner(dom, f, f, {});
}

}  // namespace parab
