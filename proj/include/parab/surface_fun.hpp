#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parab/gpoly.hpp"
#include "parab/moments.hpp"

namespace parab {

// Polynomial on a parabolic surface |x|^2 = t, stored blockwise:
//   f(x, t) = sum over (m, l) of radial_{m,l}(t) * Y_l^m(x / sqrt(t)),
// Y_l^m from harmonic_basis(d, m). Radial parts are univariate polynomials in
// t carrying the t^{m/2} factor (exponents in m/2 + Z), so every block is an
// honest polynomial in (x, t) on the surface.
class SurfaceFun {
 public:
  SurfaceFun() = default;
  explicit SurfaceFun(int d) : d_(d) {}

  int d() const { return d_; }
  bool is_zero() const { return parts_.empty(); }
  const std::map<std::pair<int, int>, GPoly>& parts() const { return parts_; }

  // radial must be a dim-1 polynomial in t alone, exponents in m/2 + Z.
  void add_part(int m, int l, const GPoly& radial);

  SurfaceFun& operator+=(const SurfaceFun& o);
  SurfaceFun& operator-=(const SurfaceFun& o);
  friend SurfaceFun operator+(SurfaceFun a, const SurfaceFun& b) { return a += b; }
  friend SurfaceFun operator-(SurfaceFun a, const SurfaceFun& b) { return a -= b; }
  SurfaceFun operator-() const { return scaled(Rat(-1)); }
  SurfaceFun scaled(const Rat& c) const;
  friend bool operator==(const SurfaceFun& a, const SurfaceFun& b) {
    return a.d_ == b.d_ && a.parts_ == b.parts_;
  }

  // d/dt applied to every radial part.
  SurfaceFun radial_diff() const;
  // Multiply every radial part by a univariate polynomial in t (integer powers).
  SurfaceFun mul_radial(const GPoly& tpoly) const;
  // x_i d/dx_j - x_j d/dx_i acting on the angular factors, re-expanded in the
  // harmonic basis of the same degree.
  SurfaceFun angular(int i, int j) const;

  // Ambient representative sum radial(t) t^{-m/2} Y_l^m(x), a polynomial in
  // (x, t) that restricts to this function on the surface.
  GPoly to_ambient() const;
  // Blockwise decomposition of an ambient polynomial restricted to the surface.
  static SurfaceFun from_ambient(const GPoly& f);

  // Max over blocks of (radial degree in t) + m/2.
  int degree() const;
  double eval(const std::vector<double>& xi, double t) const;

 private:
  int d_ = 0;
  std::map<std::pair<int, int>, GPoly> parts_;
};

// Blockwise surface inner product; shift.dmu must be zero.
Rat surface_inner(const DomainSpec& dom, const SurfaceFun& f, const SurfaceFun& g,
                  const WeightShift& shift = {});
Rat surface_norm2(const DomainSpec& dom, const SurfaceFun& f);

}  // namespace parab
