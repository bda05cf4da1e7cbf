#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parab/gpoly.hpp"
#include "parab/rational.hpp"

namespace parab {

enum class DomainKind { Ball, SolidBounded, SolidUnbounded, SurfaceBounded, SurfaceUnbounded };

// Weighted domain. Conventions (all measures normalized to total mass 1):
//   Ball            x in R^d, |x| < 1,            weight (1-|x|^2)^(mu-1/2)
//   SolidBounded    |x|^2 < t < 1,                weight (1-t)^gamma (t-|x|^2)^(mu-1/2)
//   SolidUnbounded  |x|^2 < t < inf,              weight e^(-t) (t-|x|^2)^(mu-1/2)
//   SurfaceBounded  |x|^2 = t, 0 < t < 1,         weight (1-t)^gamma on the surface
//   SurfaceUnbounded|x|^2 = t, t > 0,             weight e^(-t) on the surface
// gamma applies to bounded kinds only, mu to solid kinds and the ball.
struct DomainSpec {
  DomainKind kind = DomainKind::SolidBounded;
  int d = 1;
  Rat gamma = Rat(0);
  Rat mu = Rat(1, 2);

  bool bounded() const {
    return kind == DomainKind::Ball || kind == DomainKind::SolidBounded ||
           kind == DomainKind::SurfaceBounded;
  }
  bool is_surface() const {
    return kind == DomainKind::SurfaceBounded || kind == DomainKind::SurfaceUnbounded;
  }
  bool has_gamma() const {
    return kind == DomainKind::SolidBounded || kind == DomainKind::SurfaceBounded;
  }
  bool has_mu() const { return !is_surface(); }
  void validate() const;
  std::string name() const;

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) {
    return a.kind == b.kind && a.d == b.d && a.gamma == b.gamma && a.mu == b.mu;
  }
};

std::string domain_kind_name(DomainKind k);
DomainKind domain_kind_from_name(const std::string& s);

struct moment_error : std::domain_error {
  explicit moment_error(const std::string& what) : std::domain_error(what) {}
};

// Monomial x^alpha t^(j2/2); the |x|^(2s) factor enters through WeightShift.
struct MomentKey {
  std::vector<int> alpha;
  int j2 = 0;
};

// Auxiliary weight (1-t)^dgamma (t-|x|^2)^dmu |x|^(2s) multiplying the domain
// weight (t replaced by 1 on the ball, |x|^2 on surfaces).
struct WeightShift {
  int dgamma = 0;
  int dmu = 0;
  int s = 0;
};

Rat moment(const DomainSpec& dom, const MomentKey& key);
Rat moment_shifted(const DomainSpec& dom, const MomentKey& key, const WeightShift& shift);

// Ratio of shifted to unshifted radial integrals on a surface domain:
// int t^(d/2-1+e) (1-t)^(gamma+dgamma) dnu / int t^(d/2-1) (1-t)^gamma dnu.
// e must be an integer (as a HalfExp); dgamma requires a bounded kind.
Rat surface_tratio(const DomainSpec& dom, const HalfExp& e, int dgamma);

// Termwise moments of a polynomial; solid and ball kinds only.
Rat integral(const DomainSpec& dom, const GPoly& p, const WeightShift& shift = {});
Rat inner(const DomainSpec& dom, const GPoly& p, const GPoly& q, const WeightShift& shift = {});
Rat norm2(const DomainSpec& dom, const GPoly& p);

}  // namespace parab
