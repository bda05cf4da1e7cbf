#include "parab/moments.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "parab/harmonics.hpp"

namespace parab {

namespace {

// B(p+dp, q+dq) / B(p, q) with integer shifts.
Rat beta_ratio(const Rat& p, long dp, const Rat& q, long dq) {
  return gamma_ratio(p, dp) * gamma_ratio(q, dq) / gamma_ratio(p + q, dp + dq);
}

Rat sigma_cached(std::vector<int> alpha) {
  thread_local std::map<std::vector<int>, Rat> cache;
  std::sort(alpha.begin(), alpha.end());
  auto it = cache.find(alpha);
  if (it == cache.end())
    it = cache.emplace(alpha, sphere_moment(alpha, static_cast<int>(alpha.size()))).first;
  return it->second;
}

void require(bool ok, const char* msg) {
  if (!ok) throw moment_error(msg);
}

// Moment divided by the spherical factor sigma(alpha): depends on alpha only
// through a2s = |alpha| + 2s (even by construction).
Rat ratio_part(const DomainSpec& dom, long a2s, int j2, const WeightShift& shift) {
  const int d = dom.d;
  switch (dom.kind) {
    case DomainKind::Ball: {
      require(j2 == 0, "ball moments take no t power");
      require(shift.dgamma == 0, "ball weight has no (1-t) factor");
      require(a2s + d > 0, "moment not integrable: |x| exponent too negative");
      require(Rat(2) * dom.mu + Rat(2 * shift.dmu + 1) > Rat(0),
              "moment not integrable: shifted mu out of range");
      return beta_ratio(Rat(d, 2), a2s / 2, dom.mu + Rat(1, 2), shift.dmu);
    }
    case DomainKind::SolidBounded:
    case DomainKind::SolidUnbounded: {
      require(j2 % 2 == 0, "fractional Gamma shifts do not match: non-rational moment");
      const long dt = j2 / 2 + a2s / 2 + shift.dmu;
      const Rat q = Rat(d, 2) + dom.mu + Rat(1, 2);
      require(a2s + d > 0, "moment not integrable: |x| exponent too negative");
      require(Rat(2) * dom.mu + Rat(2 * shift.dmu + 1) > Rat(0),
              "moment not integrable: shifted mu out of range");
      require(q + Rat(dt) > Rat(0), "moment not integrable: t exponent too negative");
      const Rat ball_factor = beta_ratio(Rat(d, 2), a2s / 2, dom.mu + Rat(1, 2), shift.dmu);
      if (dom.kind == DomainKind::SolidBounded) {
        require(dom.gamma + Rat(shift.dgamma + 1) > Rat(0),
                "moment not integrable: shifted gamma out of range");
        return beta_ratio(q, dt, dom.gamma + Rat(1), shift.dgamma) * ball_factor;
      }
      require(shift.dgamma == 0, "unbounded weight has no (1-t) factor");
      return gamma_ratio(q, dt) * ball_factor;
    }
    case DomainKind::SurfaceBounded:
    case DomainKind::SurfaceUnbounded: {
      require(shift.dmu == 0, "surface weight has no mu factor");
      return surface_tratio(dom, HalfExp{static_cast<int>(j2 + a2s)}, shift.dgamma);
    }
  }
  throw std::logic_error("ratio_part: bad kind");
}

struct RatioCache {
  bool init = false;
  DomainSpec dom;
  std::map<std::array<long, 5>, Rat> val;

  const Rat& get(const DomainSpec& d, long a2s, int j2, const WeightShift& sh) {
    if (!init || !(dom == d)) {
      dom = d;
      init = true;
      val.clear();
    }
    const std::array<long, 5> key{a2s, j2, sh.dgamma, sh.dmu, sh.s};
    auto it = val.find(key);
    if (it == val.end()) it = val.emplace(key, ratio_part(d, a2s, j2, sh)).first;
    return it->second;
  }
};

thread_local RatioCache ratio_cache;

}  // namespace

void DomainSpec::validate() const {
  if (is_surface()) {
    if (d < 2) throw std::invalid_argument("surface domains need d >= 2");
  } else if (d < 1) {
    throw std::invalid_argument("domain needs d >= 1");
  }
  if (has_gamma() && !(gamma > Rat(-1))) throw std::invalid_argument("need gamma > -1");
  if (has_mu() && !(Rat(2) * mu + Rat(1) > Rat(0))) throw std::invalid_argument("need mu > -1/2");
}

std::string domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::Ball: return "ball";
    case DomainKind::SolidBounded: return "solid-bounded";
    case DomainKind::SolidUnbounded: return "solid-unbounded";
    case DomainKind::SurfaceBounded: return "surface-bounded";
    case DomainKind::SurfaceUnbounded: return "surface-unbounded";
  }
  return "?";
}

DomainKind domain_kind_from_name(const std::string& s) {
  if (s == "ball") return DomainKind::Ball;
  if (s == "solid-bounded") return DomainKind::SolidBounded;
  if (s == "solid-unbounded") return DomainKind::SolidUnbounded;
  if (s == "surface-bounded") return DomainKind::SurfaceBounded;
  if (s == "surface-unbounded") return DomainKind::SurfaceUnbounded;
  throw std::invalid_argument("unknown domain kind: " + s);
}

std::string DomainSpec::name() const {
  std::string s = domain_kind_name(kind) + " d=" + std::to_string(d);
  if (has_gamma()) s += " gamma=" + gamma.str();
  if (has_mu()) s += " mu=" + mu.str();
  return s;
}

Rat surface_tratio(const DomainSpec& dom, const HalfExp& e, int dgamma) {
  if (!dom.is_surface()) throw std::invalid_argument("surface_tratio: not a surface domain");
  require(e.is_integer(), "fractional Gamma shifts do not match: non-rational moment");
  const long k = e.j2 / 2;
  require(Rat(dom.d, 2) + Rat(k) > Rat(0), "moment not integrable: t exponent too negative");
  if (dom.kind == DomainKind::SurfaceBounded) {
    require(dom.gamma + Rat(dgamma + 1) > Rat(0),
            "moment not integrable: shifted gamma out of range");
    return beta_ratio(Rat(dom.d, 2), k, dom.gamma + Rat(1), dgamma);
  }
  require(dgamma == 0, "unbounded weight has no (1-t) factor");
  return gamma_ratio(Rat(dom.d, 2), k);
}

Rat moment(const DomainSpec& dom, const MomentKey& key) { return moment_shifted(dom, key, {}); }

Rat moment_shifted(const DomainSpec& dom, const MomentKey& key, const WeightShift& shift) {
  dom.validate();
  if (static_cast<int>(key.alpha.size()) != dom.d)
    throw std::invalid_argument("moment: alpha length != d");
  long a = 0;
  for (int e : key.alpha) {
    if (e < 0) throw std::invalid_argument("moment: negative x exponent");
    if (e % 2 != 0) return Rat(0);
    a += e;
  }
  return sigma_cached(key.alpha) * ratio_part(dom, a + 2 * shift.s, key.j2, shift);
}

Rat integral(const DomainSpec& dom, const GPoly& p, const WeightShift& shift) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("integral: use surface_inner for surfaces");
  if (p.dim() != dom.d) throw std::invalid_argument("integral: dimension mismatch");
  Rat s(0);
  for (const auto& [mono, c] : p.terms()) {
    bool odd = false;
    long a = 0;
    for (int e : mono.a) {
      if (e % 2 != 0) { odd = true; break; }
      a += e;
    }
    if (odd) continue;
    s += c * sigma_cached(mono.a) * ratio_cache.get(dom, a + 2 * shift.s, mono.j2, shift);
  }
  return s;
}

Rat inner(const DomainSpec& dom, const GPoly& p, const GPoly& q, const WeightShift& shift) {
  dom.validate();
  if (dom.is_surface()) throw std::invalid_argument("inner: use surface_inner for surfaces");
  if (p.dim() != dom.d || q.dim() != dom.d) throw std::invalid_argument("inner: dimension mismatch");
  const int d = dom.d;
  Rat s(0);
  std::vector<int> a(d);
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      bool odd = false;
      long tot = 0;
      for (int i = 0; i < d; ++i) {
        a[i] = mp.a[i] + mq.a[i];
        if (a[i] % 2 != 0) { odd = true; break; }
        tot += a[i];
      }
      if (odd) continue;
      s += cp * cq * sigma_cached(a) *
           ratio_cache.get(dom, tot + 2 * shift.s, mp.j2 + mq.j2, shift);
    }
  return s;
}

Rat norm2(const DomainSpec& dom, const GPoly& p) { return inner(dom, p, p, {}); }

}  // namespace parab
