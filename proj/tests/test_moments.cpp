#include "doctest.h"
#include "parab/bases.hpp"
#include "parab/harmonics.hpp"
#include "parab/moments.hpp"

using namespace parab;

namespace {

DomainSpec mk(DomainKind k, int d, Rat gamma = Rat(0), Rat mu = Rat(1, 2)) {
  DomainSpec dom;
  dom.kind = k;
  dom.d = d;
  dom.gamma = gamma;
  dom.mu = mu;
  return dom;
}

GPoly norm2_poly(int d) {
  GPoly r(d);
  for (int i = 0; i < d; ++i) r += GPoly::var(d, i) * GPoly::var(d, i);
  return r;
}

}  // namespace

TEST_CASE("normalization: total mass one") {
  for (const DomainSpec& dom :
       {mk(DomainKind::Ball, 2, Rat(0), Rat(3, 2)), mk(DomainKind::SolidBounded, 3, Rat(1, 2)),
        mk(DomainKind::SolidUnbounded, 1, Rat(0), Rat(5, 2)),
        mk(DomainKind::SurfaceBounded, 2, Rat(2)), mk(DomainKind::SurfaceUnbounded, 3)}) {
    MomentKey one{std::vector<int>(dom.d, 0), 0};
    CHECK(moment(dom, one) == Rat(1));
  }
}

TEST_CASE("hand-computed moments") {
  // bounded solid, d=1, gamma=0, mu=1/2: Lebesgue on x^2 < t < 1
  const DomainSpec sj = mk(DomainKind::SolidBounded, 1);
  CHECK(moment(sj, {{0}, 2}) == Rat(3, 5));     // mean of t
  CHECK(moment(sj, {{2}, 0}) == Rat(1, 5));     // mean of x^2
  CHECK(moment(sj, {{1}, 0}).is_zero());

  // unbounded solid, d=1, mu=1/2: weight e^{-t} on x^2 < t
  const DomainSpec sl = mk(DomainKind::SolidUnbounded, 1);
  CHECK(moment(sl, {{0}, 2}) == Rat(3, 2));     // Gamma(5/2)/Gamma(3/2)
  CHECK(moment(sl, {{2}, 0}) == Rat(1, 2));

  // ball d=3, mu=1/2: Lebesgue on the unit ball
  const DomainSpec ball = mk(DomainKind::Ball, 3);
  CHECK(moment(ball, {{2, 0, 0}, 0}) == Rat(1, 5));
  CHECK(moment(ball, {{4, 0, 0}, 0}) == Rat(3, 35));

  // bounded surface d=2, gamma=0: x on |x|^2 = t < 1
  const DomainSpec fj = mk(DomainKind::SurfaceBounded, 2);
  CHECK(moment(fj, {{0, 0}, 2}) == Rat(1, 2));
  CHECK(moment(fj, {{2, 0}, 0}) == Rat(1, 4));  // = (1/2) mean of t
}

TEST_CASE("gamma shift is multiplication by (1-t)") {
  const DomainSpec dom = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  for (MomentKey key : {MomentKey{{1, 1}, 0}, MomentKey{{2, 0}, 2}, MomentKey{{0, 0}, 4}}) {
    MomentKey up = key;
    up.j2 += 2;
    CHECK(moment_shifted(dom, key, {1, 0, 0}) == moment(dom, key) - moment(dom, up));
  }
  const DomainSpec sb = mk(DomainKind::SurfaceBounded, 2, Rat(2));
  for (MomentKey key : {MomentKey{{1, 1}, 0}, MomentKey{{2, 0}, 2}}) {
    MomentKey up = key;
    up.j2 += 2;
    CHECK(moment_shifted(sb, key, {1, 0, 0}) == moment(sb, key) - moment(sb, up));
  }
}

TEST_CASE("mu shift is multiplication by (t - |x|^2)") {
  for (const DomainSpec& dom :
       {mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)),
        mk(DomainKind::SolidUnbounded, 3, Rat(0), Rat(5, 2))}) {
    const GPoly p = GPoly::monomial(dom.d, std::vector<int>(dom.d, 1), 2, Rat(3));
    const GPoly tm = GPoly::tpow(dom.d, 2) - norm2_poly(dom.d);
    CHECK(integral(dom, p, {0, 1, 0}) == integral(dom, p * tm));
  }
  // on the ball t is 1: shift multiplies by (1 - |x|^2)
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(3, 2));
  const GPoly q = GPoly::monomial(2, {2, 2}, 0, Rat(1));
  const GPoly om = GPoly::constant(2, Rat(1)) - norm2_poly(2);
  CHECK(integral(ball, q, {0, 1, 0}) == integral(ball, q * om));
}

TEST_CASE("s shift cancels |x|^2 factors") {
  for (const DomainSpec& dom :
       {mk(DomainKind::Ball, 2, Rat(0), Rat(1)), mk(DomainKind::SolidBounded, 3, Rat(2), Rat(1)),
        mk(DomainKind::SolidUnbounded, 2)}) {
    const GPoly p = GPoly::monomial(dom.d, std::vector<int>(dom.d, 0), 0, Rat(1));
    CHECK(integral(dom, p * norm2_poly(dom.d), {0, 0, -1}) == integral(dom, p));
  }
  // surfaces: |x|^2 = t, so s acts as a t power
  const DomainSpec fb = mk(DomainKind::SurfaceUnbounded, 2);
  CHECK(moment_shifted(fb, {{2, 0}, 2}, {0, 0, -1}) == moment(fb, {{2, 0}, 0}));
}

TEST_CASE("moment errors") {
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  CHECK_THROWS_AS(moment(ball, {{0, 0}, 2}), moment_error);   // no t on the ball
  const DomainSpec fj = mk(DomainKind::SurfaceBounded, 2);
  CHECK_THROWS_AS(moment_shifted(fj, {{0, 0}, 0}, {0, 1, 0}), moment_error);  // mu on surface
  // non-integrable: |x|^{-2} at the apex needs |alpha| >= 1 when d = 2
  const DomainSpec sj = mk(DomainKind::SolidBounded, 2);
  CHECK_THROWS_AS(moment_shifted(sj, {{0, 0}, 0}, {0, 0, -1}), moment_error);
  // gamma + dgamma at -1 is non-integrable on the bounded solid
  CHECK_THROWS_AS(moment_shifted(sj, {{0, 0}, 0}, {-1, 0, 0}), moment_error);
  DomainSpec bad = sj;
  bad.d = 0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("inner is symmetric and positive") {
  const DomainSpec dom = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const GPoly f = random_element(dom, 3, 17);
  const GPoly g = random_element(dom, 3, 18);
  CHECK(inner(dom, f, g) == inner(dom, g, f));
  CHECK(norm2(dom, f).sign() > 0);
  CHECK(norm2(dom, f - f).is_zero());
  const Rat fg = inner(dom, f, g);
  CHECK((norm2(dom, f) * norm2(dom, g) - fg * fg).sign() >= 0);  // Cauchy-Schwarz
}

TEST_CASE("surface moments reduce to sphere x radial") {
  const DomainSpec fj = mk(DomainKind::SurfaceBounded, 3, Rat(1, 2));
  // int x^a = (sphere moment) * (radial moment of t^{|a|/2})
  const MomentKey key{{2, 2, 0}, 0};
  const Rat lhs = moment(fj, key);
  const Rat rhs = moment(fj, {{0, 0, 0}, 4});
  CHECK(lhs == sphere_moment({2, 2, 0}, 3) * rhs);
}
