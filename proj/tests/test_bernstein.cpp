#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "parab/bases.hpp"
#include "parab/bernstein.hpp"
#include "parab/operators.hpp"

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

DomainSpec domain_for(TheoremId th, int d) {
  return mk(theorem_domain(th), d, Rat(1, 2), Rat(1));
}

std::vector<std::string> labels(const std::vector<std::pair<std::string, Rat>>& terms) {
  std::vector<std::string> out;
  for (const auto& [name, v] : terms) out.push_back(name);
  return out;
}

Rat total(const std::vector<std::pair<std::string, Rat>>& terms) {
  Rat s(0);
  for (const auto& [name, v] : terms) s += v;
  return s;
}

}  // namespace

TEST_CASE("theorem name round trip and metadata") {
  CHECK(all_theorems().size() == 15);
  for (TheoremId th : all_theorems()) {
    CHECK(theorem_from_name(theorem_name(th)) == th);
    CHECK(is_surface_theorem(th) == (theorem_domain(th) == DomainKind::SurfaceBounded ||
                                     theorem_domain(th) == DomainKind::SurfaceUnbounded));
  }
  CHECK(theorem_name(TheoremId::Ball22) == "Ball22");
  CHECK(theorem_name(TheoremId::SolidJ_gradOnly) == "SolidJ_gradOnly");
  CHECK_THROWS_AS(theorem_from_name("Ball99"), std::invalid_argument);

  CHECK(theorem_domain(TheoremId::Ball23EvenOdd) == DomainKind::Ball);
  CHECK(theorem_domain(TheoremId::SolidJ35) == DomainKind::SolidBounded);
  CHECK(theorem_domain(TheoremId::SolidL310) == DomainKind::SolidUnbounded);
  CHECK(theorem_domain(TheoremId::SurfJ_T1only) == DomainKind::SurfaceBounded);
  CHECK(theorem_domain(TheoremId::SurfL48) == DomainKind::SurfaceUnbounded);

  const std::vector<TheoremId> d2 = {
      TheoremId::Ball22,   TheoremId::Ball23,   TheoremId::Ball23EvenOdd,
      TheoremId::SolidJ34, TheoremId::SolidJ35, TheoremId::SolidL39,
      TheoremId::SolidL310, TheoremId::SurfJ45, TheoremId::SurfL48};
  for (TheoremId th : all_theorems()) {
    const bool needs = std::find(d2.begin(), d2.end(), th) != d2.end();
    CHECK(theorem_needs_d2(th) == needs);
  }
}

TEST_CASE("sharp constants") {
  CHECK(bernstein_bound(TheoremId::Ball22, mk(DomainKind::Ball, 2, Rat(0), Rat(1)), 4) == Rat(28));
  CHECK(bernstein_bound(TheoremId::Ball23, mk(DomainKind::Ball, 3, Rat(0), Rat(5, 2)), 2) ==
        Rat(18));
  // Odd degree drops d-1 from the single-term ball variants.
  const DomainSpec b2 = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  CHECK(bernstein_bound(TheoremId::Ball22EvenOdd, b2, 4) == Rat(28));
  CHECK(bernstein_bound(TheoremId::Ball22EvenOdd, b2, 3) == Rat(17));
  CHECK(bernstein_bound(TheoremId::Ball23EvenOdd, b2, 3) == Rat(17));

  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  for (TheoremId th : {TheoremId::SolidJ34, TheoremId::SolidJ35, TheoremId::SolidJ_T1only,
                       TheoremId::SolidJ_gradOnly})
    CHECK(bernstein_bound(th, sj, 4) == Rat(28));
  CHECK(bernstein_bound(TheoremId::SolidL39, mk(DomainKind::SolidUnbounded, 2), 4) == Rat(4));
  CHECK(bernstein_bound(TheoremId::SurfJ45, mk(DomainKind::SurfaceBounded, 2, Rat(1, 2)), 4) ==
        Rat(22));
  CHECK(bernstein_bound(TheoremId::SurfL48, mk(DomainKind::SurfaceUnbounded, 2), 4) == Rat(4));
  CHECK_THROWS_AS(bernstein_bound(TheoremId::Ball22, b2, -1), std::invalid_argument);
}

TEST_CASE("functional term labels and nonnegativity") {
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  const GPoly f = random_element(ball, 3, 5);
  CHECK(labels(functional_terms(TheoremId::Ball22, f, ball, 3)) ==
        std::vector<std::string>{"gradient", "angular"});
  CHECK(labels(functional_terms(TheoremId::Ball22EvenOdd, f, ball, 3)) ==
        std::vector<std::string>{"gradient"});
  CHECK(labels(functional_terms(TheoremId::Ball23, f, ball, 3)) ==
        std::vector<std::string>{"radial", "angular"});

  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const GPoly g = random_element(sj, 3, 7);
  CHECK(labels(functional_terms(TheoremId::SolidJ34, g, sj, 3)) ==
        std::vector<std::string>{"T1", "T2", "T3"});
  CHECK(labels(functional_terms(TheoremId::SolidJ_T1only, g, sj, 3)) ==
        std::vector<std::string>{"T1"});
  CHECK(labels(functional_terms(TheoremId::SolidJ_gradOnly, g, sj, 3)) ==
        std::vector<std::string>{"T2"});

  const DomainSpec su = mk(DomainKind::SurfaceBounded, 2, Rat(1, 2));
  const SurfaceFun h = random_surface_element(su, 3, 9);
  CHECK(labels(functional_terms(TheoremId::SurfJ45, h, su, 3)) ==
        std::vector<std::string>{"T1", "T2"});
  CHECK(labels(functional_terms(TheoremId::SurfL_T1only, random_surface_element(
                                    mk(DomainKind::SurfaceUnbounded, 2), 3, 9),
                                mk(DomainKind::SurfaceUnbounded, 2), 3)) ==
        std::vector<std::string>{"T1"});

  // Every term is a squared norm.
  for (int seed = 1; seed <= 3; ++seed) {
    for (const auto& [name, v] :
         functional_terms(TheoremId::SolidJ35, random_element(sj, 4, seed), sj, 4))
      CHECK(v.sign() >= 0);
    for (const auto& [name, v] :
         functional_terms(TheoremId::Ball22, random_element(ball, 4, seed), ball, 4))
      CHECK(v.sign() >= 0);
  }
}

TEST_CASE("certificate internal consistency") {
  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const GPoly f = random_element(sj, 4, 11);
  const Certificate c = certify(TheoremId::SolidJ34, f, sj, 4);
  CHECK(c.n == 4);
  CHECK(c.theorem == TheoremId::SolidJ34);
  CHECK(c.dom == sj);
  CHECK(c.lhs == total(c.terms));
  CHECK(c.rhs == bernstein_bound(TheoremId::SolidJ34, sj, 4) * norm2(sj, f));
  CHECK(c.subject == f.str());
  CHECK(c.verdict != Verdict::Violation);

  const DomainSpec su = mk(DomainKind::SurfaceUnbounded, 3);
  const SurfaceFun g = random_surface_element(su, 3, 13);
  const Certificate cs = certify(TheoremId::SurfL48, g, su, 3);
  CHECK(cs.lhs == total(cs.terms));
  CHECK(cs.rhs == bernstein_bound(TheoremId::SurfL48, su, 3) * surface_norm2(su, g));
  CHECK(cs.subject == g.to_ambient().str());
  CHECK(cs.verdict != Verdict::Violation);
}

TEST_CASE("bilinear form is symmetric and bilinear") {
  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const GPoly f = random_element(sj, 3, 1);
  const GPoly g = random_element(sj, 3, 2);
  const GPoly h = random_element(sj, 3, 3);
  for (TheoremId th : {TheoremId::SolidJ34, TheoremId::SolidJ35, TheoremId::SolidJ_gradOnly}) {
    CHECK(functional_bilinear(th, f, g, sj) == functional_bilinear(th, g, f, sj));
    CHECK(functional_bilinear(th, f + h.scaled(Rat(2)), g, sj) ==
          functional_bilinear(th, f, g, sj) + Rat(2) * functional_bilinear(th, h, g, sj));
    CHECK(functional_bilinear(th, f, f, sj) == total(functional_terms(th, f, sj, 3)));
  }
  const DomainSpec su = mk(DomainKind::SurfaceBounded, 2, Rat(1, 2));
  const SurfaceFun a = random_surface_element(su, 3, 4);
  const SurfaceFun b = random_surface_element(su, 3, 5);
  CHECK(functional_bilinear(TheoremId::SurfJ45, a, b, su) ==
        functional_bilinear(TheoremId::SurfJ45, b, a, su));
  CHECK(functional_bilinear(TheoremId::SurfJ45, a, a, su) ==
        total(functional_terms(TheoremId::SurfJ45, a, su, 3)));
}

TEST_CASE("regrouped functionals have equal totals") {
  // The paired theorems split the same Dirichlet energy differently: the T1
  // terms agree, the gradient term dominates the Euler term, the plain angular
  // term is dominated by the 1/|x|^2 one, and the totals coincide.
  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const DomainSpec sl = mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(1));
  for (int seed = 1; seed <= 3; ++seed) {
    for (const auto& [a, b, dom] :
         {std::tuple{TheoremId::SolidJ34, TheoremId::SolidJ35, sj},
          std::tuple{TheoremId::SolidL39, TheoremId::SolidL310, sl}}) {
      const GPoly f = random_element(dom, 4, seed);
      const auto ta = functional_terms(a, f, dom, 4);
      const auto tb = functional_terms(b, f, dom, 4);
      CHECK(ta[0].second == tb[0].second);
      CHECK(ta[1].second >= tb[1].second);
      CHECK(ta[2].second <= tb[2].second);
      CHECK(total(ta) == total(tb));
    }
    const DomainSpec ball = mk(DomainKind::Ball, 3, Rat(0), Rat(3, 2));
    const GPoly f = random_element(ball, 4, seed);
    CHECK(total(functional_terms(TheoremId::Ball22, f, ball, 4)) ==
          total(functional_terms(TheoremId::Ball23, f, ball, 4)));
  }
}

TEST_CASE("full functionals diagonalize over the eigenbasis") {
  // For the Dirichlet-form theorems the functional at f = sum c_e e equals
  // sum c_e^2 lambda_e |e|^2, with e running over the orthogonal basis.
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  {
    const GPoly e1 = ball_basis(2, ball.mu, 1).elems[0];
    const GPoly e2 = ball_basis(2, ball.mu, 2).elems[1];
    const GPoly e3 = ball_basis(2, ball.mu, 3).elems[2];
    const GPoly f = e1.scaled(Rat(2)) + e2.scaled(Rat(-1, 3)) + e3;
    const Rat want = Rat(4) * eigenvalue(ball, 1, 0) * norm2(ball, e1) +
                     Rat(1, 9) * eigenvalue(ball, 2, 0) * norm2(ball, e2) +
                     eigenvalue(ball, 3, 0) * norm2(ball, e3);
    CHECK(functional_bilinear(TheoremId::Ball22, f, f, ball) == want);
    CHECK(functional_bilinear(TheoremId::Ball23, f, f, ball) == want);
  }
  for (const DomainSpec& dom : {mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)),
                                mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(1))}) {
    const GPoly e1 = solid_element(dom, 1, 1, {1, 0});
    const GPoly e2 = solid_element(dom, 2, 0, {0, 0});
    const GPoly e3 = solid_element(dom, 3, 2, {1, 1});
    const GPoly f = e1.scaled(Rat(2)) + e2.scaled(Rat(-1, 3)) + e3;
    const Rat want = Rat(4) * eigenvalue(dom, 1, 1) * norm2(dom, e1) +
                     Rat(1, 9) * eigenvalue(dom, 2, 0) * norm2(dom, e2) +
                     eigenvalue(dom, 3, 2) * norm2(dom, e3);
    const TheoremId th = dom.bounded() ? TheoremId::SolidJ34 : TheoremId::SolidL39;
    const TheoremId th2 = dom.bounded() ? TheoremId::SolidJ35 : TheoremId::SolidL310;
    CHECK(functional_bilinear(th, f, f, dom) == want);
    CHECK(functional_bilinear(th2, f, f, dom) == want);
  }
  for (const DomainSpec& dom : {mk(DomainKind::SurfaceBounded, 2, Rat(1, 2)),
                                mk(DomainKind::SurfaceUnbounded, 2)}) {
    SurfaceFun f = surface_element(dom, 1, 1, 0).scaled(Rat(2));
    f += surface_element(dom, 2, 0, 0).scaled(Rat(-1, 3));
    f += surface_element(dom, 3, 2, 1);
    const Rat want =
        Rat(4) * eigenvalue(dom, 1, 1) * surface_norm2(dom, surface_element(dom, 1, 1, 0)) +
        Rat(1, 9) * eigenvalue(dom, 2, 0) * surface_norm2(dom, surface_element(dom, 2, 0, 0)) +
        eigenvalue(dom, 3, 2) * surface_norm2(dom, surface_element(dom, 3, 2, 1));
    const TheoremId th = dom.bounded() ? TheoremId::SurfJ45 : TheoremId::SurfL48;
    CHECK(functional_bilinear(th, f, f, dom) == want);
  }
}

TEST_CASE("extremal elements and sharpness verdicts") {
  for (TheoremId th : all_theorems()) {
    const DomainSpec dom = domain_for(th, 2);
    for (int n : {2, 3}) {
      const Certificate c = sharpness_check(th, dom, n);
      CHECK(c.verdict == sharpness_expected(th, n));
      if (is_surface_theorem(th))
        CHECK(surface_extremal_element(th, dom, n).degree() == n);
      else
        CHECK(extremal_element(th, dom, n).max_grade() == n);
    }
  }
  CHECK(sharpness_expected(TheoremId::Ball23EvenOdd, 3) == Verdict::StrictlyBelow);
  CHECK(sharpness_expected(TheoremId::Ball23EvenOdd, 4) == Verdict::Equality);
  CHECK(sharpness_expected(TheoremId::Ball22EvenOdd, 3) == Verdict::Equality);
  CHECK(sharpness_expected(TheoremId::SolidJ_gradOnly, 2) == Verdict::StrictlyBelow);
  CHECK(sharpness_expected(TheoremId::SolidJ_gradOnly, 0) == Verdict::Equality);
}

TEST_CASE("strictness probes behave as recorded") {
  for (TheoremId th : all_theorems()) {
    const DomainSpec dom = domain_for(th, 2);
    for (const SharpnessCase& sc : sharpness_cases(th, dom, 3)) {
      const std::string ctx = theorem_name(th) + " case " + sc.label;
      INFO(ctx);
      CHECK(sc.cert.verdict == sc.expected);
    }
  }
}

TEST_CASE("request validation") {
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  const DomainSpec sj = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  const GPoly x = GPoly::var(2, 0);
  CHECK_THROWS_AS(certify(TheoremId::Ball22, x, sj, 2), std::invalid_argument);
  CHECK_THROWS_AS(certify(TheoremId::SolidJ34, GPoly::monomial(2, {3, 0}, 0, Rat(1)), sj, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(certify(TheoremId::Ball22, GPoly::tpow(2, 2), ball, 2), std::invalid_argument);
  CHECK_THROWS_AS(functional_terms(TheoremId::SurfJ45, x, ball, 2), std::invalid_argument);
  CHECK_THROWS_AS(extremal_element(TheoremId::SurfJ45, mk(DomainKind::SurfaceBounded, 2), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(surface_extremal_element(TheoremId::Ball22, ball, 2), std::invalid_argument);

  // Theorems with angular or 1/|x| content reject d = 1.
  DomainSpec sj1 = sj;
  sj1.d = 1;
  CHECK_THROWS_AS(certify(TheoremId::SolidJ34, GPoly::var(1, 0), sj1, 2), moment_error);
  CHECK_THROWS_AS(rayleigh_max(TheoremId::SolidJ34, sj1, 2), moment_error);
  CHECK_THROWS_AS(rayleigh_max(TheoremId::Ball22, sj, 2), std::invalid_argument);
}

TEST_CASE("rayleigh maximum matches the sharp constant on small spaces") {
  {
    const DomainSpec dom = mk(DomainKind::Ball, 1, Rat(0), Rat(1, 2));
    const RayleighResult r = rayleigh_max(TheoremId::Ball22EvenOdd, dom, 2);
    CHECK(r.dim == 3);
    CHECK(r.argmax.size() == 3);
    CHECK(std::abs(r.value - 6.0) <= 6.0 * 1e-8);
  }
  {
    const DomainSpec dom = mk(DomainKind::SolidUnbounded, 1, Rat(0), Rat(1));
    const RayleighResult r = rayleigh_max(TheoremId::SolidL_T1only, dom, 3);
    CHECK(r.dim == 10);
    CHECK(std::abs(r.value - 3.0) <= 3.0 * 1e-8);
  }
  {
    const DomainSpec dom = mk(DomainKind::SurfaceUnbounded, 2);
    const RayleighResult r = rayleigh_max(TheoremId::SurfL_T1only, dom, 2);
    CHECK(r.dim == 9);
    CHECK(std::abs(r.value - 2.0) <= 2.0 * 1e-8);
  }
}
