#include "doctest.h"
#include "parab/bases.hpp"
#include "parab/harmonics.hpp"
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

}  // namespace

TEST_CASE("eigenvalue closed forms") {
  CHECK(eigenvalue(mk(DomainKind::Ball, 3, Rat(0), Rat(5, 2)), 2, 0) == Rat(18));
  CHECK(eigenvalue(mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)), 4, 2) == Rat(31, 2));
  CHECK(eigenvalue(mk(DomainKind::SolidUnbounded, 3, Rat(0), Rat(1)), 5, 3) == Rat(7, 2));
  CHECK(eigenvalue(mk(DomainKind::SurfaceBounded, 2, Rat(1, 2)), 4, 2) == Rat(25, 2));
  CHECK(eigenvalue(mk(DomainKind::SurfaceUnbounded, 3), 6, 4) == Rat(4));
  CHECK(eigenvalue(mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)), 0, 0).is_zero());
  CHECK_THROWS(eigenvalue(mk(DomainKind::SolidBounded, 2), 2, 3));  // m > n
  CHECK_THROWS(eigenvalue(mk(DomainKind::SolidBounded, 2), -1, 0));
}

TEST_CASE("top-block solid Jacobi eigenvalue is (gamma+1)n/2") {
  for (const Rat& g : {Rat(0), Rat(1, 2), Rat(2)})
    for (int n = 0; n <= 12; ++n)
      CHECK(eigenvalue(mk(DomainKind::SolidBounded, 2, g, Rat(1)), n, n) ==
            (g + Rat(1)) * Rat(n) / Rat(2));
}

TEST_CASE("parabolic derivative") {
  // D = d/dt + (1/2t) <x, grad>; D(x1^2 t) = x1^2 + x1^2 = 2 x1^2
  const GPoly f = GPoly::monomial(2, {2, 0}, 2, Rat(1));
  CHECK(parabolic_diff(f) == GPoly::monomial(2, {2, 0}, 0, Rat(2)));
  // D annihilates functions of x/sqrt(t): D(t^{-m/2} Y(x)) = 0 for homogeneous Y
  for (const GPoly& y : harmonic_basis(2, 2).elems)
    CHECK(parabolic_diff(y.mul_tpow(-2)).is_zero());
}

TEST_CASE("operators are linear") {
  const DomainSpec dom = mk(DomainKind::SolidBounded, 2, Rat(2), Rat(1));
  const GPoly f = random_element(dom, 4, 1), g = random_element(dom, 4, 2);
  CHECK(apply_op(dom, f + g) == apply_op(dom, f) + apply_op(dom, g));
  CHECK(apply_op(dom, f.scaled(Rat(-5, 3))) == apply_op(dom, f).scaled(Rat(-5, 3)));
}

TEST_CASE("eigen equations on sample elements") {
  for (const DomainSpec& dom :
       {mk(DomainKind::Ball, 2, Rat(0), Rat(5, 2)), mk(DomainKind::SolidBounded, 3, Rat(1, 2)),
        mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(1))}) {
    for (int n = 0; n <= 3; ++n) {
      if (dom.kind == DomainKind::Ball) {
        for (const GPoly& e : ball_basis(dom.d, dom.mu, n).elems)
          CHECK(eigen_residual(dom, e, n, 0).is_zero());
      } else {
        for (int m = 0; m <= n; ++m)
          for (const auto& k : compositions(dom.d, m))
            CHECK(eigen_residual(dom, solid_element(dom, n, m, k), n, m).is_zero());
      }
    }
  }
  for (const DomainSpec& dom :
       {mk(DomainKind::SurfaceBounded, 3, Rat(2)), mk(DomainKind::SurfaceUnbounded, 2)})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= n; ++m)
        for (int l = 0; l < harmonic_dim(dom.d, m); ++l)
          CHECK(eigen_residual(dom, surface_element(dom, n, m, l), n, m).is_zero());
}

TEST_CASE("decomposed assembly matches the expanded operator") {
  for (const DomainSpec& dom :
       {mk(DomainKind::Ball, 3, Rat(0), Rat(1)), mk(DomainKind::SolidBounded, 2, Rat(1, 2)),
        mk(DomainKind::SolidUnbounded, 1, Rat(0), Rat(5, 2))}) {
    const GPoly f = random_element(dom, 5, 11);
    CHECK((apply_op(dom, f) - apply_op_decomposed(dom, f)).is_zero());
  }
  for (const DomainSpec& dom :
       {mk(DomainKind::SurfaceBounded, 2, Rat(1, 2)), mk(DomainKind::SurfaceUnbounded, 3)}) {
    const SurfaceFun f = random_surface_element(dom, 4, 11);
    CHECK(apply_op(dom, f) == apply_op_decomposed(dom, f));
  }
}

TEST_CASE("literal unbounded-solid operator drops the drift term") {
  const DomainSpec dom = mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(1));
  const GPoly f = random_element(dom, 4, 23);
  const GPoly ft = f.diff_t();
  // full minus literal = (mu + (d+1)/2 - t) d/dt
  const GPoly want = ft.scaled(dom.mu + Rat(dom.d + 1, 2)) - ft.mul_tpow(2);
  CHECK(apply_op(dom, f) - apply_op(dom, f, true) == want);
  // and the literal form breaks the eigen equation on a t-dependent element
  const GPoly e = solid_element(dom, 2, 0, {0, 0});
  const GPoly r = apply_op(dom, e, true) + e.scaled(eigenvalue(dom, 2, 0));
  CHECK(!r.is_zero());
}

TEST_CASE("surface operator eigen residual is blockwise") {
  const DomainSpec dom = mk(DomainKind::SurfaceBounded, 2, Rat(1, 2));
  const SurfaceFun f = surface_element(dom, 3, 1, 0);
  const SurfaceFun g = apply_op(dom, f);
  REQUIRE(g.parts().size() == 1);
  CHECK(g.parts().begin()->first == std::pair<int, int>{1, 0});
  CHECK(g == f.scaled(-eigenvalue(dom, 3, 1)));
}
