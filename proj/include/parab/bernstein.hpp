#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parab/gpoly.hpp"
#include "parab/moments.hpp"
#include "parab/surface_fun.hpp"

namespace parab {

// Certified L2 Bernstein-type inequalities. Each id fixes a domain kind, a
// list of squared-norm terms, and a sharp constant:
//   Ball22        gradient + angular terms       <= n(n+2mu+d-1)
//   Ball22EvenOdd gradient term only             <= bound, -d+1 for odd n
//   Ball23        radial/|x| + angular/|x| terms <= n(n+2mu+d-1)
//   Ball23EvenOdd radial/|x| term only           <= bound, -d+1 for odd n
//   SolidJ34      T1 + T2 + T3 (bounded solid)   <= n(n+gamma+mu+(d+1)/2)
//   SolidJ35      T1 + Euler/|x| + angular/|x|   <= same
//   SolidJ_T1only T1 alone                       <= same
//   SolidJ_gradOnly T2 alone                     <= same (sharpness open)
//   SolidL39      T1 + T2 + T3 (unbounded solid) <= n
//   SolidL310     T1 + Euler/|x| + angular/|x|   <= n
//   SolidL_T1only T1 alone                       <= n
//   SurfJ45       T1 + T2 (bounded surface)      <= n(n+gamma+d/2)
//   SurfJ_T1only  T1 alone                       <= same
//   SurfL48       T1 + T2 (unbounded surface)    <= n
//   SurfL_T1only  T1 alone                       <= n
enum class TheoremId {
  Ball22,
  Ball22EvenOdd,
  Ball23,
  Ball23EvenOdd,
  SolidJ34,
  SolidJ35,
  SolidJ_T1only,
  SolidJ_gradOnly,
  SolidL39,
  SolidL310,
  SolidL_T1only,
  SurfJ45,
  SurfJ_T1only,
  SurfL48,
  SurfL_T1only,
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId th);
TheoremId theorem_from_name(const std::string& s);
DomainKind theorem_domain(TheoremId th);
bool is_surface_theorem(TheoremId th);
// Theorems whose statement involves angular derivatives or a 1/|x| factor
// require d >= 2.
bool theorem_needs_d2(TheoremId th);

// Sharp constant; parity-dependent for the even/odd variants.
Rat bernstein_bound(TheoremId th, const DomainSpec& dom, int n);

enum class Verdict { StrictlyBelow, Equality, Violation };
std::string verdict_name(Verdict v);

struct Certificate {
  TheoremId theorem;
  DomainSpec dom;
  int n = 0;
  std::vector<std::pair<std::string, Rat>> terms;
  Rat lhs;      // sum of terms
  Rat rhs;      // bound * |f|^2
  Verdict verdict = Verdict::StrictlyBelow;
  std::string subject;
};

// The named squared-norm terms of the functional at f, each exact.
std::vector<std::pair<std::string, Rat>> functional_terms(TheoremId th, const GPoly& f,
                                                          const DomainSpec& dom, int n);
std::vector<std::pair<std::string, Rat>> functional_terms(TheoremId th, const SurfaceFun& f,
                                                          const DomainSpec& dom, int n);

// Symmetric bilinear form underlying the functional (used by rayleigh_max and
// the Parseval cross-checks); functional_terms(f) sums to bilinear(f, f).
Rat functional_bilinear(TheoremId th, const GPoly& f, const GPoly& g, const DomainSpec& dom);
Rat functional_bilinear(TheoremId th, const SurfaceFun& f, const SurfaceFun& g,
                        const DomainSpec& dom);

Certificate certify(TheoremId th, const GPoly& f, const DomainSpec& dom, int n);
Certificate certify(TheoremId th, const SurfaceFun& f, const DomainSpec& dom, int n);

// The element the inequality is sharp at (equality candidate for the variants
// whose sharpness is open or refuted).
GPoly extremal_element(TheoremId th, const DomainSpec& dom, int n);
SurfaceFun surface_extremal_element(TheoremId th, const DomainSpec& dom, int n);

// Verdict the extremal certificate must produce: Equality everywhere except
// the odd-degree radial-only ball variant (provably strict) and the solid
// gradient-only variant for n >= 1 (strict on every tested family).
Verdict sharpness_expected(TheoremId th, int n);

// Certifies the extremal and checks the verdict against sharpness_expected;
// throws on mismatch except for SolidJ_gradOnly, which is recorded only.
Certificate sharpness_check(TheoremId th, const DomainSpec& dom, int n);

struct SharpnessCase {
  std::string label;
  Certificate cert;
  Verdict expected = Verdict::Equality;
};

// Extremal certificates plus strictness probes (perturbed extremals and
// top-block elements) with their expected verdicts.
std::vector<SharpnessCase> sharpness_cases(TheoremId th, const DomainSpec& dom, int n);

struct RayleighResult {
  double value = 0;
  std::vector<double> argmax;
  int dim = 0;
};

// Supremum of (functional) / |f|^2 over polynomials of degree <= n: exact
// Gram matrices over a degree-graded basis, exact congruence reduction of the
// pencil, then an iterative float eigensolver.
RayleighResult rayleigh_max(TheoremId th, const DomainSpec& dom, int n);

}  // namespace parab
