// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "parab/bases.hpp"
#include "parab/bernstein.hpp"
#include "parab/operators.hpp"
#include "parab/quadcheck.hpp"
#include "parab/suites.hpp"

using namespace parab;

namespace {

const std::vector<Rat> kGammas = {Rat(0), Rat(1, 2), Rat(2)};
const std::vector<Rat> kMus = {Rat(1, 2), Rat(1), Rat(5, 2)};

DomainSpec mk(DomainKind k, int d, Rat gamma = Rat(0), Rat mu = Rat(1, 2)) {
  DomainSpec dom;
  dom.kind = k;
  dom.d = d;
  dom.gamma = gamma;
  dom.mu = mu;
  return dom;
}

// Every domain of the given kind on the parameter grid, at the given dimensions.
std::vector<DomainSpec> param_grid(DomainKind k, const std::vector<int>& ds) {
  std::vector<DomainSpec> out;
  DomainSpec probe = mk(k, ds.front());
  const std::vector<Rat> gs = probe.has_gamma() ? kGammas : std::vector<Rat>{Rat(0)};
  const std::vector<Rat> ms = probe.has_mu() ? kMus : std::vector<Rat>{Rat(1, 2)};
  for (int d : ds)
    for (const Rat& g : gs)
      for (const Rat& m : ms) out.push_back(mk(k, d, g, m));
  return out;
}

std::vector<DomainSpec> full_grid() {
  std::vector<DomainSpec> out;
  for (const DomainKind k : {DomainKind::Ball, DomainKind::SolidBounded,
                             DomainKind::SolidUnbounded}) {
    const auto v = param_grid(k, {1, 2, 3});
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const DomainKind k : {DomainKind::SurfaceBounded, DomainKind::SurfaceUnbounded}) {
    const auto v = param_grid(k, {2, 3});
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Representative domain for a theorem at dimension d (Jacobi gamma 1/2, mu 1).
DomainSpec rep_domain(TheoremId th, int d) {
  return mk(theorem_domain(th), d, Rat(1, 2), Rat(1));
}

bool criterion_eigen(std::string& info) {
  long rows = 0;
  bool ok = true;
  for (const DomainSpec& dom : full_grid()) {
    const Json rep = eigen_suite(dom, 8);
    ok = ok && report_pass(rep);
    rows += rep["results"].size();
  }
  info = std::to_string(rows) + " elements across " + std::to_string(full_grid().size()) +
         " domains";
  return ok;
}

bool criterion_gram(std::string& info) {
  long rows = 0;
  bool ok = true;
  for (const DomainSpec& dom : full_grid()) {
    const Json rep = orthogonality_suite(dom, 5);
    ok = ok && report_pass(rep);
    rows += rep["results"].size();
  }
  info = std::to_string(rows) + " basis elements, dims matched closed forms";
  return ok;
}

bool criterion_structure(std::string& info) {
  const std::vector<DomainSpec> doms = {
      mk(DomainKind::Ball, 3, Rat(0), Rat(1)),
      mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)),
      mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(5, 2)),
      mk(DomainKind::SurfaceBounded, 2, Rat(2)),
      mk(DomainKind::SurfaceUnbounded, 2)};
  bool ok = true;
  for (const DomainSpec& dom : doms) {
    ok = ok && report_pass(decomposition_suite(dom, 4, 100, 2026));
    ok = ok && report_pass(selfadjoint_suite(dom, 4, 100, 2026));
  }
  info = "decomposition + self-adjointness + integration by parts, 100 trials x " +
         std::to_string(doms.size()) + " domains";
  return ok;
}

bool criterion_certificates(std::string& info) {
  bool ok = true;
  long certs = 0;

  // 100 random certificates per theorem; d = 2 everywhere, d = 1 as well for
  // the variants that allow it.
  for (TheoremId th : all_theorems()) {
    std::vector<int> ds = {2};
    if (!theorem_needs_d2(th) && !is_surface_theorem(th)) ds.push_back(1);
    for (int d : ds) {
      const DomainSpec dom = rep_domain(th, d);
      ok = ok && report_pass(bernstein_suite(th, dom, 6, 100, 1000 + certs));
      certs += 100;
    }
  }

  // Parity corollaries of the single-term ball bounds: pure even and pure odd
  // random polynomials against the parity-matched constant.
  const DomainSpec ball = mk(DomainKind::Ball, 2, Rat(0), Rat(1));
  for (TheoremId th : {TheoremId::Ball22EvenOdd, TheoremId::Ball23EvenOdd})
    for (int i = 0; i < 100; ++i) {
      const GPoly f = random_element(ball, 6, 500 + i);
      GPoly even(2), odd(2);
      for (const auto& [mono, c] : f.terms()) {
        const GPoly term = GPoly::monomial(2, mono.a, mono.j2, c);
        (mono.degx() % 2 == 0 ? even : odd) += term;
      }
      ok = ok && certify(th, even, ball, 6).verdict != Verdict::Violation;
      if (!odd.is_zero()) ok = ok && certify(th, odd, ball, 5).verdict != Verdict::Violation;
      certs += 2;
    }

  // Exact equality at every stated extremal: the m = 0 elements on solids and
  // surfaces, the full eigenspace sums and parity extremals on the ball, and
  // each individual top-degree ball element for the two-term ball bounds.
  long equalities = 0;
  try {
    for (TheoremId th : all_theorems())
      for (int n = 0; n <= 6; ++n) {
        sharpness_check(th, rep_domain(th, 2), n);
        ++equalities;
      }
    for (TheoremId th : {TheoremId::Ball22, TheoremId::Ball23})
      for (int n = 0; n <= 6; ++n)
        for (const GPoly& e : ball_basis(2, ball.mu, n).elems) {
          if (certify(th, e, ball, n).verdict != Verdict::Equality) ok = false;
          ++equalities;
        }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  extremal check: %s\n", e.what());
    ok = false;
  }

  info = std::to_string(certs) + " random certificates, " + std::to_string(equalities) +
         " extremal equalities";
  return ok;
}

bool criterion_rayleigh(std::string& info) {
  bool ok = true;
  long pencils = 0;
  double worst = 0;
  auto check = [&](TheoremId th, const DomainSpec& dom, int n) {
    const double bound = bernstein_bound(th, dom, n).to_double();
    const RayleighResult r = rayleigh_max(th, dom, n);
    const double rel = std::abs(r.value - bound) / bound;
    worst = std::max(worst, rel);
    ok = ok && rel <= 1e-8;
    ++pencils;
  };

  const std::vector<TheoremId> sharp = {
      TheoremId::Ball22,        TheoremId::Ball23,        TheoremId::SolidJ34,
      TheoremId::SolidJ35,      TheoremId::SolidJ_T1only, TheoremId::SolidL39,
      TheoremId::SolidL310,     TheoremId::SolidL_T1only, TheoremId::SurfJ45,
      TheoremId::SurfJ_T1only,  TheoremId::SurfL48,       TheoremId::SurfL_T1only};
  for (TheoremId th : sharp) {
    for (const DomainSpec& dom : param_grid(theorem_domain(th), {2}))
      for (int n = 1; n <= 5; ++n) check(th, dom, n);
    check(th, rep_domain(th, 3), 4);  // dimension-3 spot check
  }

  // Gradient-only ball bound, including the odd-degree constant lambda - d + 1.
  for (const DomainSpec& dom : param_grid(DomainKind::Ball, {1, 2}))
    for (int n = 1; n <= 5; ++n) check(TheoremId::Ball22EvenOdd, dom, n);
  check(TheoremId::Ball22EvenOdd, mk(DomainKind::Ball, 3, Rat(0), Rat(1)), 3);

  // Radial-only ball bound is sharp at even degree only.
  for (const DomainSpec& dom : param_grid(DomainKind::Ball, {2}))
    for (int n : {2, 4}) check(TheoremId::Ball23EvenOdd, dom, n);

  char buf[128];
  std::snprintf(buf, sizeof buf, "%ld pencils, worst relative gap %.2e", pencils, worst);
  info = buf;
  return ok;
}

bool criterion_top_block(std::string& info) {
  bool ok = true;
  for (const Rat& g : kGammas)
    for (const Rat& m : kMus)
      for (int d : {1, 2, 3}) {
        const DomainSpec dom = mk(DomainKind::SolidBounded, d, g, m);
        for (int n = 0; n <= 12; ++n)
          ok = ok && eigenvalue(dom, n, n) == (g + Rat(1)) * Rat(n) / Rat(2);
      }

  // The first-order form without the drift term is not the eigen operator:
  // its residual on a t-dependent eigenfunction is nonzero.
  const DomainSpec dom = mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(1));
  const GPoly f = solid_element(dom, 3, 1, {1, 0});
  const GPoly resid = apply_op(dom, f, true) + f.scaled(eigenvalue(dom, 3, 1));
  ok = ok && !resid.is_zero();

  info = "top-block eigenvalues equal (gamma+1)n/2 through n=12; literal form residual has " +
         std::to_string(resid.term_count()) + " terms";
  return ok;
}

bool criterion_crosscheck(std::string& info) {
  const std::vector<DomainSpec> doms = {
      mk(DomainKind::Ball, 3, Rat(0), Rat(1)),
      mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1)),
      mk(DomainKind::SolidUnbounded, 2, Rat(0), Rat(5, 2)),
      mk(DomainKind::SurfaceBounded, 2, Rat(2)),
      mk(DomainKind::SurfaceUnbounded, 2)};
  bool ok = true;
  double worst = 0;
  for (const DomainSpec& dom : doms) {
    const CrosscheckReport rep = crosscheck(dom, 100, 2026);
    ok = ok && rep.pass && rep.moment_trials == 100 && rep.cert_trials == 20;
    worst = std::max(worst, std::max(rep.max_rel_moment, rep.max_rel_certificate));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "100 moments + 20 certificates per domain, worst rel dev %.2e",
                worst);
  info = buf;
  return ok;
}

bool criterion_grad_only_report(std::string& info) {
  const DomainSpec dom = mk(DomainKind::SolidBounded, 2, Rat(1, 2), Rat(1));
  std::string lines = "sup(T2)/bound for n=1..5:";
  for (int n = 1; n <= 5; ++n) {
    const RayleighResult r = rayleigh_max(TheoremId::SolidJ_gradOnly, dom, n);
    const double bound = bernstein_bound(TheoremId::SolidJ_gradOnly, dom, n).to_double();
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.12g", r.value / bound);
    lines += buf;
  }
  info = lines;
  return true;  // report only; sharpness of the gradient-only bound stays open
}

struct Criterion {
  const char* label;
  double budget_s;
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"zero eigen residuals, all families, n <= 8", 120, criterion_eigen},
      {"diagonal Gram matrices and dimension counts, n <= 5", 120, criterion_gram},
      {"operator decomposition and self-adjointness", 180, criterion_structure},
      {"certificates: no violations, extremal equalities", 600, criterion_certificates},
      {"rayleigh maxima reproduce the sharp constants", 300, criterion_rayleigh},
      {"top-block eigenvalues and literal-form residual", 10, criterion_top_block},
      {"exact engine vs quadrature crosscheck", 120, criterion_crosscheck},
      {"gradient-only ratio report", 0, criterion_grad_only_report},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_s > 0 && secs > criteria[i].budget_s) {
      ok = false;
      detail += " [over budget]";
    }
    if (!ok) ++failures;
    std::printf("%s  %zu. %s (%.1fs) -- %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].label,
                secs, detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
