#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "parab/parallel.hpp"
#include "parab/suites.hpp"

using namespace parab;

namespace {

struct Opts {
  std::string domain;
  int d = 2;
  std::string gamma = "0";
  std::string mu = "1/2";
  int nmax = 4;
  int n = 4;
  int degree = 4;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string theorem;
  std::string out;
  std::string format = "json";
  bool literal = false;
  int threads = 0;
};

DomainKind alias_kind(const std::string& s) {
  if (s == "solid-jacobi") return DomainKind::SolidBounded;
  if (s == "solid-laguerre") return DomainKind::SolidUnbounded;
  if (s == "surface-jacobi") return DomainKind::SurfaceBounded;
  if (s == "surface-laguerre") return DomainKind::SurfaceUnbounded;
  return domain_kind_from_name(s);
}

DomainSpec make_domain(const Opts& o, bool kind_from_theorem = false) {
  DomainSpec dom;
  if (!o.domain.empty())
    dom.kind = alias_kind(o.domain);
  else if (kind_from_theorem)
    dom.kind = theorem_domain(theorem_from_name(o.theorem));
  else
    throw std::invalid_argument("--domain is required");
  dom.d = o.d;
  if (dom.has_gamma()) dom.gamma = Rat::parse(o.gamma);
  if (dom.has_mu()) dom.mu = Rat::parse(o.mu);
  dom.validate();
  return dom;
}

void add_common(CLI::App* c, Opts& o) {
  c->add_option("--domain", o.domain,
                "ball | solid-jacobi | solid-laguerre | surface-jacobi | surface-laguerre");
  c->add_option("--d", o.d, "x-space dimension");
  c->add_option("--gamma", o.gamma, "rational, p/q or integer");
  c->add_option("--mu", o.mu, "rational, p/q or integer");
  c->add_option("--out", o.out, "write the report to a file instead of stdout");
  c->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c->add_option("--threads", o.threads, "worker count, 0 = automatic");
}

int emit(const Json& report, const Opts& o) {
  const std::string text =
      o.format == "csv" ? to_csv(report) : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
  }
  if (report_pass(report)) return 0;
  const Json& p = report.at("params");
  std::cerr << "FAIL: " << report.at("command").get<std::string>();
  if (p.contains("theorem")) std::cerr << " " << p.at("theorem").get<std::string>();
  if (p.contains("domain")) std::cerr << " on " << p.at("domain").at("kind").get<std::string>();
  std::cerr << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of orthogonal bases, spectral operators, and Bernstein "
               "inequalities on parabolic domains"};
  app.require_subcommand(1);
  Opts o;
  Json report;

  auto* verify = app.add_subcommand("verify", "symbolic verification suites");
  verify->require_subcommand(1);

  auto* eigen = verify->add_subcommand("eigen", "operator residuals on every basis element");
  add_common(eigen, o);
  eigen->add_option("--nmax", o.nmax, "max degree");
  eigen->add_flag("--operator-literal", o.literal,
                  "drop the drift term of the unbounded-solid operator");
  eigen->callback([&] {
    set_worker_count(o.threads);
    report = eigen_suite(make_domain(o), o.nmax, o.literal);
  });

  auto* ortho = verify->add_subcommand("orthogonality", "exact Gram matrix of the basis");
  add_common(ortho, o);
  ortho->add_option("--nmax", o.nmax, "max degree");
  ortho->callback([&] {
    set_worker_count(o.threads);
    report = orthogonality_suite(make_domain(o), o.nmax);
  });

  auto* decomp = verify->add_subcommand(
      "decomposition", "operator equals its parabolic/angular decomposition");
  add_common(decomp, o);
  decomp->add_option("--degree", o.degree, "degree of the random elements");
  decomp->add_option("--trials", o.trials);
  decomp->add_option("--seed", o.seed);
  decomp->callback([&] {
    set_worker_count(o.threads);
    report = decomposition_suite(make_domain(o), o.degree, o.trials, o.seed);
  });

  auto* selfadj = verify->add_subcommand("selfadjoint",
                                         "operator symmetry and integration by parts");
  add_common(selfadj, o);
  selfadj->add_option("--degree", o.degree, "degree of the random elements");
  selfadj->add_option("--trials", o.trials);
  selfadj->add_option("--seed", o.seed);
  selfadj->callback([&] {
    set_worker_count(o.threads);
    report = selfadjoint_suite(make_domain(o), o.degree, o.trials, o.seed);
  });

  auto* bern = verify->add_subcommand("bernstein", "certificates for random elements");
  add_common(bern, o);
  bern->add_option("--theorem", o.theorem, "theorem id, e.g. SolidJ34")->required();
  bern->add_option("--n", o.n, "degree bound of the inequality");
  bern->add_option("--trials", o.trials);
  bern->add_option("--seed", o.seed);
  bern->callback([&] {
    set_worker_count(o.threads);
    report = bernstein_suite(theorem_from_name(o.theorem), make_domain(o, true), o.n, o.trials,
                             o.seed);
  });

  auto* sharp = app.add_subcommand("sharpness", "extremal certificates and strictness probes");
  add_common(sharp, o);
  sharp->add_option("--theorem", o.theorem)->required();
  sharp->add_option("--n", o.n);
  sharp->callback([&] {
    set_worker_count(o.threads);
    report = sharpness_suite(theorem_from_name(o.theorem), make_domain(o, true), o.n);
  });

  auto* ray = app.add_subcommand("rayleigh", "numeric supremum of functional/|f|^2");
  add_common(ray, o);
  ray->add_option("--theorem", o.theorem)->required();
  ray->add_option("--n", o.n);
  ray->callback([&] {
    set_worker_count(o.threads);
    report = rayleigh_suite(theorem_from_name(o.theorem), make_domain(o, true), o.n);
  });

  auto* cross = app.add_subcommand("crosscheck", "exact moments vs quadrature");
  add_common(cross, o);
  cross->add_option("--trials", o.trials);
  cross->add_option("--seed", o.seed);
  cross->callback([&] {
    set_worker_count(o.threads);
    report = crosscheck_suite(make_domain(o), o.trials, o.seed);
  });

  auto* dump = app.add_subcommand("dump-basis", "basis elements of one degree as text");
  add_common(dump, o);
  dump->add_option("--n", o.n, "degree");
  dump->callback([&] { report = dump_basis(make_domain(o), o.n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return emit(report, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
