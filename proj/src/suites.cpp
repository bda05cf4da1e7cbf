#include "parab/suites.hpp"

#include <cstdio>
#include <stdexcept>

#include "parab/bases.hpp"
#include "parab/harmonics.hpp"
#include "parab/operators.hpp"
#include "parab/parallel.hpp"
#include "parab/quadcheck.hpp"

namespace parab {

namespace {

constexpr const char* kVersion = "1.0.0";

Json envelope(const std::string& command, Json params, Json results, bool pass) {
  Json r;
  r["command"] = command;
  r["params"] = std::move(params);
  r["results"] = std::move(results);
  r["verdict"] = pass ? "PASS" : "FAIL";
  r["version"] = kVersion;
  return r;
}

long binom_l(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Exact Dirichlet form <-Lf, f>, assembled from first derivatives only.
Rat dirichlet_form(const DomainSpec& dom, const GPoly& f) {
  const int dg = dom.has_gamma() ? 1 : 0;
  Rat total;
  if (dom.kind == DomainKind::Ball) {
    for (int i = 0; i < dom.d; ++i) total += inner(dom, f.diff_x(i), f.diff_x(i), {0, 1, 0});
    for (int i = 0; i < dom.d; ++i)
      for (int j = i + 1; j < dom.d; ++j) total += inner(dom, f.angular(i, j), f.angular(i, j));
    return total;
  }
  const GPoly df = parabolic_diff(f);
  total = integral(dom, (df * df).mul_tpow(2), {dg, 0, 0});
  Rat rest;
  for (int i = 0; i < dom.d; ++i)
    rest += integral(dom, (f.diff_x(i) * f.diff_x(i)).mul_tpow(-2), {dg, 1, 0});
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j)
      rest += integral(dom, (f.angular(i, j) * f.angular(i, j)).mul_tpow(-2), {dg, 0, 0});
  return total + rest / Rat(4);
}

Rat dirichlet_form(const DomainSpec& dom, const SurfaceFun& f) {
  const int dg = dom.has_gamma() ? 1 : 0;
  const SurfaceFun fr = f.radial_diff();
  Rat total = surface_inner(dom, fr.mul_radial(GPoly::tpow(1, 2)), fr, {dg, 0, 0});
  Rat rest;
  for (int i = 0; i < dom.d; ++i)
    for (int j = i + 1; j < dom.d; ++j) {
      const SurfaceFun aij = f.angular(i, j);
      rest += surface_inner(dom, aij, aij, {0, 0, -1});
      if (dom.has_gamma()) rest -= surface_inner(dom, aij, aij);
    }
  return total + rest / Rat(4);
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json domain_json(const DomainSpec& dom) {
  Json j;
  j["kind"] = domain_kind_name(dom.kind);
  j["d"] = dom.d;
  if (dom.has_gamma()) j["gamma"] = dom.gamma.str();
  if (dom.has_mu()) j["mu"] = dom.mu.str();
  return j;
}

Json eigen_suite(const DomainSpec& dom, int nmax, bool literal) {
  dom.validate();
  if (literal && dom.kind != DomainKind::SolidUnbounded)
    throw std::invalid_argument("literal operator form exists only on the unbounded solid");
  Json results = Json::array();
  bool pass = true;
  auto push = [&](Json row, bool zero, size_t resid_terms, const Rat& lambda) {
    row["eigenvalue"] = lambda.str();
    row["residual_zero"] = zero;
    if (!zero) row["residual_terms"] = resid_terms;
    pass = pass && zero;
    results.push_back(std::move(row));
  };

  for (int n = 0; n <= nmax; ++n) {
    switch (dom.kind) {
      case DomainKind::Ball: {
        const BallBasis& B = ball_basis(dom.d, dom.mu, n);
        for (size_t i = 0; i < B.elems.size(); ++i) {
          const GPoly r = eigen_residual(dom, B.elems[i], n, 0);
          push({{"n", n}, {"k", B.idx[i]}}, r.is_zero(), r.terms().size(),
               eigenvalue(dom, n, 0));
        }
        break;
      }
      case DomainKind::SolidBounded:
      case DomainKind::SolidUnbounded: {
        for (int m = 0; m <= n; ++m)
          for (const auto& k : compositions(dom.d, m)) {
            const GPoly f = solid_element(dom, n, m, k);
            const GPoly r = literal ? apply_op(dom, f, true) + f.scaled(eigenvalue(dom, n, m))
                                    : eigen_residual(dom, f, n, m);
            push({{"n", n}, {"m", m}, {"k", k}}, r.is_zero(), r.terms().size(),
                 eigenvalue(dom, n, m));
          }
        break;
      }
      case DomainKind::SurfaceBounded:
      case DomainKind::SurfaceUnbounded: {
        for (int m = 0; m <= n; ++m)
          for (long l = 0; l < harmonic_dim(dom.d, m); ++l) {
            const SurfaceFun r = eigen_residual(dom, surface_element(dom, n, m, (int)l), n, m);
            push({{"n", n}, {"m", m}, {"l", l}}, r.is_zero(), r.parts().size(),
                 eigenvalue(dom, n, m));
          }
        break;
      }
    }
  }

  Json params;
  params["domain"] = domain_json(dom);
  params["nmax"] = nmax;
  if (literal) params["operator_literal"] = true;
  return envelope("verify-eigen", std::move(params), std::move(results), pass);
}

Json orthogonality_suite(const DomainSpec& dom, int nmax) {
  dom.validate();
  std::vector<Json> labels;
  std::vector<GPoly> solid_elems;
  std::vector<SurfaceFun> surf_elems;
  for (int n = 0; n <= nmax; ++n) {
    if (dom.kind == DomainKind::Ball) {
      const BallBasis& B = ball_basis(dom.d, dom.mu, n);
      for (size_t i = 0; i < B.elems.size(); ++i) {
        labels.push_back({{"n", n}, {"k", B.idx[i]}});
        solid_elems.push_back(B.elems[i]);
      }
    } else if (!dom.is_surface()) {
      for (int m = 0; m <= n; ++m)
        for (const auto& k : compositions(dom.d, m)) {
          labels.push_back({{"n", n}, {"m", m}, {"k", k}});
          solid_elems.push_back(solid_element(dom, n, m, k));
        }
    } else {
      for (int m = 0; m <= n; ++m)
        for (long l = 0; l < harmonic_dim(dom.d, m); ++l) {
          labels.push_back({{"n", n}, {"m", m}, {"l", l}});
          surf_elems.push_back(surface_element(dom, n, m, (int)l));
        }
    }
  }

  const int K = static_cast<int>(labels.size());
  std::vector<Rat> diag(K);
  std::vector<int> offdiag_nonzero(K, 0);
  parallel_for(0, K, [&](int i) {
    for (int j = i; j < K; ++j) {
      const Rat g = dom.is_surface() ? surface_inner(dom, surf_elems[i], surf_elems[j])
                                     : inner(dom, solid_elems[i], solid_elems[j]);
      if (j == i)
        diag[i] = g;
      else if (!g.is_zero())
        ++offdiag_nonzero[i];
    }
  });

  int bad = 0;
  Json results = Json::array();
  for (int i = 0; i < K; ++i) {
    bad += offdiag_nonzero[i];
    Json row = labels[i];
    row["norm2"] = diag[i].str();
    row["offdiag_nonzero"] = offdiag_nonzero[i];
    results.push_back(std::move(row));
  }

  const int amb = dom.d + (dom.kind == DomainKind::Ball ? 0 : 1);
  const long expected = dom.is_surface()
                            ? binom_l(nmax + amb, nmax) - binom_l(nmax + amb - 2, nmax - 2)
                            : binom_l(nmax + amb, nmax);
  bool diag_pos = true;
  for (const Rat& v : diag) diag_pos = diag_pos && v.sign() > 0;
  const bool pass = bad == 0 && K == expected && diag_pos;

  Json params;
  params["domain"] = domain_json(dom);
  params["nmax"] = nmax;
  params["dim"] = K;
  params["dim_expected"] = expected;
  return envelope("verify-orthogonality", std::move(params), std::move(results), pass);
}

Json decomposition_suite(const DomainSpec& dom, int degree, int trials, std::uint64_t seed) {
  dom.validate();
  Json results = Json::array();
  bool pass = true;
  for (int i = 0; i < trials; ++i) {
    bool equal;
    if (dom.is_surface()) {
      const SurfaceFun f = random_surface_element(dom, degree, seed + i);
      equal = apply_op(dom, f) == apply_op_decomposed(dom, f);
    } else {
      const GPoly f = random_element(dom, degree, seed + i);
      equal = (apply_op(dom, f) - apply_op_decomposed(dom, f)).is_zero();
    }
    pass = pass && equal;
    results.push_back({{"trial", i}, {"seed", seed + i}, {"equal", equal}});
  }
  Json params;
  params["domain"] = domain_json(dom);
  params["degree"] = degree;
  params["trials"] = trials;
  params["seed"] = seed;
  return envelope("verify-decomposition", std::move(params), std::move(results), pass);
}

Json selfadjoint_suite(const DomainSpec& dom, int degree, int trials, std::uint64_t seed) {
  dom.validate();
  Json results = Json::array();
  bool pass = true;
  const bool surf = dom.is_surface();

  bool kills_const;
  if (surf) {
    SurfaceFun one(dom.d);
    one.add_part(0, 0, GPoly::constant(1, Rat(1)));
    kills_const = apply_op(dom, one).is_zero();
  } else {
    kills_const = apply_op(dom, GPoly::constant(dom.d, Rat(1))).is_zero();
  }
  pass = pass && kills_const;
  results.push_back({{"check", "annihilates_constants"}, {"ok", kills_const}});

  for (int i = 0; i < trials; ++i) {
    bool symmetric, parts_identity;
    Rat pairing;
    if (surf) {
      const SurfaceFun f = random_surface_element(dom, degree, seed + 2 * i);
      const SurfaceFun g = random_surface_element(dom, degree, seed + 2 * i + 1);
      pairing = surface_inner(dom, apply_op(dom, f), g);
      symmetric = pairing == surface_inner(dom, f, apply_op(dom, g));
      parts_identity = dirichlet_form(dom, f) == -surface_inner(dom, apply_op(dom, f), f);
    } else {
      const GPoly f = random_element(dom, degree, seed + 2 * i);
      const GPoly g = random_element(dom, degree, seed + 2 * i + 1);
      pairing = inner(dom, apply_op(dom, f), g);
      symmetric = pairing == inner(dom, f, apply_op(dom, g));
      parts_identity = dirichlet_form(dom, f) == -inner(dom, apply_op(dom, f), f);
    }
    pass = pass && symmetric && parts_identity;
    results.push_back({{"trial", i},
                       {"seed", seed + 2 * i},
                       {"pairing", pairing.str()},
                       {"symmetric", symmetric},
                       {"integration_by_parts", parts_identity}});
  }

  Json params;
  params["domain"] = domain_json(dom);
  params["degree"] = degree;
  params["trials"] = trials;
  params["seed"] = seed;
  return envelope("verify-selfadjoint", std::move(params), std::move(results), pass);
}

namespace {

Json certificate_json(const Certificate& c) {
  Json row;
  row["subject"] = c.subject;
  Json terms;
  for (const auto& [name, value] : c.terms) terms[name] = value.str();
  row["terms"] = std::move(terms);
  row["lhs"] = c.lhs.str();
  row["rhs"] = c.rhs.str();
  row["verdict"] = verdict_name(c.verdict);
  return row;
}

}  // namespace

Json bernstein_suite(TheoremId th, const DomainSpec& dom, int n, int trials,
                     std::uint64_t seed) {
  dom.validate();
  std::vector<Certificate> certs(trials);
  parallel_for(0, trials, [&](int i) {
    certs[i] = dom.is_surface() ? certify(th, random_surface_element(dom, n, seed + i), dom, n)
                                : certify(th, random_element(dom, n, seed + i), dom, n);
  });
  Json results = Json::array();
  bool pass = true;
  for (int i = 0; i < trials; ++i) {
    Json row = certificate_json(certs[i]);
    row["trial"] = i;
    row["seed"] = seed + i;
    pass = pass && certs[i].verdict != Verdict::Violation;
    results.push_back(std::move(row));
  }
  Json params;
  params["theorem"] = theorem_name(th);
  params["domain"] = domain_json(dom);
  params["n"] = n;
  params["bound"] = bernstein_bound(th, dom, n).str();
  params["trials"] = trials;
  params["seed"] = seed;
  return envelope("verify-bernstein", std::move(params), std::move(results), pass);
}

Json sharpness_suite(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  Json results = Json::array();
  bool pass = true;
  for (const SharpnessCase& sc : sharpness_cases(th, dom, n)) {
    Json row = certificate_json(sc.cert);
    row["label"] = sc.label;
    row["expected"] = verdict_name(sc.expected);
    const bool ok = sc.cert.verdict == sc.expected;
    row["ok"] = ok;
    pass = pass && ok;
    results.push_back(std::move(row));
  }
  Json params;
  params["theorem"] = theorem_name(th);
  params["domain"] = domain_json(dom);
  params["n"] = n;
  params["bound"] = bernstein_bound(th, dom, n).str();
  return envelope("sharpness", std::move(params), std::move(results), pass);
}

Json rayleigh_suite(TheoremId th, const DomainSpec& dom, int n) {
  dom.validate();
  const RayleighResult r = rayleigh_max(th, dom, n);
  const Rat bound = bernstein_bound(th, dom, n);
  const double b = bound.to_double();
  const double gap = b == 0 ? r.value : (b - r.value) / b;
  Json row;
  row["value"] = fmt_double(r.value);
  row["bound"] = bound.str();
  row["relative_gap"] = fmt_double(gap);
  row["dim"] = r.dim;
  Json arg = Json::array();
  for (double c : r.argmax) arg.push_back(fmt_double(c));
  row["argmax"] = std::move(arg);
  const bool pass = r.value <= b * (1 + 1e-8) + 1e-12;

  Json params;
  params["theorem"] = theorem_name(th);
  params["domain"] = domain_json(dom);
  params["n"] = n;
  Json results = Json::array();
  results.push_back(std::move(row));
  return envelope("rayleigh", std::move(params), std::move(results), pass);
}

Json crosscheck_suite(const DomainSpec& dom, int trials, std::uint64_t seed) {
  dom.validate();
  const CrosscheckReport rep = crosscheck(dom, trials, seed);
  Json row;
  row["moment_trials"] = rep.moment_trials;
  row["odd_moments"] = rep.odd_moments;
  row["skipped_keys"] = rep.skipped_keys;
  row["cert_trials"] = rep.cert_trials;
  row["tol"] = fmt_double(rep.tol);
  row["max_rel_moment"] = fmt_double(rep.max_rel_moment);
  row["max_abs_odd"] = fmt_double(rep.max_abs_odd);
  row["max_rel_certificate"] = fmt_double(rep.max_rel_certificate);
  Json params;
  params["domain"] = domain_json(dom);
  params["trials"] = trials;
  params["seed"] = seed;
  Json results = Json::array();
  results.push_back(std::move(row));
  return envelope("crosscheck", std::move(params), std::move(results), rep.pass);
}

Json dump_basis(const DomainSpec& dom, int n) {
  dom.validate();
  Json results = Json::array();
  if (dom.kind == DomainKind::Ball) {
    const BallBasis& B = ball_basis(dom.d, dom.mu, n);
    for (size_t i = 0; i < B.elems.size(); ++i)
      results.push_back({{"n", n}, {"k", B.idx[i]}, {"poly", B.elems[i].str()}});
  } else if (!dom.is_surface()) {
    for (int m = 0; m <= n; ++m)
      for (const auto& k : compositions(dom.d, m))
        results.push_back({{"n", n}, {"m", m}, {"k", k},
                           {"poly", solid_element(dom, n, m, k).str()}});
  } else {
    for (int m = 0; m <= n; ++m)
      for (long l = 0; l < harmonic_dim(dom.d, m); ++l)
        results.push_back({{"n", n}, {"m", m}, {"l", l},
                           {"poly", surface_element(dom, n, m, (int)l).to_ambient().str()}});
  }
  Json params;
  params["domain"] = domain_json(dom);
  params["n"] = n;
  return envelope("dump-basis", std::move(params), std::move(results), true);
}

bool report_pass(const Json& report) { return report.value("verdict", "") == "PASS"; }

namespace {

void flatten(const Json& v, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) flatten(val, prefix.empty() ? k : prefix + "." + k, out);
  } else if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ';';
      s += e.is_string() ? e.get<std::string>() : e.dump();
    }
    out.emplace_back(prefix, s);
  } else if (v.is_string()) {
    out.emplace_back(prefix, v.get<std::string>());
  } else {
    out.emplace_back(prefix, v.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Json& report) {
  const Json& rows = report.at("results");
  std::string out;
  if (rows.empty()) return out;
  std::vector<std::pair<std::string, std::string>> first;
  flatten(rows[0], "", first);
  for (size_t i = 0; i < first.size(); ++i)
    out += (i ? "," : "") + csv_field(first[i].first);
  out += '\n';
  for (const Json& row : rows) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(row, "", cells);
    for (size_t i = 0; i < first.size(); ++i) {
      std::string val;
      for (const auto& [k, v] : cells)
        if (k == first[i].first) {
          val = v;
          break;
        }
      out += (i ? "," : "") + csv_field(val);
    }
    out += '\n';
  }
  return out;
}

}  // namespace parab
