#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "parab/bernstein.hpp"
#include "parab/moments.hpp"

namespace parab {

using Json = nlohmann::ordered_json;

std::string fmt_double(double v);
Json domain_json(const DomainSpec& dom);

// Report drivers shared by the CLI and the test harness. Every suite returns
// {command, params, results, verdict, version}; verdict is "PASS" or "FAIL";
// reports are deterministic functions of their arguments.

// One row per basis element up to degree nmax: eigenvalue and whether the
// operator residual vanishes identically. literal uses the first-order-in-t
// form without the drift term (unbounded solid only); its residuals do not
// vanish and the verdict is FAIL.
Json eigen_suite(const DomainSpec& dom, int nmax, bool literal = false);

// Full exact Gram matrix of the basis up to degree nmax: diagonal entries,
// count of nonzero off-diagonal pairs, dimension against the closed form.
Json orthogonality_suite(const DomainSpec& dom, int nmax);

// apply_op vs apply_op_decomposed on random elements of the given degree.
Json decomposition_suite(const DomainSpec& dom, int degree, int trials, std::uint64_t seed);

// <Lf, g> == <f, Lg> on random pairs, L1 == 0, and the integration-by-parts
// identity <-Lf, f> == (sum of the Bernstein functional terms at f).
Json selfadjoint_suite(const DomainSpec& dom, int degree, int trials, std::uint64_t seed);

// Certificates for random elements of degree <= n.
Json bernstein_suite(TheoremId th, const DomainSpec& dom, int n, int trials, std::uint64_t seed);

// Extremal certificates and strictness probes with expected verdicts.
Json sharpness_suite(TheoremId th, const DomainSpec& dom, int n);

// Numeric supremum of functional/|f|^2 over degree <= n, against the bound.
Json rayleigh_suite(TheoremId th, const DomainSpec& dom, int n);

// Exact moment engine vs quadrature.
Json crosscheck_suite(const DomainSpec& dom, int trials, std::uint64_t seed);

// Basis elements of degree exactly n in text form.
Json dump_basis(const DomainSpec& dom, int n);

bool report_pass(const Json& report);

// One row per result; columns from the first row's flattened keys (nested
// keys joined with '.', arrays joined with ';').
std::string to_csv(const Json& report);

}  // namespace parab
