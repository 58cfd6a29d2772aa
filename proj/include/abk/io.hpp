#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abk/oracle.hpp"
#include "abk/sampling.hpp"
#include "abk/splinefun.hpp"

namespace abk {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rationals travel as exact "p/q" strings so round trips are bit-exact.

inline Json rational_to_json(const Rational& r) { return rat_str(r); }

inline Rational rational_from_json(const Json& j) {
  return rat_parse(j.get<std::string>());
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(rational_to_json(r));
  return a;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> v;
  for (const Json& e : j) v.push_back(rational_from_json(e));
  return v;
}

// ---------------------------------------------------------------------------
// Piecewise polynomials / spline pairs.
// Schema: {breakpoints:[rational strings], pieces:[[coeff strings]],
//          smoothness:k}.  Smoothness is derived data: it is emitted for
// consumers but recomputed (not trusted) on load.

inline Json unipoly_to_json(const UniPoly& p) {
  return rationals_to_json(p.coeffs());
}

inline UniPoly unipoly_from_json(const Json& j) {
  return UniPoly(rationals_from_json(j));
}

inline Json piecewise_to_json(const PiecewisePolynomial& f) {
  Json j;
  j["breakpoints"] = rationals_to_json(f.breakpoints());
  Json pieces = Json::array();
  for (const UniPoly& p : f.pieces()) pieces.push_back(unipoly_to_json(p));
  j["pieces"] = pieces;
  int k = f.smoothness();
  if (k >= PiecewisePolynomial::kSmoothInf) {
    j["smoothness"] = "inf";
  } else {
    j["smoothness"] = k;
  }
  return j;
}

inline PiecewisePolynomial piecewise_from_json(const Json& j) {
  std::vector<Rational> breaks = rationals_from_json(j.at("breakpoints"));
  std::vector<UniPoly> pieces;
  for (const Json& p : j.at("pieces")) pieces.push_back(unipoly_from_json(p));
  return PiecewisePolynomial(std::move(breaks), std::move(pieces));
}

inline Json spline_to_json(const SplineFun& f) {
  Json j;
  j["c0"] = piecewise_to_json(f.c0());
  j["c1"] = piecewise_to_json(f.c1());
  return j;
}

inline SplineFun spline_from_json(const Json& j) {
  return SplineFun(piecewise_from_json(j.at("c0")),
                   piecewise_from_json(j.at("c1")));
}

// ---------------------------------------------------------------------------
// Sampling plans.

inline Json plan_to_json(const SamplingPlan& p) {
  Json j;
  j["seed"] = p.seed;
  j["trials"] = p.trials;
  j["max_x_degree"] = p.max_x_degree;
  j["terms_per_function"] = p.terms_per_function;
  j["smoothness"] = p.smoothness;
  return j;
}

inline SamplingPlan plan_from_json(const Json& j) {
  SamplingPlan p;
  p.seed = j.at("seed").get<uint64_t>();
  p.trials = j.at("trials").get<int>();
  p.max_x_degree = j.at("max_x_degree").get<int>();
  p.terms_per_function = j.at("terms_per_function").get<int>();
  p.smoothness = j.at("smoothness").get<int>();
  return p;
}

// ---------------------------------------------------------------------------
// Oracle output.  A solution is a list of coefficient maps over the ansatz
// generators; only nonzero coefficients are emitted.

inline Json ansatz_term_to_json(const AnsatzTerm& t) {
  Json j;
  j["coeff_deg"] = t.coeff_deg;
  j["coeff_xi"] = t.coeff_xi;
  j["dx1"] = t.dx1;
  j["dxi1"] = t.dxi1;
  j["dx2"] = t.dx2;
  j["dxi2"] = t.dxi2;
  return j;
}

inline AnsatzTerm ansatz_term_from_json(const Json& j) {
  AnsatzTerm t;
  t.coeff_deg = j.at("coeff_deg").get<int>();
  t.coeff_xi = j.at("coeff_xi").get<bool>();
  t.dx1 = j.at("dx1").get<int>();
  t.dxi1 = j.at("dxi1").get<int>();
  t.dx2 = j.at("dx2").get<int>();
  t.dxi2 = j.at("dxi2").get<int>();
  return t;
}

inline Json solution_to_json(const CocycleSolution& sol) {
  Json j;
  j["n"] = 1;
  j["Q"] = sol.Q;
  j["D"] = sol.D;
  j["eps"] = sol.eps;
  j["constraint_rank"] = sol.constraint_rank;
  j["dimension"] = static_cast<int>(sol.coeff_vectors.size());
  Json reps = Json::array();
  for (const auto& vec : sol.coeff_vectors) {
    Json rep = Json::array();
    for (size_t i = 0; i < vec.size(); ++i) {
      if (vec[i] == 0) continue;
      Json entry = ansatz_term_to_json(sol.terms[i]);
      entry["value"] = rational_to_json(vec[i]);
      rep.push_back(entry);
    }
    reps.push_back(rep);
  }
  j["representatives"] = reps;
  return j;
}

inline Json quotient_to_json(const QuotientResult& q, int Qp, int Dp) {
  Json j;
  j["coboundary_Q"] = Qp;
  j["coboundary_D"] = Dp;
  j["coboundary_rank"] = q.coboundary_rank;
  j["cocycle_rank"] = q.cocycle_rank;
  j["dimension"] = q.dimension;
  return j;
}

// ---------------------------------------------------------------------------
// Verification reports.  Schema "antibracket-report/1": a versioned header,
// the run configuration, and one record per check.  Timing is the only
// nondeterministic field and can be suppressed for byte-identical output.

struct CheckRecord {
  std::string name;
  std::string description;
  bool pass = false;
  std::string witness;  // empty unless the check failed
  long timing_ms = 0;
  Json detail;  // optional structured payload (e.g. oracle dimensions)
};

struct Report {
  Json config;
  std::vector<CheckRecord> checks;

  bool all_pass() const {
    for (const CheckRecord& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline Json report_to_json(const Report& r, bool include_timing = true) {
  Json j;
  j["schema"] = "antibracket-report/1";
  j["config"] = r.config;
  Json checks = Json::array();
  for (const CheckRecord& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["description"] = c.description;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) e["witness"] = c.witness;
    if (!c.detail.is_null()) e["detail"] = c.detail;
    if (include_timing) e["timing_ms"] = c.timing_ms;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace abk
