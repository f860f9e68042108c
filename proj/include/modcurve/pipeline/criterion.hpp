#pragma once

// The seven side conditions that together rule out a point of order N on an
// elliptic curve over a cubic field, via reduction at a prime above p.

#include "modcurve/arith.hpp"
#include "modcurve/cuspidal/order.hpp"
#include "modcurve/geometry/curve.hpp"
#include "modcurve/geometry/gonality.hpp"
#include "modcurve/geometry/points.hpp"
#include "modcurve/pipeline/catalog.hpp"
#include "modcurve/pipeline/serialize.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcurve::pipeline {

inline constexpr const char* kReportVersion = "1";

enum class ConditionVerdict { pass, fail, unavailable, error };

inline std::string to_string(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::pass: return "pass";
    case ConditionVerdict::fail: return "fail";
    case ConditionVerdict::unavailable: return "unavailable";
    case ConditionVerdict::error: return "error";
  }
  return "?";
}

struct ConditionRecord {
  std::string name;  // C1..C7
  std::string title;
  std::vector<std::pair<std::string, std::string>> inputs;
  ConditionVerdict verdict = ConditionVerdict::error;
  std::string detail;
  std::string paper_anchor;

  bool passed() const { return verdict == ConditionVerdict::pass; }
};

enum class FinalVerdict { eliminated, not_established };

inline std::string to_string(FinalVerdict v) { return v == FinalVerdict::eliminated ? "eliminated" : "not-established"; }

struct CriterionReport {
  Int level = 0;
  Int prime = 0;
  std::vector<ConditionRecord> conditions;
  FinalVerdict verdict = FinalVerdict::not_established;

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (!c.passed()) out.push_back(c.name);
    return out;
  }
  const ConditionRecord& condition(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return c;
    throw std::out_of_range("no condition " + name);
  }
};

struct CriterionContext {
  const Cache* cache = nullptr;
  const geometry::GonalityTable* gonality = nullptr;
};

namespace detail {

inline ConditionRecord guarded(std::string name, std::string title, std::string anchor,
                               const std::function<void(ConditionRecord&)>& body) {
  ConditionRecord r;
  r.name = std::move(name);
  r.title = std::move(title);
  r.paper_anchor = std::move(anchor);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.verdict = ConditionVerdict::error;
    r.detail = e.what();
  }
  return r;
}

inline ConditionVerdict of(bool ok) { return ok ? ConditionVerdict::pass : ConditionVerdict::fail; }

inline void weil_inputs(ConditionRecord& r, const geometry::WeilReport& w) {
  r.inputs = {{"N", std::to_string(w.level)},
              {"p", std::to_string(w.prime)},
              {"f", std::to_string(w.residue_degree)},
              {"tested", std::to_string(w.tested_value)},
              {"q", w.q.get_str()},
              {"tested-1-q", w.slack.get_str()},
              {"(tested-1-q)^2", w.slack_squared.get_str()},
              {"4q", w.four_q.get_str()}};
}

inline std::string flag_string(const std::vector<bool>& flags) {
  std::string s;
  for (bool f : flags) {
    if (!s.empty()) s += ",";
    s += f ? "T" : "F";
  }
  return s;
}

inline std::string int_list(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s;
}

}  // namespace detail

/// Evaluates C1..C7 for (N, p). A condition that cannot be computed is
/// recorded as error or unavailable and blocks the verdict.
inline CriterionReport evaluate_criterion(Int n, Int p, const CriterionContext& ctx = {}) {
  if (!find_level(n)) throw std::invalid_argument("level " + std::to_string(n) + " is not in the catalog");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");

  CriterionReport rep;
  rep.level = n;
  rep.prime = p;

  rep.conditions.push_back(detail::guarded("C1", "no additive reduction", "main theorem, proof: N > 4", [&](auto& r) {
    r.inputs = {{"N", std::to_string(n)}};
    r.verdict = detail::of(n > 4);
    r.detail = std::to_string(n) + (n > 4 ? " > 4" : " <= 4");
  }));

  rep.conditions.push_back(detail::guarded(
      "C2", "multiplicative reduction, residue degree 3", "main theorem, proof: Weil bound for residue degree 3",
      [&](auto& r) {
        auto w = geometry::weil_admissibility(n, p, 3);
        detail::weil_inputs(r, w);
        r.inputs.emplace_back("e=1<p-1", w.ramification ? "true" : "false");
        r.verdict = detail::of(w.pass);
        r.detail = w.summary + (w.ramification ? "" : "; ramification condition 1 < p-1 fails");
      }));

  rep.conditions.push_back(detail::guarded(
      "C3", "multiplicative reduction, residue degree 1", "main theorem, proof: Weil bound for N' = N/p",
      [&](auto& r) {
        r.inputs = {{"N", std::to_string(n)}, {"p", std::to_string(p)}};
        auto w = geometry::weil_admissibility(n, p, 1);
        detail::weil_inputs(r, w);
        r.verdict = detail::of(w.pass);
        r.detail = w.summary;
      }));

  rep.conditions.push_back(detail::guarded(
      "C4", "cuspidal order prime to p", "main theorem, proof: injective specialization of torsion", [&](auto& r) {
        r.inputs = {{"N", std::to_string(n)}, {"p", std::to_string(p)}};
        if (!is_squarefree(n)) {
          r.verdict = ConditionVerdict::unavailable;
          r.detail = "cuspidal order formula needs square-free N";
          return;
        }
        auto h = cuspidal::h0(n);
        exact::BigInt g = exact::gcd(h.value, exact::BigInt(p));
        r.inputs.emplace_back("h0", h.value.get_str());
        r.inputs.emplace_back("h0 factored", cuspidal::factored_string(h.factored));
        r.inputs.emplace_back("gcd(h0,p)", g.get_str());
        r.verdict = detail::of(g == 1);
        r.detail = "h0(" + std::to_string(n) + ") = " + h.value.get_str() + " = " + cuspidal::factored_string(h.factored) +
                   ", gcd with " + std::to_string(p) + " is " + g.get_str();
      }));

  rep.conditions.push_back(detail::guarded(
      "C5", "cusps defined over Q(zeta_N)", "main theorem, proof: cusps over the cyclotomic field", [&](auto& r) {
        auto cs = geometry::cusps(n);
        Int max_degree = 1;
        bool inside = true;
        for (const auto& g : cs.groups) {
          const Int m = gcd(g.denominator, n / g.denominator);
          inside = inside && n % m == 0;
          for (const auto& c : g.cusps) max_degree = std::max(max_degree, c.field_degree);
        }
        r.inputs = {{"N", std::to_string(n)},
                    {"cusps", std::to_string(cs.size())},
                    {"rational cusps", std::to_string(cs.rational_count())},
                    {"max field degree", std::to_string(max_degree)}};
        r.verdict = detail::of(inside);
        r.detail = std::to_string(cs.size()) + " cusps, " + std::to_string(cs.rational_count()) +
                   " rational; each defined over Q(zeta_gcd(d,N/d)) inside Q(zeta_N)";
      }));

  rep.conditions.push_back(detail::guarded(
      "C6", "J_0(N)(Q) finite", "main theorem, proof: finiteness from the L-value table", [&](auto& r) {
        r.inputs = {{"N", std::to_string(n)}};
        static const Cache no_cache;
        auto s = level_summary(n, ctx.cache ? *ctx.cache : no_cache);
        r.inputs.emplace_back("t", std::to_string(s.flattened_dimensions().size()));
        r.inputs.emplace_back("dimensions", detail::int_list(s.flattened_dimensions()));
        r.inputs.emplace_back("L(A,1)!=0", detail::flag_string(s.flattened_flags()));
        r.verdict = detail::of(s.finite());
        r.detail = s.finite() ? "every factor has L(A,1) != 0; finiteness then follows by Kato (cited, not computed)"
                              : "some factor has L(A,1) = 0; finiteness not established by this method";
      }));

  rep.conditions.push_back(detail::guarded(
      "C7", "X_0(N) not trigonal", "main theorem, proof: X_0(N) is not trigonal", [&](auto& r) {
        geometry::GonalityTable loaded;
        const geometry::GonalityTable* table = ctx.gonality;
        if (!table) {
          loaded = geometry::GonalityTable::load();
          table = &loaded;
        }
        auto c = geometry::gonality_certificate(n, table);
        r.inputs = {{"N", std::to_string(n)},
                    {"genus", std::to_string(c.genus)},
                    {"claim", geometry::to_string(c.claim)},
                    {"evidence", geometry::to_string(c.evidence)}};
        if (!c.source.empty()) r.inputs.emplace_back("source", c.source);
        if (c.hyperelliptic) r.inputs.emplace_back("hyperelliptic", *c.hyperelliptic ? "true" : "false");
        if (c.witness)
          r.inputs.emplace_back("point-count witness", "#X(F_" + c.witness->q.get_str() + ") = " +
                                                           c.witness->count.get_str() + " > 3*(" +
                                                           c.witness->q.get_str() + "+1)");
        r.verdict = detail::of(c.claim == geometry::GonalityClaim::not_trigonal);
        r.detail = "gonality certificate: " + geometry::to_string(c.claim);
      }));

  rep.verdict = rep.failed().empty() ? FinalVerdict::eliminated : FinalVerdict::not_established;
  return rep;
}

inline nlohmann::ordered_json to_json(const CriterionReport& rep) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["level"] = std::to_string(rep.level);
  j["prime"] = std::to_string(rep.prime);
  auto conds = nlohmann::ordered_json::array();
  for (const auto& c : rep.conditions) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["title"] = c.title;
    auto in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.inputs) in[k] = v;
    cj["inputs"] = std::move(in);
    cj["verdict"] = to_string(c.verdict);
    cj["detail"] = c.detail;
    cj["paper_anchor"] = c.paper_anchor;
    conds.push_back(std::move(cj));
  }
  j["conditions"] = std::move(conds);
  j["verdict"] = to_string(rep.verdict);
  return j;
}

}  // namespace modcurve::pipeline
