#include "vgl/json_io.hpp"

namespace vgl {

namespace {

ExponentVector exponent_from_json(const Json& value, std::size_t dim) {
  if (!value.is_array() || value.size() != dim) throw ParseError("exponent must be an array of length " + std::to_string(dim), 0);
  ExponentVector e(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& entry = value[i];
    if (!entry.is_number_integer()) throw ParseError("exponent entries must be integers", 0);
    if (entry.get<long long>() < 0) throw ParseError("negative exponent", 0);
    e[i] = entry.get<ExponentVector::value_type>();
  }
  return e;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(Integer(std::to_string(value.get<long long>())));
  if (!value.is_string()) throw ParseError("rational must be a string or integer", 0);
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Json to_json(const ExponentVector& e) {
  Json out = Json::array();
  for (auto v : e.entries()) out.push_back(v);
  return out;
}

Json to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"coeff", to_json(it->second)}, {"exp", to_json(it->first)}});
  return Json{{"vars", p.dim()}, {"terms", terms}};
}

SparsePoly poly_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("terms"))
    throw ParseError("polynomial JSON needs \"vars\" and \"terms\"", 0);
  if (!doc["vars"].is_number_integer() || doc["vars"].get<long long>() < 1) throw ParseError("\"vars\" must be a positive integer", 0);
  std::size_t dim = doc["vars"].get<std::size_t>();
  if (!doc["terms"].is_array()) throw ParseError("\"terms\" must be an array", 0);
  SparsePoly p(dim);
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exp")) throw ParseError("term needs \"coeff\" and \"exp\"", 0);
    Rational c = rational_from_json(term["coeff"]);
    if (c < 0) throw ParseError("negative coefficient", 0);
    p.add_term(exponent_from_json(term["exp"], dim), c);
  }
  return p;
}

SparsePoly embed(const SparsePoly& p, std::size_t dim) {
  if (dim < p.dim()) throw DimensionMismatch("cannot embed into fewer variables");
  if (dim == p.dim()) return p;
  SparsePoly out(dim);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector wide(dim);
    for (std::size_t i = 0; i < e.dim(); ++i) wide[i] = e[i];
    out.add_term(wide, c);
  }
  return out;
}

Json to_json(const TransportPlan& plan) {
  Json moves = Json::array();
  for (const auto& [move, mass] : plan.moves())
    moves.push_back(Json{{"from", to_json(move.first)}, {"to", to_json(move.second)}, {"mass", to_json(mass)}});
  return Json{{"moves", moves}};
}

TransportPlan plan_from_json(const Json& doc, std::size_t dim) {
  if (!doc.is_object() || !doc.contains("moves") || !doc["moves"].is_array()) throw ParseError("plan JSON needs \"moves\"", 0);
  TransportPlan plan(dim);
  for (const auto& move : doc["moves"]) {
    if (!move.is_object() || !move.contains("from") || !move.contains("to") || !move.contains("mass"))
      throw ParseError("move needs \"from\", \"to\" and \"mass\"", 0);
    Rational mass = rational_from_json(move["mass"]);
    if (mass < 0) throw ParseError("negative mass", 0);
    plan.add_move(exponent_from_json(move["from"], dim), exponent_from_json(move["to"], dim), mass);
  }
  return plan;
}

Json to_json(const DominanceVerdict& verdict) {
  return Json{{"comparable", verdict.comparable},
              {"reason", verdict.reason ? Json(to_string(*verdict.reason)) : Json(nullptr)},
              {"plan", verdict.plan ? to_json(*verdict.plan) : Json(nullptr)}};
}

Json to_json(const Witness& witness) {
  Json point{{"kind", witness.kind}};
  if (!witness.side.empty()) point["side"] = witness.side;
  point["coordinates"] = rationals(witness.coordinates);
  return Json{{"point", point}, {"lhs", to_json(witness.lhs)}, {"rhs", to_json(witness.rhs)}, {"exact", witness.exact}};
}

Json to_json(const ConditionResult& condition) {
  return Json{{"name", condition.name},
              {"family", condition.family},
              {"holds", condition.holds},
              {"strict", condition.strict},
              {"holds_nonstrict", condition.holds_nonstrict},
              {"holds_strict", condition.holds_strict},
              {"mode", to_string(condition.mode)},
              {"witness", condition.witness ? to_json(*condition.witness) : Json(nullptr)}};
}

Json to_json(const SpectralReport& report) {
  Json conditions = Json::array();
  std::size_t failing = 0;
  for (const auto& c : report.conditions) {
    conditions.push_back(to_json(c));
    if (!c.holds) ++failing;
  }
  return Json{{"strict", report.strict},
              {"mass_equal", report.mass_equal},
              {"holds", report.all_hold()},
              {"exact", report.all_exact()},
              {"failing", failing},
              {"conditions", conditions}};
}

Json to_json(const CatalyticCertificate& cert) {
  return Json{{"type", "catalytic"},          {"n", cert.n},       {"k", cert.k},
              {"standard_family", cert.standard_family}, {"a", to_json(cert.a)}, {"plan", to_json(cert.plan)}};
}

CatalyticCertificate catalytic_from_json(const Json& doc, std::size_t dim) {
  if (!doc.is_object() || !doc.contains("a") || !doc.contains("plan")) throw ParseError("catalytic certificate needs \"a\" and \"plan\"", 0);
  CatalyticCertificate cert{embed(poly_from_json(doc["a"]), dim), doc.value("k", 0u), doc.value("n", 0u),
                            doc.value("standard_family", true), plan_from_json(doc["plan"], dim)};
  return cert;
}

Json to_json(const AsymptoticCertificate& cert) {
  Json plans = Json::array();
  for (std::size_t i = 0; i < cert.plans.size(); ++i) {
    Json entry{{"n", cert.first + i}};
    entry["moves"] = to_json(cert.plans[i])["moves"];
    plans.push_back(entry);
  }
  return Json{{"type", "asymptotic"}, {"eps", to_json(cert.eps)}, {"k", cert.k},
              {"N", cert.first},      {"window", cert.window},   {"plans", plans}};
}

AsymptoticCertificate asymptotic_from_json(const Json& doc, std::size_t dim) {
  if (!doc.is_object() || !doc.contains("plans") || !doc["plans"].is_array()) throw ParseError("asymptotic certificate needs \"plans\"", 0);
  AsymptoticCertificate cert;
  cert.eps = doc.contains("eps") ? rational_from_json(doc["eps"]) : Rational(0);
  cert.k = doc.value("k", 0u);
  cert.first = doc.value("N", 1u);
  cert.window = doc.value("window", 3u);
  for (const auto& plan : doc["plans"]) cert.plans.push_back(plan_from_json(plan, dim));
  return cert;
}

Json to_json(const LemmaOutcome& outcome) {
  return Json{{"name", outcome.name},
              {"statement", outcome.statement},
              {"applicable", outcome.applicable},
              {"samples", outcome.samples},
              {"passes", outcome.passes},
              {"attempts", outcome.attempts},
              {"counterexample", outcome.counterexample ? Json(*outcome.counterexample) : Json(nullptr)}};
}

Json to_json(const LemmaBenchReport& report) {
  Json lemmas = Json::array();
  for (const auto& l : report.lemmas) lemmas.push_back(to_json(l));
  return Json{{"model", to_string(report.model)}, {"samples", report.requested}, {"seed", report.seed},
              {"ok", report.ok()},                {"complete", report.complete()}, {"lemmas", lemmas}};
}

}  // namespace vgl
