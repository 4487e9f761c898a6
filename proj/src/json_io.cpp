#include "extk/json_io.hpp"

#include <cmath>

namespace extk {

namespace {

double finite_number(const ojson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    fail(error_code::invalid_argument,
         std::string("missing or non-numeric field: ") + key);
  const double v = j[key].get<double>();
  if (!std::isfinite(v))
    fail(error_code::invalid_argument,
         std::string("field must be finite: ") + key);
  return v;
}

}  // namespace

ojson to_json(const GermSpec& spec) {
  ojson j;
  if (const auto* e = std::get_if<EinsteinGerm>(&spec)) {
    j["kind"] = "einstein";
    j["K0"] = e->K0;
  } else if (const auto* g = std::get_if<GenericGerm>(&spec)) {
    j["kind"] = "generic";
    j["C"] = g->cubic.C;
    j["Cprime"] = g->cubic.Cprime;
    j["K0"] = g->K0;
  } else {
    const auto& x = std::get<ExceptionalGerm>(spec);
    j["kind"] = "exceptional";
    j["C"] = x.cubic.C;
    j["Cprime"] = x.cubic.Cprime;
    j["K0"] = x.K0;
    j["lambda"] = x.lambda;
  }
  return j;
}

GermSpec germ_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(error_code::invalid_argument, "germ JSON must carry a string kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "einstein") return make_einstein(finite_number(j, "K0"));
  if (kind == "generic")
    return make_generic(
        make_cubic(finite_number(j, "C"), finite_number(j, "Cprime")),
        finite_number(j, "K0"));
  if (kind == "exceptional")
    return make_exceptional(
        make_cubic(finite_number(j, "C"), finite_number(j, "Cprime")),
        finite_number(j, "K0"), finite_number(j, "lambda"));
  fail(error_code::invalid_argument, "unknown germ kind: " + kind);
}

GermSpec germ_from_json_text(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded())
    fail(error_code::invalid_argument, "germ JSON failed to parse");
  return germ_from_json(j);
}

ojson to_json(const RootStructure& rs) {
  ojson j;
  if (const auto* t = std::get_if<ThreeDistinctReal>(&rs)) {
    j["kind"] = "three_distinct_real";
    j["roots"] = {t->r1, t->r2, t->r3};
  } else if (const auto* d = std::get_if<DoubleAndSimple>(&rs)) {
    j["kind"] = "double_and_simple";
    j["double"] = d->dbl;
    j["simple"] = d->smp;
  } else if (std::holds_alternative<TripleZero>(rs)) {
    j["kind"] = "triple_zero";
  } else {
    j["kind"] = "one_real";
    j["root"] = std::get<OneReal>(rs).r;
  }
  return j;
}

ojson to_json(const VerificationReport& report) {
  ojson j;
  j["pass"] = report.pass;
  j["max_curvature_residual"] = report.max_curvature_residual;
  j["max_holomorphy_residual"] = report.max_holomorphy_residual;
  j["max_model_residual"] = report.max_model_residual;
  j["h"] = report.step_h;
  j["grid"] = ojson{{"radius", report.grid.radius}, {"n", report.grid.n}};
  return j;
}

ojson to_json(const HcmuClass& hcmu) {
  ojson j;
  if (const auto* g = std::get_if<GenericHcmu>(&hcmu)) {
    j["kind"] = "generic_hcmu";
    j["K1"] = g->K1;
    j["K2"] = g->K2;
  } else if (const auto* c = std::get_if<ExceptionalConeHcmu>(&hcmu)) {
    j["kind"] = "exceptional_cone";
    j["K1"] = c->K1;
    j["K2"] = c->K2;
    j["sigma_sign"] = c->sigma_sign;
  } else if (const auto* cusp = std::get_if<ExceptionalCuspHcmu>(&hcmu)) {
    j["kind"] = "exceptional_cusp";
    j["K1"] = cusp->K1;
  } else {
    j["kind"] = "not_hcmu";
    j["reason"] = std::get<NotHcmu>(hcmu).reason;
  }
  return j;
}

ojson to_json(const ModuliCoords& coords) {
  ojson j;
  if (const auto* g = std::get_if<GenericChart>(&coords)) {
    j["kind"] = "generic_chart";
    j["x1"] = g->x1;
    j["x2"] = g->x2;
    j["x3"] = g->x3;
  } else {
    const auto& e = std::get<ExceptionalChart>(coords);
    j["kind"] = "exceptional_chart";
    j["K0"] = e.K0;
    j["t"] = e.t;
    j["log_lambda"] = e.log_lambda;
  }
  return j;
}

const char* component_name(Component c) {
  switch (c) {
    case Component::generic:
      return "generic";
    case Component::exceptional_sigma_positive:
      return "exceptional_sigma_positive";
    case Component::exceptional_sigma_negative:
      return "exceptional_sigma_negative";
  }
  return "unknown";
}

const char* to_string(error_code code) noexcept {
  switch (code) {
    case error_code::invalid_argument:
      return "invalid_argument";
    case error_code::not_in_domain:
      return "not_in_domain";
    case error_code::not_a_root:
      return "not_a_root";
    case error_code::degenerate_root:
      return "degenerate_root";
    case error_code::non_positive_lambda:
      return "non_positive_lambda";
    case error_code::out_of_domain:
      return "out_of_domain";
    case error_code::out_of_interval:
      return "out_of_interval";
    case error_code::wrong_family:
      return "wrong_family";
    case error_code::einstein_not_in_moduli:
      return "einstein_not_in_moduli";
    case error_code::zero_t:
      return "zero_t";
    case error_code::grid_exceeds_domain:
      return "grid_exceeds_domain";
    case error_code::non_positive_density:
      return "non_positive_density";
    case error_code::quadrature_failure:
      return "quadrature_failure";
    case error_code::root_find_failure:
      return "root_find_failure";
  }
  return "unknown";
}

}  // namespace extk
