#ifndef RAMCALC_JSON_IO_HPP
#define RAMCALC_JSON_IO_HPP

// JSON views of every value the tools emit.  ordered_json keeps the key
// order fixed at construction, and every container we serialize iterates in
// a deterministic order, so output bytes are stable run to run.

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "ramcalc/base_change.hpp"
#include "ramcalc/conductor.hpp"
#include "ramcalc/curve_oracle.hpp"
#include "ramcalc/parse.hpp"

namespace ramcalc {

using ojson = nlohmann::ordered_json;

inline ojson field_to_json(const FieldDesc& k) {
  return {{"p", k.fq.p}, {"m", k.fq.m}, {"a", k.a}, {"b", k.b}};
}

// Elements serialize as their surface-coordinate rendering: it is canonical
// for canonical inputs and parses back given the enclosing field object.
inline ojson form_to_json(const DifferentialForm& f,
                          std::optional<long long> level = std::nullopt) {
  return {{"basis", f.basis == FormBasis::ordinary ? "ordinary" : "log"},
          {"du", to_surface_string(f.cdu)},
          {"d2", to_surface_string(f.c2)},
          {"level", level ? ojson(*level) : ojson(nullptr)}};
}

inline ojson form_to_json(const GradedForm& g) {
  return form_to_json(g.form, g.level);
}

inline ojson character_to_json(const ASCharacter& c) {
  return {{"field", field_to_json(c.rep.field)},
          {"f", to_surface_string(c.rep)},
          {"reduced", true},
          {"witness", to_surface_string(c.witness)}};
}

inline ojson conductor_to_json(const ConductorReport& r) {
  ojson j{{"swan", r.swan},
          {"dimtot", r.total_dim},
          {"classification", classification_name(r.classification)}};
  j["char_form"] = r.char_form ? form_to_json(*r.char_form) : ojson(nullptr);
  j["rsw"] = r.refined_swan ? form_to_json(*r.refined_swan) : ojson(nullptr);
  j["cc"] = ojson{{"divisor_coeff", r.cc.divisor},
                  {"direction", r.cc.direction}};
  return j;
}

namespace detail {

inline ojson num_map_to_json(const std::map<std::string, long long>& m) {
  ojson j = ojson::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

}  // namespace detail

// A sigma discrepancy is not in the four-value status enum of the report
// schema; it serializes as "fail" with the verbatim checker state exposed in
// sigma_state so callers can tell a falsified bound from a reported
// non-commuting diagram.
inline ojson check_to_json(const CheckReport& r) {
  ojson j{{"theorem", r.theorem},
          {"lhs", detail::num_map_to_json(r.lhs)},
          {"rhs", detail::num_map_to_json(r.rhs)},
          {"bound", detail::num_map_to_json(r.bound)},
          {"slack", detail::num_map_to_json(r.slack)},
          {"status", r.status == CheckStatus::discrepancy
                         ? "fail"
                         : check_status_name(r.status)}};
  for (const char* key : {"sigma_state", "lhs_form", "rhs_form"})
    if (auto it = r.notes.find(key); it != r.notes.end()) j[key] = it->second;
  return j;
}

inline std::string rat_to_string(const Rat& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline ojson witness_to_json(const CurveWitness& w, bool for_swan) {
  Rat ratio = rat_make(for_swan ? w.cond.sw : w.cond.dt, w.mu);
  return {{"mu", w.mu},
          {"curve", w.curve},
          {"swan_1d", w.cond.sw},
          {"dimtot_1d", w.cond.dt},
          {"ratio", rat_to_string(ratio)}};
}

inline ojson oracle_to_json(const OracleResult& r) {
  return {{"sw_ratio", rat_to_string(r.sw_ratio)},
          {"dt_ratio", rat_to_string(r.dt_ratio)},
          {"sw_ceil", r.sw_ceil},
          {"dt_ceil", r.dt_ceil},
          {"sw_witness", witness_to_json(r.sw_witness, true)},
          {"dt_witness", witness_to_json(r.dt_witness, false)},
          {"curves_tried", r.curves_tried}};
}

}  // namespace ramcalc

#endif  // RAMCALC_JSON_IO_HPP
