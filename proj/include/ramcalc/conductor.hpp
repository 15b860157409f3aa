#ifndef RAMCALC_CONDUCTOR_HPP
#define RAMCALC_CONDUCTOR_HPP

// Ramification invariants of an Artin-Schreier character, read off from the
// canonical representative:
//   swan       depth of the w-pole of the representative
//   total_dim  pole order of d(rep) in the ordinary basis; always lands in
//              {swan, swan + 1}, which is enforced, not assumed
//   char_form  leading graded piece of -d(rep) at depth total_dim
//   refined_swan  leading piece of d(rep) at depth swan, in the log basis

#include <optional>
#include <stdexcept>
#include <string>

#include "ramcalc/artin_schreier.hpp"
#include "ramcalc/differential.hpp"

namespace ramcalc {

inline long long swan(const ASCharacter& c) {
  auto v = valuation(c.rep);
  if (!v || *v >= 0) return 0;
  return -*v;
}

inline long long total_dim(const ASCharacter& c) {
  long long sw = swan(c);
  if (sw == 0) return 0;
  auto v = omega_valuation(d(c.rep, FormBasis::ordinary));
  if (!v) throw std::logic_error("total_dim: derivative of a ramified representative vanished");
  long long dt = -*v;
  if (dt < sw || dt > sw + 1)
    throw std::logic_error("total_dim: pole order escaped the expected window");
  return dt;
}

inline GradedForm char_form(const ASCharacter& c) {
  long long dt = total_dim(c);
  if (dt == 0)
    throw std::domain_error("char_form: character is not ramified");
  DifferentialForm top =
      omega_leading(form_neg(d(c.rep, FormBasis::ordinary)), dt);
  if (form_is_zero(top))
    throw std::logic_error("char_form: leading piece vanished");
  return {top, dt};
}

inline GradedForm refined_swan(const ASCharacter& c) {
  long long sw = swan(c);
  if (sw == 0)
    throw std::domain_error("refined_swan: character is not ramified");
  DifferentialForm top = omega_leading(d(c.rep, FormBasis::logw), sw);
  if (form_is_zero(top))
    throw std::logic_error("refined_swan: leading piece vanished");
  return {top, sw};
}

// Multiplicities of the two components of the characteristic cycle: the zero
// section always carries -1, the fiber over the closed point carries minus
// the total dimension, and the covector direction records which basis
// differentials survive in the characteristic form.
struct CCCoefficients {
  long long zero_section = -1;
  long long divisor = 0;
  std::string direction;  // "du", "dw", "du+dw", or "" when unramified

  bool operator==(const CCCoefficients&) const = default;
};

inline CCCoefficients cc_coefficients(const ASCharacter& c) {
  long long dt = total_dim(c);
  if (dt == 0) return {-1, 0, ""};
  GradedForm cf = char_form(c);
  bool has_du = !fe_is_zero(cf.form.cdu);
  bool has_dw = !fe_is_zero(cf.form.c2);
  return {-1, -dt, has_du && has_dw ? "du+dw" : (has_du ? "du" : "dw")};
}

struct ConductorReport {
  Classification classification = Classification::trivial;
  long long swan = 0;
  long long total_dim = 0;
  std::optional<GradedForm> char_form;
  std::optional<GradedForm> refined_swan;
  CCCoefficients cc;
};

inline ConductorReport conductor_report(const ASCharacter& c) {
  ConductorReport out;
  out.classification = classify(c);
  out.swan = swan(c);
  out.total_dim = total_dim(c);
  if (out.classification == Classification::ramified) {
    out.char_form = char_form(c);
    out.refined_swan = refined_swan(c);
  }
  out.cc = cc_coefficients(c);
  return out;
}

}  // namespace ramcalc

#endif  // RAMCALC_CONDUCTOR_HPP
