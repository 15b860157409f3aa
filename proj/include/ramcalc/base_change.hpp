#ifndef RAMCALC_BASE_CHANGE_HPP
#define RAMCALC_BASE_CHANGE_HPP

// Purely inseparable base change K_{a,b} c K_{a+da,b+db}, the transport and
// descent of characters along it, and the checkers that compare conductors
// and characteristic forms across the two fields.

#include <map>
#include <stdexcept>
#include <string>

#include "ramcalc/conductor.hpp"

namespace ramcalc {

struct ExtensionDesc {
  FieldDesc base, top;
  int da = 0, db = 0;
  long long degree = 1;  // p^(da+db)
  long long e = 1;       // ramification index p^db of the w-line
  int n = 0;             // exponent: max(da, db); Frobenius power of descent
  int t = 0;             // twist: min(da, db)
  long long s = 1;       // strictness index p^(db - t), scales upper bounds
  long long f_dual = 1;  // dual index p^(n - db), scales descent bounds
  bool untwisted = true; // t == 0
};

inline ExtensionDesc ext_make(const FieldDesc& base, int da, int db) {
  if (da < 0 || db < 0) throw std::domain_error("ext_make: negative depth step");
  ExtensionDesc x;
  x.base = base;
  x.top = field_make(base.fq.p, base.fq.m, base.a + da, base.b + db);
  x.da = da;
  x.db = db;
  x.degree = checked_pow(base.fq.p, da + db, "extension degree");
  x.e = checked_pow(base.fq.p, db, "ramification index");
  x.n = std::max(da, db);
  x.t = std::min(da, db);
  x.s = checked_pow(base.fq.p, db - x.t, "strictness index");
  x.f_dual = checked_pow(base.fq.p, x.n - db, "dual index");
  x.untwisted = x.t == 0;
  return x;
}

inline ExtensionDesc ext_between(const FieldDesc& base, const FieldDesc& top) {
  if (top.fq != base.fq || top.a < base.a || top.b < base.b)
    throw std::domain_error("ext_between: fields are not nested");
  return ext_make(base, top.a - base.a, top.b - base.b);
}

// Pull a character up along the inclusion: embed and re-reduce.
inline ASCharacter transport(const ASCharacter& c, const ExtensionDesc& ext) {
  if (c.rep.field != ext.base)
    throw std::invalid_argument("transport: character lives over a different field");
  return make_character(embed(c.rep, ext.top));
}

// Push a character down.  K is not contained in the image of K' under any
// power of Frobenius smaller than n, so descent raises the representative to
// the p^n and reads the exponents in the coarser coordinates.
inline ASCharacter descend(const ASCharacter& c, const ExtensionDesc& ext) {
  if (c.rep.field != ext.top)
    throw std::invalid_argument("descend: character lives over a different field");
  long long su = checked_pow(ext.base.fq.p, ext.n - ext.da, "descent scale");
  long long sw_ = checked_pow(ext.base.fq.p, ext.n - ext.db, "descent scale");
  FieldElem down = fe_zero(ext.base);
  for (const auto& [key, coeff] : c.rep.terms)
    fe_accumulate(down, key.second * su, key.first * sw_,
                  fq_frobenius_n(ext.base.fq, coeff, ext.n));
  return make_character(down);
}

enum class CheckStatus { pass, equality, degenerate, discrepancy, fail };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::equality: return "equality";
    case CheckStatus::degenerate: return "degenerate";
    case CheckStatus::discrepancy: return "discrepancy";
    case CheckStatus::fail: return "fail";
  }
  return "?";
}

struct CheckReport {
  std::string theorem;
  CheckStatus status = CheckStatus::pass;
  std::map<std::string, long long> lhs, rhs, bound, slack;
  std::map<std::string, std::string> notes;
};

// Conductors can only grow by the strictness index under transport.
inline CheckReport check_thm_right(const ASCharacter& c, const ExtensionDesc& ext) {
  ASCharacter ct = transport(c, ext);
  long long sw0 = swan(c), dt0 = total_dim(c);
  long long sw1 = swan(ct), dt1 = total_dim(ct);
  CheckReport r;
  r.theorem = "right";
  r.lhs = {{"sw", sw1}, {"dt", dt1}};
  r.bound = {{"sw", ext.s * sw0}, {"dt", ext.s * dt0}};
  r.slack = {{"sw", ext.s * sw0 - sw1}, {"dt", ext.s * dt0 - dt1}};
  if (sw1 > ext.s * sw0 || dt1 > ext.s * dt0)
    r.status = CheckStatus::fail;
  else if (sw0 > 0 && sw1 == ext.s * sw0 && dt1 == ext.s * dt0)
    r.status = CheckStatus::equality;
  return r;
}

// Conductors of the descended character are controlled by the dual index.
inline CheckReport check_thm_left(const ASCharacter& c, const ExtensionDesc& ext) {
  ASCharacter cd = descend(c, ext);
  long long sw1 = swan(c), dt1 = total_dim(c);
  long long sw0 = swan(cd), dt0 = total_dim(cd);
  CheckReport r;
  r.theorem = "left";
  r.lhs = {{"sw", sw0}, {"dt", dt0}};
  r.bound = {{"sw", ext.f_dual * sw1}, {"dt", ext.f_dual * dt1}};
  r.slack = {{"sw", ext.f_dual * sw1 - sw0}, {"dt", ext.f_dual * dt1 - dt0}};
  if (sw0 > ext.f_dual * sw1 || dt0 > ext.f_dual * dt1)
    r.status = CheckStatus::fail;
  else if (sw1 > 0 && sw0 == ext.f_dual * sw1 && dt0 == ext.f_dual * dt1)
    r.status = CheckStatus::equality;
  return r;
}

// Along the diagonal extension both conductors are Frobenius-invariant: the
// transported character reproduces them in the deeper field's own
// normalization, on the nose.
inline CheckReport check_frobenius(const ASCharacter& c, int n) {
  if (n < 0) throw std::domain_error("check_frobenius: negative power");
  ExtensionDesc ext = ext_make(c.rep.field, n, n);
  ASCharacter ct = transport(c, ext);
  CheckReport r;
  r.theorem = "frobenius";
  r.lhs = {{"sw", swan(ct)}, {"dt", total_dim(ct)}};
  r.rhs = {{"sw", swan(c)}, {"dt", total_dim(c)}};
  r.status = r.lhs == r.rhs ? CheckStatus::equality : CheckStatus::fail;
  return r;
}

// The characteristic form of the transported character against the pullback
// of the characteristic form, both read in degree e * dt.  The two agree
// whenever the pullback survives; when the pullback dies the transported
// form has genuinely smaller degree and both sides vanish.
inline CheckReport check_theta(const ASCharacter& c, const ExtensionDesc& ext) {
  GradedForm cf = char_form(c);
  ASCharacter ct = transport(c, ext);
  GradedForm cft = char_form(ct);
  long long level = ext.e * cf.level;
  DifferentialForm lhs = omega_leading(cft.form, level);
  DifferentialForm rhs = omega_leading(theta_map(cf.form, ext.top), level);
  CheckReport r;
  r.theorem = "theta";
  r.lhs = {{"level", level}, {"dt", cft.level}};
  r.rhs = {{"level", level}, {"dt", ext.e * cf.level}};
  r.notes["lhs_form"] = form_to_string(lhs);
  r.notes["rhs_form"] = form_to_string(rhs);
  if (!(lhs == rhs))
    r.status = CheckStatus::fail;
  else if (form_is_zero(lhs))
    r.status = CheckStatus::degenerate;
  return r;
}

// The induced map on differentials against descent of the characteristic
// form.  For a genuine depth increase the induced map is identically zero,
// so the diagram can only commute when the descended form also vanishes in
// the comparison degree f_dual * dt; when it survives there the two sides
// genuinely disagree, which is reported, not failed.
inline CheckReport check_sigma(const ASCharacter& c, const ExtensionDesc& ext) {
  if (c.rep.field != ext.top)
    throw std::invalid_argument("check_sigma: character lives over a different field");
  GradedForm cf = char_form(c);  // requires ramified input
  CheckReport r;
  r.theorem = "sigma";
  if (ext.n == 0) {
    r.status = CheckStatus::pass;
    r.notes["sigma_state"] = "commutes";
    r.notes["lhs_form"] = form_to_string(cf.form);
    r.notes["rhs_form"] = form_to_string(cf.form);
    r.lhs = {{"level", cf.level}};
    r.rhs = {{"level", cf.level}};
    return r;
  }
  ASCharacter cd = descend(c, ext);
  long long level = ext.f_dual * cf.level;
  GradedForm cfd = char_form(cd);
  DifferentialForm lhs = omega_leading(cfd.form, level);
  SigmaResult rhs = sigma_map(cf.form, ext.base);
  r.lhs = {{"level", level}, {"dt", cfd.level}};
  r.rhs = {{"level", level}};
  r.notes["lhs_form"] = form_to_string(lhs);
  r.notes["rhs_form"] = form_to_string(rhs.form);
  if (form_is_zero(lhs)) {
    r.status = CheckStatus::degenerate;
    r.notes["sigma_state"] = "commutes-degenerately";
  } else {
    r.status = CheckStatus::discrepancy;
    r.notes["sigma_state"] = "discrepancy";
  }
  return r;
}

}  // namespace ramcalc

#endif  // RAMCALC_BASE_CHANGE_HPP
