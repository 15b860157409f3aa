#ifndef RAMCALC_DIFFERENTIAL_HPP
#define RAMCALC_DIFFERENTIAL_HPP

// Rank-one differential forms over K_{a,b}, spanned by the internal
// coordinate differentials.  Two bases are supported:
//   ordinary: c_du * du + c_dw * dw
//   logw:     c_du * du + c_dl * dlog(w)      (dlog(w) = dw / w)
// Order computations treat the basis covectors as order zero, so the two
// bases induce different gradings; callers pick the basis their invariant
// is defined in.

#include <stdexcept>
#include <string>

#include "ramcalc/parse.hpp"

namespace ramcalc {

enum class FormBasis { ordinary, logw };

struct DifferentialForm {
  FieldDesc field;
  FormBasis basis = FormBasis::ordinary;
  FieldElem cdu;  // coefficient of du
  FieldElem c2;   // coefficient of dw (ordinary) or dlog w (logw)

  bool operator==(const DifferentialForm&) const = default;
};

inline DifferentialForm form_zero(const FieldDesc& field,
                                  FormBasis basis = FormBasis::ordinary) {
  return {field, basis, fe_zero(field), fe_zero(field)};
}

inline bool form_is_zero(const DifferentialForm& f) {
  return fe_is_zero(f.cdu) && fe_is_zero(f.c2);
}

inline DifferentialForm form_neg(const DifferentialForm& f) {
  return {f.field, f.basis, fe_neg(f.cdu), fe_neg(f.c2)};
}

inline DifferentialForm form_add(const DifferentialForm& f,
                                 const DifferentialForm& g) {
  detail::check_same_field(f.cdu, g.cdu);
  if (f.basis != g.basis)
    throw std::invalid_argument("cannot add forms in different bases");
  return {f.field, f.basis, fe_add(f.cdu, g.cdu), fe_add(f.c2, g.c2)};
}

inline DifferentialForm form_scale(const FieldElem& s,
                                   const DifferentialForm& f) {
  detail::check_same_field(s, f.cdu);
  return {f.field, f.basis, fe_mul(s, f.cdu), fe_mul(s, f.c2)};
}

namespace detail {

inline FieldElem fe_shift_w(const FieldElem& x, long long k) {
  FieldElem out = fe_zero(x.field);
  for (const auto& [key, c] : x.terms)
    out.terms.emplace(MonoKey{key.first + k, key.second}, c);
  return out;
}

}  // namespace detail

// Exterior derivative of a field element.  Exponents reduce mod p, so
// p-th powers die and only the residues of the exponents matter.
inline DifferentialForm d(const FieldElem& x,
                          FormBasis basis = FormBasis::ordinary) {
  const std::uint64_t p = x.field.fq.p;
  DifferentialForm out = form_zero(x.field, basis);
  for (const auto& [key, c] : x.terms) {
    const auto [beta, alpha] = key;
    long long am = ((alpha % (long long)p) + (long long)p) % (long long)p;
    long long bm = ((beta % (long long)p) + (long long)p) % (long long)p;
    if (am != 0)
      fe_accumulate(out.cdu, alpha - 1, beta,
                    fq_mul(x.field.fq, fq_from_int(x.field.fq, am), c));
    if (bm != 0) {
      long long b2 = basis == FormBasis::ordinary ? beta - 1 : beta;
      fe_accumulate(out.c2, alpha, b2,
                    fq_mul(x.field.fq, fq_from_int(x.field.fq, bm), c));
    }
  }
  return out;
}

// Order of a form: the w-adic valuation of its coefficient pair, the basis
// covectors counting as order zero.
inline std::optional<long long> omega_valuation(const DifferentialForm& f) {
  auto v1 = valuation(f.cdu), v2 = valuation(f.c2);
  if (!v1) return v2;
  if (!v2) return v1;
  return std::min(*v1, *v2);
}

// Graded piece of a form at pole depth `level`: keep exactly the monomials
// of w-valuation -level in each coefficient.
inline DifferentialForm omega_leading(const DifferentialForm& f,
                                      long long level) {
  return {f.field, f.basis, leading_part(f.cdu, level),
          leading_part(f.c2, level)};
}

// A form remembered together with the pole depth it was extracted at.
struct GradedForm {
  DifferentialForm form;
  long long level = 0;

  bool operator==(const GradedForm&) const = default;
};

inline DifferentialForm to_logw(const DifferentialForm& f) {
  if (f.basis == FormBasis::logw) return f;
  // c * dw = (c * w) * dlog w
  return {f.field, FormBasis::logw, f.cdu, detail::fe_shift_w(f.c2, 1)};
}

inline DifferentialForm to_ordinary(const DifferentialForm& f) {
  if (f.basis == FormBasis::ordinary) return f;
  return {f.field, FormBasis::ordinary, f.cdu, detail::fe_shift_w(f.c2, -1)};
}

// Pullback of an ordinary form along K_{a,b} -> K_{a',b'}.  The internal
// coordinates are related by u = u'^(p^da), w = w'^(p^db), so du (resp. dw)
// pulls back to zero as soon as the u-depth (resp. w-depth) grows.
inline DifferentialForm theta_map(const DifferentialForm& f,
                                  const FieldDesc& to) {
  if (f.basis != FormBasis::ordinary)
    throw std::invalid_argument("theta_map expects the ordinary basis");
  if (to.fq != f.field.fq || to.a < f.field.a || to.b < f.field.b)
    throw std::domain_error("theta_map: target is not an overfield");
  DifferentialForm out = form_zero(to, FormBasis::ordinary);
  if (to.a == f.field.a) out.cdu = embed(f.cdu, to);
  if (to.b == f.field.b) out.c2 = embed(f.c2, to);
  return out;
}

// Push-down of a form along the inclusion K_{a,b} c K_{a',b'}: the induced
// map on differentials.  The extension is purely inseparable, so the map is
// identically zero whenever the depth actually grows.
struct SigmaResult {
  DifferentialForm form;
  bool identically_zero = false;
};

inline SigmaResult sigma_map(const DifferentialForm& f,
                             const FieldDesc& down) {
  if (down.fq != f.field.fq || down.a > f.field.a || down.b > f.field.b)
    throw std::domain_error("sigma_map: target is not a subfield");
  int n = std::max(f.field.a - down.a, f.field.b - down.b);
  if (n == 0) return {f, false};
  return {form_zero(down, f.basis), true};
}

inline std::string form_to_string(const DifferentialForm& f) {
  const char* second = f.basis == FormBasis::ordinary ? "dw" : "dlog(w)";
  std::string out;
  if (!fe_is_zero(f.cdu)) out += "(" + to_internal_string(f.cdu) + ")*du";
  if (!fe_is_zero(f.c2)) {
    if (!out.empty()) out += " + ";
    out += "(" + to_internal_string(f.c2) + ")*" + second;
  }
  return out.empty() ? "0" : out;
}

}  // namespace ramcalc

#endif  // RAMCALC_DIFFERENTIAL_HPP
