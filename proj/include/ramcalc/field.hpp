#ifndef RAMCALC_FIELD_HPP
#define RAMCALC_FIELD_HPP

#include <climits>
#include <map>
#include <optional>
#include <utility>

#include "ramcalc/fq.hpp"

namespace ramcalc {

// K_{a,b} = F_q(x^(1/p^a))((y^(1/p^b))) restricted to finite sums of
// monomials in the internal coordinates u = x^(1/p^a), w = y^(1/p^b).
// The valuation is normalized by v(w) = 1, so v(y) = p^b.
struct FieldDesc {
  FqSpec fq;
  int a = 0;
  int b = 0;

  bool operator==(const FieldDesc&) const = default;
};

inline FieldDesc field_make(std::uint64_t p, int m, int a, int b) {
  if (a < 0 || b < 0 || a > 12 || b > 12)
    throw std::domain_error("field_make: root depth out of range");
  FieldDesc d{fq_make(p, m), a, b};
  checked_pow(p, a, "field_make");  // reject overflowing depths up front
  checked_pow(p, b, "field_make");
  return d;
}

// exponent key (beta, alpha): canonical ordering puts deepest poles first
using MonoKey = std::pair<long long, long long>;

struct FieldElem {
  FieldDesc field;
  std::map<MonoKey, FqElem> terms;  // never stores zero coefficients

  bool operator==(const FieldElem&) const = default;
};

inline FieldElem fe_zero(const FieldDesc& f) { return FieldElem{f, {}}; }

inline bool fe_is_zero(const FieldElem& x) { return x.terms.empty(); }

inline void fe_accumulate(FieldElem& x, long long alpha, long long beta, const FqElem& c) {
  if (fq_is_zero(c)) return;
  MonoKey k{beta, alpha};
  auto it = x.terms.find(k);
  if (it == x.terms.end()) {
    x.terms.emplace(k, c);
  } else {
    it->second = fq_add(x.field.fq, it->second, c);
    if (fq_is_zero(it->second)) x.terms.erase(it);
  }
}

inline FieldElem fe_term(const FieldDesc& f, const FqElem& c, long long alpha, long long beta) {
  FieldElem x = fe_zero(f);
  fe_accumulate(x, alpha, beta, c);
  return x;
}

namespace detail {
inline void check_same_field(const FieldElem& x, const FieldElem& y) {
  if (!(x.field == y.field))
    throw std::invalid_argument("field mismatch between operands");
}
}  // namespace detail

inline FieldElem fe_add(const FieldElem& x, const FieldElem& y) {
  detail::check_same_field(x, y);
  FieldElem r = x;
  for (auto& [k, c] : y.terms) fe_accumulate(r, k.second, k.first, c);
  return r;
}

inline FieldElem fe_neg(const FieldElem& x) {
  FieldElem r = x;
  for (auto& [k, c] : r.terms) c = fq_neg(x.field.fq, c);
  return r;
}

inline FieldElem fe_sub(const FieldElem& x, const FieldElem& y) {
  return fe_add(x, fe_neg(y));
}

inline FieldElem fe_mul(const FieldElem& x, const FieldElem& y) {
  detail::check_same_field(x, y);
  FieldElem r = fe_zero(x.field);
  for (auto& [kx, cx] : x.terms)
    for (auto& [ky, cy] : y.terms)
      fe_accumulate(r, kx.second + ky.second, kx.first + ky.first,
                    fq_mul(x.field.fq, cx, cy));
  return r;
}

inline FieldElem fe_scale(const FieldElem& x, const FqElem& c) {
  FieldElem r = fe_zero(x.field);
  for (auto& [k, cx] : x.terms)
    fe_accumulate(r, k.second, k.first, fq_mul(x.field.fq, cx, c));
  return r;
}

// w-adic valuation; disengaged (+infinity) for zero
inline std::optional<long long> valuation(const FieldElem& x) {
  if (x.terms.empty()) return std::nullopt;
  return x.terms.begin()->first.first;  // smallest beta
}

// sum of the terms with beta == -level
inline FieldElem leading_part(const FieldElem& x, long long level) {
  FieldElem r = fe_zero(x.field);
  auto lo = x.terms.lower_bound({-level, LLONG_MIN});
  auto hi = x.terms.upper_bound({-level, LLONG_MAX});
  for (auto it = lo; it != hi; ++it)
    r.terms.emplace(it->first, it->second);
  return r;
}

inline FieldElem frobenius_power(const FieldElem& x, int n) {
  if (n < 0) throw std::domain_error("frobenius_power: negative exponent");
  long long scale = (long long)checked_pow(x.field.fq.p, n, "frobenius_power");
  FieldElem r = fe_zero(x.field);
  for (auto& [k, c] : x.terms)
    fe_accumulate(r, k.second * scale, k.first * scale, fq_frobenius_n(x.field.fq, c, n));
  return r;
}

// termwise p-th root; exists iff p divides every exponent pair
inline std::optional<FieldElem> fe_pth_root(const FieldElem& x) {
  long long p = (long long)x.field.fq.p;
  FieldElem r = fe_zero(x.field);
  for (auto& [k, c] : x.terms) {
    if (k.first % p != 0 || k.second % p != 0) return std::nullopt;
    fe_accumulate(r, k.second / p, k.first / p, fq_pth_root(x.field.fq, c));
  }
  return r;
}

// canonical inclusion K_{a,b} -> K_{a',b'}: u = u'^(p^(a'-a)), w = w'^(p^(b'-b))
inline FieldElem embed(const FieldElem& x, const FieldDesc& to) {
  if (!(x.field.fq == to.fq) || to.a < x.field.a || to.b < x.field.b)
    throw std::domain_error("embed: target is not an overfield");
  long long su = (long long)checked_pow(to.fq.p, to.a - x.field.a, "embed");
  long long sw = (long long)checked_pow(to.fq.p, to.b - x.field.b, "embed");
  FieldElem r = fe_zero(to);
  for (auto& [k, c] : x.terms)
    fe_accumulate(r, k.second * su, k.first * sw, c);
  return r;
}

}  // namespace ramcalc

#endif
