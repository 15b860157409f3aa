#ifndef RAMCALC_ARTIN_SCHREIER_HPP
#define RAMCALC_ARTIN_SCHREIER_HPP

// Characters of the absolute Galois group cut out by t^p - t = f.  Two
// right-hand sides define the same character iff they differ by g^p - g,
// so everything here works with a canonical representative of that class.
//
// A pole monomial c u^alpha w^beta is "pure" when both exponents are
// divisible by p; it is then the p-th power of a monomial X, and since
// X^p = X + (X^p - X) it can be replaced by X without moving the class.
// Iterating termwise until no pure pole monomial remains is confluent (the
// strip of one term never unlocks or blocks the strip of another, merges
// only add coefficients), so the fixed point is canonical.

#include <map>

#include "ramcalc/field.hpp"

namespace ramcalc {

struct ReductionResult {
  FieldElem reduced;
  FieldElem witness;  // input = reduced + (witness^p - witness)
};

inline bool term_is_pure_pole(std::uint64_t p, long long alpha, long long beta) {
  return beta < 0 && beta % (long long)p == 0 && alpha % (long long)p == 0;
}

inline ReductionResult as_reduce(const FieldElem& x) {
  const std::uint64_t p = x.field.fq.p;
  FieldElem f = x;
  FieldElem g = fe_zero(x.field);
  for (;;) {
    // snapshot the pure pole monomials of this pass, then strip them all
    std::vector<std::pair<MonoKey, FqElem>> pure;
    for (const auto& [key, c] : f.terms)
      if (term_is_pure_pole(p, key.second, key.first)) pure.emplace_back(key, c);
    if (pure.empty()) break;
    for (const auto& [key, c] : pure) {
      FqElem root = fq_pth_root(x.field.fq, c);
      long long beta = key.first / (long long)p;
      long long alpha = key.second / (long long)p;
      fe_accumulate(f, key.second, key.first, fq_neg(x.field.fq, c));
      fe_accumulate(f, alpha, beta, root);
      fe_accumulate(g, alpha, beta, root);
    }
  }
  return {f, g};
}

inline bool is_reduced(const FieldElem& x) {
  for (const auto& [key, c] : x.terms)
    if (term_is_pure_pole(x.field.fq.p, key.second, key.first)) return false;
  return true;
}

struct ASCharacter {
  FieldElem rep;      // canonical reduced representative
  FieldElem witness;  // original input = rep + (witness^p - witness)

  bool operator==(const ASCharacter& o) const { return rep == o.rep; }
};

inline ASCharacter make_character(const FieldElem& f) {
  ReductionResult r = as_reduce(f);
  return {r.reduced, r.witness};
}

inline ASCharacter char_add(const ASCharacter& c1, const ASCharacter& c2) {
  return make_character(fe_add(c1.rep, c2.rep));
}

inline ASCharacter char_neg(const ASCharacter& c) {
  return make_character(fe_neg(c.rep));
}

// The w-polar part of the representative; this is the slice the canonical
// reduction fully normalizes, and the only one conductors can see.
inline FieldElem pole_part(const FieldElem& x) {
  FieldElem out = fe_zero(x.field);
  for (const auto& [key, c] : x.terms)
    if (key.first < 0) out.terms.emplace(key, c);
  return out;
}

enum class Classification { trivial, unramified_nontrivial, ramified };

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::trivial: return "trivial";
    case Classification::unramified_nontrivial: return "unramified_nontrivial";
    case Classification::ramified: return "ramified";
  }
  return "?";
}

// Decide triviality / ramification of the character.  A w-pole in the
// canonical representative means ramified.  Otherwise only the w-degree-zero
// slice matters (positive powers of w are solvable by successive
// approximation); that slice is a Laurent polynomial over F_q in u, which is
// reduced the same way one dimension down, leaving only exponents prime to p
// and a constant that survives iff its absolute trace is nonzero.
inline Classification classify(const ASCharacter& c) {
  const FieldDesc& field = c.rep.field;
  const std::uint64_t p = field.fq.p;
  auto v = valuation(c.rep);
  if (v && *v < 0) return Classification::ramified;

  std::map<long long, FqElem> slice;
  for (const auto& [key, coeff] : c.rep.terms)
    if (key.first == 0) slice.emplace(key.second, coeff);
  auto bump = [&](long long alpha, const FqElem& x) {
    auto [it, fresh] = slice.emplace(alpha, x);
    if (!fresh) {
      it->second = fq_add(field.fq, it->second, x);
      if (fq_is_zero(it->second)) slice.erase(it);
    }
  };
  for (;;) {
    std::vector<std::pair<long long, FqElem>> pure;
    for (const auto& [alpha, coeff] : slice)
      if (alpha != 0 && alpha % (long long)p == 0) pure.emplace_back(alpha, coeff);
    if (pure.empty()) break;
    // subtract the snapshot, don't erase: a root from the same pass may
    // already have merged into this exponent
    for (const auto& [alpha, coeff] : pure) {
      bump(alpha, fq_neg(field.fq, coeff));
      bump(alpha / (long long)p, fq_pth_root(field.fq, coeff));
    }
  }
  auto cst = slice.find(0);
  if (cst != slice.end() && fq_trace(field.fq, cst->second) == 0) slice.erase(cst);
  return slice.empty() ? Classification::trivial
                       : Classification::unramified_nontrivial;
}

// Equality of characters, not of representatives: the difference must be
// trivial.  Representatives of one class always share their polar part but
// may disagree in degrees >= 0 (a term and its p-th power, say).
inline bool same_character(const ASCharacter& a, const ASCharacter& b) {
  return classify(char_add(a, char_neg(b))) == Classification::trivial;
}

}  // namespace ramcalc

#endif  // RAMCALC_ARTIN_SCHREIER_HPP
