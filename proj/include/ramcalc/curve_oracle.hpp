#ifndef RAMCALC_CURVE_ORACLE_HPP
#define RAMCALC_CURVE_ORACLE_HPP

// Independent cross-check of the symbolic conductors: pull the character
// back along test curves  u <- c(s), w <- s^mu  into a one-variable Laurent
// field F((s)), where the conductor drops to classical one-dimensional
// computations, and compare the per-mu ratios against the symbolic values.
//
// A curve is admissible for a character only when the substitution cannot
// manufacture poles out of coefficients: if the representative carries a
// negative u-exponent, c(s) must be a unit of F[[s]].  The search enlarges
// the constant field once (degree two) because attainment of the bounds can
// genuinely require constants outside F_q.

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramcalc/conductor.hpp"

namespace ramcalc {

inline constexpr long long S1_EXACT = 1LL << 50;

// Laurent series in s, exact below `prec`, unknown from `prec` on.
struct Series1 {
  FqSpec fq;
  std::map<long long, FqElem> terms;
  long long prec = S1_EXACT;
};

inline Series1 s1_zero(const FqSpec& fq, long long prec = S1_EXACT) {
  return {fq, {}, prec};
}

inline void s1_accumulate(Series1& x, long long e, const FqElem& c) {
  if (e >= x.prec || fq_is_zero(c)) return;
  auto [it, fresh] = x.terms.emplace(e, c);
  if (!fresh) {
    it->second = fq_add(x.fq, it->second, c);
    if (fq_is_zero(it->second)) x.terms.erase(it);
  }
}

// order of the leading exact term; falls back to prec for a blank series
inline long long s1_ord(const Series1& x) {
  return x.terms.empty() ? x.prec : x.terms.begin()->first;
}

inline long long s1_sat(long long a, long long b) {
  return std::min(a + b, S1_EXACT);
}

inline Series1 s1_add(const Series1& a, const Series1& b) {
  Series1 out = s1_zero(a.fq, std::min(a.prec, b.prec));
  for (const auto& [e, c] : a.terms) s1_accumulate(out, e, c);
  for (const auto& [e, c] : b.terms) s1_accumulate(out, e, c);
  return out;
}

inline Series1 s1_scale(const FqElem& c, const Series1& a) {
  Series1 out = s1_zero(a.fq, a.prec);
  for (const auto& [e, x] : a.terms) s1_accumulate(out, e, fq_mul(a.fq, c, x));
  return out;
}

inline Series1 s1_shift(const Series1& a, long long k) {
  Series1 out = s1_zero(a.fq, s1_sat(a.prec, k));
  for (const auto& [e, c] : a.terms) out.terms.emplace(e + k, c);
  return out;
}

inline Series1 s1_mul(const Series1& a, const Series1& b,
                      long long cap = S1_EXACT) {
  long long prec =
      std::min({cap, s1_sat(a.prec, s1_ord(b)), s1_sat(b.prec, s1_ord(a))});
  Series1 out = s1_zero(a.fq, prec);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      s1_accumulate(out, ea + eb, fq_mul(a.fq, ca, cb));
  return out;
}

// reciprocal of an exactly-known series, computed below `target`
inline Series1 s1_invert(const Series1& x, long long target) {
  if (x.prec != S1_EXACT)
    throw std::invalid_argument("s1_invert: series must be exact");
  if (x.terms.empty()) throw std::domain_error("s1_invert: zero series");
  long long d = s1_ord(x);
  // unit part u = x * s^-d, schoolbook inverse v with u * v = 1
  std::vector<std::pair<long long, FqElem>> u(x.terms.begin(), x.terms.end());
  FqElem u0inv = fq_inv(x.fq, u.front().second);
  Series1 v = s1_zero(x.fq, s1_sat(target, d));
  long long vdeg = target + d;  // need exponents of v below this
  std::map<long long, FqElem> vt;
  for (long long j = 0; j < vdeg; ++j) {
    FqElem acc = j == 0 ? fq_one(x.fq) : fq_zero(x.fq);
    for (const auto& [eu, cu] : u) {
      long long i = eu - d;
      if (i <= 0 || i > j) continue;
      auto it = vt.find(j - i);
      if (it == vt.end()) continue;
      acc = fq_sub(x.fq, acc, fq_mul(x.fq, cu, it->second));
    }
    FqElem vj = fq_mul(x.fq, u0inv, acc);
    if (!fq_is_zero(vj)) vt.emplace(j, vj);
  }
  for (const auto& [j, c] : vt) s1_accumulate(v, j - d, c);
  return v;
}

inline Series1 s1_pow(const Series1& x, long long e, long long cap) {
  if (e < 0) return s1_pow(s1_invert(x, cap), -e, cap);
  Series1 acc = s1_zero(x.fq, cap);
  s1_accumulate(acc, 0, fq_one(x.fq));
  Series1 base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = s1_mul(acc, base, cap);
    if (e > 1) base = s1_mul(base, base, cap);
  }
  return acc;
}

// Substitute u <- c(s), w <- s^mu.  The coefficients of the representative
// are embedded into the (possibly larger) constant field of the curve via
// `root`, the image of the generator.  Exact below `target`.
inline Series1 restrict_to_curve(const FieldElem& f, const Series1& c,
                                 long long mu, const FqElem& root,
                                 long long target = 1) {
  if (mu < 1) throw std::domain_error("restrict_to_curve: mu must be positive");
  long long oc = s1_ord(c);
  if (oc < 0)
    throw std::domain_error("restrict_to_curve: curve leaves the surface");
  Series1 out = s1_zero(c.fq, target);
  for (const auto& [key, coeff] : f.terms) {
    const auto [beta, alpha] = key;
    if (alpha < 0 && oc > 0)
      throw std::domain_error(
          "restrict_to_curve: coefficient pole along the curve");
    long long min_exp = mu * beta + (alpha > 0 ? alpha * oc : 0);
    if (min_exp >= target) continue;
    Series1 piece = s1_pow(c, alpha, target - mu * beta);
    piece = s1_shift(piece, mu * beta);
    piece = s1_scale(fq_embed_into(f.field.fq, c.fq, root, coeff), piece);
    out = s1_add(out, piece);
  }
  out.prec = std::min(out.prec, target);
  return out;
}

struct Cond1 {
  long long sw = 0;
  long long dt = 0;
};

// One-dimensional conductors of t^p - t = series: strip p-th-power pole
// terms, then the Swan conductor is the pole depth and the total dimension
// exceeds it by exactly one for ramified classes.
inline Cond1 conductors_1d(const Series1& x) {
  if (x.prec < 0)
    throw std::invalid_argument("conductors_1d: pole part is not exact");
  const long long p = (long long)x.fq.p;
  std::map<long long, FqElem> pole;
  for (const auto& [e, c] : x.terms)
    if (e < 0) pole.emplace(e, c);
  auto bump = [&](long long e, const FqElem& c) {
    auto [it, fresh] = pole.emplace(e, c);
    if (!fresh) {
      it->second = fq_add(x.fq, it->second, c);
      if (fq_is_zero(it->second)) pole.erase(it);
    }
  };
  for (;;) {
    std::vector<std::pair<long long, FqElem>> pure;
    for (const auto& [e, c] : pole)
      if (e % p == 0) pure.emplace_back(e, c);
    if (pure.empty()) break;
    // subtract the snapshotted coefficient rather than erase: an earlier
    // strip in the same pass may already have merged into this exponent
    for (const auto& [e, c] : pure) {
      bump(e, fq_neg(x.fq, c));
      bump(e / p, fq_pth_root(x.fq, c));
    }
  }
  if (pole.empty()) return {0, 0};
  long long sw = -pole.begin()->first;
  return {sw, sw + 1};
}

// exact nonnegative-denominator rational, for per-mu ratios
struct Rat {
  long long num = 0;
  long long den = 1;
};

inline Rat rat_make(long long num, long long den) {
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

inline bool rat_less(const Rat& a, const Rat& b) {
  return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

inline bool rat_leq_int(const Rat& a, long long n) {
  return (__int128)a.num <= (__int128)n * a.den;
}

inline long long rat_ceil(const Rat& a) {
  long long q = a.num / a.den;
  if (q * a.den < a.num) ++q;
  return q;
}

struct OracleBounds {
  int mu_max = 3;
  int deg_max = 3;
  int trials = 50;
  std::uint64_t seed = 1;
};

struct CurveWitness {
  std::string curve;  // rendered c(s)
  long long mu = 1;
  Cond1 cond;
};

struct OracleResult {
  Rat sw_ratio;  // max over admissible curves of sw_1d / mu
  Rat dt_ratio;  // max of dt_1d / mu
  long long sw_ceil = 0, dt_ceil = 0;
  CurveWitness sw_witness, dt_witness;
  long long curves_tried = 0;
};

namespace detail {

inline std::string s1_render(const Series1& c) {
  std::string out;
  for (const auto& [e, coeff] : c.terms) {
    if (!out.empty()) out += " + ";
    out += fq_to_string(c.fq, coeff);
    if (e == 1) out += "*s";
    else if (e != 0) out += "*s^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

struct OracleSearch {
  const FieldElem& f;
  OracleResult& res;
  bool has_negative_alpha = false;

  void try_curve(const Series1& c, long long mu) {
    Series1 r = restrict_to_curve(f, c, mu, root_for(c.fq), 1);
    Cond1 cond = conductors_1d(r);
    ++res.curves_tried;
    Rat rs = rat_make(cond.sw, mu), rd = rat_make(cond.dt, mu);
    if (rat_less(res.sw_ratio, rs)) {
      res.sw_ratio = rs;
      res.sw_witness = {s1_render(c), mu, cond};
    }
    if (rat_less(res.dt_ratio, rd)) {
      res.dt_ratio = rd;
      res.dt_witness = {s1_render(c), mu, cond};
    }
  }

  // embedding roots, cached per constant field
  std::vector<std::pair<FqSpec, FqElem>> roots;
  const FqElem& root_for(const FqSpec& big) {
    for (const auto& [spec, r] : roots)
      if (spec == big) return r;
    roots.emplace_back(big, fq_embedding_root(f.field.fq, big));
    return roots.back().second;
  }
};

}  // namespace detail

inline OracleResult oracle_conductor(const ASCharacter& ch,
                                     const OracleBounds& bounds = {}) {
  const FqSpec& fq = ch.rep.field.fq;
  OracleResult res;
  detail::OracleSearch search{ch.rep, res};
  for (const auto& [key, c] : ch.rep.terms)
    if (key.second < 0) search.has_negative_alpha = true;

  std::vector<FqSpec> consts{fq, fq_make(fq.p, 2 * fq.m)};
  for (const FqSpec& cf : consts) {
    std::vector<FqElem> elems = fq_elems(cf);
    std::vector<FqElem> nonzero(elems.begin() + 1, elems.end());
    for (long long mu = 1; mu <= bounds.mu_max; ++mu) {
      // monomial curves gamma * s^d
      for (long long dd = 0; dd <= bounds.deg_max; ++dd) {
        if (dd >= 1 && search.has_negative_alpha) continue;
        for (const FqElem& g : nonzero) {
          Series1 c = s1_zero(cf);
          s1_accumulate(c, dd, g);
          search.try_curve(c, mu);
        }
      }
      // binomial unit curves gamma0 + gamma1 * s^d, always admissible
      for (long long dd = 1; dd <= bounds.deg_max; ++dd)
        for (const FqElem& g0 : nonzero)
          for (const FqElem& g1 : nonzero) {
            Series1 c = s1_zero(cf);
            s1_accumulate(c, 0, g0);
            s1_accumulate(c, dd, g1);
            search.try_curve(c, mu);
          }
    }
  }

  // seeded random polynomial curves over the larger field
  std::mt19937_64 rng(bounds.seed);
  const FqSpec& big = consts.back();
  std::vector<FqElem> big_elems = fq_elems(big);
  for (int trial = 0; trial < bounds.trials; ++trial) {
    long long mu = 1 + (long long)(rng() % (std::uint64_t)bounds.mu_max);
    Series1 c = s1_zero(big);
    for (long long dd = 0; dd <= bounds.deg_max; ++dd)
      s1_accumulate(c, dd, big_elems[rng() % big_elems.size()]);
    if (search.has_negative_alpha && s1_ord(c) != 0) {
      FqElem unit = big_elems[1 + rng() % (big_elems.size() - 1)];
      s1_accumulate(c, 0, unit);
      if (s1_ord(c) != 0) continue;  // accumulated into zero; drop the trial
    }
    if (c.terms.empty()) continue;
    search.try_curve(c, mu);
  }

  res.sw_ceil = rat_ceil(res.sw_ratio);
  res.dt_ceil = rat_ceil(res.dt_ratio);
  return res;
}

}  // namespace ramcalc

#endif  // RAMCALC_CURVE_ORACLE_HPP
