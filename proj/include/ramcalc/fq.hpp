#ifndef RAMCALC_FQ_HPP
#define RAMCALC_FQ_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramcalc {

// Element of F_q = F_p[t]/(modulus): little-endian coefficient list of
// length m with entries in [0, p).
using FqElem = std::vector<std::uint64_t>;

struct FqSpec {
  std::uint64_t p = 0;
  int m = 0;
  FqElem modulus;  // low m coefficients of the monic degree-m modulus

  bool operator==(const FqSpec&) const = default;
};

namespace detail {

inline std::uint64_t mod_add(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  std::uint64_t s = x + y;
  return s >= p ? s - p : s;
}

inline std::uint64_t mod_sub(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return x >= y ? x - y : x + p - y;
}

// dense little-endian polynomials over F_p, used only for modulus search
inline void poly_trim(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic
inline std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a,
                                           const std::vector<std::uint64_t>& b,
                                           std::uint64_t p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = mod_sub(a[shift + j], lead * b[j] % p, p);
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline bool poly_is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const int m = int(f.size()) - 1;
  if (m == 1) return true;
  // trial division by every monic divisor of degree 1..m/2
  std::vector<std::uint64_t> g;
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      g.assign(std::size_t(d) + 1, 0);
      g[std::size_t(d)] = 1;
      std::uint64_t v = n;
      for (int i = 0; i < d; ++i) { g[std::size_t(i)] = v % p; v /= p; }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline std::uint64_t checked_pow(std::uint64_t base, int e, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > (std::uint64_t(1) << 62) / base)
      throw std::domain_error(std::string(what) + ": power overflow");
    r *= base;
  }
  return r;
}

// Smallest-prime-power field of characteristic p with q = p^m elements.
// The modulus is the monic irreducible whose little-endian coefficient
// list [c_0, ..., c_{m-1}] is lexicographically smallest; this makes the
// construction deterministic across runs and platforms.
inline FqSpec fq_make(std::uint64_t p, int m) {
  if (!detail::is_prime(p) || p < 3)
    throw std::domain_error("fq_make: p must be an odd prime >= 3");
  if (m < 1 || m > 16) throw std::domain_error("fq_make: bad extension degree");
  std::uint64_t total = checked_pow(p, m, "fq_make");
  for (std::uint64_t n = 0; n < total; ++n) {
    // c_{m-1} takes the fastest-varying digit, so candidates appear in
    // lexicographic order of [c_0, ..., c_{m-1}]
    std::vector<std::uint64_t> f(std::size_t(m) + 1, 0);
    f[std::size_t(m)] = 1;
    std::uint64_t v = n;
    for (int i = m - 1; i >= 0; --i) { f[std::size_t(i)] = v % p; v /= p; }
    if (detail::poly_is_irreducible(f, p))
      return FqSpec{p, m, FqElem(f.begin(), f.begin() + m)};
  }
  throw std::logic_error("fq_make: no irreducible found");  // unreachable
}

inline std::uint64_t fq_q(const FqSpec& s) { return checked_pow(s.p, s.m, "fq_q"); }

inline FqElem fq_zero(const FqSpec& s) { return FqElem(std::size_t(s.m), 0); }

inline FqElem fq_from_int(const FqSpec& s, long long v) {
  long long r = v % (long long)s.p;
  if (r < 0) r += (long long)s.p;
  FqElem x = fq_zero(s);
  x[0] = std::uint64_t(r);
  return x;
}

inline FqElem fq_one(const FqSpec& s) { return fq_from_int(s, 1); }

inline bool fq_is_zero(const FqElem& x) {
  for (auto c : x)
    if (c) return false;
  return true;
}

inline FqElem fq_add(const FqSpec& s, const FqElem& x, const FqElem& y) {
  FqElem r = fq_zero(s);
  for (int i = 0; i < s.m; ++i) r[i] = detail::mod_add(x[i], y[i], s.p);
  return r;
}

inline FqElem fq_neg(const FqSpec& s, const FqElem& x) {
  FqElem r = fq_zero(s);
  for (int i = 0; i < s.m; ++i) r[i] = x[i] ? s.p - x[i] : 0;
  return r;
}

inline FqElem fq_sub(const FqSpec& s, const FqElem& x, const FqElem& y) {
  FqElem r = fq_zero(s);
  for (int i = 0; i < s.m; ++i) r[i] = detail::mod_sub(x[i], y[i], s.p);
  return r;
}

inline FqElem fq_mul(const FqSpec& s, const FqElem& x, const FqElem& y) {
  std::vector<std::uint64_t> t(std::size_t(2 * s.m - 1), 0);
  for (int i = 0; i < s.m; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < s.m; ++j)
      t[std::size_t(i + j)] = detail::mod_add(t[std::size_t(i + j)], x[i] * y[j] % s.p, s.p);
  }
  // fold t^k for k >= m via t^m = -modulus_low(t)
  for (int i = int(t.size()) - 1; i >= s.m; --i) {
    std::uint64_t v = t[std::size_t(i)];
    if (!v) continue;
    t[std::size_t(i)] = 0;
    for (int j = 0; j < s.m; ++j)
      t[std::size_t(i - s.m + j)] =
          detail::mod_sub(t[std::size_t(i - s.m + j)], v * s.modulus[j] % s.p, s.p);
  }
  return FqElem(t.begin(), t.begin() + s.m);
}

inline FqElem fq_pow(const FqSpec& s, FqElem x, std::uint64_t e) {
  FqElem r = fq_one(s);
  while (e) {
    if (e & 1) r = fq_mul(s, r, x);
    x = fq_mul(s, x, x);
    e >>= 1;
  }
  return r;
}

// inverse by extended Euclid on polynomial representatives
inline FqElem fq_inv(const FqSpec& s, const FqElem& x) {
  if (fq_is_zero(x)) throw std::domain_error("fq_inv: division by zero");
  if (s.m == 1) {
    // Fermat in the prime field
    FqElem r = fq_pow(s, x, s.p - 2);
    return r;
  }
  using Poly = std::vector<std::uint64_t>;
  auto pinv = [&](std::uint64_t a) {  // inverse mod p
    std::uint64_t r = 1, b = a, e = s.p - 2;
    while (e) { if (e & 1) r = r * b % s.p; b = b * b % s.p; e >>= 1; }
    return r;
  };
  Poly a(x.begin(), x.end());
  detail::poly_trim(a);
  Poly b(s.modulus.begin(), s.modulus.end());
  b.push_back(1);
  // invariants: a = ua * x (mod modulus), b = ub * x (mod modulus)
  Poly ua{1}, ub{};
  while (!a.empty()) {
    if (a.size() > b.size()) { std::swap(a, b); std::swap(ua, ub); }
    // kill b's leading term with a
    std::uint64_t factor = b.back() * pinv(a.back()) % s.p;
    std::size_t shift = b.size() - a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      b[shift + i] = detail::mod_sub(b[shift + i], factor * a[i] % s.p, s.p);
    if (ub.size() < ua.size() + shift) ub.resize(ua.size() + shift, 0);
    for (std::size_t i = 0; i < ua.size(); ++i)
      ub[shift + i] = detail::mod_sub(ub[shift + i], factor * ua[i] % s.p, s.p);
    detail::poly_trim(b);
    if (b.empty()) { std::swap(a, b); std::swap(ua, ub); }
  }
  // b is now the gcd (a unit: modulus irreducible, x nonzero)
  detail::poly_trim(b);
  if (b.size() != 1) throw std::logic_error("fq_inv: gcd not a unit");
  std::uint64_t scale = pinv(b[0]);
  FqElem r = fq_zero(s);
  ub.resize(std::size_t(s.m), 0);
  for (int i = 0; i < s.m; ++i) r[i] = ub[std::size_t(i)] * scale % s.p;
  return r;
}

inline FqElem fq_div(const FqSpec& s, const FqElem& x, const FqElem& y) {
  return fq_mul(s, x, fq_inv(s, y));
}

inline FqElem fq_frobenius(const FqSpec& s, const FqElem& x) {
  return fq_pow(s, x, s.p);
}

inline FqElem fq_frobenius_n(const FqSpec& s, FqElem x, int n) {
  if (s.m == 1) return x;
  n %= s.m;
  if (n < 0) n += s.m;
  for (int i = 0; i < n; ++i) x = fq_frobenius(s, x);
  return x;
}

// unique p-th root: x^(p^(m-1))
inline FqElem fq_pth_root(const FqSpec& s, const FqElem& x) {
  return fq_frobenius_n(s, x, s.m - 1);
}

// absolute trace down to F_p, returned as a residue in [0, p)
inline std::uint64_t fq_trace(const FqSpec& s, const FqElem& x) {
  FqElem acc = fq_zero(s), y = x;
  for (int i = 0; i < s.m; ++i) {
    acc = fq_add(s, acc, y);
    y = fq_frobenius(s, y);
  }
  for (int i = 1; i < s.m; ++i)
    if (acc[i]) throw std::logic_error("fq_trace: value not in the prime field");
  return acc[0];
}

inline std::vector<FqElem> fq_elems(const FqSpec& s) {
  std::uint64_t q = fq_q(s);
  if (q > (1u << 20)) throw std::domain_error("fq_elems: field too large to enumerate");
  std::vector<FqElem> out;
  out.reserve(q);
  for (std::uint64_t n = 0; n < q; ++n) {
    FqElem x = fq_zero(s);
    std::uint64_t v = n;
    for (int i = 0; i < s.m; ++i) { x[i] = v % s.p; v /= s.p; }
    out.push_back(std::move(x));
  }
  return out;
}

// image of the small field's generator t inside the big field; exists iff
// small.m divides big.m (same p)
inline FqElem fq_embedding_root(const FqSpec& small, const FqSpec& big) {
  if (small.p != big.p || big.m % small.m != 0)
    throw std::domain_error("fq_embedding_root: not a subfield");
  if (small.m == 1) return fq_zero(big);  // t maps onto the root of t, i.e. 0
  for (const FqElem& e : fq_elems(big)) {
    // evaluate the monic modulus of the small field at e
    FqElem acc = fq_one(big);
    FqElem val = fq_zero(big);
    FqElem ep = fq_one(big);
    for (int i = 0; i < small.m; ++i) {
      val = fq_add(big, val, fq_mul(big, fq_from_int(big, (long long)small.modulus[i]), ep));
      ep = fq_mul(big, ep, e);
    }
    val = fq_add(big, val, ep);  // + e^m
    if (fq_is_zero(val)) return e;
  }
  throw std::logic_error("fq_embedding_root: no root found");
}

inline FqElem fq_embed_into(const FqSpec& small, const FqSpec& big, const FqElem& root,
                            const FqElem& x) {
  FqElem val = fq_zero(big), ep = fq_one(big);
  for (int i = 0; i < small.m; ++i) {
    val = fq_add(big, val, fq_mul(big, fq_from_int(big, (long long)x[i]), ep));
    ep = fq_mul(big, ep, root);
  }
  return val;
}

inline std::string fq_to_string(const FqSpec& s, const FqElem& x) {
  if (s.m == 1) return std::to_string(x[0]);
  std::string out = "[";
  for (int i = 0; i < s.m; ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + "]";
}

}  // namespace ramcalc

#endif
