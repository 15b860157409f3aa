#ifndef RAMCALC_PARSE_HPP
#define RAMCALC_PARSE_HPP

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>

#include "ramcalc/field.hpp"

namespace ramcalc {

// Surface expression grammar over the generators x, y:
//
//   elem     = [sign] term { ("+"|"-") term }
//   term     = atom { ("*"|"/") atom | atom }        (juxtaposition = "*")
//   atom     = coeff | ("x"|"y") ["^" exponent]
//   exponent = integer | "(" integer ["/" integer] ")"
//   coeff    = integer | "[" integer {"," integer} "]"
//
// "/" before an atom inverts it, so x/y^9 means x * y^-9.  Fractional
// exponents must clear the field's root depth: over K_{a,b} the exponent
// n/d of x needs d | p^a.

namespace detail {

struct ExprParser {
  const FieldDesc& F;
  std::string_view s;
  std::size_t i = 0;

  explicit ExprParser(const FieldDesc& f, std::string_view text) : F(f), s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
    long long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (s[i] - '0');
      if (v > (1LL << 50)) fail("integer literal too large");
      ++i;
    }
    return neg ? -v : v;
  }

  FqElem coeff() {
    skip_ws();
    if (i < s.size() && s[i] == '[') {
      ++i;
      FqElem c = fq_zero(F.fq);
      int idx = 0;
      while (true) {
        long long v = integer();
        if (idx >= F.fq.m) fail("coefficient list longer than the field degree");
        long long r = v % (long long)F.fq.p;
        if (r < 0) r += (long long)F.fq.p;
        c[std::size_t(idx++)] = (std::uint64_t)r;
        if (eat(']')) break;
        if (!eat(',')) fail("expected ',' or ']' in coefficient list");
      }
      return c;
    }
    return fq_from_int(F.fq, integer());
  }

  // exponent of one generator as an exact multiple of 1/p^depth
  long long exponent_for(char var) {
    int depth = var == 'x' ? F.a : F.b;
    long long unit = (long long)checked_pow(F.fq.p, depth, "exponent");
    if (!eat('^')) return unit;  // bare generator
    skip_ws();
    if (eat('(')) {
      long long num = integer();
      long long den = 1;
      if (eat('/')) den = integer();
      if (!eat(')')) fail("expected ')' after exponent");
      if (den <= 0) fail("exponent denominator must be positive");
      // denominator must divide p^depth
      if ((unit * num) % den != 0)
        throw std::domain_error(std::string("exponent ") + std::to_string(num) + "/" +
                                std::to_string(den) + " of " + var +
                                " exceeds the root depth of the field");
      return unit * num / den;
    }
    return unit * integer();
  }

  // one product of atoms; returns (coefficient, alpha, beta)
  void term(FqElem& c, long long& alpha, long long& beta) {
    c = fq_one(F.fq);
    alpha = beta = 0;
    bool any = false, invert = false;
    while (true) {
      char ch = peek();
      bool starts_atom = ch == 'x' || ch == 'y' || ch == '[' || std::isdigit((unsigned char)ch);
      if (!any && !starts_atom) fail("expected a factor");
      if (!starts_atom) break;
      if (ch == 'x' || ch == 'y') {
        ++i;
        long long e = exponent_for(ch);
        if (invert) e = -e;
        (ch == 'x' ? alpha : beta) += e;
      } else {
        FqElem v = coeff();
        if (invert) v = fq_inv(F.fq, v);
        c = fq_mul(F.fq, c, v);
      }
      any = true;
      invert = false;
      if (eat('*')) continue;
      if (eat('/')) { invert = true; continue; }
      // juxtaposition: "2x", "x y^-9"
      char nx = peek();
      if (nx == 'x' || nx == 'y' || nx == '[') continue;
      break;
    }
    if (invert) fail("dangling '/'");
  }

  FieldElem elem() {
    FieldElem out = fe_zero(F);
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    while (true) {
      FqElem c;
      long long alpha, beta;
      term(c, alpha, beta);
      if (neg) c = fq_neg(F.fq, c);
      fe_accumulate(out, alpha, beta, c);
      char ch = peek();
      if (ch == '+' || ch == '-') {
        neg = (ch == '-');
        ++i;
        continue;
      }
      break;
    }
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return out;
  }
};

}  // namespace detail

inline FieldElem parse_elem(const FieldDesc& f, std::string_view text) {
  return detail::ExprParser(f, text).elem();
}

// ---- printing ----------------------------------------------------------

namespace detail {

inline std::string exp_string(long long num, long long den) {
  if (den == 1) return num == 1 ? "" : "^" + std::to_string(num);
  return "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace detail

// internal form in the coordinates u, w; stable term order (beta, alpha)
inline std::string to_internal_string(const FieldElem& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (auto& [k, c] : f.terms) {
    if (!out.empty()) out += " + ";
    std::string factors;
    if (k.second != 0) factors += "u" + detail::exp_string(k.second, 1);
    if (k.first != 0) {
      if (!factors.empty()) factors += "*";
      factors += "w" + detail::exp_string(k.first, 1);
    }
    std::string cs = fq_to_string(f.field.fq, c);
    if (factors.empty()) out += cs;
    else if (cs == "1") out += factors;
    else out += cs + "*" + factors;
  }
  return out;
}

// surface form in the generators x, y with exact fractional exponents;
// negative powers print in quotient style when that keeps one "/" only
inline std::string to_surface_string(const FieldElem& f) {
  if (f.terms.empty()) return "0";
  long long px = (long long)checked_pow(f.field.fq.p, f.field.a, "print");
  long long py = (long long)checked_pow(f.field.fq.p, f.field.b, "print");
  std::string out;
  for (auto& [k, c] : f.terms) {
    if (!out.empty()) out += " + ";
    struct Part { char var; long long num, den; };
    std::vector<Part> pos, neg;
    auto classify = [&](char var, long long raw, long long unit) {
      if (raw == 0) return;
      long long g = std::gcd(raw < 0 ? -raw : raw, unit);
      Part part{var, raw / g, unit / g};
      if (raw > 0) pos.push_back(part);
      else { part.num = -part.num; neg.push_back(part); }
    };
    classify('x', k.second, px);
    classify('y', k.first, py);
    std::string cs = fq_to_string(f.field.fq, c);
    std::string head;
    for (auto& part : pos) {
      if (!head.empty()) head += "*";
      head += std::string(1, part.var) + detail::exp_string(part.num, part.den);
    }
    if (head.empty()) head = cs;
    else if (cs != "1") head = cs + "*" + head;
    if (neg.size() == 1) {
      out += head + "/" + std::string(1, neg[0].var) + detail::exp_string(neg[0].num, neg[0].den);
    } else if (neg.empty()) {
      out += head;
    } else {
      // fall back to explicit negative exponents
      std::string tail;
      for (auto& part : neg) {
        tail += "*" + std::string(1, part.var) + detail::exp_string(-part.num, part.den);
      }
      out += head + tail;
    }
  }
  return out;
}

}  // namespace ramcalc

#endif
