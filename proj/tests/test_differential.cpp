#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramcalc/differential.hpp"
#include "ramcalc/parse.hpp"

using namespace ramcalc;

namespace {
FieldElem random_elem(const FieldDesc& k, std::mt19937_64& rng, int nterms = 4) {
  FieldElem f = fe_zero(k);
  for (int t = 0; t < nterms; ++t) {
    FqElem c = fq_from_int(k.fq, (long long)(rng() % k.fq.p));
    fe_accumulate(f, (long long)(rng() % 11) - 5, (long long)(rng() % 13) - 6, c);
  }
  return f;
}
}

TEST_CASE("derivative of basic monomials") {
  FieldDesc k = field_make(3, 1, 0, 0);
  DifferentialForm df = d(parse_elem(k, "x/y^9"));
  CHECK(form_to_string(df) == "(w^-9)*du");
  CHECK(omega_valuation(df) == -9);

  DifferentialForm dg = d(parse_elem(k, "y^-2"));
  CHECK(form_to_string(dg) == "(w^-3)*dw");
  CHECK(omega_valuation(dg) == -3);

  DifferentialForm dgl = d(parse_elem(k, "y^-2"), FormBasis::logw);
  CHECK(form_to_string(dgl) == "(w^-2)*dlog(w)");
  CHECK(omega_valuation(dgl) == -2);

  // both components at once, exponent residues as multipliers
  DifferentialForm dh = d(parse_elem(k, "x^2*y^-4"));
  CHECK(form_to_string(dh) == "(2*u*w^-4)*du + (2*u^2*w^-5)*dw");

  CHECK(form_is_zero(d(parse_elem(k, "x^3 + y^-3 + 1"))));
  CHECK(omega_valuation(form_zero(k)) == std::nullopt);
}

TEST_CASE("derivations in deeper fields act on internal exponents") {
  FieldDesc k10 = field_make(3, 1, 1, 0);
  // x = u^3 is a cube here, so it differentiates to zero
  CHECK(form_is_zero(d(parse_elem(k10, "x/y^3"))));
  DifferentialForm df = d(parse_elem(k10, "x^(1/3)/y^3"));
  CHECK(form_to_string(df) == "(w^-3)*du");
}

TEST_CASE("derivative is additive and Leibniz") {
  FieldDesc k = field_make(3, 2, 1, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    FieldElem f = random_elem(k, rng), g = random_elem(k, rng);
    DifferentialForm df = d(f), dg = d(g);
    CHECK(d(fe_add(f, g)) == form_add(df, dg));
    CHECK(d(fe_mul(f, g)) == form_add(form_scale(f, dg), form_scale(g, df)));
    // p-th powers are constants for d
    CHECK(form_is_zero(d(frobenius_power(f, 1))));
    // and so d(g^p - g) = -d(g)
    FieldElem wg = fe_sub(frobenius_power(g, 1), g);
    CHECK(d(wg) == form_neg(dg));
  }
}

TEST_CASE("basis conversion preserves the form") {
  FieldDesc k = field_make(3, 1, 0, 0);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    FieldElem f = random_elem(k, rng);
    DifferentialForm a = d(f, FormBasis::ordinary);
    DifferentialForm b = d(f, FormBasis::logw);
    CHECK(to_logw(a) == b);
    CHECK(to_ordinary(b) == a);
  }
  // the dw-component order shifts by one between bases
  DifferentialForm dg = d(parse_elem(k, "y^-2"));
  CHECK(*omega_valuation(to_logw(dg)) == *omega_valuation(dg) + 1);
}

TEST_CASE("graded pieces select by pole depth") {
  FieldDesc k = field_make(3, 1, 0, 0);
  DifferentialForm df = d(parse_elem(k, "x/y^9 + y^-2 + x*y^-1"));
  DifferentialForm top = omega_leading(df, 9);
  CHECK(form_to_string(top) == "(w^-9)*du");
  DifferentialForm mid = omega_leading(df, 3);
  CHECK(form_to_string(mid) == "(w^-3)*dw");
  CHECK(form_is_zero(omega_leading(df, 7)));
}

TEST_CASE("pullback of forms along field extension") {
  FieldDesc k00 = field_make(3, 1, 0, 0);
  FieldDesc k10 = field_make(3, 1, 1, 0);
  FieldDesc k01 = field_make(3, 1, 0, 1);

  // dw survives a u-only extension, with the coefficient transported
  DifferentialForm f = d(parse_elem(k00, "y^-2"));  // w^-3 dw
  DifferentialForm g = theta_map(f, k10);
  CHECK(form_to_string(g) == "(w^-3)*dw");
  CHECK(g.field == k10);

  // du dies under a u-extension, dw dies under a w-extension
  DifferentialForm h = d(parse_elem(k00, "x/y^9"));  // w^-9 du
  CHECK(form_is_zero(theta_map(h, k10)));
  CHECK(form_to_string(theta_map(h, k01)) == "(w^-27)*du");

  // pinned mixed example: u w^-2 dw over K00 -> u^3 w^-2 dw over K10
  DifferentialForm m{k00, FormBasis::ordinary, fe_zero(k00),
                     parse_elem(k00, "x*y^-2")};
  CHECK(form_to_string(theta_map(m, k10)) == "(u^3*w^-2)*dw");

  // naturality: theta(d f) = d(embed f)
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    FieldElem r = random_elem(k00, rng);
    CHECK(theta_map(d(r), k10) == d(embed(r, k10)));
    CHECK(theta_map(d(r), k01) == d(embed(r, k01)));
  }

  CHECK_THROWS_AS(theta_map(d(parse_elem(k10, "x")), k00), std::domain_error);
  CHECK_THROWS_AS(theta_map(to_logw(f), k10), std::invalid_argument);
}

TEST_CASE("push-down of forms to a subfield") {
  FieldDesc k00 = field_make(3, 1, 0, 0);
  FieldDesc k11 = field_make(3, 1, 1, 1);
  DifferentialForm f = d(parse_elem(k11, "x^(1/3)/y^(1/3)"));
  SigmaResult down = sigma_map(f, k00);
  CHECK(down.identically_zero);
  CHECK(form_is_zero(down.form));
  CHECK(down.form.field == k00);

  SigmaResult same = sigma_map(f, k11);
  CHECK_FALSE(same.identically_zero);
  CHECK(same.form == f);

  CHECK_THROWS_AS(sigma_map(d(parse_elem(k00, "x")), k11), std::domain_error);
}
