#include <catch2/catch_amalgamated.hpp>

#include "ramcalc/fq.hpp"

using namespace ramcalc;

TEST_CASE("prime field basics") {
  FqSpec f3 = fq_make(3, 1);
  CHECK(f3.modulus == FqElem{0});  // t itself: F_3 = F_3[t]/(t)
  CHECK(fq_q(f3) == 3);
  // 1/2 = 2 since 2*2 = 4 = 1
  CHECK(fq_div(f3, fq_one(f3), fq_from_int(f3, 2)) == fq_from_int(f3, 2));
  CHECK(fq_from_int(f3, -1) == fq_from_int(f3, 2));
  CHECK(fq_trace(f3, fq_from_int(f3, 2)) == 2);
  // pth root is the identity on the prime field
  for (auto& x : fq_elems(f3)) CHECK(fq_pth_root(f3, x) == x);
}

TEST_CASE("modulus selection is the lexicographically smallest irreducible") {
  CHECK(fq_make(3, 2).modulus == FqElem{1, 0});     // t^2 + 1
  CHECK(fq_make(3, 3).modulus == FqElem{1, 0, 2});  // t^3 + 2t^2 + 1
  CHECK(fq_make(5, 2).modulus == FqElem{1, 1});     // t^2 + t + 1
  CHECK(fq_make(7, 1).modulus == FqElem{0});
}

TEST_CASE("F_9 field axioms, exhaustive") {
  FqSpec f9 = fq_make(3, 2);
  auto all = fq_elems(f9);
  REQUIRE(all.size() == 9);
  for (auto& x : all)
    for (auto& y : all) {
      CHECK(fq_add(f9, x, y) == fq_add(f9, y, x));
      CHECK(fq_mul(f9, x, y) == fq_mul(f9, y, x));
      // Frobenius is additive
      CHECK(fq_frobenius(f9, fq_add(f9, x, y)) ==
            fq_add(f9, fq_frobenius(f9, x), fq_frobenius(f9, y)));
      for (auto& z : all) {
        CHECK(fq_mul(f9, x, fq_mul(f9, y, z)) == fq_mul(f9, fq_mul(f9, x, y), z));
        CHECK(fq_mul(f9, x, fq_add(f9, y, z)) ==
              fq_add(f9, fq_mul(f9, x, y), fq_mul(f9, x, z)));
      }
    }
  for (auto& x : all) {
    CHECK(fq_sub(f9, x, x) == fq_zero(f9));
    if (!fq_is_zero(x)) {
      CHECK(fq_mul(f9, x, fq_inv(f9, x)) == fq_one(f9));
      // p-th root inverts Frobenius
      CHECK(fq_frobenius(f9, fq_pth_root(f9, x)) == x);
      CHECK(fq_pth_root(f9, fq_frobenius(f9, x)) == x);
    }
  }
}

TEST_CASE("trace kernel has q/p elements") {
  FqSpec f9 = fq_make(3, 2);
  int zero_trace = 0;
  for (auto& x : fq_elems(f9))
    if (fq_trace(f9, x) == 0) ++zero_trace;
  CHECK(zero_trace == 3);

  FqSpec f25 = fq_make(5, 2);
  zero_trace = 0;
  for (auto& x : fq_elems(f25))
    if (fq_trace(f25, x) == 0) ++zero_trace;
  CHECK(zero_trace == 5);
}

TEST_CASE("pth root of a generator via exponent arithmetic") {
  FqSpec f9 = fq_make(3, 2);
  // g = t is a generator of F_9^* here? order divides 8; check directly that
  // pth_root(g) == g^3 regardless, i.e. cubing the root recovers g.
  FqElem g = {0, 1};
  FqElem r = fq_pth_root(f9, g);
  CHECK(fq_pow(f9, r, 3) == g);
  CHECK(r == fq_pow(f9, g, 3));  // x^(p^(m-1)) with m = 2
}

TEST_CASE("subfield embedding respects arithmetic") {
  FqSpec f9 = fq_make(3, 2);
  FqSpec f81 = fq_make(3, 4);
  FqElem root = fq_embedding_root(f9, f81);
  auto emb = [&](const FqElem& x) { return fq_embed_into(f9, f81, root, x); };
  for (auto& x : fq_elems(f9))
    for (auto& y : fq_elems(f9)) {
      CHECK(emb(fq_add(f9, x, y)) == fq_add(f81, emb(x), emb(y)));
      CHECK(emb(fq_mul(f9, x, y)) == fq_mul(f81, emb(x), emb(y)));
    }
  // injectivity on a spot check
  CHECK(emb(fq_one(f9)) == fq_one(f81));
  CHECK(fq_is_zero(emb(fq_zero(f9))));

  // prime field into F_9: constants embed as constants
  FqSpec f3 = fq_make(3, 1);
  FqElem r3 = fq_embedding_root(f3, f9);
  CHECK(fq_embed_into(f3, f9, r3, fq_from_int(f3, 2)) == fq_from_int(f9, 2));
}

TEST_CASE("solvability of t^p - t = c matches trace") {
  // z^p - z = c has a root in F_q iff trace(c) = 0; verify exhaustively
  for (auto [p, m] : {std::pair<int, int>{3, 1}, {3, 2}, {5, 1}}) {
    FqSpec fq = fq_make(std::uint64_t(p), m);
    for (auto& c : fq_elems(fq)) {
      bool solvable = false;
      for (auto& z : fq_elems(fq))
        if (fq_sub(fq, fq_pow(fq, z, std::uint64_t(p)), z) == c) solvable = true;
      CHECK(solvable == (fq_trace(fq, c) == 0));
    }
  }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(fq_make(2, 1), std::domain_error);   // p must be odd
  CHECK_THROWS_AS(fq_make(9, 1), std::domain_error);   // p must be prime
  CHECK_THROWS_AS(fq_make(3, 0), std::domain_error);
  FqSpec f3 = fq_make(3, 1);
  CHECK_THROWS_AS(fq_inv(f3, fq_zero(f3)), std::domain_error);
}
