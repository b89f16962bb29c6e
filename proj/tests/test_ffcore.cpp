// Unit tests for finite-field form predicates: residue tables, roots,
// factorization typing, liftability classification, and the genus formula.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "locsol/ffcore.hpp"

using namespace locsol;

TEST_CASE("mth power residue tables") {
  auto c7 = make_prime_ctx(7, 3);
  CHECK(c7.power_residues == std::vector<u64>{1, 6});
  auto c5 = make_prime_ctx(5, 3);
  CHECK(c5.power_residues == std::vector<u64>{1, 2, 3, 4});
  auto c13 = make_prime_ctx(13, 3);
  CHECK(c13.power_residues.size() == 4);
  CHECK(c13.phi_fraction() == std::pair<u64, u64>{4, 13});
  CHECK_THROWS_AS(make_prime_ctx(6, 3), std::invalid_argument);

  for (u64 p : {2, 3, 5, 7, 11, 13})
    for (u64 m : {2, 3, 5}) {
      auto ctx = make_prime_ctx(p, m);
      CHECK(ctx.power_residues.size() * std::gcd(m, p - 1) == p - 1);
    }
}

TEST_CASE("cubic residues mod 27") {
  auto s = cubic_residues_mod_27();
  CHECK(s == std::vector<u64>{1, 8, 10, 17, 19, 26});
  CHECK(is_cubic_residue_mod_27(8));
  CHECK(!is_cubic_residue_mod_27(2));
  for (u64 a = 0; a < 27; ++a)
    CHECK(is_cubic_residue_mod_27(a) == is_cubic_residue_mod_27((a + 9) % 27));
}

TEST_CASE("roots with multiplicity") {
  // x^4 z^2 + x^2 z^4 = x^2 z^2 (x+z)^2 over F_2.
  BinaryFormFp f2(2, 6, {0, 0, 1, 0, 1, 0, 0});
  auto r = roots_with_multiplicity(f2);
  REQUIRE(r.size() == 3);
  CHECK(r[0].first == ProjPointFp{false, 0});
  CHECK(r[0].second == 2);
  CHECK(r[1].first == ProjPointFp{false, 1});
  CHECK(r[1].second == 2);
  CHECK(r[2].first.at_infinity);
  CHECK(r[2].second == 2);

  BinaryFormFp x6(5, 6, {0, 0, 0, 0, 0, 0, 1});
  auto rx = roots_with_multiplicity(x6);
  REQUIRE(rx.size() == 1);
  CHECK(rx[0].first == ProjPointFp{false, 0});
  CHECK(rx[0].second == 6);

  BinaryFormFp x3z3(7, 6, {0, 0, 0, 1, 0, 0, 0});
  auto rz = roots_with_multiplicity(x3z3);
  REQUIRE(rz.size() == 2);
  CHECK(rz[0].second == 3);
  CHECK(rz[1].first.at_infinity);
  CHECK(rz[1].second == 3);

  CHECK_THROWS_AS(roots_with_multiplicity(BinaryFormFp(3, 2, {0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("factorization types") {
  // x^6 + x z^5 over F_7 has a simple linear factor.
  BinaryFormFp f(7, 6, {0, 1, 0, 0, 0, 0, 1});
  auto t = factorization_type(f);
  bool has11 = false;
  for (auto& part : t.parts) has11 |= (part == std::pair<int, int>{1, 1});
  CHECK(has11);
  CHECK(t.has_linear_simple());
  CHECK(t.total_degree() == 6);

  // (x^2 + 2 z^2)^3 over F_5: -2 is a quadratic non-residue mod 5.
  // Expansion: x^6 + 6 x^4 z^2 + 12 x^2 z^4 + 8 z^6 = x^6 + x^4 z^2
  // + 2 x^2 z^4 + 3 z^6.
  BinaryFormFp g(5, 6, {3, 0, 2, 0, 1, 0, 1});
  auto tg = factorization_type(g);
  REQUIRE(tg.parts.size() == 1);
  CHECK(tg.parts[0] == std::pair<int, int>{2, 3});
  CHECK(tg.to_string() == "(2^3)");

  // Monic sextics over F_3 with type (1^6): exactly p = 3 of them.
  int count = 0;
  for (int mask = 0; mask < 729; ++mask) {
    std::vector<u64> c(7, 0);
    int v = mask;
    for (int i = 0; i < 6; ++i) {
      c[static_cast<size_t>(i)] = static_cast<u64>(v % 3);
      v /= 3;
    }
    c[6] = 1;
    auto ty = factorization_type(BinaryFormFp(3, 6, c));
    if (ty.parts == std::vector<std::pair<int, int>>{{1, 6}}) ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("factorization type parts always sum to degree") {
  for (u64 p : {2, 3, 5, 7}) {
    // Sample every form of degree 4 and a pseudo-random slice of degree 6.
    u64 total4 = 1;
    for (int i = 0; i < 5; ++i) total4 *= p;
    for (u64 code = 1; code < total4; ++code) {
      std::vector<u64> c(5);
      u64 v = code;
      for (int i = 0; i < 5; ++i) {
        c[static_cast<size_t>(i)] = v % p;
        v /= p;
      }
      BinaryFormFp f(p, 4, c);
      auto t = factorization_type(f);
      CHECK(t.total_degree() == 4);
      int root_mult = 0;
      for (auto& [pt, mult] : roots_with_multiplicity(f)) root_mult += mult;
      CHECK(root_mult <= 4);
    }
  }
}

TEST_CASE("liftability classification") {
  auto ctx7 = make_prime_ctx(7, 3);
  // 3 (x^2 + z^2)^3 over F_7 takes only the values 3 and 4 on P^1.
  BinaryFormFp bad(7, 6, {3, 0, 2, 0, 2, 0, 3});
  CHECK(std::holds_alternative<NoFpPoints>(classify_liftability(bad, ctx7)));

  // A simple root forces liftability even with no cube values elsewhere.
  BinaryFormFp simple(7, 6, {0, 1, 0, 0, 0, 0, 1});
  CHECK(is_liftable(classify_liftability(simple, ctx7)));

  BinaryFormFp zero(7, 6, std::vector<u64>(7, 0));
  CHECK(std::holds_alternative<ZeroForm>(classify_liftability(zero, ctx7)));

  // Double roots only: x^2 z^2 (x+z)^2 * 3 over F_7; 3 is a non-cube and the
  // form has three double roots and takes non-cube values elsewhere or not.
  // Build 3 x^2 z^2 (x+z)^2 = 3x^4z^2 + 6x^3z^3 + 3x^2z^4.
  BinaryFormFp dbl(7, 6, {0, 0, 3, 6, 3, 0, 0});
  auto cls = classify_liftability(dbl, ctx7);
  if (std::holds_alternative<MultiRootOnly>(cls)) {
    auto prof = std::get<MultiRootOnly>(cls).profile;
    CHECK(prof == std::vector<int>{2, 2, 2});
  } else {
    CHECK(is_liftable(cls));  // a non-root cube value also certifies lifting
  }

  // p | m path (p = m = 3): x^6 + x z^5 has a point with unit derivative.
  auto ctx3 = make_prime_ctx(3, 3);
  BinaryFormFp f3(3, 6, {0, 1, 0, 0, 0, 0, 1});
  CHECK(is_liftable(classify_liftability(f3, ctx3)));
}

TEST_CASE("genus formula") {
  CHECK(generic_genus_separable(3, 6) == 4);
  CHECK(generic_genus_separable(2, 2) == 0);
  CHECK(generic_genus_separable(5, 5) == 6);
  // Separable multiplicity lists agree with the closed form.
  CHECK(generic_genus(3, 6, {1, 1, 1, 1, 1, 1}) == 4);
  CHECK(generic_genus(5, 5, {1, 1, 1, 1, 1}) == 6);
  // A triple root of y^3 = f is unramified, so the branch count drops to 3.
  CHECK(generic_genus(3, 6, {3, 1, 1, 1}) == 1);
  CHECK_THROWS_AS(generic_genus(3, 6, {2, 2}), std::invalid_argument);
}
