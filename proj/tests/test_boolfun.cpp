#include <random>

#include "doctest.h"
#include "faimm/boolfun.hpp"
#include "faimm/io.hpp"
#include "test_util.hpp"

using namespace faimm;
using faimm::test::random_function;

TEST_CASE("coordinate functions follow the index-bit convention") {
  const auto x1 = BooleanFunction::variable(3, 1);
  const auto x3 = BooleanFunction::variable(3, 3);
  CHECK(format_hex(x1) == "3:AA");
  CHECK(format_hex(x3) == "3:F0");
  CHECK(degree(x1) == 1);
  CHECK(weight(x3) == 4);
  CHECK_THROWS(BooleanFunction::variable(3, 0));
  CHECK_THROWS(BooleanFunction::variable(3, 4));
}

TEST_CASE("majority of three variables") {
  const auto f = BooleanFunction::from_word(3, 0xE8);
  CHECK(degree(f) == 2);
  CHECK(weight(f) == 4);
  CHECK(support(f) == std::vector<std::size_t>{3, 5, 6, 7});
  // x1x2 + x1x3 + x2x3
  const Anf a = anf_of(f);
  CHECK(a.coefficient(0b011));
  CHECK(a.coefficient(0b101));
  CHECK(a.coefficient(0b110));
  CHECK(a.coeffs().count() == 3);
  CHECK(tt_of(a) == f);
}

TEST_CASE("Moebius transform is an involution") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 10; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto f = random_function(rng, n);
      CHECK(tt_of(anf_of(f)) == f);
    }
}

TEST_CASE("point indicator and its ANF") {
  for (int n = 1; n <= 6; ++n) {
    const auto d0 = delta(0, n);
    CHECK(weight(d0) == 1);
    CHECK(d0(0));
    CHECK(degree(d0) == n);
    CHECK(anf_of(d0).coeffs().count() == (std::size_t{1} << n));
    CHECK(degree(delta((std::size_t{1} << n) - 1, n)) == n);
  }
  CHECK_THROWS(delta(8, 3));
}

TEST_CASE("algebraic complement flips every ANF coefficient") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_function(rng, 5);
    const auto g = algebraic_complement(f);
    CHECK(g == f + delta(0, 5));
    CHECK((anf_of(f).coeffs() ^ anf_of(g).coeffs()).count() == 32);
  }
}

TEST_CASE("product degree, sums and complements") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    if (!(f * g).is_zero()) CHECK(degree(f * g) <= degree(f) + degree(g));
    CHECK(weight(f + g) == weight(f) + weight(g) - 2 * weight(f * g));
    CHECK((f * complement(f)).is_zero());
    CHECK((f + f).is_zero());
  }
  CHECK_THROWS_AS(BooleanFunction::zero(3) + BooleanFunction::zero(4), VariableCountError);
}

TEST_CASE("affine maps preserve weight and degree") {
  std::mt19937_64 rng(5);
  // x -> (x2, x1 + x2, x3) + (1, 0, 0)
  const AffineMap m(test::mat({"010", "110", "001"}), 0b001);
  const auto f = BooleanFunction::from_word(3, 0xE8);
  const auto g = apply_affine(f, m);
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(g(x) == f(m(x)));
  CHECK(weight(g) == weight(f));
  CHECK(degree(g) == degree(f));
  CHECK(apply_affine(f, AffineMap::identity(3)) == f);
  CHECK_THROWS(AffineMap(test::mat({"11", "11"}), 0));
  for (int t = 0; t < 20; ++t) {
    const auto h = random_function(rng, 6);
    CHECK(apply_affine(h, AffineMap::identity(6)) == h);
  }
}

TEST_CASE("concatenation and bar") {
  const auto f0 = BooleanFunction::variable(2, 1);
  const auto f1 = BooleanFunction::one(2);
  const auto c = concatenate(f0, f1);
  CHECK(c.n() == 3);
  CHECK(format_hex(c) == "3:FA");
  const auto b = bar(BooleanFunction::variable(2, 2));
  CHECK(b == BooleanFunction::variable(3, 3) + BooleanFunction::variable(3, 2));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto g0 = random_function(rng, 4);
    const auto g1 = random_function(rng, 4);
    const auto cc = concatenate(g0, g1);
    if (cc.is_zero()) continue;
    const int d0 = g0.is_zero() ? -1 : degree(g0);
    const int d01 = (g0 + g1).is_zero() ? -1 : degree(g0 + g1);
    CHECK(degree(cc) == std::max(d0, d01 + 1));
  }
}

TEST_CASE("monomial ordering and low-degree interpolation") {
  const auto ms = monomials_up_to(3, 1);
  CHECK(ms == std::vector<std::size_t>{0, 1, 2, 4});
  CHECK(monomials_up_to(4, 2).size() == 11);
  CHECK(monomials_up_to(4, 4).size() == 16);
  CHECK(monomial_at(0b101, 0b111));
  CHECK_FALSE(monomial_at(0b101, 0b011));

  const std::vector<std::size_t> zeros{0, 1, 2};
  const auto h = interpolate_low_degree(zeros, 3, 2, 2);
  REQUIRE(h.has_value());
  CHECK(tt_of(*h) == delta(3, 2));
  CHECK_FALSE(interpolate_low_degree(zeros, 3, 1, 2).has_value());
}

TEST_CASE("from_word bounds") {
  CHECK(BooleanFunction::from_word(6, ~Word{0}).is_one());
  CHECK_THROWS(BooleanFunction::from_word(7, 0));
}
