#include <random>
#include <set>

#include "doctest.h"
#include "faimm/gf2m.hpp"

using namespace faimm;

namespace {

// Order of x modulo m by repeated multiplication; test-side oracle.
unsigned brute_order(int n, unsigned m) {
  unsigned v = 1;
  for (unsigned k = 1; k <= (1U << n); ++k) {
    v <<= 1;
    if (v >> n & 1U) v ^= m;
    if (v == 1) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("default moduli are the smallest primitive polynomials") {
  CHECK(FieldGF2n(2).modulus() == 0b111);
  CHECK(FieldGF2n(3).modulus() == 0b1011);
  CHECK(FieldGF2n(4).modulus() == 0b10011);
  CHECK(brute_order(3, 0b1011) == 7);
  CHECK(brute_order(4, 0b10011) == 15);
  for (int n = 2; n <= 12; ++n) {
    const unsigned m = FieldGF2n(n).modulus();
    CHECK(brute_order(n, m) == (1U << n) - 1);
    for (unsigned smaller = (1U << n) | 1U; smaller < m; smaller += 2) CHECK(brute_order(n, smaller) != (1U << n) - 1);
  }
  CHECK_THROWS_AS(FieldGF2n(1), UnsupportedDegree);
  CHECK_THROWS_AS(FieldGF2n(17), UnsupportedDegree);
  CHECK_THROWS_AS(FieldGF2n(4, 0b11111), std::invalid_argument);  // irreducible, order 5
  CHECK_NOTHROW(FieldGF2n(4, 0b11001));                            // x^4+x^3+1
}

TEST_CASE("alpha_pow examples") {
  const FieldGF2n f(3);
  CHECK(f.alpha_pow(0).coeffs == 0b001);
  CHECK(f.alpha_pow(3).coeffs == 0b011);
  CHECK(f.alpha_pow(7).coeffs == 0b001);
  CHECK(f.alpha_pow(-1) == f.alpha_pow(6));
}

TEST_CASE("enumerate_points and point_index") {
  const auto pts2 = FieldGF2n(2).enumerate_points();
  REQUIRE(pts2.size() == 4);
  CHECK(pts2[0].coeffs == 0b00);
  CHECK(pts2[1].coeffs == 0b01);
  CHECK(pts2[2].coeffs == 0b10);
  CHECK(pts2[3].coeffs == 0b11);

  const auto pts3 = FieldGF2n(3).enumerate_points();
  CHECK(pts3.size() == 8);
  CHECK(pts3[0].coeffs == 0);
  CHECK(pts3[1].coeffs == 1);
  CHECK(point_index({0}) == 0);
  CHECK(point_index({1}) == 1);
  CHECK(point_index({0b011}) == 3);

  for (int n = 2; n <= 16; ++n) {
    std::set<std::size_t> seen;
    for (auto e : default_field(n).enumerate_points()) seen.insert(point_index(e));
    CHECK(seen.size() == (std::size_t{1} << n));
    CHECK(*seen.rbegin() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("log-table multiplication is exponent addition") {
  std::mt19937_64 rng(11);
  for (int n : {2, 5, 8, 13, 16}) {
    const auto& f = default_field(n);
    for (int t = 0; t < 500; ++t) {
      const auto i = static_cast<std::int64_t>(rng() % 100000), j = static_cast<std::int64_t>(rng() % 100000);
      CHECK(f.mul(f.alpha_pow(i), f.alpha_pow(j)) == f.alpha_pow(i + j));
      CHECK(f.alpha_pow(f.log(f.alpha_pow(i))) == f.alpha_pow(i));
    }
  }
  CHECK_THROWS_AS(default_field(4).log({0}), std::domain_error);
}
