#include <numeric>
#include <random>

#include "doctest.h"
#include "faimm/immunity.hpp"
#include "faimm/io.hpp"
#include "faimm/pai_lcd.hpp"
#include "test_util.hpp"

using namespace faimm;

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

TEST_CASE("support columns round-trip through the field enumeration") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 8; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto f = test::random_function(rng, n);
      const auto s = support_columns(f);
      CHECK(s.n == n);
      CHECK(s.cols.size() == weight(f));
      CHECK(function_from_columns(s) == f);
    }
  // P_3 = alpha^2 is point 4 for x^3 + x + 1.
  CHECK(function_from_columns(SupportColumns{3, {3}}) == delta(4, 3));
  CHECK_THROWS(function_from_columns(SupportColumns{3, {8}}));
}

TEST_CASE("punctured RM on the support has length wt(f)") {
  const auto f = parse_function("3:E8");
  const auto c = punctured_rm_on_support(f, 1, default_field(3));
  CHECK(c.length() == 4);
  CHECK(c.dimension() == 4);  // the support is not an affine plane
  CHECK(rm_clamped(5, 3, default_field(3)).dimension() == 8);
  CHECK(rm_clamped(-1, 3, default_field(3)).dimension() == 0);
}

TEST_CASE("AI by dimensions agrees with the annihilator computation") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 7; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto f = test::random_nonconstant(rng, n);
      const int a = ai(f);
      for (int e = 0; e < n; ++e) CHECK(ai_exceeds_via_dims(f, e) == (a > e));
    }
  CHECK_THROWS_AS(ai_exceeds_via_dims(BooleanFunction::one(3), 1), PreconditionError);
}

TEST_CASE("FAI lower bounds from code intersections") {
  std::mt19937_64 rng(41);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const auto f = test::random_nonconstant(rng, n);
    const int d = degree(f);
    if (d < n - 1) continue;
    ++tested;
    const int v = fai(f).value;
    for (int s = 1; s <= std::min(n + 1, d + 1); ++s) CHECK(fai_at_least_via_codes(f, s) == (v >= s));
  }
  CHECK(tested > 20);
  CHECK_THROWS_AS(fai_at_least_via_codes(BooleanFunction::zero(3), 1), PreconditionError);
  CHECK_THROWS_AS(fai_at_least_via_codes(BooleanFunction::variable(4, 1), 3), PreconditionError);
}

TEST_CASE("PAI and LCD restrictions disagree on some degree-2 functions at n = 4") {
  const auto f = parse_function("4:{1,2,4,6,8,9}");
  CHECK(format_hex(f) == "4:0356");
  CHECK(degree(f) == 2);
  CHECK(fai(f).value == 4);
  CHECK(is_pai(f));
  CHECK_FALSE(is_pai_via_lcd(f));
}

TEST_CASE("exhaustive PAI and LCD counts at n = 4") {
  std::size_t pai = 0, lcd = 0, mismatch = 0, mismatch_low_degree = 0;
  for (Word w = 1; w < (Word{1} << 16); ++w) {
    const auto f = BooleanFunction::from_word(4, w);
    const bool a = is_pai(f);
    const bool b = is_pai_via_lcd(f);
    pai += a;
    lcd += b;
    if (a != b) {
      ++mismatch;
      if (a && !b && degree(f) < 3) ++mismatch_low_degree;
    }
  }
  CHECK(pai == 17608);
  CHECK(lcd == 16712);
  CHECK(mismatch == 896);
  CHECK(mismatch_low_degree == 896);
}

TEST_CASE("PAI functions of three variables") {
  std::size_t pai = 0;
  for (Word w = 1; w < 256; ++w) pai += is_pai(BooleanFunction::from_word(3, w));
  CHECK(pai == 148);
}

TEST_CASE("Carlet-Feng supports") {
  CHECK(carlet_feng_admissible(2));
  CHECK(carlet_feng_admissible(3));
  CHECK(carlet_feng_admissible(4));
  CHECK(carlet_feng_admissible(5));
  CHECK_FALSE(carlet_feng_admissible(6));
  CHECK(carlet_feng_admissible(9));
  CHECK_FALSE(carlet_feng_admissible(1));

  CHECK(carlet_feng_support(5, 0).cols == range(1, 17));
  CHECK(carlet_feng_support(4, 0).cols == range(0, 9));
  CHECK(carlet_feng_support(5, 31).cols == range(1, 17));  // offsets are taken mod 2^n - 1
  CHECK(carlet_feng_support(3, 2, 3).cols == std::vector<std::size_t>{3, 4, 5});
  CHECK_THROWS_AS(carlet_feng_support(6, 0), PreconditionError);
  CHECK_THROWS_AS(carlet_feng_support(3, 0, 8), PreconditionError);

  for (int n : {4, 5})
    for (std::int64_t l = 0; l < (std::int64_t{1} << n) - 1; ++l) {
      const auto f = function_from_columns(carlet_feng_support(n, l));
      CHECK(is_pai(f));
      CHECK(is_pai_via_lcd(f));
    }
}

TEST_CASE("LCD codes extracted from a PAI function") {
  const auto f = function_from_columns(carlet_feng_support(5, 0));
  const auto c1 = lcd_from_pai(f, 1);
  CHECK(c1.length() == 16);
  CHECK(c1.dimension() == 6);
  CHECK(is_lcd(c1));
  const auto c2 = lcd_from_pai(f, 2);
  CHECK(c2.length() == 16);
  CHECK(c2.dimension() == 16);
  CHECK(is_lcd(c2));
  CHECK_THROWS_AS(lcd_from_pai(f, 3), PreconditionError);
  CHECK_THROWS_AS(lcd_from_pai(f, 0), PreconditionError);

  const auto not_pai = BooleanFunction::variable(5, 1);
  try {
    lcd_from_pai(not_pai, 1);
    FAIL("expected NotPaiError");
  } catch (const NotPaiError& e) {
    CHECK(e.fai_value() == 2);
  }
}

TEST_CASE("LCD code from a PAI function of four variables") {
  const auto f = function_from_columns(carlet_feng_support(4, 0));
  const auto c = lcd_from_pai(f, 1);
  CHECK(c.length() == 9);
  CHECK(c.dimension() == 5);
  CHECK(is_lcd(c));
}
