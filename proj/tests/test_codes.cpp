#include <random>
#include <sstream>

#include "doctest.h"
#include "faimm/codes.hpp"
#include "test_util.hpp"

using namespace faimm;
using faimm::test::mat;

namespace {

std::size_t binom_sum(int n, int d) {
  std::size_t s = 0, c = 1;
  for (int i = 0; i <= d; ++i) {
    s += c;
    c = c * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("RM(1,3) is the self-dual extended Hamming code") {
  const auto c = rm(1, 3);
  CHECK(c.length() == 8);
  CHECK(c.dimension() == 4);
  CHECK(hull_dim(c) == 4);
  CHECK(hull_dim_direct(c) == 4);
  CHECK(is_self_orthogonal(c));
  CHECK_FALSE(is_lcd(c));
  CHECK(min_weight(c) == 4);
  CHECK(dual(c) == c);
}

TEST_CASE("RM columns follow the field enumeration") {
  const auto& f3 = default_field(3);
  const auto pts = rm_column_points(f3);
  REQUIRE(pts.size() == 8);
  CHECK(pts[0] == 0);
  CHECK(pts[1] == 1);
  CHECK(pts[2] == 2);
  CHECK(pts[3] == 4);
  CHECK(pts[4] == 3);  // alpha^3 = alpha + 1 for x^3 + x + 1
  const auto c = rm(1, 3, f3);
  CHECK(contains(c, BitVector::from_string("11111111")));
  CHECK(pts == std::vector<std::size_t>{0, 1, 2, 4, 3, 6, 7, 5});
  CHECK(contains(c, BitVector::from_string("01001011")));  // x1 at P_0..P_7
  CHECK_FALSE(contains(c, BitVector::from_string("10000000")));
}

TEST_CASE("RM dimensions, duals and minimum weights") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto c = rm(d, n);
      CHECK(c.dimension() == binom_sum(n, d));
      if (d < n) CHECK(dual(c) == rm(n - d - 1, n));
      if (n <= 5) CHECK(min_weight(c) == (std::size_t{1} << (n - d)));
    }
  CHECK(rm(0, 1).dimension() == 1);
  CHECK(rm(1, 1).dimension() == 2);
  CHECK_THROWS(rm(4, 3));
}

TEST_CASE("minimum weight beyond the enumeration range uses parity checks") {
  const auto c = rm(5, 7);  // [128, 120, 4]
  CHECK(c.dimension() == 120);
  CHECK(min_weight(c) == 4);
  CHECK(min_weight(rm(4, 6)) == 4);
  CHECK(min_weight(LinearCode::zero(5)) == 0);
  CHECK(min_weight(LinearCode::full(70)) == 1);
}

TEST_CASE("small LCD and self-orthogonal codes") {
  const LinearCode rep3(mat({"111"}));
  CHECK(is_lcd(rep3));
  CHECK_FALSE(is_even_like(rep3));
  const LinearCode rep2(mat({"11"}));
  CHECK(is_self_orthogonal(rep2));
  CHECK(hull_dim(rep2) == 1);
  CHECK(is_even_like(rep2));
  CHECK(is_lcd(LinearCode::full(5)));
  CHECK(is_lcd(LinearCode::zero(5)));
  // Spanning rows are reduced: a dependent row disappears.
  const LinearCode c(mat({"1100", "0110", "1010"}));
  CHECK(c.dimension() == 2);
}

TEST_CASE("puncturing and shortening are dual operations") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t len = 2 + rng() % 20;
    const LinearCode c(test::random_matrix(rng, rng() % (len + 1), len));
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < len; ++i)
      if (rng() % 3 == 0) s.push_back(i);
    CHECK(dual(puncture(c, s)) == shorten(dual(c), s));
    CHECK(dual(dual(c)) == c);
    CHECK(c.dimension() + dual(c).dimension() == len);
    CHECK(hull_dim(c) == hull_dim_direct(c));
    if (is_lcd(c) && is_even_like(c)) CHECK(c.dimension() % 2 == 0);
  }
}

TEST_CASE("restriction keeps the chosen coordinates") {
  const LinearCode c(mat({"1010", "0111"}));
  const std::vector<std::size_t> keep{1, 3};
  const auto r = restrict_to(c, keep);
  CHECK(r.length() == 2);
  CHECK(r == LinearCode(mat({"11"})));
  const std::vector<std::size_t> del{0, 2};
  CHECK(puncture(c, del) == r);
  const std::vector<std::size_t> bad{9};
  CHECK_THROWS(puncture(c, bad));
}

TEST_CASE("code text round-trip") {
  const auto c = rm(1, 3);
  std::stringstream ss;
  write_code(ss, c);
  CHECK(ss.str().rfind("# code length=8 dim=4 lcd=false hull=4", 0) == 0);
  CHECK(read_code(ss) == c);
}
