#include <random>

#include "doctest.h"
#include "faimm/io.hpp"
#include "test_util.hpp"

using namespace faimm;

TEST_CASE("hex truth tables put point 0 in the least significant bit") {
  const auto f = parse_function("3:E8");
  CHECK(support(f) == std::vector<std::size_t>{3, 5, 6, 7});
  CHECK(parse_function("3:0xe8") == f);
  CHECK(parse_function(" 3:E8 ") == f);
  CHECK(parse_function("2:1") == delta(0, 2));
  CHECK(format_hex(parse_function("2:1")) == "2:1");
  CHECK(format_hex(parse_function("1:2")) == "1:2");
  CHECK(format_hex(BooleanFunction::zero(5)) == "5:00000000");
}

TEST_CASE("support lists") {
  const auto f = parse_function("4:{1, 2,4,6,8,9}");
  CHECK(format_hex(f) == "4:0356");
  CHECK(format_support(f) == "4:{1,2,4,6,8,9}");
  CHECK(parse_function("3:{}").is_zero());
  CHECK(format_support(BooleanFunction::zero(3)) == "3:{}");
}

TEST_CASE("malformed specs are rejected") {
  for (const char* bad : {"E8", "3:", "3:G8", "3:1E8", "0:1", "17:0", "x:1", "3:{8}", "3:{1,", "3:{1,,2}", "3:{-1}"})
    CHECK_THROWS_AS(parse_function(bad), ParseError);
}

TEST_CASE("hex and support formats round-trip") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 10; ++n) {
    const auto f = test::random_function(rng, n);
    CHECK(parse_function(format_hex(f)) == f);
    CHECK(parse_function(format_support(f)) == f);
  }
}

TEST_CASE("ANF text") {
  CHECK(format_anf(anf_of(parse_function("3:E8"))) == "x1x2+x1x3+x2x3");
  CHECK(format_anf(anf_of(BooleanFunction::one(2))) == "1");
  CHECK(format_anf(Anf::zero(2)) == "0");
  CHECK(format_anf(anf_of(complement(BooleanFunction::variable(2, 2)))) == "1+x2");
}
