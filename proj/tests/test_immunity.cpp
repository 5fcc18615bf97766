#include <random>

#include "doctest.h"
#include "faimm/immunity.hpp"
#include "faimm/io.hpp"
#include "faimm/oracles.hpp"
#include "test_util.hpp"

using namespace faimm;

namespace {

BooleanFunction fn(const char* spec) { return parse_function(spec); }

bool witness_valid(const BooleanFunction& f, const FaiResult& r) {
  const auto g = tt_of(r.witness.g);
  const auto fg = tt_of(r.witness.fg);
  return !g.is_constant() && !fg.is_zero() && f * g == fg &&
         r.witness.total == r.witness.g.degree() + r.witness.fg.degree() && r.witness.total == r.value;
}

}  // namespace

TEST_CASE("majority of three variables") {
  const auto f = fn("3:E8");
  CHECK(ai(f) == 2);
  CHECK(lda(f) == 2);
  CHECK(lda(complement(f)) == 2);
  const auto w = annihilator_witness(f, 2);
  REQUIRE(w.has_value());
  CHECK((f * tt_of(*w)).is_zero());
  CHECK_FALSE(annihilator_witness(f, 1).has_value());
}

TEST_CASE("annihilator edge cases") {
  CHECK(lda(BooleanFunction::zero(3)) == 0);
  CHECK_FALSE(lda(BooleanFunction::one(3)).has_value());
  CHECK(ai(BooleanFunction::one(3)) == 0);
  CHECK(ai(BooleanFunction::variable(4, 2)) == 1);
}

TEST_CASE("ai and lda agree with exhaustive search for every 3-variable function") {
  for (Word w = 0; w < 256; ++w) {
    const auto f = BooleanFunction::from_word(3, w);
    CHECK(lda(f) == lda_brute(f));
    CHECK(ai(f) == ai_brute(f));
  }
}

TEST_CASE("point indicators have FAI n + 1") {
  const auto d = delta(0, 2);
  CHECK(fai_direct(d) == 3);
  CHECK(fai(d).value == 3);
  for (int n = 2; n <= 7; ++n)
    for (std::size_t a : {std::size_t{0}, std::size_t{1}, (std::size_t{1} << n) - 1}) {
      const auto r = fai(delta(a, n));
      CHECK(r.value == n + 1);
      CHECK(witness_valid(delta(a, n), r));
      CHECK(is_pai(delta(a, n)));
    }
}

TEST_CASE("fai matches exhaustive witness search for every 3-variable function") {
  for (Word w = 1; w < 256; ++w) {
    const auto f = BooleanFunction::from_word(3, w);
    const auto r = fai(f);
    CHECK(r.value == fai_direct(f));
    CHECK(witness_valid(f, r));
    CHECK(r.profile_value == std::min(r.value, 1 + degree(f)));
    CHECK(r.profile_value == profile(f).min_k_plus_mu());
  }
}

TEST_CASE("FAI n + 1 occurs exactly at the point indicators for n = 4") {
  std::size_t count = 0;
  for (Word w = 1; w < (Word{1} << 16); ++w) {
    const auto f = BooleanFunction::from_word(4, w);
    if (fai(f).value == 5) {
      ++count;
      CHECK(weight(f) == 1);
    }
  }
  CHECK(count == 16);
}

TEST_CASE("fai witness and profile on random functions") {
  std::mt19937_64 rng(21);
  for (int n = 4; n <= 7; ++n)
    for (int t = 0; t < 15; ++t) {
      const auto f = test::random_nonconstant(rng, n);
      const auto r = fai(f);
      CHECK(witness_valid(f, r));
      CHECK(r.value <= n + 1);
      const auto p = profile(f);
      REQUIRE(p.mu.size() == static_cast<std::size_t>(n));
      for (int k = 1; k < n; ++k) CHECK(*p.mu[k] <= *p.mu[k - 1]);
      CHECK(*p.mu[0] <= degree(f));
      if (n <= 5) CHECK(r.value == fai_direct(f));
    }
}

TEST_CASE("mu and the multiple space") {
  const auto f = fn("3:E8");
  // MUL_1(f) is spanned by f, x1 f, x2 f, x3 f; x1 f = x1x2 + x1x3 + x1x2x3.
  CHECK(rank(mul_space_basis(f, 1)) == 4);
  CHECK(mu(f, 1) == 2);
  CHECK(mu(f, 3) == 2);
  CHECK_FALSE(mu(BooleanFunction::zero(3), 1).has_value());
  CHECK_THROWS(mu(f, 0));
  CHECK_THROWS(mu(f, 4));
}

TEST_CASE("undefined FAI and FFAI") {
  CHECK_THROWS_AS(fai(BooleanFunction::zero(4)), UndefinedFai);
  CHECK_THROWS_AS(ffai(BooleanFunction::zero(4)), UndefinedFai);
  CHECK_THROWS_AS(ffai(BooleanFunction::one(4)), UndefinedFai);
  CHECK_THROWS_AS(is_pai(BooleanFunction::zero(4)), UndefinedFai);
  // g = 1 + x1 gives f g = 1 + x1 for f = 1.
  CHECK(fai(BooleanFunction::one(3)).value == 2);
}

TEST_CASE("ffai is the smaller of FAI(f) and FAI(1+f)") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const auto f = test::random_nonconstant(rng, 5);
    CHECK(ffai(f) == std::min(fai(f).value, fai(complement(f)).value));
  }
}

TEST_CASE("fai_direct enumeration guard") {
  std::mt19937_64 rng(2);
  CHECK_THROWS_AS(fai_direct(test::random_nonconstant(rng, 6)), SearchSpaceError);
}
