#include <sstream>

#include "doctest.h"
#include "faimm/f2linalg.hpp"
#include "test_util.hpp"

using namespace faimm;
using faimm::test::mat;

TEST_CASE("rref examples") {
  auto id = rref(BitMatrix::identity(2));
  CHECK(id.matrix == BitMatrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto dup = rref(mat({"11", "11"}));
  CHECK(dup.matrix == mat({"11"}));
  CHECK(dup.pivots == std::vector<std::size_t>{0});

  auto r = rref(mat({"011", "110", "101"}));
  CHECK(r.matrix == mat({"101", "011"}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank examples") {
  CHECK(rank(BitMatrix(3, 3)) == 0);
  CHECK(rank(BitMatrix::identity(4)) == 4);
  CHECK(rank(mat({"011", "110", "101"})) == 2);
  CHECK(rank(BitMatrix(0, 5)) == 0);
  CHECK(rank(BitMatrix(4, 0)) == 0);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(BitMatrix::identity(3)).rows() == 0);
  CHECK(kernel_basis(BitMatrix(2, 3)).rows() == 3);
  CHECK(kernel_basis(mat({"11"})) == mat({"11"}));
  // Empty matrix: kernel is the whole space.
  CHECK(kernel_basis(BitMatrix(0, 4)).rows() == 4);
}

TEST_CASE("row_space_meet_dim examples") {
  CHECK(row_space_meet_dim(BitMatrix::identity(2), BitMatrix::identity(2)) == 2);
  CHECK(row_space_meet_dim(mat({"10"}), mat({"01"})) == 0);
  CHECK(row_space_meet_dim(mat({"110", "011"}), mat({"101"})) == 1);
  CHECK_THROWS_AS(row_space_meet_dim(mat({"10"}), mat({"101"})), DimensionError);
}

TEST_CASE("gram examples") {
  CHECK(gram(BitMatrix::identity(3)) == BitMatrix::identity(3));
  CHECK(gram(mat({"111"})) == mat({"1"}));
  CHECK(gram(mat({"1100", "0110"})) == mat({"01", "10"}));
}

TEST_CASE("mul and solve_preimage examples") {
  const auto a = mat({"101", "011"});
  CHECK(mul(a, BitMatrix::identity(3)) == a);
  CHECK_THROWS_AS(mul(a, BitMatrix::identity(2)), DimensionError);
  const auto y = BitVector::from_string("110");
  CHECK(solve_preimage(BitMatrix::identity(3), y) == y);
  CHECK(solve_preimage(mat({"110", "011"}), BitVector::from_string("101")) == BitVector::from_string("11"));
  CHECK_FALSE(solve_preimage(mat({"110", "011"}), BitVector::from_string("100")).has_value());
}

TEST_CASE("row_space_intersection matches meet dimension") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t cols = 1 + rng() % 40;
    const auto a = test::random_matrix(rng, rng() % 8, cols);
    const auto b = test::random_matrix(rng, rng() % 8, cols);
    const auto meet = row_space_intersection(a, b);
    REQUIRE(meet.rows() == row_space_meet_dim(a, b));
    for (std::size_t r = 0; r < meet.rows(); ++r) {
      CHECK(solve_preimage(a, meet.row(r)).has_value());
      CHECK(solve_preimage(b, meet.row(r)).has_value());
    }
  }
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = rng() % 12, cols = 1 + rng() % 150;
    const auto m = test::random_matrix(rng, rows, cols);

    const auto r1 = rref(m);
    CHECK(rref(r1.matrix).matrix == r1.matrix);
    CHECK(r1.pivots.size() == rank(m));
    CHECK(std::is_sorted(r1.pivots.begin(), r1.pivots.end()));

    const auto ker = kernel_basis(m);
    CHECK(ker.rows() + rank(m) == cols);
    CHECK(rank(ker) == ker.rows());
    for (std::size_t r = 0; r < ker.rows(); ++r) CHECK(mul_vec(m, ker.row(r)).none());

    const auto other = test::random_matrix(rng, rng() % 12, cols);
    const std::size_t stacked = rank(vstack(m, other));
    CHECK(stacked <= rank(m) + rank(other));
    CHECK((stacked == rank(m) + rank(other)) == (row_space_meet_dim(m, other) == 0));

    const auto g = gram(m);
    CHECK(g == g.transpose());
    CHECK(g == mul(m, m.transpose()));

    const auto x = test::random_bits(rng, rows);
    const auto y = vec_mul(x, m);
    const auto sol = solve_preimage(m, y);
    REQUIRE(sol.has_value());
    CHECK(vec_mul(*sol, m) == y);
    CHECK(in_row_space(r1, y));
  }
}

TEST_CASE("matrix text format round-trips") {
  std::mt19937_64 rng(3);
  const auto m = test::random_matrix(rng, 5, 70);
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(read_matrix(ss) == m);

  std::istringstream with_comments("# header\n2 3\n101\n\n010\n");
  CHECK(read_matrix(with_comments) == mat({"101", "010"}));
  std::istringstream bad("2 3\n101\n01\n");
  CHECK_THROWS_AS(read_matrix(bad), ParseError);
  std::istringstream bad_digit("1 2\n1x\n");
  CHECK_THROWS_AS(read_matrix(bad_digit), ParseError);
}
