#include "faimm/codes.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <ostream>
#include <string>

#include "faimm/boolfun.hpp"

namespace faimm {

namespace {

std::vector<std::size_t> complement_of(std::span<const std::size_t> s, std::size_t length) {
  std::vector<bool> drop(length, false);
  for (std::size_t i : s) {
    if (i >= length) throw std::out_of_range("coordinate " + std::to_string(i) + " out of range");
    drop[i] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < length; ++i)
    if (!drop[i]) keep.push_back(i);
  return keep;
}

}  // namespace

LinearCode::LinearCode(const BitMatrix& spanning) {
  Rref r = rref(spanning);
  gen_ = std::move(r.matrix);
  pivots_ = std::move(r.pivots);
}

LinearCode LinearCode::zero(std::size_t length) { return LinearCode(BitMatrix(0, length)); }

LinearCode LinearCode::full(std::size_t length) { return LinearCode(BitMatrix::identity(length)); }

std::vector<std::size_t> rm_column_points(const FieldGF2n& field) {
  std::vector<std::size_t> pts;
  for (FieldElement e : field.enumerate_points()) pts.push_back(point_index(e));
  return pts;
}

LinearCode rm(int d, int n, const FieldGF2n& field) {
  if (field.degree() != n) throw std::invalid_argument("rm: field degree does not match n");
  if (d < 0 || d > n) throw std::out_of_range("rm: need 0 <= d <= n");
  const auto pts = rm_column_points(field);
  const auto monos = monomials_up_to(n, d);
  BitMatrix g(monos.size(), pts.size());
  for (std::size_t r = 0; r < monos.size(); ++r)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (monomial_at(monos[r], pts[j])) g.set(r, j);
  return LinearCode(g);
}

LinearCode rm(int d, int n) {
  if (n == 1) {
    // GF(2) itself: P_0 = 0, P_1 = 1.
    if (d < 0 || d > 1) throw std::out_of_range("rm: need 0 <= d <= n");
    return d == 0 ? LinearCode(BitMatrix::from_rows(std::vector{BitVector::ones(2)}, 2)) : LinearCode::full(2);
  }
  return rm(d, n, default_field(n));
}

LinearCode dual(const LinearCode& c) {
  if (c.dimension() == 0) return LinearCode::full(c.length());
  return LinearCode(kernel_basis(c.generator()));
}

LinearCode restrict_to(const LinearCode& c, std::span<const std::size_t> keep) {
  return LinearCode(c.generator().select_columns(keep));
}

LinearCode puncture(const LinearCode& c, std::span<const std::size_t> s) {
  return restrict_to(c, complement_of(s, c.length()));
}

LinearCode shorten(const LinearCode& c, std::span<const std::size_t> s) {
  const auto keep = complement_of(s, c.length());
  std::vector<std::size_t> on_s(s.begin(), s.end());
  // Combinations x with x * G_S = 0 give the codewords vanishing on S.
  const BitMatrix combos = kernel_basis(c.generator().select_columns(on_s).transpose());
  const BitMatrix words = combos.rows() == 0 ? BitMatrix(0, c.length()) : mul(combos, c.generator());
  return LinearCode(words.select_columns(keep));
}

std::size_t hull_dim(const LinearCode& c) { return c.dimension() - rank(gram(c.generator())); }

std::size_t hull_dim_direct(const LinearCode& c) {
  return row_space_meet_dim(c.generator(), dual(c).generator());
}

bool is_lcd(const LinearCode& c) { return hull_dim(c) == 0; }

bool is_self_orthogonal(const LinearCode& c) { return gram(c.generator()).is_zero(); }

bool is_even_like(const LinearCode& c) {
  for (std::size_t r = 0; r < c.dimension(); ++r)
    if (c.generator().row(r).count() % 2 != 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 24;

std::size_t min_weight_gray(const LinearCode& c) {
  const BitMatrix& g = c.generator();
  std::vector<Word> word(g.stride(), 0);
  std::size_t best = c.length() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << c.dimension()); ++i) {
    const auto row = g.row_words(static_cast<std::size_t>(std::countr_zero(i)));
    std::size_t w = 0;
    for (std::size_t t = 0; t < word.size(); ++t) {
      word[t] ^= row[t];
      w += static_cast<std::size_t>(std::popcount(word[t]));
    }
    best = std::min(best, w);
  }
  return best;
}

bool columns_sum_to_zero(std::span<const Word> cols, std::size_t start, std::size_t left, Word acc) {
  if (left == 0) return acc == 0;
  for (std::size_t j = start; j + left <= cols.size(); ++j)
    if (columns_sum_to_zero(cols, j + 1, left - 1, acc ^ cols[j])) return true;
  return false;
}

// Smallest w such that w columns of a parity-check matrix sum to zero.
std::optional<std::size_t> min_weight_syndromes(const LinearCode& c) {
  const BitMatrix h = dual(c).generator();
  if (h.rows() > kWordBits) return std::nullopt;
  std::vector<Word> cols(c.length(), 0);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (h.get(r, j)) cols[j] |= Word{1} << r;
  std::uint64_t spent = 0, binom = 1;
  for (std::size_t w = 1; w <= cols.size(); ++w) {
    binom = binom * (cols.size() - w + 1) / w;
    spent += binom;
    if (spent > kEnumerationGuard) return std::nullopt;
    if (columns_sum_to_zero(cols, 0, w, 0)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::size_t min_weight(const LinearCode& c) {
  const std::size_t k = c.dimension();
  if (k == 0) return 0;
  if (k <= 24) return min_weight_gray(c);
  if (auto w = min_weight_syndromes(c)) return *w;
  throw std::length_error("min_weight: dimension " + std::to_string(k) + " and redundancy " +
                          std::to_string(c.length() - k) + " both exceed the 2^24 enumeration guard");
}

bool contains(const LinearCode& c, const BitVector& v) {
  if (v.size() != c.length()) throw DimensionError("contains: length mismatch");
  return in_row_space(Rref{c.generator(), c.pivots()}, v);
}

void write_code(std::ostream& os, const LinearCode& c) {
  os << "# code length=" << c.length() << " dim=" << c.dimension() << " lcd=" << (is_lcd(c) ? "true" : "false")
     << " hull=" << hull_dim(c) << '\n';
  write_matrix(os, c.generator());
}

LinearCode read_code(std::istream& is) { return LinearCode(read_matrix(is)); }

}  // namespace faimm
