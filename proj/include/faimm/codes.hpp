#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "faimm/f2linalg.hpp"
#include "faimm/gf2m.hpp"

namespace faimm {

/// Binary linear [length, dimension] code. The generator is kept in RREF
/// without zero rows, so equal codes compare equal structurally.
class LinearCode {
 public:
  LinearCode() = default;
  /// Any spanning matrix; it is row-reduced on construction.
  explicit LinearCode(const BitMatrix& spanning);
  /// The zero code of the given length.
  static LinearCode zero(std::size_t length);
  static LinearCode full(std::size_t length);

  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const BitMatrix& generator() const { return gen_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  BitMatrix gen_;
  std::vector<std::size_t> pivots_;
};

/// RM(d, n): generator rows are the monomials of degree <= d, column j is
/// evaluation at P_j with P_0 = 0, P_j = alpha^(j-1) in `field`.
LinearCode rm(int d, int n, const FieldGF2n& field);
LinearCode rm(int d, int n);
/// Truth-table point index of each RM column (the P_j enumeration).
std::vector<std::size_t> rm_column_points(const FieldGF2n& field);

LinearCode dual(const LinearCode& c);
/// Deletes the coordinates in S.
LinearCode puncture(const LinearCode& c, std::span<const std::size_t> s);
/// Keeps the codewords vanishing on S, then deletes S.
LinearCode shorten(const LinearCode& c, std::span<const std::size_t> s);
/// Restricts every codeword to the coordinates in `keep` (ascending).
LinearCode restrict_to(const LinearCode& c, std::span<const std::size_t> keep);

/// k - rank(G G^T).
std::size_t hull_dim(const LinearCode& c);
/// dim(C ∩ C^⊥) computed from the two generator row spaces.
std::size_t hull_dim_direct(const LinearCode& c);
bool is_lcd(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_even_like(const LinearCode& c);

/// Exact minimum nonzero weight; 0 for the zero code. Gray-code enumeration
/// of codewords for k <= 24, otherwise a search for the fewest parity-check
/// columns summing to zero. Throws std::length_error when both exceed 2^24.
std::size_t min_weight(const LinearCode& c);
bool contains(const LinearCode& c, const BitVector& v);

/// Header line "# code length=<l> dim=<k> lcd=<bool> hull=<h>" followed by
/// the generator in matrix text format.
void write_code(std::ostream& os, const LinearCode& c);
LinearCode read_code(std::istream& is);

}  // namespace faimm
