#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace faimm {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

/// Thrown when operand shapes do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (matrices, function specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-length bit string over F2, packed little-endian into 64-bit words.
/// Bits past size() in the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits) : size_(nbits), words_(words_for(nbits), 0) {}

  /// Parses a string of '0'/'1' characters; character i is bit i.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t nbits, std::size_t index);
  static BitVector ones(std::size_t nbits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Index of the lowest set bit, or size() when none is set.
  std::size_t find_first() const;
  /// Parity of the bitwise AND (the F2 inner product).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector operator~() const;

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders by length, then by the words read as a little-endian integer.
  friend bool operator<(const BitVector& a, const BitVector& b);

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Zeroes the padding bits of the last word after raw word writes.
  void clear_padding();

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Dense matrix over F2 with word-packed rows. Rows are stored contiguously
/// with a fixed stride; padding bits past cols() in each row stay zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(std::span<const std::string_view> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    if (value)
      w |= bit;
    else
      w &= ~bit;
  }

  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void append_row(const BitVector& v);
  void swap_rows(std::size_t a, std::size_t b);
  /// row(dst) ^= row(src), starting at word `from_word`.
  void xor_row(std::size_t dst, std::size_t src, std::size_t from_word = 0);
  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;

  BitMatrix transpose() const;
  /// Keeps the listed columns, in the listed order.
  BitMatrix select_columns(std::span<const std::size_t> columns) const;
  /// Keeps the first `n` rows.
  BitMatrix top_rows(std::size_t n) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);

struct Rref {
  BitMatrix matrix;                  // zero rows dropped
  std::vector<std::size_t> pivots;   // strictly increasing
};

/// Reduced row echelon form. Pivots are only searched in columns below
/// `pivot_limit` (all columns by default); later columns ride along.
Rref rref(const BitMatrix& m, std::size_t pivot_limit = SIZE_MAX);
std::size_t rank(const BitMatrix& m);
/// Basis (as rows) of {x : M xᵀ = 0}.
BitMatrix kernel_basis(const BitMatrix& m);
/// dim(rowspace(A) ∩ rowspace(B)).
std::size_t row_space_meet_dim(const BitMatrix& a, const BitMatrix& b);
/// RREF basis of rowspace(A) ∩ rowspace(B) (Zassenhaus).
BitMatrix row_space_intersection(const BitMatrix& a, const BitMatrix& b);
BitMatrix gram(const BitMatrix& g);
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
/// M · xᵀ as a bit string of length rows().
BitVector mul_vec(const BitMatrix& m, const BitVector& x);
/// x · M as a bit string of length cols().
BitVector vec_mul(const BitVector& x, const BitMatrix& m);
/// Some x with x · M = y, or nullopt when y is outside the row space.
std::optional<BitVector> solve_preimage(const BitMatrix& m, const BitVector& y);
/// True when y lies in the row space of an RREF matrix with the given pivots.
bool in_row_space(const Rref& r, BitVector y);

/// Text format: "rows cols" then one '0'/'1' line per row. Lines starting
/// with '#' and blank lines are skipped on read.
void write_matrix(std::ostream& os, const BitMatrix& m);
BitMatrix read_matrix(std::istream& is);

}  // namespace faimm
