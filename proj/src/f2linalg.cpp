#include "faimm/f2linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace faimm {

namespace {

Word tail_mask(std::size_t nbits) {
  const std::size_t r = nbits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

BitVector BitVector::unit(std::size_t nbits, std::size_t index) {
  BitVector v(nbits);
  v.set(index);
  return v;
}

BitVector BitVector::ones(std::size_t nbits) {
  BitVector v(nbits);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.clear_padding();
  return v;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

bool BitVector::dot(const BitVector& other) const {
  require(size_ == other.size_, "dot: length mismatch");
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require(size_ == other.size_, "xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require(size_ == other.size_, "and: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require(size_ == other.size_, "or: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector r = *this;
  for (Word& w : r.words_) w = ~w;
  r.clear_padding();
  return r;
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  return false;
}

void BitVector::clear_padding() {
  if (!words_.empty()) words_.back() &= tail_mask(size_);
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "from_strings: ragged rows");
    m.set_row(r, BitVector::from_string(rows[r]));
  }
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  require(v.size() == cols_, "set_row: length mismatch");
  std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::append_row(const BitVector& v) {
  require(v.size() == cols_, "append_row: length mismatch");
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src, std::size_t from_word) {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t w = from_word; w < stride_; ++w) d[w] ^= s[w];
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const auto w = row_words(r);
  return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto w = row_words(r);
    for (std::size_t k = 0; k < stride_; ++k) {
      Word x = w[k];
      while (x) {
        const auto b = static_cast<std::size_t>(std::countr_zero(x));
        t.set(k * kWordBits + b, r);
        x &= x - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> columns) const {
  BitMatrix out(rows_, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j] < cols_, "select_columns: column out of range");
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, columns[j])) out.set(r, j);
  }
  return out;
}

BitMatrix BitMatrix::top_rows(std::size_t n) const {
  BitMatrix out(std::min(n, rows_), cols_);
  std::copy_n(data_.begin(), out.rows_ * stride_, out.data_.begin());
  return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  require(top.cols() == bottom.cols(), "vstack: column mismatch");
  BitMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::ranges::copy(top.row_words(r), out.row_words(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::ranges::copy(bottom.row_words(r), out.row_words(top.rows() + r).begin());
  return out;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
  require(left.rows() == right.rows(), "hstack: row mismatch");
  BitMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::ranges::copy(left.row_words(r), out.row_words(r).begin());
    for (std::size_t c = 0; c < right.cols(); ++c)
      if (right.get(r, c)) out.set(r, left.cols() + c);
  }
  return out;
}

// ------------------------------------------------------------ elimination

Rref rref(const BitMatrix& m, std::size_t pivot_limit) {
  BitMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t limit = std::min(pivot_limit, a.cols());
  std::size_t rank_so_far = 0;
  for (std::size_t c = 0; c < limit && rank_so_far < a.rows(); ++c) {
    std::size_t p = rank_so_far;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(rank_so_far, p);
    const std::size_t w0 = c / kWordBits;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != rank_so_far && a.get(r, c)) a.xor_row(r, rank_so_far, w0);
    pivots.push_back(c);
    ++rank_so_far;
  }
  return {a.top_rows(rank_so_far), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; cheaper than a full RREF.
  BitMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const std::size_t w0 = c / kWordBits;
    for (std::size_t q = r + 1; q < a.rows(); ++q)
      if (a.get(q, c)) a.xor_row(q, r, w0);
    ++r;
  }
  return r;
}

BitMatrix kernel_basis(const BitMatrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  BitMatrix basis(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.matrix.get(i, f)) x.set(r.pivots[i]);
    basis.append_row(x);
  }
  return basis;
}

std::size_t row_space_meet_dim(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.cols(), "row_space_meet_dim: column mismatch");
  return rank(a) + rank(b) - rank(vstack(a, b));
}

BitMatrix row_space_intersection(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.cols(), "row_space_intersection: column mismatch");
  const std::size_t n = a.cols();
  BitMatrix z(a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) {
        z.set(r, c);
        z.set(r, n + c);
      }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (b.get(r, c)) z.set(a.rows() + r, c);
  const Rref red = rref(z);
  BitMatrix out(0, n);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] < n) continue;
    BitVector v(n);
    for (std::size_t c = 0; c < n; ++c)
      if (red.matrix.get(i, n + c)) v.set(c);
    out.append_row(v);
  }
  return rref(out).matrix;
}

BitMatrix gram(const BitMatrix& g) {
  BitMatrix out(g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const auto ri = g.row_words(i);
    for (std::size_t j = i; j < g.rows(); ++j) {
      const auto rj = g.row_words(j);
      Word acc = 0;
      for (std::size_t k = 0; k < g.stride(); ++k) acc ^= ri[k] & rj[k];
      if (std::popcount(acc) & 1) {
        out.set(i, j);
        out.set(j, i);
      }
    }
  }
  return out;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.rows(), "mul: inner dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row_words(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const auto src = b.row_words(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitVector mul_vec(const BitMatrix& m, const BitVector& x) {
  require(m.cols() == x.size(), "mul_vec: length mismatch");
  BitVector y(m.rows());
  const auto xw = x.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto rw = m.row_words(r);
    Word acc = 0;
    for (std::size_t k = 0; k < m.stride(); ++k) acc ^= rw[k] & xw[k];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

BitVector vec_mul(const BitVector& x, const BitMatrix& m) {
  require(m.rows() == x.size(), "vec_mul: length mismatch");
  BitVector y(m.cols());
  auto yw = y.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!x.test(r)) continue;
    const auto rw = m.row_words(r);
    for (std::size_t k = 0; k < rw.size(); ++k) yw[k] ^= rw[k];
  }
  return y;
}

std::optional<BitVector> solve_preimage(const BitMatrix& m, const BitVector& y) {
  require(m.cols() == y.size(), "solve_preimage: length mismatch");
  // Eliminate on [M | I]; the identity half records which rows were combined.
  const Rref red = rref(hstack(m, BitMatrix::identity(m.rows())), m.cols());
  BitVector rest = y;
  BitVector x(m.rows());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (!rest.test(red.pivots[i])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (red.matrix.get(i, c)) rest.flip(c);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (red.matrix.get(i, m.cols() + r)) x.flip(r);
  }
  if (rest.any()) return std::nullopt;
  return x;
}

bool in_row_space(const Rref& r, BitVector y) {
  require(r.matrix.cols() == y.size(), "in_row_space: length mismatch");
  auto yw = y.words();
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (!y.test(r.pivots[i])) continue;
    const auto rw = r.matrix.row_words(i);
    for (std::size_t k = 0; k < rw.size(); ++k) yw[k] ^= rw[k];
  }
  return y.none();
}

// ---------------------------------------------------------------- text I/O

void write_matrix(std::ostream& os, const BitMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) os << m.row(r).to_string() << '\n';
}

BitMatrix read_matrix(std::istream& is) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("matrix: missing 'rows cols' header");
  std::istringstream header(line);
  long long rows = -1, cols = -1;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("matrix: bad header '" + line + "'");
  BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  if (m.cols() == 0) return m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!next_line()) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
    if (line.size() != m.cols()) throw ParseError("matrix: row " + std::to_string(r) + " has wrong length");
    m.set_row(r, BitVector::from_string(line));
  }
  return m;
}

}  // namespace faimm
