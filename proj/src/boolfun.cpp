#include "faimm/boolfun.hpp"

#include <algorithm>
#include <string>

namespace faimm {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVariables)
    throw VariableCountError("variable count must be in [1, 16], got " + std::to_string(n));
}

void same_n(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n())
    throw VariableCountError("variable count mismatch: " + std::to_string(f.n()) + " vs " + std::to_string(g.n()));
}

constexpr Word kButterfly[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

BooleanFunction::BooleanFunction(int n, BitVector tt) : n_(n), tt_(std::move(tt)) {
  check_n(n);
  if (tt_.size() != size()) throw DimensionError("truth table must have 2^n bits");
}

BooleanFunction BooleanFunction::zero(int n) {
  check_n(n);
  return {n, BitVector(std::size_t{1} << n)};
}

BooleanFunction BooleanFunction::one(int n) {
  check_n(n);
  return {n, BitVector::ones(std::size_t{1} << n)};
}

BooleanFunction BooleanFunction::variable(int n, int j) {
  check_n(n);
  if (j < 1 || j > n) throw std::out_of_range("variable index out of range");
  BitVector tt(std::size_t{1} << n);
  for (std::size_t x = 0; x < tt.size(); ++x)
    if (x >> (j - 1) & 1U) tt.set(x);
  return {n, std::move(tt)};
}

BooleanFunction BooleanFunction::from_support(int n, std::span<const std::size_t> points) {
  check_n(n);
  BitVector tt(std::size_t{1} << n);
  for (std::size_t p : points) {
    if (p >= tt.size()) throw std::out_of_range("support point " + std::to_string(p) + " out of range");
    tt.set(p);
  }
  return {n, std::move(tt)};
}

BooleanFunction BooleanFunction::from_word(int n, Word bits) {
  if (n < 1 || n > 6) throw VariableCountError("from_word needs 1 <= n <= 6");
  BitVector tt(std::size_t{1} << n);
  tt.words()[0] = bits;
  tt.clear_padding();
  return {n, std::move(tt)};
}

Anf::Anf(int n, BitVector coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_n(n);
  if (coeffs_.size() != (std::size_t{1} << n)) throw DimensionError("ANF must have 2^n coefficients");
}

Anf Anf::monomial(int n, std::size_t mask) {
  Anf a = zero(n);
  a.coeffs_.set(mask);
  return a;
}

int Anf::degree() const {
  int d = 0;
  const auto w = coeffs_.words();
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word x = w[k];
    while (x) {
      const std::size_t m = k * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
      d = std::max(d, std::popcount(m));
      x &= x - 1;
    }
  }
  return d;
}

void mobius_transform(std::span<Word> table, int n) {
  const int in_word = std::min(n, 6);
  for (int s = 0; s < in_word; ++s) {
    const Word mask = kButterfly[s];
    const int shift = 1 << s;
    for (Word& w : table) w ^= (w & mask) << shift;
  }
  for (int s = 6; s < n; ++s) {
    const std::size_t step = std::size_t{1} << (s - 6);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (i & step) table[i] ^= table[i ^ step];
  }
}

Anf anf_of(const BooleanFunction& f) {
  BitVector c = f.tt();
  mobius_transform(c.words(), f.n());
  return {f.n(), std::move(c)};
}

BooleanFunction tt_of(const Anf& a) {
  BitVector t = a.coeffs();
  mobius_transform(t.words(), a.n());
  return {a.n(), std::move(t)};
}

int degree(const BooleanFunction& f) { return anf_of(f).degree(); }

std::size_t weight(const BooleanFunction& f) { return f.tt().count(); }

std::vector<std::size_t> support(const BooleanFunction& f) {
  std::vector<std::size_t> pts;
  const auto w = f.tt().words();
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word x = w[k];
    while (x) {
      pts.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return pts;
}

BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g) {
  same_n(f, g);
  return {f.n(), f.tt() ^ g.tt()};
}

BooleanFunction multiply(const BooleanFunction& f, const BooleanFunction& g) {
  same_n(f, g);
  return {f.n(), f.tt() & g.tt()};
}

BooleanFunction complement(const BooleanFunction& f) { return {f.n(), ~f.tt()}; }

BooleanFunction delta(std::size_t a, int n) {
  check_n(n);
  if (a >= (std::size_t{1} << n)) throw std::out_of_range("delta: point out of range");
  return {n, BitVector::unit(std::size_t{1} << n, a)};
}

BooleanFunction algebraic_complement(const BooleanFunction& f) { return add(f, delta(0, f.n())); }

// ---------------------------------------------------------------- affine maps

AffineMap::AffineMap(BitMatrix a, std::uint32_t b) : a_(std::move(a)), b_(b) {
  const std::size_t n = a_.rows();
  if (n == 0 || a_.cols() != n || n > static_cast<std::size_t>(kMaxVariables))
    throw DimensionError("affine map needs a square n x n matrix, 1 <= n <= 16");
  if (rank(a_) != n) throw std::invalid_argument("affine map matrix is singular");
  if (b_ >> n) throw std::invalid_argument("affine translation has bits beyond n");
  row_masks_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) row_masks_.push_back(static_cast<std::uint32_t>(a_.row_words(i)[0]));
}

AffineMap AffineMap::identity(int n) { return {BitMatrix::identity(static_cast<std::size_t>(n)), 0}; }

std::uint32_t AffineMap::operator()(std::uint32_t x) const {
  std::uint32_t y = b_;
  for (std::size_t i = 0; i < row_masks_.size(); ++i)
    y ^= static_cast<std::uint32_t>(std::popcount(row_masks_[i] & x) & 1) << i;
  return y;
}

BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& m) {
  if (m.n() != f.n()) throw VariableCountError("affine map dimension does not match function");
  BitVector tt(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x)
    if (f(m(x))) tt.set(x);
  return {f.n(), std::move(tt)};
}

// ---------------------------------------------------------------- concatenation

BooleanFunction concatenate(const BooleanFunction& f0, const BooleanFunction& f1) {
  same_n(f0, f1);
  const int n = f0.n() + 1;
  check_n(n);
  const std::size_t half = f0.size();
  BitVector tt(2 * half);
  if (half % kWordBits == 0) {
    auto w = tt.words();
    std::ranges::copy(f0.tt().words(), w.begin());
    std::ranges::copy(f1.tt().words(), w.begin() + static_cast<std::ptrdiff_t>(half / kWordBits));
  } else {
    tt.words()[0] = f0.tt().words()[0] | (f1.tt().words()[0] << half);
  }
  return {n, std::move(tt)};
}

BooleanFunction bar(const BooleanFunction& f) { return concatenate(f, complement(f)); }

// ---------------------------------------------------------------- interpolation

std::vector<std::size_t> monomials_up_to(int n, int d) {
  std::vector<std::size_t> masks;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    if (std::popcount(m) <= d) masks.push_back(m);
  std::ranges::stable_sort(masks, {}, [](std::size_t m) { return std::popcount(m); });
  return masks;
}

std::optional<Anf> interpolate_low_degree(std::span<const std::size_t> zeros, std::size_t one, int d, int n) {
  check_n(n);
  const std::size_t points = std::size_t{1} << n;
  if (one >= points) throw std::out_of_range("interpolate: point out of range");
  if (std::ranges::find(zeros, one) != zeros.end())
    throw std::invalid_argument("interpolate: the 'one' point is also listed as a zero");
  if (std::ranges::any_of(zeros, [&](std::size_t z) { return z >= points; }))
    throw std::out_of_range("interpolate: point out of range");

  // Row per monomial, column per constrained point; solve x * E = e_one.
  const auto monos = monomials_up_to(n, std::clamp(d, 0, n));
  BitMatrix e(monos.size(), zeros.size() + 1);
  for (std::size_t r = 0; r < monos.size(); ++r) {
    for (std::size_t c = 0; c < zeros.size(); ++c)
      if (monomial_at(monos[r], zeros[c])) e.set(r, c);
    if (monomial_at(monos[r], one)) e.set(r, zeros.size());
  }
  const auto x = solve_preimage(e, BitVector::unit(zeros.size() + 1, zeros.size()));
  if (!x) return std::nullopt;
  BitVector coeffs(points);
  for (std::size_t r = 0; r < monos.size(); ++r)
    if (x->test(r)) coeffs.set(monos[r]);
  Anf h(n, std::move(coeffs));

  const BooleanFunction ht = tt_of(h);
  bool ok = ht(one);
  for (std::size_t z : zeros) ok = ok && !ht(z);
  if (!ok) throw std::logic_error("interpolate: solution failed verification");
  return h;
}

}  // namespace faimm
