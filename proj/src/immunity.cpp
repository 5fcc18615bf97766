#include "faimm/immunity.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace faimm {

namespace {

BitVector monomial_tt(int n, std::size_t mask) {
  BitVector tt(std::size_t{1} << n);
  for (std::size_t x = 0; x < tt.size(); ++x)
    if (monomial_at(mask, x)) tt.set(x);
  return tt;
}

Anf anf_from_combination(int n, const std::vector<std::size_t>& monos, const BitVector& x) {
  BitVector coeffs(std::size_t{1} << n);
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (x.test(i)) coeffs.flip(monos[i]);
  return {n, std::move(coeffs)};
}

// Evaluation matrix of the given monomials (columns) at the support of f (rows).
BitMatrix support_evaluation(const BooleanFunction& f, const std::vector<std::size_t>& monos) {
  const auto pts = support(f);
  BitMatrix e(pts.size(), monos.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (monomial_at(monos[c], pts[r])) e.set(r, c);
  return e;
}

// Column order with monomials of highest degree first. In an RREF taken
// in this order, the rows whose pivot has degree <= d span exactly the
// elements of the row space of degree <= d.
struct GradedOrder {
  std::vector<std::size_t> mask_at;   // position -> mask
  std::vector<std::size_t> position;  // mask -> position

  explicit GradedOrder(int n) {
    const std::size_t size = std::size_t{1} << n;
    mask_at.resize(size);
    for (std::size_t m = 0; m < size; ++m) mask_at[m] = m;
    std::ranges::stable_sort(mask_at, std::greater<>{}, [](std::size_t m) { return std::popcount(m); });
    position.resize(size);
    for (std::size_t p = 0; p < size; ++p) position[mask_at[p]] = p;
  }

  BitVector to_graded(const BitVector& anf) const {
    BitVector out(anf.size());
    for (std::size_t m = 0; m < anf.size(); ++m)
      if (anf.test(m)) out.set(position[m]);
    return out;
  }
  BitVector from_graded(const BitVector& v) const {
    BitVector out(v.size());
    for (std::size_t p = 0; p < v.size(); ++p)
      if (v.test(p)) out.set(mask_at[p]);
    return out;
  }
  int degree_at(std::size_t p) const { return std::popcount(mask_at[p]); }
};

// Products f*m for every monomial m of degree <= k, one ANF per row.
BitMatrix product_matrix(const BooleanFunction& f, const std::vector<std::size_t>& monos) {
  BitMatrix p(monos.size(), f.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    BitVector prod = f.tt() & monomial_tt(f.n(), monos[i]);
    mobius_transform(prod.words(), f.n());
    p.set_row(i, prod);
  }
  return p;
}

struct GradedEchelon {
  Rref rref;                 // in graded column order
  std::vector<int> degrees;  // degree of each row's pivot, non-increasing
};

GradedEchelon graded_echelon(const BitMatrix& products, const GradedOrder& order) {
  BitMatrix graded(products.rows(), products.cols());
  for (std::size_t r = 0; r < products.rows(); ++r) graded.set_row(r, order.to_graded(products.row(r)));
  GradedEchelon ge{rref(graded), {}};
  for (std::size_t p : ge.rref.pivots) ge.degrees.push_back(order.degree_at(p));
  return ge;
}

void check_k(const BooleanFunction& f, int k) {
  if (k < 1 || k > f.n()) throw std::out_of_range("k must satisfy 1 <= k <= n, got " + std::to_string(k));
}

}  // namespace

// ---------------------------------------------------------------- annihilators

std::optional<int> lda(const BooleanFunction& f) {
  // With columns in ascending degree, the first non-pivot column is the
  // lowest-degree monomial whose addition makes the kernel nontrivial.
  const auto monos = monomials_up_to(f.n(), f.n());
  const Rref r = rref(support_evaluation(f, monos));
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (c >= r.pivots.size() || r.pivots[c] != c) return std::popcount(monos[c]);
  return std::nullopt;
}

std::optional<Anf> annihilator_witness(const BooleanFunction& f, int e) {
  if (e < 0) return std::nullopt;
  const auto monos = monomials_up_to(f.n(), std::min(e, f.n()));
  const BitMatrix kernel = kernel_basis(support_evaluation(f, monos));
  if (kernel.rows() == 0) return std::nullopt;
  Anf g = anf_from_combination(f.n(), monos, kernel.row(0));
  if (g.is_zero() || !multiply(f, tt_of(g)).is_zero())
    throw std::logic_error("annihilator witness failed verification");
  return g;
}

int ai(const BooleanFunction& f) {
  const auto a = lda(f);
  const auto b = lda(complement(f));
  if (!a) return *b;
  if (!b) return *a;
  return std::min(*a, *b);
}

// ---------------------------------------------------------------- profile

BitMatrix mul_space_basis(const BooleanFunction& f, int k) {
  check_k(f, k);
  return rref(product_matrix(f, monomials_up_to(f.n(), k))).matrix;
}

std::optional<int> mu(const BooleanFunction& f, int k) {
  check_k(f, k);
  if (f.is_zero()) return std::nullopt;
  const GradedOrder order(f.n());
  const auto ge = graded_echelon(product_matrix(f, monomials_up_to(f.n(), k)), order);
  return ge.degrees.back();
}

std::optional<int> ImmunityProfile::min_k_plus_mu() const {
  std::optional<int> best;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i]) best = std::min(best.value_or(std::numeric_limits<int>::max()), static_cast<int>(i) + 1 + *mu[i]);
  return best;
}

ImmunityProfile profile(const BooleanFunction& f) {
  ImmunityProfile p{f.n(), {}};
  if (f.is_zero()) {
    p.mu.assign(static_cast<std::size_t>(f.n()), std::nullopt);
    return p;
  }
  const GradedOrder order(f.n());
  for (int k = 1; k <= f.n(); ++k)
    p.mu.push_back(graded_echelon(product_matrix(f, monomials_up_to(f.n(), k)), order).degrees.back());
  return p;
}

// ---------------------------------------------------------------- FAI

FaiResult fai(const BooleanFunction& f) {
  if (f.is_zero()) throw UndefinedFai("FAI is undefined for the zero function");
  const int n = f.n();
  const GradedOrder order(n);
  const BitVector f_graded = order.to_graded(anf_of(f).coeffs());
  const int lda_f = lda(f).value_or(n + 1);

  struct Best {
    int value = std::numeric_limits<int>::max();
    int k = 0;
    BitVector v;  // graded ANF of the chosen product
  } best;
  int profile_value = std::numeric_limits<int>::max();

  for (int k = 1; k <= n; ++k) {
    const auto monos = monomials_up_to(n, k);
    const auto ge = graded_echelon(product_matrix(f, monos), order);
    const std::size_t rows = ge.degrees.size();
    profile_value = std::min(profile_value, k + ge.degrees.back());

    // Lowest-degree product reachable from some g outside {0, 1}. The
    // preimage coset of v is g0 + {annihilators of degree <= k}; it is {1}
    // only when v = f and f has no such annihilator.
    const bool f_excluded = lda_f > k;
    std::size_t pick = rows - 1;
    if (f_excluded && ge.rref.matrix.row(pick) == f_graded) {
      // Row rows-2 differs from f and has the next lowest pivot degree.
      if (rows < 2) continue;
      pick = rows - 2;
    }
    const int candidate = k + ge.degrees[pick];
    if (candidate < best.value) best = {candidate, k, ge.rref.matrix.row(pick)};
  }
  if (best.k == 0) throw std::logic_error("FAI search found no admissible multiple");

  // Recover g from the chosen product and certify it.
  const auto monos = monomials_up_to(n, best.k);
  const BitMatrix products = product_matrix(f, monos);
  const BitVector v = order.from_graded(best.v);
  const auto x = solve_preimage(products, v);
  if (!x) throw std::logic_error("FAI witness: product not in MUL_k");
  Anf g = anf_from_combination(n, monos, *x);
  if (g == Anf::monomial(n, 0)) {
    const BitMatrix ann = kernel_basis(products.transpose());
    if (ann.rows() == 0) throw std::logic_error("FAI witness: only preimage is g = 1");
    g = anf_from_combination(n, monos, *x ^ ann.row(0));
  }
  const BooleanFunction fg = multiply(f, tt_of(g));
  Anf fg_anf = anf_of(fg);
  if (g.is_zero() || g == Anf::monomial(n, 0) || fg.is_zero() || fg_anf.coeffs() != v)
    throw std::logic_error("FAI witness failed verification");
  const int total = g.degree() + fg_anf.degree();
  if (total != best.value) throw std::logic_error("FAI witness total does not match the search value");
  return {best.value, {std::move(g), std::move(fg_anf), total}, profile_value};
}

int fai_direct(const BooleanFunction& f, std::optional<int> cap) {
  if (f.is_zero()) throw UndefinedFai("FAI is undefined for the zero function");
  const int n = f.n();
  const int limit = std::min(cap.value_or(std::max(1, n / 2)), n);
  const auto monos = monomials_up_to(n, limit);
  if (monos.size() > 24)
    throw SearchSpaceError("fai_direct: " + std::to_string(monos.size()) + " monomials exceeds the 2^24 guard");

  std::vector<int> mono_degree;
  for (std::size_t m : monos) mono_degree.push_back(std::popcount(m));
  const std::uint64_t count = std::uint64_t{1} << monos.size();
  int best = std::numeric_limits<int>::max();

  auto highest = [](std::uint64_t coef) { return 63 - std::countl_zero(coef); };

  if (n <= 6) {
    // Single-word fast path.
    const Word f_tt = f.tt().words()[0];
    std::vector<Word> mono_tt;
    for (std::size_t m : monos) mono_tt.push_back(monomial_tt(n, m).words()[0]);
    Word degree_class[7] = {};
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) degree_class[std::popcount(m)] |= Word{1} << m;
    Word g_tt = 0;
    std::uint64_t coef = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
      const int bit = std::countr_zero(i);
      g_tt ^= mono_tt[static_cast<std::size_t>(bit)];
      coef ^= std::uint64_t{1} << bit;
      if (coef == 1) continue;  // g = 1
      const int deg_g = mono_degree[static_cast<std::size_t>(highest(coef))];
      // fg = 1 forces g = 1, so any admissible product has degree >= 1.
      if (deg_g + 1 >= best) continue;
      Word prod = f_tt & g_tt;
      if (prod == 0) continue;
      for (int s = 0; s < n; ++s) {
        static constexpr Word kMask[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                          0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
        prod ^= (prod & kMask[s]) << (1 << s);
      }
      int deg_fg = n;
      while (deg_fg > 0 && (prod & degree_class[deg_fg]) == 0) --deg_fg;
      best = std::min(best, deg_g + deg_fg);
    }
  } else {
    std::vector<BitVector> mono_tt;
    for (std::size_t m : monos) mono_tt.push_back(monomial_tt(n, m));
    BitVector g_tt(f.size());
    std::uint64_t coef = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
      const int bit = std::countr_zero(i);
      g_tt ^= mono_tt[static_cast<std::size_t>(bit)];
      coef ^= std::uint64_t{1} << bit;
      if (coef == 1) continue;
      const int deg_g = mono_degree[static_cast<std::size_t>(highest(coef))];
      if (deg_g + 1 >= best) continue;
      BitVector prod = f.tt() & g_tt;
      if (prod.none()) continue;
      mobius_transform(prod.words(), n);
      best = std::min(best, deg_g + Anf(n, std::move(prod)).degree());
    }
  }
  if (best == std::numeric_limits<int>::max()) throw std::logic_error("fai_direct: no admissible g found");
  return best;
}

int ffai(const BooleanFunction& f) {
  if (f.is_constant()) throw UndefinedFai("FFAI is undefined for constant functions");
  return std::min(fai(f).value, fai(complement(f)).value);
}

bool is_pai(const BooleanFunction& f) { return fai(f).value >= f.n(); }

}  // namespace faimm
