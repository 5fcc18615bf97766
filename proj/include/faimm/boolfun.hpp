#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "faimm/f2linalg.hpp"

namespace faimm {

inline constexpr int kMaxVariables = 16;

class VariableCountError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n-variable Boolean function stored as its truth table. Bit i of the table
/// is f at point i, where x_j = bit (j-1) of i.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(int n, BitVector tt);

  static BooleanFunction zero(int n);
  static BooleanFunction one(int n);
  /// The coordinate function x_j, 1 <= j <= n.
  static BooleanFunction variable(int n, int j);
  static BooleanFunction from_support(int n, std::span<const std::size_t> points);
  /// Only valid for n <= 6: the table is the low 2^n bits of `bits`.
  static BooleanFunction from_word(int n, Word bits);

  int n() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  const BitVector& tt() const { return tt_; }
  bool operator()(std::size_t point) const { return tt_.test(point); }

  bool is_zero() const { return tt_.none(); }
  bool is_one() const { return tt_.count() == size(); }
  bool is_constant() const { return is_zero() || is_one(); }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  BitVector tt_;
};

/// Algebraic normal form: bit m is the coefficient of the monomial
/// prod_{j : bit (j-1) of m set} x_j.
class Anf {
 public:
  Anf() = default;
  Anf(int n, BitVector coeffs);

  static Anf zero(int n) { return Anf(n, BitVector(std::size_t{1} << n)); }
  static Anf monomial(int n, std::size_t mask);

  int n() const { return n_; }
  const BitVector& coeffs() const { return coeffs_; }
  bool coefficient(std::size_t mask) const { return coeffs_.test(mask); }
  bool is_zero() const { return coeffs_.none(); }
  /// Highest monomial degree present; 0 for the zero ANF.
  int degree() const;

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  int n_ = 0;
  BitVector coeffs_;
};

/// Binary Moebius transform in place over a 2^n-bit table. Involution.
void mobius_transform(std::span<Word> table, int n);

Anf anf_of(const BooleanFunction& f);
BooleanFunction tt_of(const Anf& a);

int degree(const BooleanFunction& f);
std::size_t weight(const BooleanFunction& f);
std::vector<std::size_t> support(const BooleanFunction& f);

BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction multiply(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction complement(const BooleanFunction& f);

inline BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g) { return add(f, g); }
inline BooleanFunction operator*(const BooleanFunction& f, const BooleanFunction& g) { return multiply(f, g); }

/// Indicator of the single point a.
BooleanFunction delta(std::size_t a, int n);
/// f + delta_0: flips every ANF coefficient.
BooleanFunction algebraic_complement(const BooleanFunction& f);

/// x -> A x + b with A invertible over F2.
class AffineMap {
 public:
  AffineMap(BitMatrix a, std::uint32_t b);
  static AffineMap identity(int n);

  int n() const { return static_cast<int>(a_.rows()); }
  const BitMatrix& matrix() const { return a_; }
  std::uint32_t translation() const { return b_; }
  std::uint32_t operator()(std::uint32_t x) const;

 private:
  BitMatrix a_;
  std::uint32_t b_;
  std::vector<std::uint32_t> row_masks_;
};

/// f composed with M: result(x) = f(A x + b).
BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& m);

/// (x_n + 1) f0 + x_n f1 on n = f0.n() + 1 variables; x_n is the top index bit.
BooleanFunction concatenate(const BooleanFunction& f0, const BooleanFunction& f1);
/// x_n + f(x_1..x_{n-1}).
BooleanFunction bar(const BooleanFunction& f);

/// Monomial masks of degree <= d, ordered by degree then by mask.
std::vector<std::size_t> monomials_up_to(int n, int d);
/// Evaluation of monomial `mask` at `point`.
inline bool monomial_at(std::size_t mask, std::size_t point) { return (mask & point) == mask; }

/// h with deg h <= d, h(one) = 1 and h = 0 on `zeros`, if one exists.
std::optional<Anf> interpolate_low_degree(std::span<const std::size_t> zeros, std::size_t one, int d, int n);

}  // namespace faimm
