#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace faimm {

class UnsupportedDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of GF(2^n) in the polynomial basis: bit i is the coefficient of x^i.
struct FieldElement {
  std::uint32_t coeffs = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
};

/// Truth-table index of a field element: variable x_j of a Boolean function
/// is the coefficient of x^(j-1).
inline std::size_t point_index(FieldElement e) { return e.coeffs; }

/// GF(2^n) for 2 <= n <= 16 with log/antilog tables. The modulus is always
/// primitive, so alpha = [x] generates the multiplicative group.
class FieldGF2n {
 public:
  /// Uses the numerically smallest primitive polynomial of degree n.
  explicit FieldGF2n(int n);
  /// `modulus` includes the leading x^n term; rejected unless primitive.
  FieldGF2n(int n, std::uint32_t modulus);

  int degree() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  /// 2^n - 1.
  std::uint32_t group_order() const { return size() - 1; }

  /// alpha^j, exponent reduced modulo 2^n - 1 (negative j allowed).
  FieldElement alpha_pow(std::int64_t j) const;
  /// Discrete log base alpha; throws std::domain_error on zero.
  std::uint32_t log(FieldElement e) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement add(FieldElement a, FieldElement b) const { return {a.coeffs ^ b.coeffs}; }

  /// [0, alpha^0, alpha^1, ..., alpha^(2^n-2)].
  std::vector<FieldElement> enumerate_points() const;

  /// Order of [x] modulo `modulus`, or 0 when x is not invertible / the
  /// powers never return to 1 within 2^n - 1 steps.
  static std::uint32_t order_of_x(int n, std::uint32_t modulus);
  static std::uint32_t smallest_primitive(int n);

 private:
  int n_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = alpha^i, i < 2^n - 1
  std::vector<std::uint32_t> log_;  // log_[beta], beta != 0
};

/// Shared default field for degree n (built once, immutable).
const FieldGF2n& default_field(int n);

}  // namespace faimm
