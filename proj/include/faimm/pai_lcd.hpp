#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "faimm/boolfun.hpp"
#include "faimm/codes.hpp"
#include "faimm/gf2m.hpp"

namespace faimm {

/// A hypothesis (degree bound, non-constant input, admissible n)
/// does not hold for the given arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lcd_from_pai called on a function that is not perfect algebraic immune.
class NotPaiError : public std::runtime_error {
 public:
  NotPaiError(int fai_value, int n);
  int fai_value() const { return fai_value_; }

 private:
  int fai_value_;
};

/// lcd_from_pai accepted a PAI function but the restricted code is not an
/// LCD code of full dimension.
class LcdExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Support of f expressed as RM column indices {j : f(P_j) = 1}, ascending.
struct SupportColumns {
  int n = 0;
  std::vector<std::size_t> cols;
};

SupportColumns support_columns(const BooleanFunction& f, const FieldGF2n& field);
SupportColumns support_columns(const BooleanFunction& f);
BooleanFunction function_from_columns(const SupportColumns& s, const FieldGF2n& field);
BooleanFunction function_from_columns(const SupportColumns& s);

/// RM(d, n) with d >= n read as the full space and d < 0 as the zero code.
LinearCode rm_clamped(int d, int n, const FieldGF2n& field);

/// RM(e, n) punctured on the complement of the support of f, i.e. restricted
/// to the support columns. Length wt(f).
LinearCode punctured_rm_on_support(const BooleanFunction& f, int e, const FieldGF2n& field);

/// Decides AI(f) > e from the dimensions of RM(e,n) punctured on D and on
/// its complement. f must be non-constant.
bool ai_exceeds_via_dims(const BooleanFunction& f, int e);
bool ai_exceeds_via_dims(const BooleanFunction& f, int e, const FieldGF2n& field);

/// Decides FAI(f) >= s from trivial intersections of punctured RM codes with
/// duals of punctured RM codes. Requires f != 0 and deg(f) >= s - 1.
bool fai_at_least_via_codes(const BooleanFunction& f, int s);
bool fai_at_least_via_codes(const BooleanFunction& f, int s, const FieldGF2n& field);

/// LCD status of RM(e, n) restricted to supp(f), for e = 1..n.
std::vector<bool> lcd_status_per_e(const BooleanFunction& f, const FieldGF2n& field);
/// True iff every restricted RM(e, n), 1 <= e <= n, is LCD. Requires f != 0.
bool is_pai_via_lcd(const BooleanFunction& f);
bool is_pai_via_lcd(const BooleanFunction& f, const FieldGF2n& field);

/// The LCD code RM(e, n) restricted to supp(f) for a PAI function f and
/// 1 <= e <= (n-1)/2. Throws NotPaiError (carrying FAI) for non-PAI input
/// and LcdExtractionError when the result is not LCD of full dimension.
LinearCode lcd_from_pai(const BooleanFunction& f, int e);
LinearCode lcd_from_pai(const BooleanFunction& f, int e, const FieldGF2n& field);

/// Candidate support {alpha^l, ..., alpha^(l+m-1)} for n = 2^t + 1, with 0
/// adjoined for n = 2^t (t >= 1). Default m = 2^(n-1).
SupportColumns carlet_feng_support(int n, std::int64_t offset, std::optional<std::size_t> count,
                                   const FieldGF2n& field);
SupportColumns carlet_feng_support(int n, std::int64_t offset, std::optional<std::size_t> count = std::nullopt);

/// n = 2^t with t >= 1, or n = 2^t + 1 with t >= 1.
bool carlet_feng_admissible(int n);

}  // namespace faimm
