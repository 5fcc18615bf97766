#include "faimm/pai_lcd.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "faimm/immunity.hpp"

namespace faimm {

namespace {

std::vector<std::size_t> complement_columns(const SupportColumns& d, std::size_t length) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < length; ++c) {
    if (next < d.cols.size() && d.cols[next] == c)
      ++next;
    else
      out.push_back(c);
  }
  return out;
}

void check_field(const BooleanFunction& f, const FieldGF2n& field) {
  if (field.degree() != f.n()) throw std::invalid_argument("field degree does not match the variable count");
}

std::size_t rm_dimension(int e, int n) {
  std::size_t total = 0, binom = 1;
  for (int i = 0; i <= std::min(e, n); ++i) {
    total += binom;
    binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  }
  return total;
}

}  // namespace

NotPaiError::NotPaiError(int fai_value, int n)
    : std::runtime_error("function is not perfect algebraic immune: FAI = " + std::to_string(fai_value) +
                         " < n = " + std::to_string(n)),
      fai_value_(fai_value) {}

SupportColumns support_columns(const BooleanFunction& f, const FieldGF2n& field) {
  check_field(f, field);
  SupportColumns s{f.n(), {}};
  const auto pts = rm_column_points(field);
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (f(pts[j])) s.cols.push_back(j);
  return s;
}

SupportColumns support_columns(const BooleanFunction& f) { return support_columns(f, default_field(f.n())); }

BooleanFunction function_from_columns(const SupportColumns& s, const FieldGF2n& field) {
  if (field.degree() != s.n) throw std::invalid_argument("field degree does not match the variable count");
  const auto pts = rm_column_points(field);
  std::vector<std::size_t> points;
  for (std::size_t c : s.cols) {
    if (c >= pts.size()) throw std::out_of_range("support column out of range");
    points.push_back(pts[c]);
  }
  return BooleanFunction::from_support(s.n, points);
}

BooleanFunction function_from_columns(const SupportColumns& s) { return function_from_columns(s, default_field(s.n)); }

LinearCode rm_clamped(int d, int n, const FieldGF2n& field) {
  const std::size_t length = std::size_t{1} << n;
  if (d < 0) return LinearCode::zero(length);
  if (d >= n) return LinearCode::full(length);
  return rm(d, n, field);
}

LinearCode punctured_rm_on_support(const BooleanFunction& f, int e, const FieldGF2n& field) {
  const SupportColumns d = support_columns(f, field);
  const LinearCode code = rm_clamped(e, f.n(), field);
  return puncture(code, complement_columns(d, code.length()));
}

bool ai_exceeds_via_dims(const BooleanFunction& f, int e) { return ai_exceeds_via_dims(f, e, default_field(f.n())); }

bool ai_exceeds_via_dims(const BooleanFunction& f, int e, const FieldGF2n& field) {
  if (f.is_constant()) throw PreconditionError("ai_exceeds_via_dims needs a non-constant function");
  check_field(f, field);
  const SupportColumns d = support_columns(f, field);
  const LinearCode code = rm_clamped(e, f.n(), field);
  const auto d_bar = complement_columns(d, code.length());
  const std::size_t full = e >= f.n() ? code.length() : rm_dimension(e, f.n());
  // RM^D deletes D (keeps D-bar); RM^{D-bar} deletes D-bar (keeps D).
  return puncture(code, d.cols).dimension() == full && puncture(code, d_bar).dimension() == full;
}

bool fai_at_least_via_codes(const BooleanFunction& f, int s) {
  return fai_at_least_via_codes(f, s, default_field(f.n()));
}

bool fai_at_least_via_codes(const BooleanFunction& f, int s, const FieldGF2n& field) {
  if (f.is_zero()) throw PreconditionError("fai_at_least_via_codes needs a nonzero function");
  check_field(f, field);
  const int deg_f = degree(f);
  if (deg_f < s - 1)
    throw PreconditionError("fai_at_least_via_codes needs deg(f) >= s-1; deg(f) = " + std::to_string(deg_f) +
                            ", s = " + std::to_string(s));
  const int n = f.n();
  const SupportColumns d = support_columns(f, field);
  const auto d_bar = complement_columns(d, std::size_t{1} << n);
  for (int e = 1; e <= n; ++e) {
    const LinearCode left = puncture(rm_clamped(e, n, field), d_bar);
    const LinearCode right = dual(puncture(rm_clamped(e + n - s, n, field), d_bar));
    if (row_space_meet_dim(left.generator(), right.generator()) != 0) return false;
  }
  return true;
}

std::vector<bool> lcd_status_per_e(const BooleanFunction& f, const FieldGF2n& field) {
  check_field(f, field);
  std::vector<bool> status;
  for (int e = 1; e <= f.n(); ++e) status.push_back(is_lcd(punctured_rm_on_support(f, e, field)));
  return status;
}

bool is_pai_via_lcd(const BooleanFunction& f) { return is_pai_via_lcd(f, default_field(f.n())); }

bool is_pai_via_lcd(const BooleanFunction& f, const FieldGF2n& field) {
  if (f.is_zero()) throw PreconditionError("is_pai_via_lcd needs a nonzero function");
  check_field(f, field);
  for (int e = 1; e <= f.n(); ++e)
    if (!is_lcd(punctured_rm_on_support(f, e, field))) return false;
  return true;
}

LinearCode lcd_from_pai(const BooleanFunction& f, int e) { return lcd_from_pai(f, e, default_field(f.n())); }

LinearCode lcd_from_pai(const BooleanFunction& f, int e, const FieldGF2n& field) {
  check_field(f, field);
  if (e < 1 || 2 * e > f.n() - 1)
    throw PreconditionError("lcd_from_pai needs 1 <= e <= (n-1)/2, got e = " + std::to_string(e));
  const int value = f.is_zero() ? 0 : fai(f).value;
  if (value < f.n()) throw NotPaiError(value, f.n());
  LinearCode code = punctured_rm_on_support(f, e, field);
  const std::size_t expected = rm_dimension(e, f.n());
  if (!is_lcd(code) || code.dimension() != expected)
    throw LcdExtractionError("restricted RM(" + std::to_string(e) + "," + std::to_string(f.n()) + ") has dimension " +
                             std::to_string(code.dimension()) + " (expected " + std::to_string(expected) +
                             ") and hull dimension " + std::to_string(hull_dim(code)));
  return code;
}

bool carlet_feng_admissible(int n) {
  const auto u = static_cast<unsigned>(n);
  return n >= 2 && (std::has_single_bit(u) || (n >= 3 && std::has_single_bit(u - 1)));
}

SupportColumns carlet_feng_support(int n, std::int64_t offset, std::optional<std::size_t> count,
                                   const FieldGF2n& field) {
  if (!carlet_feng_admissible(n))
    throw PreconditionError("n = " + std::to_string(n) + " is neither 2^t nor 2^t + 1 with t >= 1");
  if (field.degree() != n) throw std::invalid_argument("field degree does not match n");
  const std::size_t order = field.group_order();
  const std::size_t m = count.value_or(std::size_t{1} << (n - 1));
  if (m > order) throw PreconditionError("support size exceeds the multiplicative group");
  const bool with_zero = std::has_single_bit(static_cast<unsigned>(n));

  SupportColumns s{n, {}};
  if (with_zero) s.cols.push_back(0);
  const auto ord = static_cast<std::int64_t>(order);
  std::int64_t start = offset % ord;
  if (start < 0) start += ord;
  // P_j = alpha^(j-1), so alpha^i sits in column i + 1.
  for (std::size_t i = 0; i < m; ++i)
    s.cols.push_back(static_cast<std::size_t>((start + static_cast<std::int64_t>(i)) % ord) + 1);
  std::ranges::sort(s.cols);
  return s;
}

SupportColumns carlet_feng_support(int n, std::int64_t offset, std::optional<std::size_t> count) {
  if (!carlet_feng_admissible(n))
    throw PreconditionError("n = " + std::to_string(n) + " is neither 2^t nor 2^t + 1 with t >= 1");
  return carlet_feng_support(n, offset, count, default_field(n));
}

}  // namespace faimm
