#include "faimm/gf2m.hpp"

#include <array>
#include <cstdio>
#include <memory>
#include <mutex>
#include <string>

namespace faimm {

namespace {

void check_degree(int n) {
  if (n < 2 || n > 16) throw UnsupportedDegree("GF(2^n) supports 2 <= n <= 16, got n=" + std::to_string(n));
}

std::string hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", v);
  return buf;
}

std::uint32_t times_x(std::uint32_t v, int n, std::uint32_t modulus) {
  v <<= 1;
  if (v >> n & 1U) v ^= modulus;
  return v;
}

}  // namespace

std::uint32_t FieldGF2n::order_of_x(int n, std::uint32_t modulus) {
  if ((modulus >> n) != 1U || (modulus & 1U) == 0) return 0;
  const std::uint32_t limit = (std::uint32_t{1} << n) - 1;
  std::uint32_t v = 1;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    v = times_x(v, n, modulus);
    if (v == 1) return k;
  }
  return 0;
}

std::uint32_t FieldGF2n::smallest_primitive(int n) {
  check_degree(n);
  const std::uint32_t target = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = (std::uint32_t{1} << n) | 1U; m < (std::uint32_t{2} << n); m += 2)
    if (order_of_x(n, m) == target) return m;
  throw std::logic_error("no primitive polynomial found");  // unreachable for n <= 16
}

FieldGF2n::FieldGF2n(int n) : FieldGF2n(n, smallest_primitive(n)) {}

FieldGF2n::FieldGF2n(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  check_degree(n);
  if (order_of_x(n, modulus) != group_order())
    throw std::invalid_argument("modulus " + hex(modulus) + " is not a primitive polynomial of degree " +
                                std::to_string(n));
  exp_.resize(group_order());
  log_.assign(size(), 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < group_order(); ++i) {
    exp_[i] = v;
    log_[v] = i;
    v = times_x(v, n, modulus);
  }
}

FieldElement FieldGF2n::alpha_pow(std::int64_t j) const {
  const auto order = static_cast<std::int64_t>(group_order());
  std::int64_t r = j % order;
  if (r < 0) r += order;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t FieldGF2n::log(FieldElement e) const {
  if (e.coeffs == 0) throw std::domain_error("log of zero");
  return log_[e.coeffs];
}

FieldElement FieldGF2n::mul(FieldElement a, FieldElement b) const {
  if (a.coeffs == 0 || b.coeffs == 0) return {0};
  return {exp_[(log_[a.coeffs] + log_[b.coeffs]) % group_order()]};
}

std::vector<FieldElement> FieldGF2n::enumerate_points() const {
  std::vector<FieldElement> pts;
  pts.reserve(size());
  pts.push_back({0});
  for (std::uint32_t v : exp_) pts.push_back({v});
  return pts;
}

const FieldGF2n& default_field(int n) {
  check_degree(n);
  static std::array<std::unique_ptr<FieldGF2n>, 17> cache;
  static std::array<std::once_flag, 17> once;
  std::call_once(once[static_cast<std::size_t>(n)],
                 [n] { cache[static_cast<std::size_t>(n)] = std::make_unique<FieldGF2n>(n); });
  return *cache[static_cast<std::size_t>(n)];
}

}  // namespace faimm
