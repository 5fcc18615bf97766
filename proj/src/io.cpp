#include "faimm/io.hpp"

#include <charconv>
#include <vector>

namespace faimm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_uint(std::string_view token, std::string_view spec) {
  token = trim(token);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad number '" + std::string(token) + "' in function spec '" + std::string(spec) + "'");
  return value;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction parse_function(std::string_view spec) {
  const std::string_view s = trim(spec);
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("function spec '" + std::string(spec) + "' must look like n:HEX or n:{i,j,...}");
  const std::size_t n = parse_uint(s.substr(0, colon), spec);
  if (n < 1 || n > static_cast<std::size_t>(kMaxVariables))
    throw ParseError("variable count " + std::to_string(n) + " outside [1, 16] in '" + std::string(spec) + "'");
  const std::size_t size = std::size_t{1} << n;
  std::string_view body = trim(s.substr(colon + 1));

  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("unterminated support list in '" + std::string(spec) + "'");
    body = trim(body.substr(1, body.size() - 2));
    std::vector<std::size_t> points;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::size_t p = parse_uint(body.substr(0, comma), spec);
      if (p >= size)
        throw ParseError("support point " + std::to_string(p) + " out of range in '" + std::string(spec) + "'");
      points.push_back(p);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return BooleanFunction::from_support(static_cast<int>(n), points);
  }

  if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) body.remove_prefix(2);
  if (body.empty()) throw ParseError("empty truth table in '" + std::string(spec) + "'");
  BitVector tt(size);
  std::size_t bit = 0;
  for (auto it = body.rbegin(); it != body.rend(); ++it, bit += 4) {
    const int v = hex_value(*it);
    if (v < 0) throw ParseError("bad hex digit '" + std::string(1, *it) + "' in '" + std::string(spec) + "'");
    for (int b = 0; b < 4; ++b) {
      if (!(v >> b & 1)) continue;
      if (bit + static_cast<std::size_t>(b) >= size)
        throw ParseError("truth table '" + std::string(body) + "' has more than 2^" + std::to_string(n) + " bits");
      tt.set(bit + static_cast<std::size_t>(b));
    }
  }
  return {static_cast<int>(n), std::move(tt)};
}

std::string format_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::size_t digits = (f.size() + 3) / 4;
  std::string hex(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i < f.size() && f(i)) v |= 1 << b;
    }
    hex[digits - 1 - d] = kDigits[v];
  }
  return std::to_string(f.n()) + ":" + hex;
}

std::string format_support(const BooleanFunction& f) {
  std::string out = std::to_string(f.n()) + ":{";
  bool first = true;
  for (std::size_t p : support(f)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::string format_anf(const Anf& a) {
  std::vector<std::size_t> masks;
  for (std::size_t m = 0; m < a.coeffs().size(); ++m)
    if (a.coefficient(m)) masks.push_back(m);
  if (masks.empty()) return "0";
  std::string out;
  for (std::size_t m : masks) {
    if (!out.empty()) out += '+';
    if (m == 0) {
      out += '1';
      continue;
    }
    for (int j = 1; j <= a.n(); ++j)
      if (m >> (j - 1) & 1U) out += "x" + std::to_string(j);
  }
  return out;
}

}  // namespace faimm
