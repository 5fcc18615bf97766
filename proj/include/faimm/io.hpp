#pragma once

#include <string>
#include <string_view>

#include "faimm/boolfun.hpp"

namespace faimm {

/// Accepts `n:HEX` (2^n-bit table, point 0 = least significant bit) or
/// `n:{i1,i2,...}` (support list). Throws ParseError naming the bad token.
BooleanFunction parse_function(std::string_view spec);

/// `n:HEX` with ceil(2^n / 4) upper-case digits.
std::string format_hex(const BooleanFunction& f);
/// `n:{i1,i2,...}`.
std::string format_support(const BooleanFunction& f);
/// Polynomial text such as "1+x1+x2x3"; "0" for the zero ANF.
std::string format_anf(const Anf& a);

}  // namespace faimm
