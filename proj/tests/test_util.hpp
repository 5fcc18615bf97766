#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "faimm/boolfun.hpp"
#include "faimm/f2linalg.hpp"

namespace faimm::test {

inline BitMatrix mat(std::initializer_list<std::string_view> rows) {
  std::vector<std::string_view> v(rows);
  return BitMatrix::from_strings(v);
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1U) m.set(r, c);
  return m;
}

inline BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (auto& w : v.words()) w = rng();
  v.clear_padding();
  return v;
}

inline BooleanFunction random_function(std::mt19937_64& rng, int n) {
  return {n, random_bits(rng, std::size_t{1} << n)};
}

inline BooleanFunction random_nonconstant(std::mt19937_64& rng, int n) {
  for (;;) {
    auto f = random_function(rng, n);
    if (!f.is_constant()) return f;
  }
}

}  // namespace faimm::test
