#include "faimm/oracles.hpp"

#include <bit>
#include <cstdint>

#include "faimm/immunity.hpp"

namespace faimm {

namespace {

constexpr std::size_t kMaxMonomials = 24;

std::vector<BitVector> monomial_tables(int n, int e) {
  std::vector<BitVector> out;
  for (std::size_t mask : monomials_up_to(n, e)) out.push_back(tt_of(Anf::monomial(n, mask)).tt());
  if (out.size() > kMaxMonomials) throw SearchSpaceError("brute-force annihilator search over more than 2^24 candidates");
  return out;
}

// Gray-code walk over all nonzero combinations; true when some combination
// is disjoint from f.
bool any_disjoint(const BitVector& f, const std::vector<BitVector>& basis) {
  const std::size_t words = f.words().size();
  if (words == 1) {
    const Word fw = f.words()[0];
    Word g = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
      g ^= basis[static_cast<std::size_t>(std::countr_zero(i))].words()[0];
      if ((g & fw) == 0) return true;
    }
    return false;
  }
  BitVector g(f.size());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    g ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    bool disjoint = true;
    for (std::size_t w = 0; w < words && disjoint; ++w) disjoint = (g.words()[w] & f.words()[w]) == 0;
    if (disjoint) return true;
  }
  return false;
}

}  // namespace

bool has_annihilator_brute(const BooleanFunction& f, int e) {
  if (e < 0) return false;
  return any_disjoint(f.tt(), monomial_tables(f.n(), e));
}

std::optional<int> lda_brute(const BooleanFunction& f) {
  for (int e = 0; e <= f.n(); ++e)
    if (has_annihilator_brute(f, e)) return e;
  return std::nullopt;
}

int ai_brute(const BooleanFunction& f) {
  const BooleanFunction fc = complement(f);
  for (int e = 0;; ++e) {
    const auto basis = monomial_tables(f.n(), e);
    if (any_disjoint(f.tt(), basis) || any_disjoint(fc.tt(), basis)) return e;
  }
}

}  // namespace faimm
