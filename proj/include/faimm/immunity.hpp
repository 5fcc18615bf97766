#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "faimm/boolfun.hpp"
#include "faimm/f2linalg.hpp"

namespace faimm {

/// FAI/FFAI requested for a function where the definition is empty.
class UndefinedFai : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration guard of fai_direct exceeded.
class SearchSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest degree of a nonzero annihilator of f; nullopt when f is the
/// all-ones function (no nonzero annihilator exists). lda(0) = 0.
std::optional<int> lda(const BooleanFunction& f);

/// Nonzero g with deg(g) <= e and f*g = 0, verified before return.
std::optional<Anf> annihilator_witness(const BooleanFunction& f, int e);

/// min(lda(f), lda(1+f)).
int ai(const BooleanFunction& f);

/// RREF basis (rows are 2^n-bit ANF vectors) of MUL_k(f) = {f*g : deg g <= k}.
BitMatrix mul_space_basis(const BooleanFunction& f, int k);

/// Minimum degree of a nonzero element of MUL_k(f); nullopt iff f = 0.
/// Requires 1 <= k <= n.
std::optional<int> mu(const BooleanFunction& f, int k);

struct ImmunityProfile {
  int n = 0;
  std::vector<std::optional<int>> mu;  // mu[k-1] = mu_k(f)

  /// min over k of k + mu_k(f), nullopt for f = 0.
  std::optional<int> min_k_plus_mu() const;
};

ImmunityProfile profile(const BooleanFunction& f);

struct FaiWitness {
  Anf g;
  Anf fg;
  int total = 0;  // deg(g) + deg(fg)
};

struct FaiResult {
  /// min deg(g) + deg(fg) over g not in {0, 1} with fg != 0.
  int value = 0;
  FaiWitness witness;
  /// min_k (k + mu_k(f)); smaller than `value` exactly when the only
  /// cheap multiple is f itself via g = 1.
  int profile_value = 0;

  bool diverges() const { return profile_value != value; }
};

/// Fast algebraic immunity with an optimal, re-verified witness.
/// Throws UndefinedFai for f = 0.
FaiResult fai(const BooleanFunction& f);

/// Independent exhaustive FAI: enumerates every g of degree <= cap over the
/// monomial basis. The default cap is max(1, floor(n/2)), which always
/// contains an optimal witness. Throws SearchSpaceError past 2^24 candidates.
int fai_direct(const BooleanFunction& f, std::optional<int> cap = std::nullopt);

/// min(FAI(f), FAI(1+f)); throws UndefinedFai for constant f.
int ffai(const BooleanFunction& f);

/// FAI(f) >= n. Throws UndefinedFai for f = 0.
bool is_pai(const BooleanFunction& f);

}  // namespace faimm
