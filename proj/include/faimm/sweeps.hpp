#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faimm/boolfun.hpp"

namespace faimm {

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of trial `index` in a run seeded with `seed`. Each trial owns an
/// mt19937_64 seeded with this value, so results do not depend on threading.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Truth table filled from raw mt19937_64 outputs, low bits first.
BooleanFunction random_function(std::mt19937_64& rng, int n);
BooleanFunction random_nonconstant(std::mt19937_64& rng, int n);
/// `count` distinct points of {0, ..., 2^n - 1} (partial Fisher-Yates).
std::vector<std::size_t> random_points(std::mt19937_64& rng, int n, std::size_t count);
/// Uniform invertible A (rejection sampling) and uniform b.
AffineMap random_affine(std::mt19937_64& rng, int n);

struct PropertyTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

class SuiteResult {
 public:
  explicit SuiteResult(std::string name = {}) : name_(std::move(name)) {}

  /// Counts one evaluation of `property`. On failure `describe()` supplies the
  /// counterexample text (a truth table plus context).
  template <std::invocable Describe>
  bool check(std::string_view property, bool ok, Describe&& describe) {
    auto& t = properties_[std::string(property)];
    ++t.checks;
    if (!ok) {
      ++t.failures;
      counterexamples_.push_back(std::string(property) + ": " + std::string(describe()));
    }
    return ok;
  }
  bool check(std::string_view property, bool ok, const BooleanFunction& subject);

  /// Informational counter; never affects pass/fail.
  void count(std::string_view key, std::size_t by = 1) { counters_[std::string(key)] += by; }
  void note(std::string line) { notes_.push_back(std::move(line)); }
  void merge(const SuiteResult& other);

  const std::string& name() const { return name_; }
  std::size_t checks() const;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// Failures of one property; 0 when it was never evaluated.
  std::size_t failures_of(std::string_view property) const;
  std::size_t checks_of(std::string_view property) const;

  const std::map<std::string, PropertyTally>& properties() const { return properties_; }
  const std::map<std::string, std::size_t>& counters() const { return counters_; }
  const std::vector<std::string>& counterexamples() const { return counterexamples_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::string name_;
  std::map<std::string, PropertyTally> properties_;
  std::map<std::string, std::size_t> counters_;
  std::vector<std::string> counterexamples_;
  std::vector<std::string> notes_;
};

/// Plain-text report; deterministic for a given result.
void write_report(std::ostream& os, const SuiteResult& r);

struct SweepOptions {
  int n = 4;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Enumerate every function of n variables instead of sampling (n <= 4).
  bool exhaustive = false;
  /// Affine maps per function in the invariance suite.
  std::size_t inner = 100;
};

struct SuiteInfo {
  std::string_view name;
  std::string_view summary;
  std::function<SuiteResult(const SweepOptions&)> run;
};

std::span<const SuiteInfo> suites();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SweepOptions& opts);

/// Pointwise algebra: Moebius involution, product degree, weight of sums,
/// affine action, concatenation degree. n is the largest variable count.
SuiteResult algebra_suite(const SweepOptions& opts);
/// Kernel-based ai/lda against exhaustive annihilator search (n <= 4).
SuiteResult ai_oracle_suite(const SweepOptions& opts);
/// fai against fai_direct plus witness and profile consistency.
SuiteResult fai_oracle_suite(const SweepOptions& opts);
/// Lower and upper bounds on LDA, AI, FAI and FFAI; witness degree split.
SuiteResult fai_bounds_suite(const SweepOptions& opts);
/// FAI, FFAI, AI and profile under random affine automorphisms.
SuiteResult invariance_suite(const SweepOptions& opts);
/// AI perturbation, Johansson-Wang, algebraic complement, concatenation.
SuiteResult perturbation_suite(const SweepOptions& opts);
/// RM dimensions and duals for d <= n <= opts.n, puncture/shorten duality,
/// hull cross-check, RM minimum weights, even-like LCD parity.
SuiteResult codes_suite(const SweepOptions& opts);
/// AI > e decided by punctured RM dimensions.
SuiteResult ai_by_codes_suite(const SweepOptions& opts);
/// FAI >= s decided by punctured RM intersections, on functions with
/// deg f >= n - 1.
SuiteResult fai_by_codes_suite(const SweepOptions& opts);
/// PAI by definition against LCD-ness of restricted RM codes, exhaustive.
SuiteResult pai_lcd_suite(const SweepOptions& opts);
/// Weight parity of every PAI function, exhaustive.
SuiteResult pai_parity_suite(const SweepOptions& opts);
/// lcd_from_pai on every PAI function found (Carlet-Feng supports, plus the
/// exhaustive list for n <= 4).
SuiteResult lcd_from_pai_suite(const SweepOptions& opts);
/// Certificate for the Carlet-Feng candidate at every offset.
SuiteResult carlet_feng_suite(const SweepOptions& opts);

}  // namespace faimm
