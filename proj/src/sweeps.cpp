#include "faimm/sweeps.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "faimm/codes.hpp"
#include "faimm/immunity.hpp"
#include "faimm/io.hpp"
#include "faimm/oracles.hpp"
#include "faimm/pai_lcd.hpp"

namespace faimm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

BooleanFunction random_function(std::mt19937_64& rng, int n) {
  BitVector tt(std::size_t{1} << n);
  for (auto& w : tt.words()) w = rng();
  tt.clear_padding();
  return {n, std::move(tt)};
}

BooleanFunction random_nonconstant(std::mt19937_64& rng, int n) {
  for (;;) {
    auto f = random_function(rng, n);
    if (!f.is_constant()) return f;
  }
}

std::vector<std::size_t> random_points(std::mt19937_64& rng, int n, std::size_t count) {
  const std::size_t size = std::size_t{1} << n;
  if (count > size) throw std::invalid_argument("random_points: more points than the space holds");
  std::vector<std::size_t> pool(size);
  for (std::size_t i = 0; i < size; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + rng() % (size - i)]);
  pool.resize(count);
  std::ranges::sort(pool);
  return pool;
}

AffineMap random_affine(std::mt19937_64& rng, int n) {
  const auto dim = static_cast<std::size_t>(n);
  for (;;) {
    BitMatrix a(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const Word bits = rng();
      for (std::size_t c = 0; c < dim; ++c)
        if (bits >> c & 1U) a.set(r, c);
    }
    if (rank(a) == dim) return {std::move(a), static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << n) - 1))};
  }
}

bool SuiteResult::check(std::string_view property, bool ok, const BooleanFunction& subject) {
  return check(property, ok, [&] { return format_hex(subject); });
}

void SuiteResult::merge(const SuiteResult& other) {
  for (const auto& [k, t] : other.properties_) {
    auto& mine = properties_[k];
    mine.checks += t.checks;
    mine.failures += t.failures;
  }
  for (const auto& [k, v] : other.counters_) counters_[k] += v;
  counterexamples_.insert(counterexamples_.end(), other.counterexamples_.begin(), other.counterexamples_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::size_t SuiteResult::checks() const {
  std::size_t total = 0;
  for (const auto& [k, t] : properties_) total += t.checks;
  return total;
}

std::size_t SuiteResult::failures() const {
  std::size_t total = 0;
  for (const auto& [k, t] : properties_) total += t.failures;
  return total;
}

std::size_t SuiteResult::failures_of(std::string_view property) const {
  const auto it = properties_.find(std::string(property));
  return it == properties_.end() ? 0 : it->second.failures;
}

std::size_t SuiteResult::checks_of(std::string_view property) const {
  const auto it = properties_.find(std::string(property));
  return it == properties_.end() ? 0 : it->second.checks;
}

void write_report(std::ostream& os, const SuiteResult& r) {
  os << "suite " << r.name() << ": " << (r.passed() ? "PASS" : "FAIL") << " checks=" << r.checks()
     << " failures=" << r.failures() << '\n';
  for (const auto& [k, t] : r.properties())
    os << "  property " << k << ": checks=" << t.checks << " failures=" << t.failures << '\n';
  for (const auto& [k, v] : r.counters()) os << "  count " << k << ": " << v << '\n';
  for (const auto& line : r.notes()) os << "  note " << line << '\n';
  for (const auto& line : r.counterexamples()) os << "  counterexample " << line << '\n';
}

namespace {

// Splits [0, count) into contiguous chunks, one per worker, and merges the
// partial results in chunk order so output does not depend on scheduling.
template <class Body>
SuiteResult run_indexed(std::string_view name, std::size_t count, unsigned threads, Body body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<SuiteResult> parts(workers, SuiteResult(std::string(name)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = w * chunk; i < std::min(count, (w + 1) * chunk); ++i) body(i, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  SuiteResult out{std::string(name)};
  for (const auto& p : parts) out.merge(p);
  return out;
}

void require_n(const SweepOptions& o, int lo, int hi, std::string_view suite) {
  if (o.n < lo || o.n > hi)
    throw std::invalid_argument(std::string(suite) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) +
                                ", got " + std::to_string(o.n));
}

std::size_t exhaustive_count(const SweepOptions& o, std::string_view suite) {
  if (o.n < 1 || o.n > 4)
    throw std::invalid_argument(std::string(suite) + ": exhaustive runs need 1 <= n <= 4");
  return std::size_t{1} << (std::size_t{1} << o.n);
}

std::size_t binomial_sum(int n, int e) {
  std::size_t total = 0, binom = 1;
  for (int i = 0; i <= std::min(e, n); ++i) {
    total += binom;
    binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  }
  return total;
}

int min_mu(const ImmunityProfile& p) {
  int best = p.n + 1;
  for (const auto& m : p.mu) best = std::min(best, m.value_or(p.n + 1));
  return best;
}

std::string describe(const BooleanFunction& f, const std::string& detail) { return format_hex(f) + " " + detail; }

bool witness_ok(const BooleanFunction& f, const FaiResult& r) {
  const BooleanFunction g = tt_of(r.witness.g);
  return !g.is_constant() && !r.witness.fg.is_zero() && tt_of(r.witness.fg) == f * g &&
         r.witness.g.degree() + r.witness.fg.degree() == r.witness.total && r.witness.total == r.value;
}

BooleanFunction linear_form(std::size_t a, int n) {
  BitVector tt(std::size_t{1} << n);
  for (std::size_t x = 0; x < tt.size(); ++x)
    if (std::popcount(a & x) & 1) tt.set(x);
  return {n, std::move(tt)};
}

// n = 2^t (wt odd) or n = 2^t + 1 (wt even), t >= 1.
bool parity_matches(int n, std::size_t wt) {
  const auto u = static_cast<unsigned>(n);
  if (wt % 2 == 0) return n >= 3 && std::has_single_bit(u - 1);
  return n >= 2 && std::has_single_bit(u);
}

// True when every function of degree <= d vanishing on `pts` annihilates f.
bool vanishing_space_annihilates(const BooleanFunction& f, const std::vector<std::size_t>& pts, int d) {
  const auto monos = monomials_up_to(f.n(), d);
  BitMatrix eval(pts.size(), monos.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (monomial_at(monos[c], pts[r])) eval.set(r, c);
  const BitMatrix ker = kernel_basis(eval);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    BitVector coeffs(std::size_t{1} << f.n());
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (ker.get(r, c)) coeffs.set(monos[c]);
    if (!(f * tt_of(Anf(f.n(), coeffs))).is_zero()) return false;
  }
  return true;
}

std::string code_text(const LinearCode& c) {
  std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
  for (std::size_t r = 0; r < c.dimension(); ++r) s += " " + c.generator().row(r).to_string();
  return s;
}

void check_code_invariants(SuiteResult& out, const LinearCode& c) {
  out.check("hull-gram-equals-direct", hull_dim(c) == hull_dim_direct(c), [&] { return code_text(c); });
  if (is_lcd(c) && is_even_like(c))
    out.check("even-like-lcd-parity", c.dimension() % 2 == 0, [&] { return code_text(c); });
}

}  // namespace

SuiteResult algebra_suite(const SweepOptions& o) {
  require_n(o, 1, kMaxVariables, "algebra");
  return run_indexed("algebra", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.n));
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    const Anf a(n, random_function(rng, n).tt());

    out.check("mobius-involution", anf_of(tt_of(a)) == a && tt_of(anf_of(f)) == f, f);
    const auto fg = f * g;
    out.check("product-degree", degree(fg) <= degree(f) + degree(g), [&] { return describe(f, format_hex(g)); });
    out.check("sum-weight", weight(f + g) == weight(f) + weight(g) - 2 * weight(fg),
              [&] { return describe(f, format_hex(g)); });
    out.check("product-with-complement", (f * complement(f)).is_zero(), f);
    out.check("self-sum", (f + f).is_zero(), f);
    out.check("algebraic-complement",
              anf_of(algebraic_complement(f)).coeffs() == ~anf_of(f).coeffs() &&
                  algebraic_complement(algebraic_complement(f)) == f,
              f);
    out.check("delta0-anf", anf_of(delta(0, n)).coeffs().count() == f.size(), f);

    const AffineMap m = random_affine(rng, n);
    const auto fm = apply_affine(f, m);
    out.check("affine-weight-degree", weight(fm) == weight(f) && degree(fm) == degree(f), f);

    if (n >= 2) {
      const auto g0 = random_function(rng, n - 1), g1 = random_function(rng, n - 1);
      // The zero function has degree -infinity here, so deg(0) + 1 contributes 0.
      const auto sum = g0 + g1;
      const int tail = sum.is_zero() ? 0 : degree(sum) + 1;
      out.check("concatenation-degree", degree(concatenate(g0, g1)) == std::max(degree(g0), tail),
                [&] { return format_hex(g0) + " " + format_hex(g1); });
    }
  });
}

SuiteResult ai_oracle_suite(const SweepOptions& o) {
  require_n(o, 1, 4, "ai-oracle");
  const std::size_t count = o.exhaustive ? exhaustive_count(o, "ai-oracle") : o.trials;
  return run_indexed("ai-oracle", count, o.threads, [&](std::size_t i, SuiteResult& out) {
    BooleanFunction f;
    if (o.exhaustive) {
      f = BooleanFunction::from_word(o.n, i);
    } else {
      std::mt19937_64 rng(trial_seed(o.seed, i));
      f = random_function(rng, o.n);
    }
    const int kernel_ai = ai(f), brute_ai = ai_brute(f);
    out.check("ai-equals-brute", kernel_ai == brute_ai,
              [&] { return describe(f, std::to_string(kernel_ai) + " vs " + std::to_string(brute_ai)); });
    const auto fc = complement(f);
    out.check("lda-equals-brute", lda(f) == lda_brute(f) && lda(fc) == lda_brute(fc), f);
  });
}

SuiteResult fai_oracle_suite(const SweepOptions& o) {
  require_n(o, 1, 5, "fai-oracle");
  const std::size_t count = o.exhaustive ? exhaustive_count(o, "fai-oracle") : o.trials;
  return run_indexed("fai-oracle", count, o.threads, [&](std::size_t i, SuiteResult& out) {
    BooleanFunction f;
    if (o.exhaustive) {
      f = BooleanFunction::from_word(o.n, i);
      if (f.is_constant()) return;
    } else {
      std::mt19937_64 rng(trial_seed(o.seed, i));
      f = random_nonconstant(rng, o.n);
    }
    out.count("functions");
    const FaiResult r = fai(f);
    const int direct = fai_direct(f);
    out.check("fai-equals-direct", r.value == direct,
              [&] { return describe(f, std::to_string(r.value) + " vs " + std::to_string(direct)); });
    out.check("witness-valid", witness_ok(f, r), f);
    out.check("profile-value-identity", r.profile_value == std::min(r.value, 1 + degree(f)),
              [&] { return describe(f, "profile " + std::to_string(r.profile_value)); });
    if (r.diverges()) {
      out.count("profile/definition divergences (FAI > 1 + deg f)");
      out.check("divergence-degenerate-only", r.value > 1 + degree(f), f);
    }
  });
}

SuiteResult fai_bounds_suite(const SweepOptions& o) {
  require_n(o, 2, 10, "fai-bounds");
  const int n = o.n;
  return run_indexed("fai-bounds", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const auto f = random_nonconstant(rng, n);
    const auto fc = complement(f);
    const int lf = *lda(f), lfc = *lda(fc), a = ai(f);
    const auto pf = profile(f), pfc = profile(fc);

    bool stable = true;
    for (int k = lf; k <= n; ++k) stable = stable && pfc.mu[static_cast<std::size_t>(k - 1)] == lf;
    for (int k = lfc; k <= n; ++k) stable = stable && pf.mu[static_cast<std::size_t>(k - 1)] == lfc;
    out.check("lda-from-profile", lf == min_mu(pfc) && lfc == min_mu(pf), f);
    out.check("lda-profile-stable", stable, f);
    out.check("ai-from-profile", a == std::min(min_mu(pf), min_mu(pfc)), f);

    bool monotone = true, below_degree = true;
    for (std::size_t k = 0; k < pf.mu.size(); ++k) {
      if (k > 0) monotone = monotone && *pf.mu[k] <= *pf.mu[k - 1];
      below_degree = below_degree && *pf.mu[k] <= degree(f);
    }
    out.check("profile-nonincreasing", monotone, f);
    out.check("profile-below-degree", below_degree, f);

    const FaiResult r = fai(f), rc = fai(fc);
    const int v = r.value;
    out.check("witness-valid", witness_ok(f, r), f);
    out.check("profile-value-identity", r.profile_value == std::min(v, 1 + degree(f)), f);
    out.check("fai-lda-lower", lfc + 1 <= v, [&] { return describe(f, "fai " + std::to_string(v)); });
    out.check("fai-lda-upper", v <= 2 * lfc, [&] { return describe(f, "fai " + std::to_string(v)); });
    out.check("min-fai-le-2ai", std::min(v, rc.value) <= 2 * a, f);
    const int ff = ffai(f);
    out.check("ffai-definition", ff == std::min(v, rc.value) && ff == ffai(fc), f);
    out.check("ffai-sandwich", std::min(lf + 1, lfc + 1) <= ff && ff <= 2 * a, f);
    out.check("witness-degree-split", r.witness.g.degree() <= v / 2 && r.witness.fg.degree() >= (v + 1) / 2, f);
    out.check("fai-at-most-n-plus-1", v <= n + 1, f);
    if (v == n + 1) out.count(weight(f) == 1 ? "FAI = n+1, point indicator" : "FAI = n+1, weight > 1");

    // A support strictly containing that of a non-constant affine l gives FAI = 2.
    const std::size_t lin = 1 + rng() % ((std::size_t{1} << n) - 1);
    auto l = linear_form(lin, n);
    if (rng() & 1U) l = complement(l);
    BitVector extra = ~l.tt();
    BitVector mask = random_function(rng, n).tt();
    extra &= mask;
    if (extra.none()) extra.set((~l.tt()).find_first());
    const BooleanFunction h(n, l.tt() | extra);
    out.check("tight-instance-fai-2", fai(h).value == 2, h);
    if (h.is_one())
      out.count("tight instance is all-ones (lda(1+f) = 0)");
    else
      out.check("tight-instance-lda-1", *lda(complement(h)) == 1, h);
  });
}

SuiteResult invariance_suite(const SweepOptions& o) {
  require_n(o, 1, 10, "invariance");
  return run_indexed("invariance", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const auto f = random_nonconstant(rng, o.n);
    const auto r = fai(f);
    const auto p = profile(f);
    const int ff = ffai(f), a = ai(f);
    for (std::size_t t = 0; t < o.inner; ++t) {
      const auto g = apply_affine(f, random_affine(rng, o.n));
      out.check("fai-invariant", fai(g).value == r.value, f);
      out.check("profile-invariant", profile(g).mu == p.mu, f);
      out.check("ffai-invariant", ffai(g) == ff, f);
      out.check("ai-invariant", ai(g) == a, f);
    }
  });
}

SuiteResult perturbation_suite(const SweepOptions& o) {
  require_n(o, 2, 8, "perturbation");
  const int n = o.n;
  const std::size_t size = std::size_t{1} << n;
  return run_indexed("perturbation", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));

    {  // AI of a low-weight perturbation of a function with AI = k.
      const auto f = random_nonconstant(rng, n);
      const int k = ai(f);
      const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const std::size_t limit = std::min(std::size_t{1} << (n - k), (std::size_t{2} << d) - 1);
      const auto pts = random_points(rng, n, rng() % limit);
      const auto g = f + BooleanFunction::from_support(n, pts);
      out.check("ai-perturbation", std::abs(ai(g) - k) <= d,
                [&] { return describe(f, "+ " + format_support(BooleanFunction::from_support(n, pts))); });
    }

    {  // Johansson-Wang: distance below dim RM(d, n) from a degree-k function.
      const auto f = random_function(rng, n);
      const int k = degree(f);
      const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      const std::size_t bound = std::min(binomial_sum(n, d), size + 1);
      const auto pts = random_points(rng, n, rng() % bound);
      const auto g = f + BooleanFunction::from_support(n, pts);
      if (g.is_zero()) {
        out.count("johansson-wang skipped (f + delta = 0)");
      } else {
        const int v = fai(g).value;
        const bool ok = out.check("johansson-wang", v <= k + 2 * d, [&] {
          return describe(f, "+ " + format_support(BooleanFunction::from_support(n, pts)) + " d=" +
                                 std::to_string(d) + " fai=" + std::to_string(v) + " bound=" + std::to_string(k + 2 * d) +
                                 (vanishing_space_annihilates(f, pts, d) ? " (every deg<=d g vanishing on delta annihilates f)"
                                                                         : ""));
        });
        if (!ok && vanishing_space_annihilates(f, pts, d)) out.count("johansson-wang failures with no usable g");
      }
    }

    {  // Algebraic complement and the witness lemma.
      const auto f = random_function(rng, n);
      const auto fc = algebraic_complement(f);
      const auto d0 = delta(0, n);
      if (f == d0 || fc == d0) {
        out.count("complement skipped (f or f^c is delta_0)");
      } else {
        const int a = fai(f).value, b = fai(fc).value;
        out.check("complement-fai", std::abs(a - b) <= 2,
                  [&] { return describe(f, std::to_string(a) + " vs " + std::to_string(b)); });
      }
      if (!f.is_zero() && !(f == d0)) {
        const auto r = fai(f);
        const auto fg = tt_of(r.witness.fg);
        bool found = false;
        for (std::size_t lin = 1; lin < size && !found; ++lin) found = !(fg * linear_form(lin, n)).is_zero();
        out.check("witness-linear-form", found, [&] { return describe(f, "g=" + format_anf(r.witness.g)); });
      }
    }

    {  // Concatenation and bar.
      const auto f0 = random_nonconstant(rng, n - 1), f1 = random_nonconstant(rng, n - 1);
      const int a0 = fai(f0).value, a1 = fai(f1).value, v = fai(concatenate(f0, f1)).value;
      const auto text = [&] {
        return format_hex(f0) + " | " + format_hex(f1) + " fai " + std::to_string(a0) + "," + std::to_string(a1) +
               " -> " + std::to_string(v);
      };
      out.check("concatenation-lower", std::min(a0, a1 + 1) <= v, text);
      out.check("concatenation-upper", v <= std::min(a0, a1) + 2, text);

      const auto b = bar(f0);
      const int fb = fai(b).value, ffb = ffai(b), ff0 = ffai(f0), c0 = fai(complement(f0)).value;
      out.check("bar-fai", std::min(a0, c0 + 1) <= fb && fb <= ff0 + 2, f0);
      out.check("bar-ffai", ff0 <= ffb && ffb <= ff0 + 2, f0);
    }
  });
}

SuiteResult codes_suite(const SweepOptions& o) {
  require_n(o, 1, 10, "codes");
  SuiteResult out = run_indexed("codes", o.trials, o.threads, [&](std::size_t i, SuiteResult& part) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const std::size_t len = 1 + rng() % 32, k = rng() % (len + 1);
    BitMatrix g(k, len);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < len; ++c)
        if (rng() & 1U) g.set(r, c);
    const LinearCode code(g);
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < len; ++c)
      if (rng() & 1U) s.push_back(c);
    const LinearCode d = dual(code);
    const auto text = [&] { return code_text(code); };
    part.check("dual-dimension", code.dimension() + d.dimension() == len, text);
    part.check("dual-orthogonal", mul(code.generator(), d.generator().transpose()).is_zero(), text);
    part.check("dual-involution", dual(d) == code, text);
    part.check("puncture-shorten-duality",
               dual(puncture(code, s)) == shorten(d, s) && dual(shorten(code, s)) == puncture(d, s), text);
    for (const auto& c : {code, d, puncture(code, s), shorten(code, s)}) check_code_invariants(part, c);
  });

  for (int n = 1; n <= o.n; ++n) {
    for (int d = 0; d <= n; ++d) {
      const LinearCode c = rm(d, n);
      const auto text = [&] { return "RM(" + std::to_string(d) + "," + std::to_string(n) + ")"; };
      out.check("rm-dimension", c.dimension() == binomial_sum(n, d) && c.length() == (std::size_t{1} << n), text);
      const LinearCode expected = d < n ? rm(n - d - 1, n) : LinearCode::zero(c.length());
      out.check("rm-dual", dual(c) == expected, text);
      check_code_invariants(out, c);
      if (n <= 5) out.check("rm-min-weight", min_weight(c) == (std::size_t{1} << (n - d)), text);
    }
  }
  const LinearCode rm13 = rm(1, 3);
  out.check("rm13-self-dual", dual(rm13) == rm13 && hull_dim(rm13) == 4 && min_weight(rm13) == 4,
            [] { return std::string("RM(1,3)"); });
  return out;
}

SuiteResult ai_by_codes_suite(const SweepOptions& o) {
  require_n(o, 2, 10, "ai-by-codes");
  return run_indexed("ai-by-codes", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const auto f = random_nonconstant(rng, o.n);
    const int a = ai(f);
    for (int e = 1; e <= o.n; ++e)
      out.check("ai-by-dimensions", ai_exceeds_via_dims(f, e) == (a > e),
                [&] { return describe(f, "e=" + std::to_string(e) + " ai=" + std::to_string(a)); });
  });
}

SuiteResult fai_by_codes_suite(const SweepOptions& o) {
  require_n(o, 2, 8, "fai-by-codes");
  return run_indexed("fai-by-codes", o.trials, o.threads, [&](std::size_t i, SuiteResult& out) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    BooleanFunction f;
    do f = random_function(rng, o.n);
    while (f.is_zero() || degree(f) < o.n - 1);
    const int v = fai(f).value, top = std::min(o.n + 1, degree(f) + 1);
    for (int s = 1; s <= top; ++s)
      out.check("fai-by-codes", fai_at_least_via_codes(f, s) == (v >= s),
                [&] { return describe(f, "s=" + std::to_string(s) + " fai=" + std::to_string(v)); });
  });
}

SuiteResult pai_lcd_suite(const SweepOptions& o) {
  require_n(o, 2, 8, "pai-lcd");
  const std::size_t count = o.exhaustive ? exhaustive_count(o, "pai-lcd") : o.trials;
  const int n = o.n;
  return run_indexed("pai-lcd", count, o.threads, [&](std::size_t i, SuiteResult& out) {
    BooleanFunction f;
    if (o.exhaustive) {
      f = BooleanFunction::from_word(n, i);
      if (f.is_zero()) return;
    } else {
      std::mt19937_64 rng(trial_seed(o.seed, i));
      do f = random_function(rng, n);
      while (f.is_zero());
    }
    const int v = fai(f).value;
    const bool by_def = v >= n, by_lcd = is_pai_via_lcd(f);
    out.check("pai-iff-lcd", by_def == by_lcd, [&] {
      std::string s = describe(f, "fai=" + std::to_string(v) + " deg=" + std::to_string(degree(f)) + " lcd=");
      for (bool b : lcd_status_per_e(f, default_field(n))) s += b ? '1' : '0';
      return s;
    });
    if (by_def) out.count("PAI by definition");
    if (by_lcd) out.count("PAI by LCD");
    if (by_def && degree(f) < n - 1) out.count("PAI by definition with deg f < n-1");
    if ((by_def && degree(f) >= n - 1) != by_lcd) out.count("mismatches once deg f >= n-1 is also required");
  });
}

SuiteResult pai_parity_suite(const SweepOptions& o) {
  require_n(o, 2, 8, "pai-parity");
  const std::size_t count = o.exhaustive ? exhaustive_count(o, "pai-parity") : o.trials;
  const int n = o.n;
  return run_indexed("pai-parity", count, o.threads, [&](std::size_t i, SuiteResult& out) {
    BooleanFunction f;
    if (o.exhaustive) {
      f = BooleanFunction::from_word(n, i);
    } else {
      std::mt19937_64 rng(trial_seed(o.seed, i));
      f = random_function(rng, n);
    }
    if (f.is_zero() || fai(f).value < n) return;
    const std::size_t wt = weight(f);
    out.count("PAI functions");
    out.check("pai-weight-parity", parity_matches(n, wt),
              [&] { return describe(f, "wt=" + std::to_string(wt) + " ai=" + std::to_string(ai(f))); });
    if (2 * ai(f) >= n) {
      out.count("PAI functions with AI >= n/2");
      if (!parity_matches(n, wt)) out.count("parity failures with AI >= n/2");
      if (degree(f) >= n - 1 && !parity_matches(n, wt)) out.count("parity failures with AI >= n/2 and deg f >= n-1");
    }
  });
}

SuiteResult lcd_from_pai_suite(const SweepOptions& o) {
  require_n(o, 3, 8, "lcd-from-pai");
  const int n = o.n;
  std::vector<BooleanFunction> candidates;
  if (carlet_feng_admissible(n)) {
    const auto order = static_cast<std::int64_t>((std::size_t{1} << n) - 1);
    for (std::int64_t l = 0; l < order; ++l) candidates.push_back(function_from_columns(carlet_feng_support(n, l)));
  }
  if (o.exhaustive) {
    const std::size_t count = exhaustive_count(o, "lcd-from-pai");
    for (std::size_t w = 1; w < count; ++w) candidates.push_back(BooleanFunction::from_word(n, w));
  }
  return run_indexed("lcd-from-pai", candidates.size(), o.threads, [&](std::size_t i, SuiteResult& out) {
    const auto& f = candidates[i];
    if (!is_pai(f)) {
      out.count("candidates that are not PAI");
      return;
    }
    out.count("PAI functions");
    for (int e = 1; 2 * e <= n - 1; ++e) {
      try {
        const LinearCode c = lcd_from_pai(f, e);
        out.check("lcd-from-pai-shape", is_lcd(c) && c.length() == weight(f) && c.dimension() == binomial_sum(n, e),
                  [&] { return describe(f, code_text(c)); });
        check_code_invariants(out, c);
        check_code_invariants(out, dual(c));
        out.count("[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "] LCD codes, e=" +
                  std::to_string(e));
      } catch (const LcdExtractionError& ex) {
        out.check("lcd-from-pai-shape", false, [&] { return describe(f, "e=" + std::to_string(e) + ": " + ex.what()); });
      }
    }
  });
}

SuiteResult carlet_feng_suite(const SweepOptions& o) {
  if (!carlet_feng_admissible(o.n))
    throw std::invalid_argument("carlet-feng: n = " + std::to_string(o.n) + " is not 2^t or 2^t + 1");
  const int n = o.n;
  const auto order = (std::size_t{1} << n) - 1;
  const std::size_t m = std::size_t{1} << (n - 1);
  const bool with_zero = std::has_single_bit(static_cast<unsigned>(n));
  return run_indexed("carlet-feng", order, o.threads, [&](std::size_t l, SuiteResult& out) {
    const auto cols = carlet_feng_support(n, static_cast<std::int64_t>(l));
    const auto f = function_from_columns(cols);
    out.check("support-size", cols.cols.size() == m + (with_zero ? 1 : 0), f);
    out.check("candidate-weight-parity", parity_matches(n, weight(f)), f);
    const int v = fai(f).value;
    const auto status = lcd_status_per_e(f, default_field(n));
    const bool by_lcd = std::ranges::all_of(status, [](bool b) { return b; });
    std::string line = "l=" + std::to_string(l) + " " + format_hex(f) + " wt=" + std::to_string(weight(f)) +
                       " fai=" + std::to_string(v) + " pai_by_def=" + (v >= n ? "true" : "false") +
                       " pai_by_lcd=" + (by_lcd ? "true" : "false") + " lcd=";
    for (bool b : status) line += b ? '1' : '0';
    out.note(std::move(line));
    out.count(v >= n ? "offsets verified PAI" : "offsets refuted");
  });
}

std::span<const SuiteInfo> suites() {
  static const std::vector<SuiteInfo> kSuites = {
      {"algebra", "Moebius involution and pointwise identities (n = max variable count)", algebra_suite},
      {"ai-oracle", "kernel ai/lda vs exhaustive annihilator search (n <= 4)", ai_oracle_suite},
      {"fai-oracle", "fai vs fai_direct, witnesses, profile identity (n <= 5)", fai_oracle_suite},
      {"fai-bounds", "LDA/AI/FAI/FFAI bounds and witness degree split", fai_bounds_suite},
      {"invariance", "affine invariance of FAI, FFAI, AI and profile", invariance_suite},
      {"perturbation", "AI perturbation, Johansson-Wang, complement, concatenation, bar", perturbation_suite},
      {"codes", "RM identities for d <= n <= N, puncture/shorten duality, hulls", codes_suite},
      {"ai-by-codes", "AI > e from punctured RM dimensions", ai_by_codes_suite},
      {"fai-by-codes", "FAI >= s from punctured RM intersections (deg f >= n-1)", fai_by_codes_suite},
      {"pai-lcd", "PAI by definition vs LCD restricted RM codes", pai_lcd_suite},
      {"pai-parity", "weight parity of PAI functions", pai_parity_suite},
      {"lcd-from-pai", "LCD codes extracted from PAI functions", lcd_from_pai_suite},
      {"carlet-feng", "PAI certificate for every Carlet-Feng offset", carlet_feng_suite},
  };
  return kSuites;
}

SuiteResult run_suite(std::string_view name, const SweepOptions& opts) {
  for (const auto& s : suites())
    if (s.name == name) return s.run(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace faimm
