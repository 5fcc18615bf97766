// faimm: command-line front end for the Boolean-function and code toolkit.
//
// Exit status: 0 success, 1 a checked property failed, 2 usage or input error.

#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "faimm/codes.hpp"
#include "faimm/immunity.hpp"
#include "faimm/io.hpp"
#include "faimm/pai_lcd.hpp"
#include "faimm/sweeps.hpp"
#include "json.hpp"

namespace {

using faimm::BooleanFunction;
using faimm::FieldGF2n;
using json = nlohmann::ordered_json;

constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  bool json = false;
  std::string out;
  std::string modulus;
  unsigned threads = 0;
  std::string command_line;
};

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

// Output sink: one record per line, either key=value text or JSON.
class Report {
 public:
  explicit Report(const Globals& g) : g_(g) {
    if (!g.out.empty()) {
      file_.open(g.out);
      if (!file_) throw UsageError("cannot open output file '" + g.out + "'");
    }
    if (g_.json)
      os() << json{{"type", "header"}, {"command", g.command_line}}.dump() << '\n';
    else
      os() << "# faimm " << g.command_line << '\n';
  }

  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool json_mode() const { return g_.json; }

  void record(const json& j) {
    if (g_.json) {
      os() << j.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (k == "type") continue;
      os() << (first ? "" : " ") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    os() << '\n';
  }

 private:
  const Globals& g_;
  std::ofstream file_;
};

class Fields {
 public:
  explicit Fields(const std::string& modulus) {
    if (modulus.empty()) return;
    std::uint32_t m = 0;
    try {
      m = static_cast<std::uint32_t>(std::stoul(modulus, nullptr, 16));
    } catch (const std::exception&) {
      throw UsageError("--modulus: '" + modulus + "' is not a hex number");
    }
    const int n = static_cast<int>(std::bit_width(m)) - 1;
    try {
      custom_.emplace(n, m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--modulus ") + modulus + ": " + e.what());
    }
  }

  const FieldGF2n& get(int n) const {
    if (custom_) {
      if (custom_->degree() != n)
        throw UsageError("--modulus has degree " + std::to_string(custom_->degree()) + " but n = " + std::to_string(n));
      return *custom_;
    }
    return faimm::default_field(n);
  }

  std::string modulus_text(int n) const { return n >= 2 ? hex(get(n).modulus()) : "none"; }

 private:
  std::optional<FieldGF2n> custom_;
};

BooleanFunction parse_or_usage(const std::string& spec) {
  try {
    return faimm::parse_function(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

int cmd_analyze(const Globals& g, const Fields& fields, const std::vector<std::string>& specs) {
  Report report(g);
  for (const auto& spec : specs) {
    const BooleanFunction f = parse_or_usage(spec);
    if (f.is_zero()) throw UsageError("FAI undefined for the zero function (" + spec + ")");
    const auto r = faimm::fai(f);
    json profile = json::array();
    for (const auto& m : faimm::profile(f).mu) profile.push_back(optional_int(m));
    json rec{{"type", "function"},
             {"tt", faimm::format_hex(f)},
             {"n", f.n()},
             {"modulus", fields.modulus_text(f.n())},
             {"deg", faimm::degree(f)},
             {"wt", faimm::weight(f)},
             {"ai", faimm::ai(f)},
             {"lda_f", optional_int(faimm::lda(f))},
             {"lda_fc", optional_int(faimm::lda(faimm::complement(f)))},
             {"profile", profile},
             {"fai", r.value},
             {"fai_profile", r.profile_value},
             {"ffai", f.is_constant() ? json(nullptr) : json(faimm::ffai(f))},
             {"witness_g", faimm::format_anf(r.witness.g)},
             {"witness_fg", faimm::format_anf(r.witness.fg)},
             {"witness_total", r.witness.total}};
    report.record(rec);
  }
  return 0;
}

int cmd_rm(const Globals& g, const Fields& fields, int d, int n, const std::string& punctured_by) {
  if (n < 1 || n > 12 || d < 0 || d > n) throw UsageError("rm needs 0 <= d <= n <= 12 and n >= 1");
  faimm::LinearCode code;
  if (!punctured_by.empty()) {
    const BooleanFunction f = parse_or_usage(punctured_by);
    if (f.n() != n) throw UsageError("--punctured-by function has " + std::to_string(f.n()) + " variables, not " +
                                     std::to_string(n));
    if (n < 2) throw UsageError("--punctured-by needs n >= 2");
    code = faimm::punctured_rm_on_support(f, d, fields.get(n));
  } else {
    code = n >= 2 ? faimm::rm(d, n, fields.get(n)) : faimm::rm(d, n);
  }
  Report report(g);
  if (report.json_mode()) {
    json rows = json::array();
    for (std::size_t r = 0; r < code.dimension(); ++r) rows.push_back(code.generator().row(r).to_string());
    report.record({{"type", "code"},
                   {"modulus", fields.modulus_text(n)},
                   {"length", code.length()},
                   {"dim", code.dimension()},
                   {"lcd", faimm::is_lcd(code)},
                   {"hull", faimm::hull_dim(code)},
                   {"generator", rows}});
  } else {
    report.os() << "# modulus " << fields.modulus_text(n) << '\n';
    faimm::write_code(report.os(), code);
  }
  return 0;
}

int cmd_lcd_check(const Globals& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  faimm::LinearCode code;
  try {
    code = faimm::read_code(in);
  } catch (const faimm::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  json min_weight = nullptr;
  try {
    min_weight = faimm::min_weight(code);
  } catch (const std::length_error&) {
  }
  Report report(g);
  report.record({{"type", "code"},
                 {"file", path},
                 {"length", code.length()},
                 {"dim", code.dimension()},
                 {"hull", faimm::hull_dim(code)},
                 {"lcd", faimm::is_lcd(code)},
                 {"self_orthogonal", faimm::is_self_orthogonal(code)},
                 {"even_like", faimm::is_even_like(code)},
                 {"min_weight", min_weight}});
  return 0;
}

json certificate(const BooleanFunction& f, const FieldGF2n& field) {
  const int v = faimm::fai(f).value;
  json status = json::array();
  bool all = true;
  for (bool b : faimm::lcd_status_per_e(f, field)) {
    status.push_back(b);
    all = all && b;
  }
  return {{"type", "certificate"},   {"tt", faimm::format_hex(f)}, {"modulus", hex(field.modulus())},
          {"wt", faimm::weight(f)},  {"deg", faimm::degree(f)},   {"fai", v},
          {"pai_by_def", v >= f.n()}, {"pai_by_lcd", all},        {"per_e_lcd_status", status}};
}

int cmd_pai_verify(const Globals& g, const Fields& fields, const std::vector<std::string>& specs,
                   std::optional<int> search) {
  std::vector<BooleanFunction> fs;
  if (search) {
    if (*search < 2 || *search > 4) throw UsageError("--search needs 2 <= n <= 4");
    for (faimm::Word w = 1; w < (faimm::Word{1} << (1U << *search)); ++w) {
      auto f = BooleanFunction::from_word(*search, w);
      if (faimm::is_pai(f)) fs.push_back(std::move(f));
    }
  } else {
    for (const auto& s : specs) {
      fs.push_back(parse_or_usage(s));
      if (fs.back().is_zero()) throw UsageError("pai-verify needs a nonzero function (" + s + ")");
      if (fs.back().n() < 2) throw UsageError("pai-verify needs n >= 2 (" + s + ")");
    }
  }
  Report report(g);
  std::size_t disagreements = 0;
  for (const auto& f : fs) {
    const json c = certificate(f, fields.get(f.n()));
    if (c["pai_by_def"] != c["pai_by_lcd"]) ++disagreements;
    report.record(c);
  }
  report.record({{"type", "summary"}, {"functions", fs.size()}, {"definition_lcd_disagreements", disagreements}});
  return disagreements == 0 ? 0 : kPropertyFailure;
}

int cmd_carlet_feng(const Globals& g, const Fields& fields, int n, std::optional<std::int64_t> offset,
                    std::optional<std::size_t> count) {
  if (!faimm::carlet_feng_admissible(n)) throw UsageError("n = " + std::to_string(n) + " is not 2^t or 2^t + 1");
  const FieldGF2n& field = fields.get(n);
  std::vector<std::int64_t> offsets;
  if (offset)
    offsets.push_back(*offset);
  else
    for (std::int64_t l = 0; l < static_cast<std::int64_t>(field.group_order()); ++l) offsets.push_back(l);
  Report report(g);
  std::size_t verified = 0;
  for (std::int64_t l : offsets) {
    faimm::SupportColumns cols;
    try {
      cols = faimm::carlet_feng_support(n, l, count, field);
    } catch (const faimm::PreconditionError& e) {
      throw UsageError(e.what());
    }
    const auto f = faimm::function_from_columns(cols, field);
    json c = certificate(f, field);
    c["offset"] = l;
    c["support_columns"] = cols.cols;
    if (c["pai_by_def"].get<bool>()) ++verified;
    report.record(c);
  }
  report.record({{"type", "summary"}, {"offsets", offsets.size()}, {"verified_pai", verified}});
  return 0;
}

int cmd_sweep(const Globals& g, const std::string& suite, int n, std::optional<std::size_t> trials, bool exhaustive,
              std::size_t inner) {
  if (!g.modulus.empty()) throw UsageError("sweeps always use the default modulus");
  faimm::SweepOptions o;
  o.n = n;
  o.trials = trials.value_or(g.trials.value_or(1000));
  o.seed = g.seed;
  o.threads = g.threads ? g.threads : std::max(1U, std::thread::hardware_concurrency());
  o.exhaustive = exhaustive;
  o.inner = inner;
  faimm::SuiteResult r;
  try {
    r = faimm::run_suite(suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report report(g);
  if (report.json_mode()) {
    json props = json::object();
    for (const auto& [k, t] : r.properties()) props[k] = {{"checks", t.checks}, {"failures", t.failures}};
    report.record({{"type", "sweep"},
                   {"suite", r.name()},
                   {"n", n},
                   {"modulus", n >= 2 && n <= 16 ? hex(faimm::default_field(n).modulus()) : "none"},
                   {"seed", g.seed},
                   {"trials", o.trials},
                   {"exhaustive", exhaustive},
                   {"passed", r.passed()},
                   {"checks", r.checks()},
                   {"failures", r.failures()},
                   {"properties", props},
                   {"counts", r.counters()},
                   {"notes", r.notes()},
                   {"counterexamples", r.counterexamples()}});
  } else {
    if (n >= 2 && n <= 16) report.os() << "# modulus " << hex(faimm::default_field(n).modulus()) << '\n';
    faimm::write_report(report.os(), r);
  }
  return r.passed() ? 0 : kPropertyFailure;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic and fast algebraic immunity of Boolean functions; LCD codes from punctured Reed-Muller codes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.command_line = join_args(argc, argv);
  app.add_option("--seed", g.seed, "64-bit seed for sweeps");
  app.add_option("--trials", g.trials, "trial count for sweeps");
  app.add_flag("--json", g.json, "one JSON object per line");
  app.add_option("--out", g.out, "write the report to this file");
  app.add_option("--modulus", g.modulus, "primitive polynomial in hex (with the x^n term)");
  app.add_option("--threads", g.threads, "sweep worker threads (default: all cores)");

  std::vector<std::string> analyze_specs;
  auto* analyze = app.add_subcommand("analyze", "degree, weight, LDA, AI, profile, FAI, FFAI and witness");
  analyze->add_option("function", analyze_specs, "n:HEX or n:{i,j,...}")->required();

  int rm_d = 0, rm_n = 0;
  std::string punctured_by;
  auto* rmc = app.add_subcommand("rm", "Reed-Muller generator matrix");
  rmc->add_option("d", rm_d)->required();
  rmc->add_option("n", rm_n)->required();
  rmc->add_option("--punctured-by", punctured_by, "keep only the support columns of this function");

  std::string lcd_path;
  auto* lcd = app.add_subcommand("lcd-check", "hull dimension and LCD status of a generator matrix file");
  lcd->add_option("file", lcd_path)->required();

  std::vector<std::string> pai_specs;
  std::optional<int> pai_search;
  auto* pai = app.add_subcommand("pai-verify", "PAI by definition and by LCD-ness of restricted RM codes");
  pai->add_option("function", pai_specs, "n:HEX or n:{i,j,...}");
  pai->add_option("--search", pai_search, "list every PAI function of n <= 4 variables");

  int cf_n = 0;
  std::optional<std::int64_t> cf_offset;
  std::optional<std::size_t> cf_count;
  auto* cf = app.add_subcommand("carlet-feng", "certificate for {alpha^l, ..., alpha^(l+m-1)} supports");
  cf->add_option("n", cf_n)->required();
  cf->add_option("l", cf_offset, "offset (default: every offset)");
  cf->add_option("m", cf_count, "support size (default 2^(n-1))");

  std::string suite;
  int sweep_n = 0;
  std::optional<std::size_t> sweep_trials;
  bool exhaustive = false;
  std::size_t inner = 100;
  auto* sweep = app.add_subcommand("sweep", "run a seeded property suite");
  std::string suite_help = "one of:";
  for (const auto& s : faimm::suites()) suite_help += " " + std::string(s.name);
  sweep->add_option("suite", suite, suite_help)->required();
  sweep->add_option("n", sweep_n)->required();
  sweep->add_option("trials", sweep_trials);
  sweep->add_flag("--exhaustive", exhaustive, "enumerate every function (n <= 4)");
  sweep->add_option("--inner", inner, "affine maps per function (invariance suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    const Fields fields(g.modulus);
    if (*analyze)
      status = cmd_analyze(g, fields, analyze_specs);
    else if (*rmc)
      status = cmd_rm(g, fields, rm_d, rm_n, punctured_by);
    else if (*lcd)
      status = cmd_lcd_check(g, lcd_path);
    else if (*pai) {
      if (pai_specs.empty() == !pai_search) throw UsageError("pai-verify needs function specs or --search n");
      status = cmd_pai_verify(g, fields, pai_specs, pai_search);
    } else if (*cf)
      status = cmd_carlet_feng(g, fields, cf_n, cf_offset, cf_count);
    else if (*sweep)
      status = cmd_sweep(g, suite, sweep_n, sweep_trials, exhaustive, inner);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "# duration " << seconds << " s\n";
  return status;
}
