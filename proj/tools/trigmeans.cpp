#include "trigmeans/corpus.hpp"
#include "trigmeans/lemmas.hpp"
#include "trigmeans/report.hpp"
#include "trigmeans/smoothness.hpp"
#include "trigmeans/summators.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace trigmeans;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse range '" + text + "' (expected A..B)");
  }
}

CorpusFunction require_function(const std::string& id) {
  auto f = find_function(id);
  if (f) return *f;
  std::ostringstream msg;
  msg << "unknown function '" << id << "'; valid ids:";
  for (const auto& known : corpus_ids()) msg << ' ' << known;
  msg << " poly<d>";
  throw UsageError(msg.str());
}

std::vector<CorpusFunction> resolve_functions(std::vector<std::string> ids,
                                              bool default_excludes_constant) {
  std::vector<CorpusFunction> out;
  if (ids.empty()) {
    for (const auto& f : corpus_entries()) {
      if (default_excludes_constant && f.id == "constant") continue;
      out.push_back(f);
    }
  } else {
    for (const auto& id : ids) out.push_back(require_function(id));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusFunction& a, const CorpusFunction& b) {
              return a.id < b.id;
            });
  return out;
}

// Flat `key = value` config file: each key maps to the long option --key of
// the invoked subcommand.  Values are injected as extra arguments, so
// anything given on the command line itself takes precedence and unknown
// keys fail through the normal option validation.
std::vector<std::string> inject_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      config_path = args[i].substr(9);
  }
  if (config_path.empty()) return args;
  std::ifstream in(config_path);
  if (!in) throw UsageError("cannot read config file '" + config_path + "'");
  const auto trim = [](const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  const auto given = [&args](const std::string& flag) {
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: expected 'key = value', got '" + trim(line) + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw UsageError("config: missing key in line '" + trim(line) + "'");
    if (const std::string flag = "--" + key; !given(flag)) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

struct OutputOpts {
  std::string out;
  std::string format = "csv";
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  static std::string config_sink;  // read by inject_config_args, not here
  cmd->add_option("--config", config_sink, "flat key = value config file");
}

int emit(const Table& table, const OutputOpts& o) {
  const auto format = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (o.out.empty()) {
    write_table(std::cout, table, format);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + o.out + "'");
    write_table(file, table, format);
  }
  return 0;
}

// --m pins a fixed m; otherwise the classical window m = floor(n/2).
struct MRule {
  std::string rule = "half";
  int fixed_m = -1;

  int resolve(int n) const { return fixed_m >= 0 ? fixed_m : n / 2; }
  void validate() const {
    if (rule == "fixed" && fixed_m < 0)
      throw UsageError("--m-rule fixed requires --m");
  }
};

void add_m_opts(CLI::App* cmd, MRule& m) {
  cmd->add_option("--m", m.fixed_m, "fixed m for vp means (implies --m-rule fixed)");
  cmd->add_option("--m-rule", m.rule, "half|fixed (default: half, m = floor(n/2))")
      ->check(CLI::IsMember({"half", "fixed"}));
}

// ---------------------------------------------------------------------------

struct CorpusListCmd {
  OutputOpts out;

  int run() const {
    Table t;
    t.header = {"id", "n0", "hypothesis_ok", "description"};
    t.types = {ColumnType::text, ColumnType::integer, ColumnType::text,
               ColumnType::text};
    for (const auto& f : corpus_entries())
      t.add_row({f.id, std::to_string(f.n0), f.hypothesis_ok ? "true" : "false",
                 f.description});
    return emit(t, out);
  }
};

struct CoeffsCmd {
  std::string function;
  int max_k = 4096;
  OutputOpts out;

  int run() const {
    const auto f = require_function(function);
    const auto s = materialize(f, max_k);
    if (out.format == "csv") {
      if (out.out.empty()) {
        write_coefficients_csv(std::cout, s);
      } else {
        std::ofstream file(out.out, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + out.out + "'");
        write_coefficients_csv(file, s);
      }
      return 0;
    }
    Table t;
    t.header = {"k", "alpha", "beta", "rho", "phi"};
    t.types = {ColumnType::integer, ColumnType::number, ColumnType::number,
               ColumnType::number, ColumnType::number};
    t.add_row({"0", format_number(s.a0), "0", "", ""});
    for (int k = 1; k <= s.max_degree(); ++k)
      t.add_row({std::to_string(k), format_number(s.alpha[k - 1]),
                 format_number(s.beta[k - 1]), format_number(s.rho[k - 1]),
                 format_number(s.phi[k - 1])});
    return emit(t, out);
  }
};

MeanKind parse_mean_kind(const std::string& name) {
  if (name == "partial") return MeanKind::partial;
  if (name == "fejer") return MeanKind::fejer;
  if (name == "vp") return MeanKind::vallee_poussin;
  throw UsageError("unknown mean '" + name + "'");
}

struct ApproxCmd {
  std::string function;
  std::string mean = "fejer";
  int n = 8;
  MRule m;
  int max_k = 4096;
  int grid = 1024;
  OutputOpts out;

  int run() const {
    m.validate();
    if (grid < 2) throw UsageError("--grid must be >= 2");
    const auto f = require_function(function);
    const auto s = materialize(f, max_k);
    MeanSpec spec{parse_mean_kind(mean), n, 0};
    if (spec.kind == MeanKind::vallee_poussin) {
      spec.m = m.resolve(n);
      if (spec.m >= n) throw UsageError("vp mean needs m < n");
    }
    const TrigPoly p = apply_mean(s, spec);
    Table t;
    t.header = {"x", "f", "approx"};
    t.types = {ColumnType::number, ColumnType::number, ColumnType::number};
    for (int j = 0; j < grid; ++j) {
      const double x = kTwoPi * j / (grid - 1);
      t.add_row({format_number(x), format_number(f.evaluator(x)),
                 format_number(p(x))});
    }
    return emit(t, out);
  }
};

struct ErrorTableCmd {
  std::vector<std::string> functions;
  std::string mean = "all";
  std::string n_range = "2..16";
  MRule m;
  int max_k = 4096;
  int grid = 16384;
  OutputOpts out;

  int run() const {
    m.validate();
    const Range nr = parse_range(n_range);
    if (nr.lo < 1) throw UsageError("--n-range must start at 1 or above");
    if (nr.hi > max_k) throw UsageError("--n-range exceeds --max-k (K >= max n required)");
    if (grid < 4 * (nr.hi + 1))
      throw UsageError("--grid too small for the quadrature oracle (need >= 4*(n+1))");
    std::vector<MeanKind> kinds;
    if (mean == "all")
      kinds = {MeanKind::fejer, MeanKind::vallee_poussin};
    else {
      const MeanKind k = parse_mean_kind(mean);
      if (k == MeanKind::partial)
        throw UsageError("error-table covers fejer and vp means only");
      kinds = {k};
    }

    Table t;
    t.header = {"function", "kind",          "n", "m", "error_ledger",
                "error_quadrature", "truncation_budget"};
    t.types = {ColumnType::text,   ColumnType::text,   ColumnType::integer,
               ColumnType::integer, ColumnType::number, ColumnType::number,
               ColumnType::number};
    for (const auto& f : resolve_functions(functions, false)) {
      const auto s = materialize(f, max_k);
      for (const MeanKind kind : kinds) {
        for (int n = nr.lo; n <= nr.hi; ++n) {
          ErrorLedger ledger;
          TrigPoly p;
          std::string m_cell;
          if (kind == MeanKind::fejer) {
            ledger = fejer_error_sq(s, n);
            p = fejer_mean(s, n);
          } else {
            const int mm = m.resolve(n);
            if (mm >= n) continue;  // fixed m outside this n
            ledger = vp_error_sq(s, mm, n);
            p = vallee_poussin_mean(s, mm, n);
            m_cell = std::to_string(mm);
          }
          const double quad =
              residual_quadrature_error_sq(f.evaluator, p, grid);
          t.add_row({f.id, mean_kind_name(kind), std::to_string(n), m_cell,
                     format_number(std::sqrt(ledger.value)),
                     format_number(std::sqrt(quad)),
                     format_number(ledger.truncation_budget)});
        }
      }
    }
    return emit(t, out);
  }
};

struct BoundCheckCmd {
  std::vector<std::string> functions;
  std::string mean = "fejer";
  std::string n_range = "2..16";
  MRule m;
  int max_k = 4096;
  int t_points = 513;
  int quad_points = 512;
  OutputOpts out;

  int run() const {
    m.validate();
    const Range nr = parse_range(n_range);
    if (nr.lo < 1) throw UsageError("--n-range must start at 1 or above");
    if (nr.hi > max_k) throw UsageError("--n-range exceeds --max-k (K >= max n required)");
    std::vector<MeanKind> kinds;
    if (mean == "both")
      kinds = {MeanKind::fejer, MeanKind::vallee_poussin};
    else {
      const MeanKind k = parse_mean_kind(mean);
      if (k == MeanKind::partial)
        throw UsageError("bound-check covers fejer and vp means only");
      kinds = {k};
    }

    Table t;
    t.header = {"function", "kind", "n", "m", "n0", "lhs", "rhs", "ratio",
                "budget", "verdict"};
    t.types = {ColumnType::text,   ColumnType::text,   ColumnType::integer,
               ColumnType::integer, ColumnType::integer, ColumnType::number,
               ColumnType::number, ColumnType::number, ColumnType::number,
               ColumnType::text};
    for (const auto& f : resolve_functions(functions, true)) {
      const auto s = materialize(f, max_k);
      if (ledger_norm_sq(s, false) == 0.0 && s.tail_energy_bound == 0.0)
        throw UsageError("function '" + f.id +
                         "' is constant; the bound requires f != const");
      for (const MeanKind kind : kinds) {
        for (int n = nr.lo; n <= nr.hi; ++n) {
          MeanSpec spec{kind, n, 0};
          std::string m_cell;
          if (kind == MeanKind::vallee_poussin) {
            spec.m = m.resolve(n);
            if (spec.m >= n) continue;
            m_cell = std::to_string(spec.m);
          }
          const BoundReport r = check_bound(s, spec, quad_points, t_points, f.n0);
          t.add_row({f.id, mean_kind_name(kind), std::to_string(n), m_cell,
                     std::to_string(r.n0), format_number(r.lhs),
                     format_number(r.rhs), format_number(r.ratio),
                     format_number(r.lhs_truncation_budget),
                     verdict_name(r.verdict)});
        }
      }
    }
    return emit(t, out);
  }
};

struct LemmaCheckCmd {
  int trials = 1000;
  std::uint64_t seed = 12345;
  std::string adversarial;
  int force_n = 0;
  int force_L = 0;
  OutputOpts out;

  int run() const {
    const bool spike = adversarial == "spike";
    Table t;
    t.header = {"seed",    "family",   "n",       "L",       "n0",
                "direct1", "grouped1", "direct2", "grouped2", "verdict"};
    t.types = {ColumnType::integer, ColumnType::text,   ColumnType::integer,
               ColumnType::integer, ColumnType::integer, ColumnType::number,
               ColumnType::number, ColumnType::number, ColumnType::number,
               ColumnType::text};
    bool grouping_breach = false;
    bool monotone_sign_violation = false;
    for (int i = 0; i < trials; ++i) {
      const LemmaTrial trial = spike ? spike_trial(seed, i, force_n, force_L)
                                     : random_trial(seed, i, force_n, force_L);
      std::string verdict = "ok";
      if (!trial.grouping_ok()) {
        verdict = "grouping_mismatch";
        grouping_breach = true;
      } else if (!trial.sign1_ok() && !trial.sign2_ok()) {
        verdict = "sign1_sign2_violated";
      } else if (!trial.sign1_ok()) {
        verdict = "sign1_violated";
      } else if (!trial.sign2_ok()) {
        verdict = "sign2_violated";
      }
      if (trial.monotone_regime() && (!trial.sign1_ok() || !trial.sign2_ok()))
        monotone_sign_violation = true;
      t.add_row({std::to_string(trial.seed),
                 spike ? "spike" : seq_family_name(trial.family),
                 std::to_string(trial.n), std::to_string(trial.L),
                 std::to_string(trial.n0), format_number(trial.s1.direct),
                 format_number(trial.s1.grouped),
                 trial.has_sum2 ? format_number(trial.s2.direct) : "",
                 trial.has_sum2 ? format_number(trial.s2.grouped) : "",
                 verdict});
    }
    emit(t, out);
    if (grouping_breach) return 3;  // direct != grouped: internal breach
    if (monotone_sign_violation) return 1;
    return 0;
  }
};

struct ChuiCheckCmd {
  std::string n_range = "1..4096";
  OutputOpts out;

  int run() const {
    const Range nr = parse_range(n_range);
    if (nr.lo < 1) throw UsageError("--n-range must start at 1 or above");
    Table t;
    t.header = {"n", "max_violation"};
    t.types = {ColumnType::integer, ColumnType::number};
    bool failed = false;
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const double v = chui_max_violation(n);
      if (v > 0.0) failed = true;
      t.add_row({std::to_string(n), format_number(v)});
    }
    emit(t, out);
    return failed ? 1 : 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical laboratory for approximating 2pi-periodic functions by "
      "Fejer and de la Vallee Poussin means"};
  app.require_subcommand(1);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in test functions");
  corpus_cmd->require_subcommand(1);
  CorpusListCmd corpus_list;
  auto* corpus_list_cmd =
      corpus_cmd->add_subcommand("list", "list the corpus as id,n0,hypothesis_ok,description");
  add_output_opts(corpus_list_cmd, corpus_list.out);

  CoeffsCmd coeffs;
  auto* coeffs_cmd =
      app.add_subcommand("coeffs", "emit the Fourier coefficient table of a corpus function");
  coeffs_cmd->add_option("--function", coeffs.function, "corpus function id")->required();
  coeffs_cmd->add_option("--max-k", coeffs.max_k, "truncation degree K");
  add_output_opts(coeffs_cmd, coeffs.out);

  ApproxCmd approx;
  auto* approx_cmd =
      app.add_subcommand("approx", "tabulate f and one of its summation means on a plot grid");
  approx_cmd->add_option("--function", approx.function, "corpus function id")->required();
  approx_cmd->add_option("--mean", approx.mean, "partial|fejer|vp")
      ->check(CLI::IsMember({"partial", "fejer", "vp"}));
  approx_cmd->add_option("--n", approx.n, "operator order n");
  add_m_opts(approx_cmd, approx.m);
  approx_cmd->add_option("--max-k", approx.max_k, "truncation degree K");
  approx_cmd->add_option("--grid", approx.grid, "number of plot points");
  add_output_opts(approx_cmd, approx.out);

  ErrorTableCmd error_table;
  auto* error_table_cmd = app.add_subcommand(
      "error-table", "ledger vs quadrature L2 errors over an n sweep");
  error_table_cmd->add_option("--function", error_table.functions,
                              "corpus function id(s); default: whole corpus");
  error_table_cmd->add_option("--mean", error_table.mean, "fejer|vp|all")
      ->check(CLI::IsMember({"fejer", "vp", "all"}));
  error_table_cmd->add_option("--n-range", error_table.n_range, "A..B");
  add_m_opts(error_table_cmd, error_table.m);
  error_table_cmd->add_option("--max-k", error_table.max_k, "truncation degree K");
  error_table_cmd->add_option("--grid", error_table.grid, "quadrature grid size N");
  add_output_opts(error_table_cmd, error_table.out);

  BoundCheckCmd bound_check;
  auto* bound_check_cmd = app.add_subcommand(
      "bound-check", "report lhs/rhs/ratio of the claimed Jackson-type bound");
  bound_check_cmd->add_option("--function", bound_check.functions,
                              "corpus function id(s); default: corpus minus constant");
  bound_check_cmd->add_option("--mean", bound_check.mean, "fejer|vp|both")
      ->check(CLI::IsMember({"fejer", "vp", "both"}));
  bound_check_cmd->add_option("--n-range", bound_check.n_range, "A..B");
  add_m_opts(bound_check_cmd, bound_check.m);
  bound_check_cmd->add_option("--max-k", bound_check.max_k, "truncation degree K");
  bound_check_cmd->add_option("--t-points", bound_check.t_points,
                              "nodes of the omega2 running-max grid");
  bound_check_cmd->add_option("--quad-points", bound_check.quad_points,
                              "Simpson intervals for the Jackson integral");
  add_output_opts(bound_check_cmd, bound_check.out);

  LemmaCheckCmd lemma_check;
  auto* lemma_check_cmd = app.add_subcommand(
      "lemma-check", "seeded sign-lemma trials: direct vs regrouped sums");
  lemma_check_cmd->add_option("--trials", lemma_check.trials, "number of trials");
  lemma_check_cmd->add_option("--seed", lemma_check.seed, "master seed");
  lemma_check_cmd->add_option("--adversarial", lemma_check.adversarial,
                              "spike: inject a spike into each window")
      ->check(CLI::IsMember({"spike"}));
  lemma_check_cmd->add_option("--n", lemma_check.force_n, "pin n for all trials");
  lemma_check_cmd->add_option("--L", lemma_check.force_L, "pin L for all trials");
  add_output_opts(lemma_check_cmd, lemma_check.out);

  ChuiCheckCmd chui_check;
  auto* chui_check_cmd = app.add_subcommand(
      "chui-check", "scan (k/n)^2 <= sin^2(k pi/(2n)) for k <= n");
  chui_check_cmd->add_option("--n-range", chui_check.n_range, "A..B");
  add_output_opts(chui_check_cmd, chui_check.out);

  std::vector<std::string> args;
  try {
    args = inject_config_args(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::vector<const char*> cargs;
  cargs.push_back(argv[0]);
  for (const auto& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*corpus_list_cmd) return corpus_list.run();
    if (*coeffs_cmd) return coeffs.run();
    if (*approx_cmd) return approx.run();
    if (*error_table_cmd) return error_table.run();
    if (*bound_check_cmd) return bound_check.run();
    if (*lemma_check_cmd) return lemma_check.run();
    if (*chui_check_cmd) return chui_check.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
