#include "mergecount/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mergecount/counts.hpp"
#include "mergecount/dyadic.hpp"
#include "mergecount/fractal.hpp"
#include "mergecount/oracle.hpp"
#include "mergecount/rational.hpp"
#include "mergecount/verify.hpp"

namespace mergecount {

namespace {

// Thrown when an invariant or built-in assertion fails; maps to exit 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

char separator_for(const std::string& format) {
  if (format == "csv") return ',';
  if (format == "tsv") return '\t';
  throw std::invalid_argument("--format must be csv or tsv, got '" + format + "'");
}

std::int64_t parse_count(const std::string& text, const char* what) {
  Dyadic value = parse_dyadic(text);
  if (!value.is_integer() || value.numerator() < 1 ||
      value.numerator() > std::numeric_limits<std::int64_t>::max()) {
    throw std::invalid_argument(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::int64_t>(value.numerator());
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string format = "csv";
};

void cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  char sep = separator_for(a.format);
  if (a.from < 1) throw std::invalid_argument("--from must be >= 1");
  if (a.from > a.to) throw std::invalid_argument("--from must not exceed --to");
  out << "n" << sep << "B" << sep << "W" << sep << "F" << sep << "twoB_minus_W" << sep << "A2\n";
  for (std::int64_t n = a.from; n <= a.to; ++n) {
    AnalysisRow row = analyze(n);
    out << row.n << sep << to_string(row.best) << sep << to_string(row.worst) << sep
        << row.fractal_at_n.to_decimal() << sep << to_string(row.two_b_minus_w) << sep
        << to_string(row.digit_sum) << '\n';
  }
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string function;
  std::vector<std::string> values;
  std::optional<int> precision;
};

void cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.values.size() != 1) {
    throw std::invalid_argument("eval " + a.function + " takes exactly one argument, got " +
                                std::to_string(a.values.size()));
  }
  const std::string& arg = a.values.front();
  if (a.function == "b") {
    out << to_string(b_recurrence(parse_count(arg, "n"))) << '\n';
  } else if (a.function == "w") {
    out << to_string(w_closed(parse_count(arg, "n"))) << '\n';
  } else if (a.function == "bigF") {
    out << big_f(parse_dyadic(arg)).to_decimal() << '\n';
  } else if (a.function == "breveF") {
    out << breve_f(parse_dyadic(arg)).to_decimal() << '\n';
  } else if (a.function == "takagi") {
    Rational x = parse_rational(arg);
    if (x.is_dyadic()) {
      out << takagi_dyadic(x.to_dyadic()).to_decimal() << '\n';
      return;
    }
    if (!a.precision) {
      throw std::invalid_argument("takagi at non-dyadic " + x.to_string() +
                                  " requires --precision K");
    }
    ApproxValue approx = takagi_approx(x.numerator(), x.denominator(), *a.precision);
    out << approx.value.to_decimal() << " error<=2^-" << *a.precision << '\n';
  } else {
    throw std::invalid_argument("unknown function '" + a.function +
                                "' (expected b, w, bigF, takagi, breveF)");
  }
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::int64_t max_n = 0;
  std::int64_t max_m = 64;
};

void cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!is_known_suite(a.suite)) {
    throw std::invalid_argument("unknown suite '" + a.suite +
                                "' (expected identities, formulas, oracle, takagi, tree, all)");
  }
  std::vector<CheckResult> results = run_suite(a.suite, {a.max_n, a.max_m});
  bool all_passed = true;
  for (const CheckResult& r : results) {
    if (r.passed()) {
      out << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
      all_passed = false;
      out << "FAIL " << r.name << ": " << *r.counterexample << '\n';
    }
  }
  if (!all_passed) throw CheckFailure("verify: invariant failure");
}

// ---- sample --------------------------------------------------------------

struct SampleArgs {
  std::string function;
  std::string from;
  std::string to;
  std::int64_t points = 0;
  std::string format = "csv";
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
  char sep = separator_for(a.format);
  Dyadic from = parse_dyadic(a.from);
  Dyadic to = parse_dyadic(a.to);
  if (from > to) throw std::invalid_argument("--from must not exceed --to");
  if (a.points < 2) throw std::invalid_argument("--points must be >= 2");

  std::function<Dyadic(const Dyadic&)> fn;
  if (a.function == "bigF") {
    fn = [](const Dyadic& x) { return big_f(x); };
  } else if (a.function == "breveF") {
    fn = [](const Dyadic& x) { return breve_f(x); };
  } else if (a.function == "takagi") {
    fn = [](const Dyadic& x) { return takagi_dyadic(x); };
  } else if (a.function.starts_with("partial:")) {
    Dyadic k = parse_dyadic(a.function.substr(8));
    if (!k.is_integer() || k.numerator() < 0 || k.numerator() > 1000) {
      throw std::invalid_argument("partial:k needs an integer k in [0, 1000]");
    }
    int terms = static_cast<int>(k.numerator());
    fn = [terms](const Dyadic& x) { return f_tilde_partial(terms, x); };
  } else {
    throw std::invalid_argument("unknown function '" + a.function +
                                "' (expected bigF, takagi, breveF, partial:k)");
  }
  if ((a.function == "bigF" || a.function == "breveF") && from < Dyadic::integer(1)) {
    throw std::invalid_argument(a.function + " is defined for x >= 1 only");
  }

  // x_j = from + floor(j * width * 2^s / (points - 1)) / 2^s, exact dyadics;
  // uniform whenever points - 1 is a power of two.
  const Integer intervals = a.points - 1;
  const int s = ceil_lg(a.points - 1);
  const Dyadic width = (to - from).scaled(s);
  std::vector<Dyadic> grid;
  grid.reserve(static_cast<std::size_t>(a.points));
  for (Integer j = 0; j <= intervals; ++j) {
    Integer offset = checked::mul(j, width.numerator()) / intervals;
    grid.push_back(from + Dyadic(offset, width.exponent()).scaled(-s));
  }
  // evaluate first so a domain error cannot leave partial output behind
  std::vector<Dyadic> values;
  values.reserve(grid.size());
  for (const Dyadic& x : grid) values.push_back(fn(x));

  out << "x" << sep << "y\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << grid[i].to_decimal() << sep << values[i].to_decimal() << '\n';
  }
}

// ---- sortcount -----------------------------------------------------------

struct SortcountArgs {
  std::string kind;
  std::optional<std::int64_t> n;
  std::uint64_t seed = 0;
};

Keys read_keys(std::istream& in) {
  Keys keys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view token(line.data() + first, last - first + 1);
    std::int64_t key = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), key);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": not a 64-bit integer: '" +
                                  std::string(token) + "'");
    }
    keys.push_back(key);
  }
  return keys;
}

void cmd_sortcount(const SortcountArgs& a, std::istream& in, std::ostream& out) {
  Keys keys;
  if (a.kind == "file") {
    keys = read_keys(in);
    if (keys.empty()) throw std::invalid_argument("no keys on standard input");
  } else {
    if (!a.n) throw std::invalid_argument("--n is required for case " + a.kind);
    if (*a.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (a.kind == "best") {
      keys = best_case_input(*a.n);
    } else if (a.kind == "worst") {
      keys = worst_case_input(*a.n);
    } else if (a.kind == "random") {
      keys = random_input(*a.n, a.seed);
    } else {
      throw std::invalid_argument("unknown case '" + a.kind + "' (expected best, worst, random, file)");
    }
  }

  auto trace = merge_sort_count(keys);
  const auto n = static_cast<std::int64_t>(trace.n);
  Integer best = b_recurrence(n);
  Integer worst = w_closed(n);
  Integer comps = trace.comparisons;
  out << "n=" << n << " comps=" << to_string(comps) << " B=" << to_string(best)
      << " W=" << to_string(worst) << '\n';

  if (!std::ranges::is_sorted(trace.output)) throw CheckFailure("output is not sorted");
  if (a.kind == "best" && comps != best) throw CheckFailure("best case: comps != B(n)");
  if (a.kind == "worst" && comps != worst) throw CheckFailure("worst case: comps != W(n)");
  if (comps < best || comps > worst) throw CheckFailure("comps outside [B(n), W(n)]");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact MergeSort comparison counts and the Takagi function family", "mergecount"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Tabulate n, B, W, F, 2B-W, A(n,2)");
  analyze_cmd->add_option("--from", analyze_args.from, "First n")->required();
  analyze_cmd->add_option("--to", analyze_args.to, "Last n")->required();
  analyze_cmd->add_option("--format", analyze_args.format, "csv or tsv");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function exactly");
  eval_cmd->add_option("function", eval_args.function, "b, w, bigF, takagi, breveF")->required();
  eval_cmd->add_option("args", eval_args.values, "Function argument");
  eval_cmd->add_option("--precision", eval_args.precision,
                       "Series terms K for takagi at non-dyadic points (error <= 2^-K)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant sweeps");
  verify_cmd->add_option("--suite", verify_args.suite,
                         "identities, formulas, oracle, takagi, tree, all")->required();
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest n swept")->required();
  verify_cmd->add_option("--max-m", verify_args.max_m, "Largest m swept (identities)");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "Emit x,y samples on a dyadic grid");
  sample_cmd->add_option("--function", sample_args.function, "bigF, takagi, breveF, partial:k")
      ->required();
  sample_cmd->add_option("--from", sample_args.from, "Left end (dyadic)")->required();
  sample_cmd->add_option("--to", sample_args.to, "Right end (dyadic)")->required();
  sample_cmd->add_option("--points", sample_args.points, "Number of grid points")->required();
  sample_cmd->add_option("--format", sample_args.format, "csv or tsv");

  SortcountArgs sort_args;
  auto* sort_cmd = app.add_subcommand("sortcount", "Run the instrumented MergeSort");
  sort_cmd->add_option("--case", sort_args.kind, "best, worst, random, file")->required();
  sort_cmd->add_option("--n", sort_args.n, "Input length");
  sort_cmd->add_option("--seed", sort_args.seed, "Seed for the random case (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) cmd_analyze(analyze_args, out);
    if (*eval_cmd) cmd_eval(eval_args, out);
    if (*verify_cmd) cmd_verify(verify_args, out);
    if (*sample_cmd) cmd_sample(sample_args, out);
    if (*sort_cmd) cmd_sortcount(sort_args, in, out);
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << " (argument too large for exact evaluation)\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace mergecount
