#include "mergecount/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "mergecount/counts.hpp"
#include "mergecount/dyadic.hpp"
#include "mergecount/fractal.hpp"
#include "mergecount/oracle.hpp"

namespace mergecount {

namespace {

class Sweep {
 public:
  explicit Sweep(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && !result_.counterexample) result_.counterexample = describe();
  }

  bool failed() const { return result_.counterexample.has_value(); }
  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string n_is(std::int64_t n) { return "n=" + std::to_string(n); }

std::string lhs_rhs(const std::string& lhs, const std::string& rhs) {
  return " lhs=" + lhs + " rhs=" + rhs;
}

std::string lhs_rhs(Integer lhs, Integer rhs) { return lhs_rhs(to_string(lhs), to_string(rhs)); }

std::string lhs_rhs(const Dyadic& lhs, const Dyadic& rhs) {
  return lhs_rhs(lhs.to_fraction(), rhs.to_fraction());
}

// ---- identities ----------------------------------------------------------

void identities(const SweepLimits& lim, std::vector<CheckResult>& out) {
  Sweep thm("theorem_2_2_grid");
  Sweep appb("appendix_b_grid");
  for (std::int64_t n = 0; n <= lim.max_n; ++n) {
    for (std::int64_t m = 1; m <= lim.max_m; ++m) {
      auto [lhs, rhs] = identity_theorem_2_2(n, m);
      thm.expect(Dyadic::integer(lhs) == rhs, [&] {
        return n_is(n) + " m=" + std::to_string(m) + lhs_rhs(Dyadic::integer(lhs), rhs);
      });
      Integer sum = identity_appendix_b(n, m);
      appb.expect(sum == n, [&] {
        return n_is(n) + " m=" + std::to_string(m) + lhs_rhs(sum, Integer{n});
      });
    }
  }
  out.push_back(std::move(thm).done());
  out.push_back(std::move(appb).done());

  Sweep zz("zigzag_range_period_symmetry");
  const Dyadic half(1, 1);
  for (std::int64_t n = -lim.max_n; n <= lim.max_n; ++n) {
    for (int e = 0; e <= 8; ++e) {
      Dyadic x(n, e);
      Dyadic z = zigzag(x);
      bool ok = z >= Dyadic() && z <= half && z == zigzag(x + Dyadic::integer(1)) &&
                z == zigzag(-x);
      zz.expect(ok, [&] { return "x=" + x.to_fraction() + " zigzag=" + z.to_fraction(); });
    }
  }
  out.push_back(std::move(zz).done());

  Sweep lemma92("zigzag_small_ratio");
  Sweep eq16("zigzag_upper_half");
  for (std::int64_t n = 1; n <= lim.max_n; ++n) {
    const int f = floor_lg(n);
    for (int k = f + 2; k <= f + 12; ++k) {
      Dyadic lhs = zigzag(Dyadic(n, k)).scaled(k);
      lemma92.expect(lhs == Dyadic::integer(n), [&] {
        return n_is(n) + " k=" + std::to_string(k) + lhs_rhs(lhs, Dyadic::integer(n));
      });
    }
    for (int e = 0; e <= 4; ++e) {
      // x = n + j/2^e for a few fractional offsets
      for (std::int64_t j = 0; j < (std::int64_t{1} << e); ++j) {
        Dyadic x = Dyadic::integer(n) + Dyadic(j, e);
        int g = floor_lg(x) + 1;
        Dyadic lhs = zigzag(x.scaled(-g)).scaled(g);
        Dyadic rhs = Dyadic::integer(checked::pow2(g)) - x;
        eq16.expect(lhs == rhs, [&] { return "x=" + x.to_fraction() + lhs_rhs(lhs, rhs); });
      }
    }
  }
  out.push_back(std::move(lemma92).done());
  out.push_back(std::move(eq16).done());
}

// ---- formulas ------------------------------------------------------------

void formulas(const SweepLimits& lim, std::vector<CheckResult>& out) {
  Sweep triple("b_recurrence_eq_b_zigzag_eq_b_alt");
  Sweep digits("digit_sum_eq_b");
  Sweep worst("w_closed_eq_w_sum");
  Sweep levels("level_decomposition");
  Sweep band("two_b_minus_w_band");
  Sweep mono("monotone_growth");

  Integer running_w = 0;  // incremental w_sum, checked against the library call below
  Integer running_digits = 0;
  Integer prev_b = 0;
  Integer prev_w = 0;
  for (std::int64_t n = 1; n <= lim.max_n; ++n) {
    Integer b = b_recurrence(n);
    Integer bz = b_zigzag(n);
    Integer ba = b_alt(n);
    triple.expect(b == bz && b == ba, [&] {
      return n_is(n) + " B=" + to_string(b) + " zigzag=" + to_string(bz) + " alt=" + to_string(ba);
    });

    if (n > 1) running_digits += std::popcount(static_cast<std::uint64_t>(n - 1));
    Integer a = n <= 4096 ? digit_sum(n) : running_digits;
    digits.expect(a == b, [&] { return n_is(n) + lhs_rhs(a, b); });

    running_w += ceil_lg(n);
    Integer wc = w_closed(n);
    Integer ws = n <= 4096 ? w_sum(n) : running_w;
    worst.expect(wc == ws, [&] { return n_is(n) + lhs_rhs(wc, ws); });

    Integer level_total = 0;
    bool per_level = true;
    for (int k = 0; k <= floor_lg(n); ++k) {
      Integer closed = level_comps(n, k);
      level_total += closed;
      if (n <= 4096) per_level = per_level && closed == level_comps_direct(n, k);
    }
    levels.expect(per_level && level_total == b,
                  [&] { return n_is(n) + lhs_rhs(level_total, b); });

    Integer diff = diff_2b_w(n);
    Dyadic f = big_f(n);
    Dyadic expected = Dyadic::integer(n - 1) - f;
    bool at_top = diff == n - 1;
    bool at_bottom = 2 * diff == n - 1;
    // bottom witnesses: (2^{k+1} + (-1)^k) / 3
    bool witness = false;
    for (int k = 0; k <= 62 && !witness; ++k) {
      Integer w = (checked::pow2(k + 1) + (k % 2 == 0 ? 1 : -1)) / 3;
      witness = w == n;
    }
    bool ok = Dyadic::integer(diff) == expected && 2 * diff >= n - 1 && diff <= n - 1 &&
              at_top == is_power_of_two(n) && at_bottom == witness;
    band.expect(ok, [&] {
      return n_is(n) + " 2B-W=" + to_string(diff) + " n-1-F=" + expected.to_fraction();
    });

    Integer w = w_closed(n);
    mono.expect(b >= prev_b && w >= prev_w, [&] { return n_is(n); });
    prev_b = b;
    prev_w = w;
  }
  for (Sweep* s : {&triple, &digits, &worst, &levels, &band, &mono}) out.push_back(std::move(*s).done());
}

// ---- oracle --------------------------------------------------------------

void oracle(const SweepLimits& lim, std::vector<CheckResult>& out) {
  Sweep best("instrumented_best_eq_b");
  Sweep worst("instrumented_worst_eq_w");
  Sweep sandwich("random_sandwich");
  for (std::int64_t n = 1; n <= lim.max_n; ++n) {
    auto b_trace = merge_sort_count(best_case_input(n));
    Integer b = b_recurrence(n);
    best.expect(b_trace.comparisons == b && std::ranges::is_sorted(b_trace.output),
                [&] { return n_is(n) + lhs_rhs(Integer(b_trace.comparisons), b); });

    auto w_trace = merge_sort_count(worst_case_input(n));
    Integer w = w_closed(n);
    worst.expect(w_trace.comparisons == w && std::ranges::is_sorted(w_trace.output),
                 [&] { return n_is(n) + lhs_rhs(Integer(w_trace.comparisons), w); });

    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto r_trace = merge_sort_count(random_input(n, seed));
      Integer c = r_trace.comparisons;
      bool sorted = r_trace.output == best_case_input(n);
      sandwich.expect(b <= c && c <= w && sorted, [&] {
        return n_is(n) + " seed=" + std::to_string(seed) + " comps=" + to_string(c);
      });
    }
  }
  out.push_back(std::move(best).done());
  out.push_back(std::move(worst).done());
  out.push_back(std::move(sandwich).done());
}

// ---- takagi --------------------------------------------------------------

void takagi(const SweepLimits& lim, std::vector<CheckResult>& out) {
  Sweep bridge("takagi_from_b_eq_takagi_dyadic");
  Sweep inverse("b_from_takagi_eq_b");
  Sweep strict("strict_failure_below_domain");
  Sweep floor_form("takagi_at_floor_lg");
  Sweep breve("breve_f_eq_big_f");
  Sweep telescoping("zigzag_tail_telescoping");
  Sweep finite("takagi_finite_form");
  Sweep range("takagi_range");
  const Dyadic two_thirds_cap(2, 0);  // compared as 3 F~ <= 2

  for (std::int64_t n = 1; n <= lim.max_n; ++n) {
    const int c = ceil_lg(n);
    const int f = floor_lg(n);
    Integer b = b_recurrence(n);
    for (int k = c; k <= c + 8; ++k) {
      Dyadic from_b = takagi_from_b(n, k);
      Dyadic direct = takagi_dyadic(Dyadic(n, k));
      bridge.expect(from_b == direct, [&] {
        return n_is(n) + " k=" + std::to_string(k) + lhs_rhs(from_b, direct);
      });
      Integer back = b_from_takagi(n, k);
      inverse.expect(back == b, [&] { return n_is(n) + " k=" + std::to_string(k) + lhs_rhs(back, b); });
    }
    if (!is_power_of_two(n)) {
      Dyadic outside(checked::sub(checked::mul(n, f), 2 * b), f);
      Dyadic actual = takagi_at_floor_lg(n);
      strict.expect(actual > outside, [&] { return n_is(n) + lhs_rhs(actual, outside); });
    }
    Dyadic at_floor = takagi_at_floor_lg(n);
    Dyadic direct = takagi_dyadic(Dyadic(n, f));
    Dyadic via_f = big_f(n).scaled(-f);
    floor_form.expect(at_floor == direct && at_floor == via_f,
                      [&] { return n_is(n) + lhs_rhs(at_floor, direct); });

    Dyadic bf = big_f(n);
    Dyadic br = breve_f(Dyadic::integer(n));
    breve.expect(bf == br, [&] { return n_is(n) + lhs_rhs(bf, br); });

    for (int k = f + 1; k <= c + 10; ++k) {
      Dyadic tail;
      for (int i = f + 2; i <= k; ++i) tail += zigzag(Dyadic(n, i)).scaled(i);
      Dyadic expected = Dyadic::integer(checked::sub(checked::mul(n, k), checked::mul(n, f + 1)));
      telescoping.expect(tail == expected, [&] {
        return n_is(n) + " k=" + std::to_string(k) + lhs_rhs(tail, expected);
      });

      Dyadic lhs = takagi_dyadic(Dyadic(n, k)).scaled(k);
      Dyadic rhs;
      for (int i = 1; i <= k; ++i) rhs += zigzag(Dyadic(n, i)).scaled(i);
      finite.expect(lhs == rhs, [&] {
        return n_is(n) + " k=" + std::to_string(k) + lhs_rhs(lhs, rhs);
      });
    }

    for (int e = 0; e <= 12; ++e) {
      Dyadic x(n, e);
      Dyadic t = takagi_dyadic(x);
      range.expect(t >= Dyadic() && t * Dyadic::integer(3) <= two_thirds_cap,
                   [&] { return "x=" + x.to_fraction() + " F~=" + t.to_fraction(); });
    }
  }

  Sweep interp("partial_sum_interpolation");
  for (int bits = 0; bits <= 10; ++bits) {
    for (std::int64_t p = 0; p <= (std::int64_t{1} << bits); ++p) {
      Dyadic x(p, bits);
      Dyadic limit = takagi_dyadic(x);
      for (int i = bits; i <= bits + 4; ++i) {
        Dyadic partial = f_tilde_partial(i, x);
        interp.expect(partial == limit, [&] {
          return "x=" + x.to_fraction() + " i=" + std::to_string(i) + lhs_rhs(partial, limit);
        });
      }
    }
  }

  Sweep points("takagi_point_values");
  for (int k = 2; k <= 20; ++k) {
    Dyadic one = takagi_dyadic(Dyadic(1, k));
    Dyadic three = takagi_dyadic(Dyadic(3, k));
    Dyadic one_expected(k, k);
    Dyadic three_expected(3 * k - 4, k);
    points.expect(one == one_expected && three == three_expected, [&] {
      return "k=" + std::to_string(k) + lhs_rhs(one, one_expected) + lhs_rhs(three, three_expected);
    });
  }
  for (Integer p : {1, 2}) {
    ApproxValue approx = takagi_approx(p, 3, 30);
    points.expect(approx.contains(Rational(2, 3)) && approx.error_bound == Dyadic(1, 30), [&] {
      return "x=" + to_string(p) + "/3 value=" + approx.value.to_decimal();
    });
  }

  for (Sweep* s : {&bridge, &inverse, &strict, &floor_form, &breve, &telescoping, &finite, &range,
                   &interp, &points}) {
    out.push_back(std::move(*s).done());
  }
}

// ---- tree ----------------------------------------------------------------

void tree(const SweepLimits& lim, std::vector<CheckResult>& out) {
  Sweep shape("recursion_tree_structure");
  for (std::int64_t n = 1; n <= lim.max_n; ++n) {
    RecursionTree t = build_tree(n);
    const int h = ceil_lg(n);
    bool ok = t.depth() == h && t.leaf_count() == static_cast<std::size_t>(n);
    for (int i = 0; ok && i <= h; ++i) {
      const auto& sizes = t.levels[static_cast<std::size_t>(i)];
      auto [lo, hi] = std::ranges::minmax(sizes);
      ok = hi - lo <= 1;
      if (i < h) {
        ok = ok && sizes.size() == (std::size_t{1} << i) && t.level_worst_comps(i) == n - (std::int64_t{1} << i);
      } else {
        ok = ok && hi == 1 && t.level_worst_comps(i) == 0;
      }
    }
    for (const auto& node : t.nodes) {
      ok = ok && (node.is_leaf() == (node.size == 1));
      if (!node.is_leaf()) {
        ok = ok && t.nodes[static_cast<std::size_t>(node.left)].size == node.size / 2 &&
             t.nodes[static_cast<std::size_t>(node.right)].size == node.size - node.size / 2;
      }
    }
    shape.expect(ok, [&] { return n_is(n) + " depth=" + std::to_string(t.depth()); });
  }
  out.push_back(std::move(shape).done());
}

}  // namespace

bool is_known_suite(std::string_view suite) {
  return suite == "all" || std::ranges::find(kSuites, suite) != std::end(kSuites);
}

std::vector<CheckResult> run_suite(std::string_view suite, const SweepLimits& limits) {
  if (!is_known_suite(suite)) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  if (limits.max_n < 1 || limits.max_m < 1) {
    throw std::invalid_argument("--max-n and --max-m must be >= 1");
  }
  std::vector<CheckResult> results;
  const bool all = suite == "all";
  if (all || suite == "identities") identities(limits, results);
  if (all || suite == "formulas") formulas(limits, results);
  if (all || suite == "oracle") oracle(limits, results);
  if (all || suite == "takagi") takagi(limits, results);
  if (all || suite == "tree") tree(limits, results);
  return results;
}

}  // namespace mergecount
