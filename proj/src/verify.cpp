#include "verify.hpp"

#include <algorithm>
#include <functional>

#include "bars.hpp"
#include "bijection.hpp"
#include "errors.hpp"
#include "eulerian.hpp"
#include "oracle.hpp"

namespace geu {

namespace {

VerifyCell& add_cell(std::vector<VerifyCell>& cells, const std::string& suite, int n,
                     std::optional<int> k, std::optional<int> j, bool pass) {
  VerifyCell cell;
  cell.suite = suite;
  cell.n = n;
  cell.k = k;
  cell.j = j;
  cell.pass = pass;
  cells.push_back(std::move(cell));
  return cells.back();
}

void run_formula_equivalence(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const ExactInt rec = eulerian_recurrence(ctx, n, k);
      const ExactInt ana = eulerian_analytic(n, k);
      const ExactInt gen = general_eulerian(n, k, 1, 1);
      auto& cell = add_cell(cells, "formula-equivalence", n, k, {}, rec == ana && gen == ana);
      if (!cell.pass) {
        cell.lhs = rec.str();
        cell.rhs = ana.str();
        cell.note = "general(1,1)=" + gen.str();
      }
    }
}

void run_row_sum(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n) {
    const ExactInt fact = factorial(n);
    ExactInt eulerian_sum = 0;
    for (int k = 1; k <= n; ++k) eulerian_sum += eulerian_analytic(n, k);
    auto& cell = add_cell(cells, "row-sum", n, {}, {}, eulerian_sum == fact);
    if (!cell.pass) {
      cell.lhs = eulerian_sum.str();
      cell.rhs = fact.str();
    }
    for (int j = 0; j <= n; ++j) {
      ExactInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += cnk_coefficient(ctx, n, k, j);
      auto& c = add_cell(cells, "row-sum", n, {}, j, sum == fact);
      if (!c.pass) {
        c.lhs = sum.str();
        c.rhs = fact.str();
      }
    }
  }
}

void run_symmetry(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        const ExactInt lhs = cnk_coefficient(ctx, n, k, j);
        const ExactInt rhs = cnk_coefficient(ctx, n, n - k, n - j);
        auto& cell = add_cell(cells, "symmetry", n, k, j, lhs == rhs);
        if (!cell.pass) {
          cell.lhs = lhs.str();
          cell.rhs = rhs.str();
        }
      }
}

void run_remark(Context&, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        const RemarkSides sides = remark_identity_sides(n, k, j);
        auto& cell = add_cell(cells, "remark", n, k, j, sides.lhs == sides.rhs);
        if (!cell.pass) {
          cell.lhs = sides.lhs.str();
          cell.rhs = sides.rhs.str();
        }
      }
}

void run_census(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const ExactInt lhs = count_weak_excedance_class(ctx, n, k);
      const ExactInt rhs = eulerian_analytic(n, k);
      auto& cell = add_cell(cells, "census", n, k, {}, lhs == rhs);
      if (!cell.pass) {
        cell.lhs = lhs.str();
        cell.rhs = rhs.str();
      }
    }
}

void run_main_theorem(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        auto& cell =
            add_cell(cells, "main-theorem", n, k, j, verify_main_theorem(ctx, n, k, j));
        if (!cell.pass) {
          cell.lhs = cnk_coefficient(ctx, n, k, j).str();
          cell.rhs = (count_w_with_q(ctx, n, k + 1, j + 1, n) +
                      count_w_with_q(ctx, n, k, 1, j))
                         .str();
        }
      }
}

void run_machinery(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        const ExactInt filtered = count_set_b(ctx, n, k, j);
        const ExactInt sieve = inclusion_exclusion_b(n, k, j);
        const ExactInt coeff = cnk_coefficient(ctx, n, k, j);
        auto& cell =
            add_cell(cells, "machinery", n, k, j, filtered == sieve && sieve == coeff);
        if (!cell.pass) {
          cell.lhs = filtered.str();
          cell.rhs = coeff.str();
          cell.note = "inclusion-exclusion=" + sieve.str();
        }
      }
}

void run_lemma(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        auto& cell = add_cell(cells, "lemma", n, k, j, lemma_bijection_check(ctx, n, k, j));
        if (!cell.pass) {
          cell.lhs = count_w_with_q(ctx, n, k, j, j).str();
          cell.rhs = count_w_with_q(ctx, n, n + 1 - k, n + 1 - j, n + 1 - j).str();
          cell.note = "|S| vs |T|";
        }
      }
}

void run_aw_bw(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto& cell = add_cell(cells, "aw-bw", n, k, {}, verify_cnk_aw_bw(ctx, n, k));
      if (!cell.pass) {
        cell.lhs = cnk_coefficient(ctx, n, k, 1).str();
        cell.rhs = "2*" + std::to_string(aw_set(ctx, n, k + 1).size());
        cell.note = "c(n-1)=" + cnk_coefficient(ctx, n, k, n - 1).str() + " vs 2*" +
                    std::to_string(bw_set(ctx, n, k).size());
      }
    }
    for (int k = 1; k <= n; ++k) {
      auto& cell = add_cell(cells, "aw-bw", n, k, {}, verify_aw_bw_symmetry(ctx, n, k));
      cell.note = "mirror";
      if (!cell.pass) {
        cell.lhs = std::to_string(aw_set(ctx, n, k).size());
        cell.rhs = std::to_string(bw_set(ctx, n, n + 1 - k).size());
      }
    }
  }
}

void run_insertion(Context& ctx, int max_n, std::vector<VerifyCell>& cells, Side side) {
  const std::string suite = side == Side::A ? "insertion-A" : "insertion-B";
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const InsertionCheck check = verify_insertion_recursion(ctx, n, k, side);
      auto& cell = add_cell(cells, suite, n, k, {}, check.ok);
      if (!check.ok) cell.note = check.detail;
    }
}

void run_q_sanity(Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<long long> by_ascents(static_cast<std::size_t>(n), 0);
    for_each_permutation(n, ctx.enum_cap,
                         [&](const Permutation& p) { by_ascents[ascent_count(p)]++; });
    for (int k = 0; k <= n - 1; ++k) {
      const ExactInt at_one = q_eulerian(ctx, n, k).evaluate(1);
      const int ascents = n - k;
      const ExactInt expected =
          ascents < n ? ExactInt(by_ascents[ascents]) : ExactInt(0);
      auto& cell = add_cell(cells, "q-sanity", n, k, {}, at_one == expected);
      if (!cell.pass) {
        cell.lhs = at_one.str();
        cell.rhs = expected.str();
      }
      const QSupportReport support = q_support_report(ctx, n, k);
      if (!support.within)
        cell.note = "support max " + std::to_string(support.max_exponent) +
                    " exceeds stated bound " + std::to_string(support.stated_bound);
    }
  }
}

struct SuiteInfo {
  const char* name;
  int default_max_n;
  std::function<void(Context&, int, std::vector<VerifyCell>&)> run;
};

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> table = {
      {"formula-equivalence", 20, run_formula_equivalence},
      {"row-sum", 20, run_row_sum},
      {"symmetry", 20, run_symmetry},
      {"remark", 20, run_remark},
      {"census", 7, run_census},
      {"main-theorem", 7, run_main_theorem},
      {"machinery", 6, run_machinery},
      {"lemma", 7, run_lemma},
      {"aw-bw", 7, run_aw_bw},
      {"insertion-A", 7,
       [](Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
         run_insertion(ctx, max_n, cells, Side::A);
       }},
      {"insertion-B", 7,
       [](Context& ctx, int max_n, std::vector<VerifyCell>& cells) {
         run_insertion(ctx, max_n, cells, Side::B);
       }},
      {"q-sanity", 7, run_q_sanity},
  };
  return table;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return !c.pass; }));
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  names.push_back("all");
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suites())
    if (name == s.name) return true;
  return false;
}

int suite_default_max_n(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.name) return s.default_max_n;
  fail(errc::invalid_argument, "unknown suite '" + name + "'");
}

VerifyReport run_suite(Context& ctx, const std::string& suite, int max_n) {
  VerifyReport report;
  report.suite = suite;
  report.max_n = max_n;
  if (suite == "all") {
    for (const auto& s : suites()) s.run(ctx, max_n > 0 ? max_n : s.default_max_n, report.cells);
    return report;
  }
  for (const auto& s : suites()) {
    if (suite == s.name) {
      s.run(ctx, max_n > 0 ? max_n : s.default_max_n, report.cells);
      return report;
    }
  }
  fail(errc::invalid_argument, "unknown suite '" + suite + "'");
}

}  // namespace geu
