// Acceptance suite: every release gate in one binary. Each criterion prints
// a single pass/fail line with its runtime; the process exits nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bars.hpp"
#include "bijection.hpp"
#include "cli_runner.hpp"
#include "eulerian.hpp"
#include "oracle.hpp"
#include "verify.hpp"

using namespace geu;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome criterion_formula_equivalence(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 60; ++n)
    for (int k = 1; k <= n; ++k)
      out.expect(eulerian_recurrence(ctx, n, k) == eulerian_analytic(n, k),
                 "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
  return out;
}

Outcome criterion_census(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      out.expect(count_weak_excedance_class(ctx, n, k) == eulerian_analytic(n, k),
                 "census mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
  return out;
}

Outcome criterion_main_theorem(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j)
        out.expect(verify_main_theorem(ctx, n, k, j),
                   "fails at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
  return out;
}

Outcome criterion_machinery(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        const ExactInt filtered = count_set_b(ctx, n, k, j);
        const ExactInt sieve = inclusion_exclusion_b(n, k, j);
        const ExactInt coeff = cnk_coefficient(ctx, n, k, j);
        out.expect(filtered == sieve && sieve == coeff,
                   "B-count mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " j=" + std::to_string(j) + ": filtered=" + filtered.str() +
                       " sieve=" + sieve.str() + " coefficient=" + coeff.str());
      }
  return out;
}

Outcome criterion_second_theorem(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 20; ++n) {
    const ExactInt fact = factorial(n);
    for (int j = 0; j <= n; ++j) {
      ExactInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += cnk_coefficient(ctx, n, k, j);
      out.expect(sum == fact, "row sum " + sum.str() + " != " + fact.str() + " at n=" +
                                  std::to_string(n) + " j=" + std::to_string(j));
    }
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        out.expect(cnk_coefficient(ctx, n, k, j) == cnk_coefficient(ctx, n, n - k, n - j),
                   "symmetry fails at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
        out.expect(remark_identity_holds(n, k, j),
                   "remark identity fails at n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " j=" + std::to_string(j));
      }
  }
  return out;
}

Outcome criterion_lemma(Context& ctx) {
  Outcome out;
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        out.expect(lemma_bijection_check(ctx, n, k, j),
                   "lemma fails at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " j=" + std::to_string(j));
  return out;
}

Outcome criterion_aw_bw(Context& ctx) {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k)
      out.expect(verify_cnk_aw_bw(ctx, n, k), "c(1)/c(n-1) interpretation fails at n=" +
                                                   std::to_string(n) + " k=" +
                                                   std::to_string(k));
    for (int k = 1; k <= n; ++k)
      out.expect(verify_aw_bw_symmetry(ctx, n, k),
                 "|AW|=|BW| mirror fails at n=" + std::to_string(n) + " k=" +
                     std::to_string(k));
  }
  return out;
}

Outcome criterion_insertion(Context& ctx) {
  Outcome out;
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for (Side side : {Side::A, Side::B}) {
        const InsertionCheck check = verify_insertion_recursion(ctx, n, k, side);
        out.expect(check.ok, std::string(side == Side::A ? "A" : "B") + " side n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                 check.detail);
      }

  // the published BW_{4,2} construction, reproduced record by record
  const auto records = insertion_records(ctx, 4, 2, Side::B);
  out.expect(records.size() == 7, "BW_{4,2} listing should hold 7 records");
  std::set<std::string> images;
  bool d1_seen = false;
  bool c1_seen = false;
  for (const auto& rec : records) {
    images.insert(to_string(rec.image));
    if (to_string(rec.source) == "321" && !rec.position.is_end() && rec.position.idx() == 1)
      d1_seen = to_string(rec.image) == "4213" && rec.label == CaseLabel::d1;
    if (to_string(rec.source) == "321" && !rec.position.is_end() && rec.position.idx() == 2)
      c1_seen = to_string(rec.image) == "3412" && rec.label == CaseLabel::c1;
  }
  out.expect(d1_seen, "321 at position 1 should give 4213 under case d.1");
  out.expect(c1_seen, "321 at position 2 should give 3412 under case c.1");
  out.expect(images == std::set<std::string>{"3142", "3412", "3421", "4132", "4213", "4312",
                                             "4321"},
             "BW_{4,2} image set is wrong");
  return out;
}

Outcome criterion_golden_cli(Context& ctx) {
  Outcome out;
  const char* env = std::getenv("GEULERIAN_CLI");
  if (env == nullptr || *env == '\0') {
    out.expect(false, "GEULERIAN_CLI is not set; run through ctest");
    return out;
  }

  const cli::Result stats = cli::run("stats 5243716");
  out.expect(stats.exit_code == 0 && stats.output == "word=5243716\n"
                                                     "n=7\n"
                                                     "ascents=3\n"
                                                     "weak_excedances=4\n"
                                                     "maj=9\n"
                                                     "q_position=5\n"
                                                     "cycles=(2)(43)(7615)\n"
                                                     "f=2437615\n"
                                                     "f_inverse=6453271\n"
                                                     "g=3645172\n",
             "stats 5243716 is not byte-exact");

  const cli::Result complement_stats = cli::run("stats 53214");
  out.expect(complement_stats.exit_code == 0 &&
                 complement_stats.output == "word=53214\n"
                                            "n=5\n"
                                            "ascents=1\n"
                                            "weak_excedances=2\n"
                                            "maj=6\n"
                                            "q_position=1\n"
                                            "cycles=(32)(541)\n"
                                            "f=32541\n"
                                            "f_inverse=41253\n"
                                            "g=13452\n",
             "stats 53214 is not byte-exact");

  const cli::Result listing = cli::run("bijection --side B --n 4 --k 2");
  out.expect(listing.exit_code == 0 &&
                 listing.output == "source=231 class=BW(3,2) pos=1 image=4312 case=d.1\n"
                                   "source=231 class=BW(3,2) pos=2 image=4321 case=d.2\n"
                                   "source=312 class=BW(3,1) pos=1 image=4132 case=c.5\n"
                                   "source=312 class=BW(3,1) pos=2 image=3421 case=c.2\n"
                                   "source=312 class=BW(3,1) pos=3 image=3142 case=c.6\n"
                                   "source=321 class=BW(3,2) pos=1 image=4213 case=d.1\n"
                                   "source=321 class=BW(3,2) pos=2 image=3412 case=c.1\n",
             "bijection --side B --n 4 --k 2 is not byte-exact");

  // BW_{3,2} and BW_{3,1} as the sources of the listing above
  const auto bw32 = bw_set(ctx, 3, 2);
  const auto bw31 = bw_set(ctx, 3, 1);
  out.expect(bw32.size() == 2 && to_string(bw32[0]) == "231" && to_string(bw32[1]) == "321",
             "BW_{3,2} contents are wrong");
  out.expect(bw31.size() == 1 && to_string(bw31[0]) == "312", "BW_{3,1} contents are wrong");

  // the extraneous-bar example 32|1||7654| (no CLI surface; checked on the core)
  const BarArrangement arr = BarArrangement::make({{3, 2}, {1}, {}, {7, 6, 5, 4}, {}});
  out.expect(extraneous_bars(arr) == std::vector<int>{1, 2, 4},
             "extraneous bars of 32|1||7654| should be {1,2,4}");
  return out;
}

Outcome criterion_q_sanity(Context& ctx) {
  Outcome out;
  std::vector<std::string> over_bound;
  for (int n = 1; n <= 8; ++n) {
    std::vector<long long> by_ascents(static_cast<std::size_t>(n), 0);
    for_each_permutation(n, ctx.enum_cap,
                         [&](const Permutation& p) { by_ascents[ascent_count(p)]++; });
    for (int k = 0; k <= n - 1; ++k) {
      const ExactInt at_one = q_eulerian(ctx, n, k).evaluate(1);
      const int ascents = n - k;
      const ExactInt expected = ascents < n ? ExactInt(by_ascents[ascents]) : ExactInt(0);
      out.expect(at_one == expected, "q-polynomial at q=1 mismatch at n=" +
                                         std::to_string(n) + " k=" + std::to_string(k));
      const QSupportReport support = q_support_report(ctx, n, k);
      if (!support.within)
        over_bound.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ":max " +
                             std::to_string(support.max_exponent) + ">bound " +
                             std::to_string(support.stated_bound) + ")");
    }
  }
  if (!over_bound.empty()) {
    std::string report = "support exceeds the nominal bound k(n-k-1) at";
    for (const auto& s : over_bound) report += " " + s;
    std::cout << "       note: " << report << "\n";
  }
  return out;
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome(Context&)> run;
};

}  // namespace

int main() {
  Context ctx;
  const std::vector<Criterion> criteria = {
      {"formula equivalence: recurrence == closed form, 1<=k<=n<=60", 5.0,
       criterion_formula_equivalence},
      {"census equivalence: |W_{n,k}| by enumeration == closed form, n<=9", 30.0,
       criterion_census},
      {"main theorem: c_{n,k}(j) counts the two Q_n ranges, n<=8", 60.0,
       criterion_main_theorem},
      {"proof machinery: filtered bars == inclusion-exclusion == c, n<=6", 120.0,
       criterion_machinery},
      {"second theorem: row sums, symmetry and the remark identity, n<=20", 5.0,
       criterion_second_theorem},
      {"lemma: f^-1 o g o f maps S_{k,j} onto T_{k,j}, n<=7", 30.0, criterion_lemma},
      {"class interpretations: c(1)=2|AW|, c(n-1)=2|BW|, mirror, n<=8", 30.0,
       criterion_aw_bw},
      {"insertion maps: bijective with recurrence counts, n<=8", 60.0, criterion_insertion},
      {"golden examples byte-exact through the CLI", 30.0, criterion_golden_cli},
      {"q-Eulerian sanity at q=1 with support report, n<=8", 30.0, criterion_q_sanity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run(ctx);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= criterion.limit_seconds)
      outcome.expect(false, "exceeded the time limit");
    std::printf("[%s] %2zu. %s (%.2fs, limit %.0fs)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                i + 1, criterion.name.c_str(), seconds, criterion.limit_seconds,
                outcome.ok ? "" : " — ", outcome.ok ? "" : outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
