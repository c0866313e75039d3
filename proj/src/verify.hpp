#pragma once

#include <optional>
#include <string>
#include <vector>

#include "context.hpp"

namespace geu {

struct VerifyCell {
  std::string suite;
  int n = 0;
  std::optional<int> k;
  std::optional<int> j;
  bool pass = false;
  std::string lhs;  // the two compared values, filled on failure
  std::string rhs;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  int max_n = 0;
  std::vector<VerifyCell> cells;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

// Suites:
//   formula-equivalence  A(n,k): recurrence == closed form == general(1,1)
//   row-sum              sum_k A(n,k) = n!  and  sum_k c_{n,k}(j) = n!
//   symmetry             c_{n,k}(j) = c_{n,n-k}(n-j)
//   remark               the two closed forms of c agree
//   census               |W_{n,k}| by enumeration == closed form
//   main-theorem         c_{n,k}(j) == the two Q_n-range counts
//   machinery            filtered bar count == inclusion-exclusion == c
//   lemma                f^-1 o g o f maps S_{k,j} onto T_{k,j}
//   aw-bw                c(1)=2|AW|, c(n-1)=2|BW|, |AW_{n,k}|=|BW_{n,n+1-k}|
//   insertion-A/B        insertion maps bijective + recurrence counts
//   q-sanity             q-Eulerian at q=1 == ascent census, support report
//   all                  everything above
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Enumeration-backed suites default to 7 (machinery 6), formula-only suites
// to 20.
int suite_default_max_n(const std::string& name);

// max_n <= 0 selects the per-suite default. Cells come out in a fixed order.
VerifyReport run_suite(Context& ctx, const std::string& suite, int max_n);

}  // namespace geu
