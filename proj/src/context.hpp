#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "permutation.hpp"

namespace geu {

// 12! ~ 4.8e8 is the practical desk-scale ceiling for exhaustive runs.
inline constexpr int kDefaultEnumCap = 12;

// count[k][q] over S_n; both indices 1-based, index 0 unused.
using WqTable = std::vector<std::vector<long long>>;
// count[ascents][maj] over S_n.
using AscMajTable = std::vector<std::vector<long long>>;

struct ClassTables {
  // indexed by weak-excedance count k = 0..n; each class sorted lexicographically
  std::vector<std::vector<Permutation>> aw;
  std::vector<std::vector<Permutation>> bw;
};

// Enumeration cap plus memo caches for the heavier operations. The caches are
// guarded by mutexes so one context may serve several threads; results do not
// depend on thread count.
struct Context {
  int enum_cap = kDefaultEnumCap;

  std::mutex eulerian_mu;
  std::vector<std::vector<ExactInt>> eulerian_rows;  // rows[n][k], built on demand

  std::mutex cnk_mu;
  std::map<std::pair<int, int>, std::vector<ExactInt>> cnk_rows;  // (n,k) -> c_{n,k}(0..n)

  std::mutex census_mu;
  std::map<int, WqTable> wq_tables;
  std::map<int, AscMajTable> asc_maj_tables;

  std::mutex class_mu;
  std::map<int, ClassTables> class_tables;
};

}  // namespace geu
