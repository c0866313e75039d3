#pragma once

// Test-only brute-force oracles. These stay deliberately independent of the
// library's implementation paths: plain loops over std::next_permutation.

#include <algorithm>
#include <numeric>
#include <vector>

namespace testsupport {

inline std::vector<std::vector<int>> all_words(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int brute_ascents(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++c;
  return c;
}

inline int brute_weak_excedances(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= static_cast<int>(i) + 1) ++c;
  return c;
}

inline long long brute_major_index(const std::vector<int>& w) {
  long long s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s += static_cast<long long>(i) + 1;
  return s;
}

inline int brute_q_position(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == n) return static_cast<int>(i) + 1;
  return 0;
}

// #{n-permutations with k weak excedances}
inline long long brute_eulerian(int n, int k) {
  long long count = 0;
  for (const auto& w : all_words(n))
    if (brute_weak_excedances(w) == k) ++count;
  return count;
}

}  // namespace testsupport
