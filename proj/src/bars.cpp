#include "bars.hpp"

#include <algorithm>

namespace geu {

namespace {

bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] <= v[i + 1]) return false;
  return true;
}

// Both sides are strictly decreasing already, so the concatenation is
// decreasing iff the boundary pair is.
bool merge_decreasing(const std::vector<int>& left, const std::vector<int>& right) {
  return left.empty() || right.empty() || left.back() > right.front();
}

}  // namespace

BarArrangement BarArrangement::make(std::vector<std::vector<int>> compartments) {
  if (compartments.empty()) fail(errc::invalid_argument, "need at least one compartment");
  int n = 0;
  for (const auto& c : compartments) n += static_cast<int>(c.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : compartments) {
    if (!strictly_decreasing(c))
      fail(errc::invalid_argument, "compartment is not strictly decreasing");
    for (int v : c) {
      if (v < 1 || v > n) fail(errc::value_out_of_range, "value outside 1..n");
      if (seen[v]) fail(errc::duplicate_value, "value repeats across compartments");
      seen[v] = 1;
    }
  }
  return BarArrangement(unchecked_t{}, std::move(compartments), n);
}

std::vector<int> BarArrangement::word() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n_));
  for (const auto& c : compartments_) w.insert(w.end(), c.begin(), c.end());
  return w;
}

std::vector<int> extraneous_bars(const BarArrangement& arr) {
  const auto& c = arr.compartments();
  const int k = arr.bar_count();
  std::vector<int> out;
  for (int b = 1; b <= k; ++b) {
    if (b < k && c[b].empty()) {  // clause (a): immediately followed by a bar
      out.push_back(b);
      continue;
    }
    if (b > 1 && c[b - 1].empty()) continue;  // preceded by a bar; (a) judged that one
    if (merge_decreasing(c[b - 1], c[b])) out.push_back(b);
  }
  return out;
}

bool in_set_b(const BarArrangement& arr, int j) {
  const std::vector<int> ext = extraneous_bars(arr);
  if (ext.empty()) return true;
  const int k = arr.bar_count();
  if (ext.size() != 1 || ext[0] != k) return false;
  // A final extraneous bar survives only if deleting it would pull one of
  // {1..j} into the last compartment.
  for (int v : arr.compartments()[k - 1])
    if (v <= j) return true;
  return false;
}

ExactInt count_bar_arrangements(int n, int k, int j) {
  if (n < 1 || k < 0 || j < 0 || j > n)
    fail(errc::invalid_argument, "need n >= 1, k >= 0, 0 <= j <= n");
  return ipow(k + 1, n - j) * ipow(k, j);
}

ExactInt count_set_b(Context& ctx, int n, int k, int j) {
  long long count = 0;
  for_each_bar_arrangement(ctx, n, k, j, [&](const BarArrangement& arr) {
    if (in_set_b(arr, j)) ++count;
  });
  return count;
}

ExactInt inclusion_exclusion_b(int n, int k, int j) {
  if (n < 1 || k < 0 || j < 0 || j > n)
    fail(errc::invalid_argument, "need n >= 1, k >= 0, 0 <= j <= n");
  ExactInt total = count_bar_arrangements(n, k, j);
  for (int i = 1; i <= k; ++i) {
    const ExactInt b_i = ipow(k + 1 - i, n - j) * ipow(k - i, j) * binomial(n + 1, i);
    total += (i % 2 == 0) ? b_i : -b_i;
  }
  return total;
}

}  // namespace geu
