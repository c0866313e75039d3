#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"
#include "eulerian.hpp"

namespace geu {

const WqTable& wq_census(Context& ctx, int n) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  std::lock_guard<std::mutex> lock(ctx.census_mu);
  auto it = ctx.wq_tables.find(n);
  if (it != ctx.wq_tables.end()) return it->second;
  WqTable table(static_cast<std::size_t>(n) + 1,
                std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  for_each_permutation(n, ctx.enum_cap, [&](const Permutation& p) {
    table[weak_excedance_count(p)][q_position(p)]++;
  });
  return ctx.wq_tables.emplace(n, std::move(table)).first->second;
}

ExactInt count_weak_excedance_class(Context& ctx, int n, int k) {
  return count_w_with_q(ctx, n, k, 1, n);
}

ExactInt count_w_with_q(Context& ctx, int n, int k, int lo, int hi) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  if (k < 1 || k > n) return 0;
  lo = std::max(lo, 1);
  hi = std::min(hi, n);
  if (lo > hi) return 0;
  const WqTable& table = wq_census(ctx, n);
  long long total = 0;
  for (int q = lo; q <= hi; ++q) total += table[k][q];
  return total;
}

ClassCount count_class(Context& ctx, int n, int k, int lo, int hi) {
  ClassCount c;
  c.n = n;
  c.k = k;
  c.q_lo = lo;
  c.q_hi = hi;
  c.count = count_w_with_q(ctx, n, k, lo, hi);
  return c;
}

bool verify_main_theorem(Context& ctx, int n, int k, int j) {
  if (k < 0 || k > n || j < 0 || j > n)
    fail(errc::invalid_argument, "k and j must lie in 0..n");
  const ExactInt lhs = cnk_coefficient(ctx, n, k, j);
  const ExactInt rhs =
      count_w_with_q(ctx, n, k + 1, j + 1, n) + count_w_with_q(ctx, n, k, 1, j);
  return lhs == rhs;
}

bool lemma_bijection_check(Context& ctx, int n, int k, int j) {
  if (k < 1 || k > n || j < 1 || j > n)
    fail(errc::invalid_argument, "k and j must lie in 1..n");
  std::vector<Permutation> images;
  std::vector<Permutation> target;
  for_each_permutation(n, ctx.enum_cap, [&](const Permutation& p) {
    const int wexc = weak_excedance_count(p);
    const int q = q_position(p);
    if (wexc == k && q == j)
      images.push_back(fundamental_inverse(complement(fundamental_map(p))));
    if (wexc == n + 1 - k && q == n + 1 - j) target.push_back(p);
  });
  std::sort(images.begin(), images.end());
  // injectivity: no repeated image
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  return images == target;  // target is lex-sorted by construction
}

}  // namespace geu
