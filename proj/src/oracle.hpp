#pragma once

#include <vector>

#include "context.hpp"
#include "exact.hpp"
#include "permutation.hpp"

namespace geu {

// Census of S_n by (weak-excedance count, position of n), cached per n.
// Indices are 1-based; entry [k][q] counts permutations with k weak
// excedances and the value n at position q.
const WqTable& wq_census(Context& ctx, int n);

struct ClassCount {
  int n = 0;
  int k = 0;
  int q_lo = 0;
  int q_hi = 0;
  ExactInt count;
};

// |W_{n,k}| by exhaustive census. Zero when k is out of 1..n.
ExactInt count_weak_excedance_class(Context& ctx, int n, int k);

// #{pi in W_{n,k} : lo <= Q_n(pi) <= hi}. Empty ranges count zero.
ExactInt count_w_with_q(Context& ctx, int n, int k, int lo, int hi);

ClassCount count_class(Context& ctx, int n, int k, int lo, int hi);

// c_{n,k}(j) == #{pi in W_{n,k+1}, j < Q_n <= n} + #{pi in W_{n,k}, Q_n <= j}.
bool verify_main_theorem(Context& ctx, int n, int k, int j);

// The composite map f^{-1} o g o f restricted to
// S = {pi in W_{n,k}, Q_n = j} is injective with image exactly
// T = {pi in W_{n,n+1-k}, Q_n = n+1-j}.
bool lemma_bijection_check(Context& ctx, int n, int k, int j);

}  // namespace geu
