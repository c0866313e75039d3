#pragma once

#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "exact.hpp"

namespace geu {

// k bars divide the numbers 1..n into k+1 ordered compartments; every
// nonempty compartment is strictly decreasing.
class BarArrangement {
public:
  // Validates the compartment invariants (union is exactly {1..n}, each
  // compartment strictly decreasing).
  static BarArrangement make(std::vector<std::vector<int>> compartments);

  int n() const { return n_; }
  int bar_count() const { return static_cast<int>(compartments_.size()) - 1; }
  const std::vector<std::vector<int>>& compartments() const { return compartments_; }

  // The underlying word with the bars erased.
  std::vector<int> word() const;

  bool operator==(const BarArrangement&) const = default;

private:
  struct unchecked_t {};
  BarArrangement(unchecked_t, std::vector<std::vector<int>> compartments, int n)
      : compartments_(std::move(compartments)), n_(n) {}

  template <typename F>
  friend void for_each_bar_arrangement(const Context&, int, int, int, F&&);

  std::vector<std::vector<int>> compartments_;
  int n_ = 0;
};

// 1-based indices of the extraneous bars. Bar b sits between compartments
// b and b+1. A bar is extraneous when
//   (a) it is immediately followed by another bar, or
//   (b) it is not immediately preceded by another bar and deleting it leaves
//       every compartment empty or strictly decreasing (equivalently, the two
//       compartments it separates concatenate to a strictly decreasing run).
std::vector<int> extraneous_bars(const BarArrangement& arr);

// Membership in the set B of the inclusion-exclusion count: no extraneous
// bar at all, or a single extraneous final bar whose removal would pull one
// of {1..j} into the last compartment (that is, the second-to-last
// compartment meets {1..j}).
bool in_set_b(const BarArrangement& arr, int j);

// Streams every placement of 1..n into k+1 compartments where none of
// {1..j} lies in the last compartment; (k+1)^{n-j} k^j arrangements in a
// fixed odometer order. Throws errc::cap_exceeded when n exceeds the cap.
template <typename F>
void for_each_bar_arrangement(const Context& ctx, int n, int k, int j, F&& fn) {
  if (n < 1 || k < 0 || j < 0 || j > n)
    fail(errc::invalid_argument, "need n >= 1, k >= 0, 0 <= j <= n");
  if (n > ctx.enum_cap)
    fail(errc::cap_exceeded, "n=" + std::to_string(n) + " exceeds enumeration cap " +
                                 std::to_string(ctx.enum_cap));
  if (k == 0 && j > 0) return;  // {1..j} cannot avoid the only compartment
  std::vector<int> comp_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(k) + 1);
  for (;;) {
    for (auto& c : comps) c.clear();
    for (int v = n; v >= 1; --v) comps[comp_of[v]].push_back(v);
    fn(BarArrangement(typename BarArrangement::unchecked_t{}, comps, n));
    int v = 1;
    while (v <= n) {
      const int limit = (v <= j) ? k - 1 : k;
      if (comp_of[v] < limit) {
        ++comp_of[v];
        break;
      }
      comp_of[v] = 0;
      ++v;
    }
    if (v > n) break;
  }
}

// (k+1)^{n-j} k^j, the size of the stream above.
ExactInt count_bar_arrangements(int n, int k, int j);

// |B| by direct filtering of the stream; equals c_{n,k}(j).
ExactInt count_set_b(Context& ctx, int n, int k, int j);

// |B| by the inclusion-exclusion formula
//   (k+1)^{n-j} k^j - B_1 + B_2 - ...,  B_i = (k+1-i)^{n-j} (k-i)^j C(n+1,i).
ExactInt inclusion_exclusion_b(int n, int k, int j);

}  // namespace geu
