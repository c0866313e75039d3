#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "exact.hpp"
#include "permutation.hpp"

namespace geu {

enum class Side { A, B };

// Case labels of the two insertion tables. The a/b families classify the
// AW-side images, the c/d families the BW-side images.
enum class CaseLabel {
  a1, a2, a3, a4, a5,
  b1, b2, b3, b4,
  c1, c2, c3, c4, c5, c6,
  d1, d2,
};

std::string to_string(CaseLabel label);  // "a.1" ... "d.2"

// Insertion position: a 1-based index into the source word, or the slot one
// past its end.
class InsertPosition {
public:
  static InsertPosition index(int i) { return InsertPosition(false, i); }
  static InsertPosition end() { return InsertPosition(true, 0); }

  bool is_end() const { return is_end_; }
  int idx() const { return index_; }

  bool operator==(const InsertPosition&) const = default;
  // index positions in order, End last
  bool operator<(const InsertPosition& other) const {
    if (is_end_ != other.is_end_) return !is_end_;
    return index_ < other.index_;
  }

private:
  InsertPosition(bool at_end, int i) : is_end_(at_end), index_(i) {}
  bool is_end_;
  int index_;
};

std::string to_string(const InsertPosition& pos);  // "3" or "end"

// AW_{n,k} = {pi in W_{n,k} : p_1 < p_n}, BW_{n,k} = W_{n,k} \ AW_{n,k}.
// Classes are cached per n and returned sorted lexicographically. Length-1
// classes are defined empty (the first/last comparison is degenerate there);
// out-of-range k also yields the empty set.
const std::vector<Permutation>& aw_set(Context& ctx, int n, int k);
const std::vector<Permutation>& bw_set(Context& ctx, int n, int k);
const std::vector<Permutation>& class_set(Context& ctx, int n, int k, Side side);

struct InsertionRecord {
  Permutation source;      // length n-1
  int source_k = 0;        // weak-excedance count of the source
  InsertPosition position = InsertPosition::end();
  Permutation image;       // length n, lies in the target class
  CaseLabel label = CaseLabel::a1;
};

// One step of the insertion map into AW_{n,k}: the source must lie in
// AW_{n-1,k} (weak-excedance positions) or AW_{n-1,k-1} (non-weak-excedance
// positions plus the end slot). Exactly one table row must apply; zero or
// several matching rows raise errc::no_matching_row.
InsertionRecord insert_a(const Permutation& source, int target_k, InsertPosition pos);

// Likewise into BW_{n,k}; the extra position of the BW_{n-1,k-1} block is
// the index holding the value n-1 instead of an end slot.
InsertionRecord insert_b(const Permutation& source, int target_k, InsertPosition pos);

// The positions insert_a / insert_b accept for this source and target class,
// ascending. Their count is k for the matching-k block and n+1-k for the
// k-1 block.
std::vector<InsertPosition> valid_positions_a(const Permutation& source, int target_k);
std::vector<InsertPosition> valid_positions_b(const Permutation& source, int target_k);

// The unique case label of a permutation in an AW class (resp. BW class).
// Throws errc::unclassifiable if the word is not in such a class.
CaseLabel classify_a(const Permutation& image);
CaseLabel classify_b(const Permutation& image);

// c_{n,k}(1) = 2|AW_{n,k+1}| and c_{n,k}(n-1) = 2|BW_{n,k}|.
bool verify_cnk_aw_bw(Context& ctx, int n, int k);

// |AW_{n,k}| = |BW_{n,n+1-k}|.
bool verify_aw_bw_symmetry(Context& ctx, int n, int k);

struct InsertionCheck {
  bool ok = true;
  std::string detail;
};

// Full verification of one insertion map cell: every source admits exactly
// k (resp. n+1-k) positions, all images are distinct, the image set equals
// the target class, and k|C_{n-1,k}| + (n+1-k)|C_{n-1,k-1}| = |C_{n,k}|.
// Vacuously true when both source classes are empty.
InsertionCheck verify_insertion_recursion(Context& ctx, int n, int k, Side side);

// Every insertion record for the target class, sorted by (source, position).
std::vector<InsertionRecord> insertion_records(Context& ctx, int n, int k, Side side);

}  // namespace geu
