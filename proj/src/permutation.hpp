#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "errors.hpp"

namespace geu {

// One-line permutation of {1,...,n}. Positions and values are 1-based in
// every public operation; storage is an ordinary 0-based vector.
class Permutation {
public:
  // Validates that word is a rearrangement of {1..n}. Throws errc::empty_word,
  // errc::value_out_of_range or errc::duplicate_value.
  explicit Permutation(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  int at(int pos) const { return word_[pos - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

  static Permutation identity(int n);

private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<int> word) : word_(std::move(word)) {}
  friend class PermutationEnumerator;
  friend Permutation unchecked_permutation(std::vector<int>);

  std::vector<int> word_;
};

// Internal fast path for callers that guarantee validity.
Permutation unchecked_permutation(std::vector<int> word);

// Cycle decomposition in standard representation: every cycle starts with its
// largest element and cycles are listed by increasing largest element.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleForm&) const = default;
};

int ascent_count(const Permutation& p);          // #{i < n : p_i < p_{i+1}}
int weak_excedance_count(const Permutation& p);  // #{i : p_i >= i}
long long major_index(const Permutation& p);     // sum of descent positions
int q_position(const Permutation& p);            // the i with p_i = n

CycleForm standard_cycle_form(const Permutation& p);

// Erase the parentheses of the standard cycle form.
Permutation fundamental_map(const Permutation& p);
// Inverse map: cut the word before each left-to-right maximum, read the
// pieces as cycles.
Permutation fundamental_inverse(const Permutation& p);
// p_i -> n+1-p_i; an involution.
Permutation complement(const Permutation& p);

// Word rendering: digits run together while all values fit in one digit
// ("2437615"), space separated otherwise ("10 3 1 ...").
std::string to_string(const std::vector<int>& word);
std::string to_string(const Permutation& p);
std::string to_string(const CycleForm& form);

// Parses "5243716" (single digits) or "5,2,4,3,7,1,6" / "5 2 4 3 7 1 6".
std::vector<int> parse_word(const std::string& text);

// Lexicographic stream over all n! words. Construction throws
// errc::cap_exceeded when n exceeds cap.
class PermutationEnumerator {
public:
  PermutationEnumerator(int n, int cap);
  // Returns false when the stream is exhausted.
  bool next(Permutation& out);

private:
  std::vector<int> cur_;
  bool done_ = false;
  bool first_ = true;
};

template <typename F>
void for_each_permutation(int n, int cap, F&& fn) {
  PermutationEnumerator en(n, cap);
  Permutation p = Permutation::identity(n);
  while (en.next(p)) fn(static_cast<const Permutation&>(p));
}

}  // namespace geu
