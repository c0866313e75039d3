#include <doctest.h>

#include <set>

#include "permutation.hpp"
#include "test_support.hpp"

using namespace geu;

namespace {
Permutation perm(std::vector<int> w) { return Permutation(std::move(w)); }
}  // namespace

TEST_CASE("construction validates the word") {
  CHECK_NOTHROW(perm({5, 2, 4, 3, 7, 1, 6}));
  CHECK_NOTHROW(perm({1}));
  CHECK_THROWS_WITH_AS(perm({}), "permutation word is empty", Error);
  CHECK_THROWS_AS(perm({1, 1, 2}), Error);
  CHECK_THROWS_AS(perm({1, 3}), Error);
  CHECK_THROWS_AS(perm({0, 1}), Error);
  try {
    perm({1, 1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_value);
  }
  try {
    perm({1, 3});
  } catch (const Error& e) {
    CHECK(e.code() == errc::value_out_of_range);
  }
}

TEST_CASE("statistics of the worked example 5243716") {
  const Permutation p = perm({5, 2, 4, 3, 7, 1, 6});
  CHECK(ascent_count(p) == 3);
  CHECK(weak_excedance_count(p) == 4);
  CHECK(major_index(p) == 9);  // descents at 1, 3, 5
  CHECK(q_position(p) == 5);
  CHECK(to_string(standard_cycle_form(p)) == "(2)(43)(7615)");
  CHECK(to_string(fundamental_map(p)) == "2437615");
  CHECK(to_string(fundamental_inverse(p)) == "6453271");
  CHECK(weak_excedance_count(fundamental_inverse(p)) == 4);
}

TEST_CASE("statistics at the trivial boundaries") {
  for (int n = 1; n <= 6; ++n) {
    const Permutation id = Permutation::identity(n);
    CHECK(ascent_count(id) == n - 1);
    CHECK(weak_excedance_count(id) == n);
    CHECK(major_index(id) == 0);
    CHECK(q_position(id) == n);
    CHECK(fundamental_map(id) == id);
    CHECK(fundamental_inverse(id) == id);

    std::vector<int> rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[i] = n - i;
    const Permutation dec = perm(rev);
    CHECK(ascent_count(dec) == 0);
    CHECK(q_position(dec) == 1);
  }
  CHECK(major_index(perm({2, 1})) == 1);
  CHECK(to_string(fundamental_map(perm({2, 1}))) == "21");
  CHECK(to_string(standard_cycle_form(perm({2, 1}))) == "(21)");
  CHECK(to_string(standard_cycle_form(Permutation::identity(3))) == "(1)(2)(3)");
  CHECK(weak_excedance_count(perm({3, 1, 2})) == 1);
}

TEST_CASE("complement map") {
  CHECK(to_string(complement(perm({5, 3, 2, 1, 4}))) == "13452");
  CHECK(to_string(complement(Permutation::identity(3))) == "321");
  for (const auto& w : testsupport::all_words(5)) {
    const Permutation p = perm(w);
    CHECK(complement(complement(p)) == p);
  }
}

TEST_CASE("cycle form invariants hold on every construction") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : testsupport::all_words(n)) {
      const CycleForm form = standard_cycle_form(perm(w));
      std::set<int> seen;
      int prev_max = 0;
      for (const auto& cycle : form.cycles) {
        REQUIRE(!cycle.empty());
        const int mx = *std::max_element(cycle.begin(), cycle.end());
        CHECK(cycle.front() == mx);
        CHECK(mx > prev_max);
        prev_max = mx;
        for (int v : cycle) CHECK(seen.insert(v).second);
      }
      CHECK(static_cast<int>(seen.size()) == n);
    }
  }
}

TEST_CASE("fundamental map and inverse are mutually inverse") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : testsupport::all_words(n)) {
      const Permutation p = perm(w);
      CHECK(fundamental_inverse(fundamental_map(p)) == p);
      CHECK(fundamental_map(fundamental_inverse(p)) == p);
    }
  }
}

TEST_CASE("inverse map trades ascents for weak excedances") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : testsupport::all_words(n)) {
      const Permutation p = perm(w);
      CHECK(weak_excedance_count(fundamental_inverse(p)) == ascent_count(p) + 1);
    }
  }
}

TEST_CASE("complement flips ascent counts") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : testsupport::all_words(n)) {
      const Permutation p = perm(w);
      CHECK(ascent_count(complement(p)) == (n - 1) - ascent_count(p));
    }
  }
}

TEST_CASE("conjugated complement mirrors the position of n") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : testsupport::all_words(n)) {
      const Permutation p = perm(w);
      const Permutation h = fundamental_inverse(complement(fundamental_map(p)));
      CHECK(q_position(h) == n + 1 - q_position(p));
      CHECK(weak_excedance_count(h) == n + 1 - weak_excedance_count(p));
    }
  }
}

TEST_CASE("word parsing and rendering") {
  CHECK(parse_word("5243716") == std::vector<int>{5, 2, 4, 3, 7, 1, 6});
  CHECK(parse_word("5,2,4,3,7,1,6") == std::vector<int>{5, 2, 4, 3, 7, 1, 6});
  CHECK(parse_word("5 2 4 3 7 1 6") == std::vector<int>{5, 2, 4, 3, 7, 1, 6});
  CHECK(parse_word("10 2 3 4 5 6 7 8 9 1") ==
        std::vector<int>{10, 2, 3, 4, 5, 6, 7, 8, 9, 1});
  CHECK_THROWS_AS(parse_word("12x"), Error);

  CHECK(to_string(perm({5, 2, 4, 3, 7, 1, 6})) == "5243716");
  const Permutation big = perm({10, 2, 3, 4, 5, 6, 7, 8, 9, 1});
  CHECK(to_string(big) == "10 2 3 4 5 6 7 8 9 1");
  CHECK(to_string(standard_cycle_form(big)) == "(2)(3)(4)(5)(6)(7)(8)(9)(10 1)");
}

TEST_CASE("enumeration is lexicographic, complete and capped") {
  PermutationEnumerator en(3, 12);
  std::vector<std::string> words;
  Permutation p = Permutation::identity(3);
  while (en.next(p)) words.push_back(to_string(p));
  CHECK(words == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

  long long count = 0;
  for_each_permutation(7, 12, [&](const Permutation&) { ++count; });
  CHECK(count == 5040);
  count = 0;
  for_each_permutation(9, 12, [&](const Permutation&) { ++count; });
  CHECK(count == 362880);

  CHECK_THROWS_AS(PermutationEnumerator(13, 12), Error);
  try {
    PermutationEnumerator(13, 12);
  } catch (const Error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
  // explicit override admits larger n; only peek at the stream
  PermutationEnumerator wide(13, 13);
  REQUIRE(wide.next(p));
  CHECK(p.size() == 13);
  CHECK(p == Permutation::identity(13));
}
