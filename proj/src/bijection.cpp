#include "bijection.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"
#include "eulerian.hpp"

namespace geu {

namespace {

int at(const std::vector<int>& w, int pos) { return w[pos - 1]; }  // 1-based

int index_of(const std::vector<int>& w, int value) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == value) return static_cast<int>(i) + 1;
  fail(errc::internal, "value not present in word");
}

// The constructions below rebuild the image word explicitly from segments of
// the source; m is the source length, n = m+1 the image length.

// p_1..p_{i-1} n p_{i+1}..p_m p_i
std::vector<int> build_replace_and_append(const std::vector<int>& p, int i, int n) {
  std::vector<int> out(p);
  out[i - 1] = n;
  out.push_back(at(p, i));
  return out;
}

// p_1..p_{i-1} X p_{i+1}..p_{m-1} Y Z   (value X at position i, then the
// tail p_{i+1}..p_{m-1}, then Y and Z)
std::vector<int> build_mid_tail(const std::vector<int>& p, int i, int x, int y, int z) {
  const int m = static_cast<int>(p.size());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int t = 1; t < i; ++t) out.push_back(at(p, t));
  out.push_back(x);
  for (int t = i + 1; t <= m - 1; ++t) out.push_back(at(p, t));
  out.push_back(y);
  out.push_back(z);
  return out;
}

struct TableRow {
  CaseLabel label;
  std::function<bool(const std::vector<int>&, const InsertPosition&)> matches;
  std::function<std::vector<int>(const std::vector<int>&, const InsertPosition&)> build;
};

// Table rows for the map {AW_{n-1,k}, AW_{n-1,k-1}} -> AW_{n,k}. block 1 is
// the AW_{n-1,k} source class, block 2 is AW_{n-1,k-1}. Positions handed to
// the rows are already validated for their block.
const std::vector<TableRow>& a_rows(int block) {
  static const std::vector<TableRow> block1 = {
      {CaseLabel::a1,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return pos.idx() >= 2 && at(p, pos.idx()) > at(p, 1);
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return build_replace_and_append(p, pos.idx(), static_cast<int>(p.size()) + 1);
       }},
      {CaseLabel::a3,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() >= 2 && at(p, pos.idx()) < at(p, 1) && at(p, m) != m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m + 1, at(p, pos.idx()), at(p, m));
       }},
      {CaseLabel::b2,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() >= 2 && at(p, pos.idx()) < at(p, 1) && at(p, m) == m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m, at(p, pos.idx()), m + 1);
       }},
      {CaseLabel::a5,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() == 1 && at(p, m) != m;
       },
       [](const std::vector<int>& p, const InsertPosition&) {
         const int m = static_cast<int>(p.size());
         const int istar = index_of(p, m);  // 2 <= istar <= m-1
         std::vector<int> out;
         out.reserve(static_cast<std::size_t>(m) + 1);
         out.push_back(at(p, m));
         for (int t = 2; t < istar; ++t) out.push_back(at(p, t));
         out.push_back(m + 1);
         for (int t = istar + 1; t <= m - 1; ++t) out.push_back(at(p, t));
         out.push_back(at(p, 1));
         out.push_back(m);
         return out;
       }},
      {CaseLabel::b4,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() == 1 && at(p, m) == m;
       },
       [](const std::vector<int>& p, const InsertPosition&) {
         const int m = static_cast<int>(p.size());
         std::vector<int> out;
         out.reserve(static_cast<std::size_t>(m) + 1);
         out.push_back(m);
         for (int t = 2; t <= m - 1; ++t) out.push_back(at(p, t));
         out.push_back(at(p, 1));
         out.push_back(m + 1);
         return out;
       }},
  };
  static const std::vector<TableRow> block2 = {
      {CaseLabel::a2,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return !pos.is_end() && at(p, pos.idx()) > at(p, 1);
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return build_replace_and_append(p, pos.idx(), static_cast<int>(p.size()) + 1);
       }},
      {CaseLabel::a4,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return !pos.is_end() && at(p, pos.idx()) < at(p, 1) && at(p, m) != m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m + 1, at(p, pos.idx()), at(p, m));
       }},
      {CaseLabel::b3,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return !pos.is_end() && at(p, pos.idx()) < at(p, 1) && at(p, m) == m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m, at(p, pos.idx()), m + 1);
       }},
      {CaseLabel::b1,
       [](const std::vector<int>&, const InsertPosition& pos) { return pos.is_end(); },
       [](const std::vector<int>& p, const InsertPosition&) {
         std::vector<int> out(p);
         out.push_back(static_cast<int>(p.size()) + 1);
         return out;
       }},
  };
  return block == 1 ? block1 : block2;
}

// Table rows for the map {BW_{n-1,k}, BW_{n-1,k-1}} -> BW_{n,k}.
const std::vector<TableRow>& b_rows(int block) {
  static const std::vector<TableRow> block1 = {
      {CaseLabel::d1,
       [](const std::vector<int>&, const InsertPosition& pos) { return pos.idx() == 1; },
       [](const std::vector<int>& p, const InsertPosition&) {
         const int m = static_cast<int>(p.size());
         std::vector<int> out;
         out.reserve(static_cast<std::size_t>(m) + 1);
         out.push_back(m + 1);
         for (int t = 2; t <= m; ++t) out.push_back(at(p, t));
         out.push_back(at(p, 1));
         return out;
       }},
      {CaseLabel::c1,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() >= 2 && pos.idx() <= m - 1 && at(p, 1) > at(p, pos.idx());
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return build_replace_and_append(p, pos.idx(), static_cast<int>(p.size()) + 1);
       }},
      {CaseLabel::c3,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() >= 2 && pos.idx() <= m - 1 && at(p, 1) < at(p, pos.idx()) &&
                at(p, pos.idx()) != m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m + 1, at(p, pos.idx()), at(p, m));
       }},
      {CaseLabel::d2,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return pos.idx() >= 2 && pos.idx() <= m - 1 && at(p, 1) < at(p, pos.idx()) &&
                at(p, pos.idx()) == m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         const int i = pos.idx();
         std::vector<int> out;
         out.reserve(static_cast<std::size_t>(m) + 1);
         out.push_back(m + 1);
         for (int t = 2; t < i; ++t) out.push_back(at(p, t));
         out.push_back(m);
         for (int t = i + 1; t <= m - 1; ++t) out.push_back(at(p, t));
         out.push_back(at(p, 1));
         out.push_back(at(p, m));
         return out;
       }},
  };
  static const std::vector<TableRow> block2 = {
      {CaseLabel::c2,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         const int i = pos.idx();
         return i >= 2 && i <= m - 1 && at(p, i) < i && at(p, 1) > at(p, i);
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return build_replace_and_append(p, pos.idx(), static_cast<int>(p.size()) + 1);
       }},
      {CaseLabel::c4,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         const int i = pos.idx();
         return i >= 2 && i <= m - 1 && at(p, i) < i && at(p, 1) < at(p, i);
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m + 1, at(p, pos.idx()), at(p, m));
       }},
      {CaseLabel::c6,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         return pos.idx() == static_cast<int>(p.size());
       },
       [](const std::vector<int>& p, const InsertPosition&) {
         const int m = static_cast<int>(p.size());
         std::vector<int> out;
         out.reserve(static_cast<std::size_t>(m) + 1);
         for (int t = 1; t <= m - 1; ++t) out.push_back(at(p, t));
         out.push_back(m + 1);
         out.push_back(at(p, m));
         return out;
       }},
      {CaseLabel::c5,
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         const int i = pos.idx();
         return i >= 1 && i <= m - 1 && at(p, i) == m;
       },
       [](const std::vector<int>& p, const InsertPosition& pos) {
         const int m = static_cast<int>(p.size());
         return build_mid_tail(p, pos.idx(), m + 1, m, at(p, m));
       }},
  };
  return block == 1 ? block1 : block2;
}

bool is_aw_word(const std::vector<int>& w) { return w.size() >= 2 && w.front() < w.back(); }
bool is_bw_word(const std::vector<int>& w) { return w.size() >= 2 && w.front() > w.back(); }

const ClassTables& class_tables(Context& ctx, int n) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  std::lock_guard<std::mutex> lock(ctx.class_mu);
  auto it = ctx.class_tables.find(n);
  if (it != ctx.class_tables.end()) return it->second;
  ClassTables tables;
  tables.aw.resize(static_cast<std::size_t>(n) + 1);
  tables.bw.resize(static_cast<std::size_t>(n) + 1);
  if (n >= 2) {  // length-1 classes stay empty by convention
    for_each_permutation(n, ctx.enum_cap, [&](const Permutation& p) {
      const int k = weak_excedance_count(p);
      auto& bucket = is_aw_word(p.word()) ? tables.aw[k] : tables.bw[k];
      bucket.push_back(p);
    });
  }
  return ctx.class_tables.emplace(n, std::move(tables)).first->second;
}

const std::vector<Permutation>& empty_class() {
  static const std::vector<Permutation> empty;
  return empty;
}

struct BlockInfo {
  int block;     // 1: source class index == target k, 2: == target k-1
  int source_k;  // weak-excedance count of the source
};

BlockInfo resolve_block(const Permutation& source, int target_k, Side side) {
  const int m = source.size();
  if (m < 2) fail(errc::invalid_argument, "length-1 source classes are empty");
  const auto& w = source.word();
  if (side == Side::A && !is_aw_word(w))
    fail(errc::invalid_argument, "source is not in an AW class");
  if (side == Side::B && !is_bw_word(w))
    fail(errc::invalid_argument, "source is not in a BW class");
  const int ks = weak_excedance_count(source);
  if (ks == target_k) return {1, ks};
  if (ks == target_k - 1) return {2, ks};
  fail(errc::invalid_argument, "source has " + std::to_string(ks) +
                                   " weak excedances; target class needs " +
                                   std::to_string(target_k) + " or " +
                                   std::to_string(target_k - 1));
}

bool position_valid(const Permutation& source, Side side, int block, const InsertPosition& pos) {
  const int m = source.size();
  const auto& w = source.word();
  if (pos.is_end()) return side == Side::A && block == 2;
  const int i = pos.idx();
  if (i < 1 || i > m) return false;
  if (block == 1) return at(w, i) >= i;
  if (side == Side::A) return at(w, i) < i;
  return at(w, i) < i || at(w, i) == m;
}

InsertionRecord insert_impl(const Permutation& source, int target_k, InsertPosition pos,
                            Side side) {
  const BlockInfo info = resolve_block(source, target_k, side);
  if (!position_valid(source, side, info.block, pos))
    fail(errc::invalid_position,
         "position " + to_string(pos) + " is not valid for this source class");
  const auto& rows = side == Side::A ? a_rows(info.block) : b_rows(info.block);
  const TableRow* hit = nullptr;
  for (const auto& row : rows) {
    if (!row.matches(source.word(), pos)) continue;
    if (hit != nullptr)
      fail(errc::no_matching_row, "rows " + to_string(hit->label) + " and " +
                                      to_string(row.label) + " both match source " +
                                      to_string(source) + " at position " + to_string(pos));
    hit = &row;
  }
  if (hit == nullptr)
    fail(errc::no_matching_row, "no table row matches source " + to_string(source) +
                                    " at position " + to_string(pos));
  InsertionRecord rec{source, info.source_k, pos, Permutation(hit->build(source.word(), pos)),
                      hit->label};
  const int n = source.size() + 1;
  const bool in_class =
      side == Side::A ? is_aw_word(rec.image.word()) : is_bw_word(rec.image.word());
  if (rec.image.size() != n || weak_excedance_count(rec.image) != target_k || !in_class)
    fail(errc::internal, "row " + to_string(rec.label) + " built " + to_string(rec.image) +
                             " outside the target class");
  return rec;
}

std::vector<InsertPosition> valid_positions_impl(const Permutation& source, int target_k,
                                                 Side side) {
  const BlockInfo info = resolve_block(source, target_k, side);
  std::vector<InsertPosition> out;
  for (int i = 1; i <= source.size(); ++i) {
    InsertPosition pos = InsertPosition::index(i);
    if (position_valid(source, side, info.block, pos)) out.push_back(pos);
  }
  if (side == Side::A && info.block == 2) out.push_back(InsertPosition::end());
  return out;
}

}  // namespace

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::a1: return "a.1";
    case CaseLabel::a2: return "a.2";
    case CaseLabel::a3: return "a.3";
    case CaseLabel::a4: return "a.4";
    case CaseLabel::a5: return "a.5";
    case CaseLabel::b1: return "b.1";
    case CaseLabel::b2: return "b.2";
    case CaseLabel::b3: return "b.3";
    case CaseLabel::b4: return "b.4";
    case CaseLabel::c1: return "c.1";
    case CaseLabel::c2: return "c.2";
    case CaseLabel::c3: return "c.3";
    case CaseLabel::c4: return "c.4";
    case CaseLabel::c5: return "c.5";
    case CaseLabel::c6: return "c.6";
    case CaseLabel::d1: return "d.1";
    case CaseLabel::d2: return "d.2";
  }
  fail(errc::internal, "unknown case label");
}

std::string to_string(const InsertPosition& pos) {
  return pos.is_end() ? "end" : std::to_string(pos.idx());
}

const std::vector<Permutation>& aw_set(Context& ctx, int n, int k) {
  if (k < 0 || k > n) return empty_class();
  return class_tables(ctx, n).aw[k];
}

const std::vector<Permutation>& bw_set(Context& ctx, int n, int k) {
  if (k < 0 || k > n) return empty_class();
  return class_tables(ctx, n).bw[k];
}

const std::vector<Permutation>& class_set(Context& ctx, int n, int k, Side side) {
  return side == Side::A ? aw_set(ctx, n, k) : bw_set(ctx, n, k);
}

InsertionRecord insert_a(const Permutation& source, int target_k, InsertPosition pos) {
  return insert_impl(source, target_k, pos, Side::A);
}

InsertionRecord insert_b(const Permutation& source, int target_k, InsertPosition pos) {
  return insert_impl(source, target_k, pos, Side::B);
}

std::vector<InsertPosition> valid_positions_a(const Permutation& source, int target_k) {
  return valid_positions_impl(source, target_k, Side::A);
}

std::vector<InsertPosition> valid_positions_b(const Permutation& source, int target_k) {
  return valid_positions_impl(source, target_k, Side::B);
}

CaseLabel classify_a(const Permutation& image) {
  const int n = image.size();
  if (!is_aw_word(image.word())) fail(errc::unclassifiable, "word is not in an AW class");
  const auto& w = image.word();
  const int first = at(w, 1);
  const int last = at(w, n);
  const int before_last = at(w, n - 1);
  if (last == n) {
    const int i = index_of(w, n - 1);
    if (first == n - 1) return CaseLabel::b4;
    if (first < before_last) return CaseLabel::b1;
    return before_last >= i ? CaseLabel::b2 : CaseLabel::b3;
  }
  const int i = index_of(w, n);  // 2 <= i <= n-1 since the word starts low and ends below n
  if (first < before_last) return last >= i ? CaseLabel::a1 : CaseLabel::a2;
  if (last == n - 1) return CaseLabel::a5;
  return before_last >= i ? CaseLabel::a3 : CaseLabel::a4;
}

CaseLabel classify_b(const Permutation& image) {
  const int n = image.size();
  if (!is_bw_word(image.word())) fail(errc::unclassifiable, "word is not in a BW class");
  const auto& w = image.word();
  const int first = at(w, 1);
  const int last = at(w, n);
  const int before_last = at(w, n - 1);
  if (first == n) {
    if (before_last == n - 1) return CaseLabel::c5;  // image of the i=1 row
    return before_last < last ? CaseLabel::d1 : CaseLabel::d2;
  }
  const int i = index_of(w, n);
  if (i == n - 1) return CaseLabel::c6;
  if (before_last == n - 1) return CaseLabel::c5;
  if (first > before_last) return last >= i ? CaseLabel::c1 : CaseLabel::c2;
  return before_last >= i ? CaseLabel::c3 : CaseLabel::c4;
}

bool verify_cnk_aw_bw(Context& ctx, int n, int k) {
  const ExactInt c_one = cnk_coefficient(ctx, n, k, 1);
  const ExactInt c_last = cnk_coefficient(ctx, n, k, n - 1);
  const ExactInt aw_size = static_cast<long long>(aw_set(ctx, n, k + 1).size());
  const ExactInt bw_size = static_cast<long long>(bw_set(ctx, n, k).size());
  return c_one == 2 * aw_size && c_last == 2 * bw_size;
}

bool verify_aw_bw_symmetry(Context& ctx, int n, int k) {
  return aw_set(ctx, n, k).size() == bw_set(ctx, n, n + 1 - k).size();
}

InsertionCheck verify_insertion_recursion(Context& ctx, int n, int k, Side side) {
  if (n < 2) fail(errc::invalid_argument, "n must be >= 2");
  const auto& keep = class_set(ctx, n - 1, k, side);
  const auto& raise = class_set(ctx, n - 1, k - 1, side);
  const auto& target = class_set(ctx, n, k, side);
  if (keep.empty() && raise.empty()) return {true, "vacuous: empty source classes"};

  std::vector<Permutation> images;
  auto run_block = [&](const std::vector<Permutation>& sources,
                       std::size_t expected_positions) -> InsertionCheck {
    for (const auto& source : sources) {
      const auto positions = valid_positions_impl(source, k, side);
      if (positions.size() != expected_positions)
        return {false, "source " + to_string(source) + " admits " +
                           std::to_string(positions.size()) + " positions, expected " +
                           std::to_string(expected_positions)};
      for (const auto& pos : positions)
        images.push_back(insert_impl(source, k, pos, side).image);
    }
    return {true, ""};
  };

  try {
    if (auto r = run_block(keep, static_cast<std::size_t>(k)); !r.ok) return r;
    if (auto r = run_block(raise, static_cast<std::size_t>(n + 1 - k)); !r.ok) return r;
  } catch (const Error& e) {
    if (e.code() == errc::cap_exceeded) throw;
    return {false, e.what()};  // row-encoding failures surface as check failures
  }

  std::sort(images.begin(), images.end());
  if (auto dup = std::adjacent_find(images.begin(), images.end()); dup != images.end())
    return {false, "image " + to_string(*dup) + " is produced twice"};
  if (images != target)
    return {false, "image set differs from the target class (" +
                       std::to_string(images.size()) + " images vs " +
                       std::to_string(target.size()) + " class elements)"};
  const ExactInt lhs = ExactInt(k) * static_cast<long long>(keep.size()) +
                       ExactInt(n + 1 - k) * static_cast<long long>(raise.size());
  if (lhs != static_cast<long long>(target.size()))
    return {false, "recurrence count " + lhs.str() + " != class size " +
                       std::to_string(target.size())};
  return {true, ""};
}

std::vector<InsertionRecord> insertion_records(Context& ctx, int n, int k, Side side) {
  if (n < 2) fail(errc::invalid_argument, "n must be >= 2");
  std::vector<InsertionRecord> records;
  for (int source_k : {k, k - 1}) {
    for (const auto& source : class_set(ctx, n - 1, source_k, side))
      for (const auto& pos : valid_positions_impl(source, k, side))
        records.push_back(insert_impl(source, k, pos, side));
  }
  std::sort(records.begin(), records.end(), [](const InsertionRecord& x, const InsertionRecord& y) {
    if (x.source != y.source) return x.source < y.source;
    return x.position < y.position;
  });
  return records;
}

}  // namespace geu
