#pragma once

#include <optional>
#include <string>

#include "bijection.hpp"
#include "context.hpp"
#include "exact.hpp"
#include "permutation.hpp"
#include "verify.hpp"

namespace geu {

enum class Format { plain, csv, json };

Format parse_format(const std::string& name);  // "plain" | "csv" | "json"

struct TableSpec {
  std::string kind;  // "eulerian" | "general" | "cnk"
  int n = 0;         // 0 = unset
  int max_n = 0;     // 0 = unset; emits rows 1..max_n
  std::optional<int> k;
  std::optional<int> j;
  std::optional<ExactInt> a;
  std::optional<ExactInt> d;
};

// Exact-integer tables. CSV carries a header naming the indices; JSON keeps
// every value as a decimal string so nothing is squeezed through a double.
std::string render_table(Context& ctx, const TableSpec& spec, Format format);

std::string render_stats(const Permutation& p, Format format);

std::string render_bijection(Context& ctx, int n, int k, Side side, Format format);

std::string render_verify(const VerifyReport& report, Format format);

}  // namespace geu
