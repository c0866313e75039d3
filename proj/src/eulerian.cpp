#include "eulerian.hpp"

#include <utility>

#include "errors.hpp"

namespace geu {

namespace {

void require_positive_n(int n) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
}

// Rows 1..n of the Eulerian triangle, built is-needed under the context lock.
const std::vector<ExactInt>& eulerian_row(Context& ctx, int n) {
  std::lock_guard<std::mutex> lock(ctx.eulerian_mu);
  if (ctx.eulerian_rows.empty()) ctx.eulerian_rows.resize(1);  // dummy row 0
  while (static_cast<int>(ctx.eulerian_rows.size()) <= n) {
    const int m = static_cast<int>(ctx.eulerian_rows.size());
    std::vector<ExactInt> row(static_cast<std::size_t>(m) + 1, 0);
    if (m == 1) {
      row[1] = 1;
    } else {
      const auto& prev = ctx.eulerian_rows[m - 1];
      auto prev_at = [&](int k) -> ExactInt {
        return (k >= 1 && k <= m - 1) ? prev[k] : ExactInt(0);
      };
      for (int k = 1; k <= m; ++k) row[k] = k * prev_at(k) + (m + 1 - k) * prev_at(k - 1);
    }
    ctx.eulerian_rows.push_back(std::move(row));
  }
  return ctx.eulerian_rows[n];
}

const AscMajTable& asc_maj_census(Context& ctx, int n) {
  require_positive_n(n);
  std::lock_guard<std::mutex> lock(ctx.census_mu);
  auto it = ctx.asc_maj_tables.find(n);
  if (it != ctx.asc_maj_tables.end()) return it->second;
  const long long max_maj = static_cast<long long>(n) * (n - 1) / 2;
  AscMajTable table(static_cast<std::size_t>(n),
                    std::vector<long long>(static_cast<std::size_t>(max_maj) + 1, 0));
  for_each_permutation(n, ctx.enum_cap, [&](const Permutation& p) {
    table[ascent_count(p)][major_index(p)]++;
  });
  return ctx.asc_maj_tables.emplace(n, std::move(table)).first->second;
}

}  // namespace

ExactInt eulerian_recurrence(Context& ctx, int n, int k) {
  require_positive_n(n);
  if (k < 1 || k > n) return 0;
  return eulerian_row(ctx, n)[k];
}

ExactInt eulerian_analytic(int n, int k) {
  require_positive_n(n);
  if (k < 1 || k > n) return 0;
  ExactInt sum = 0;
  for (int i = 0; i <= k - 1; ++i) {
    const ExactInt term = ipow(k - i, n) * binomial(n + 1, i);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt general_eulerian(int n, int k, const ExactInt& a, const ExactInt& d) {
  require_positive_n(n);
  if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
  ExactInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const ExactInt term = ipow((k + 1 - i) * d - a, n) * binomial(n + 1, i);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt cnk_coefficient(Context& ctx, int n, int k, int j) {
  require_positive_n(n);
  if (j < 0 || j > n) fail(errc::invalid_argument, "j must lie in 0..n");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(ctx.cnk_mu);
  auto key = std::make_pair(n, k);
  auto it = ctx.cnk_rows.find(key);
  if (it == ctx.cnk_rows.end()) {
    std::vector<ExactInt> row(static_cast<std::size_t>(n) + 1);
    for (int jj = 0; jj <= n; ++jj) {
      ExactInt sum = 0;
      for (int i = 0; i <= k; ++i) {
        const ExactInt term = ipow(k + 1 - i, n - jj) * ipow(k - i, jj) * binomial(n + 1, i);
        sum += (i % 2 == 0) ? term : -term;
      }
      row[jj] = std::move(sum);
    }
    it = ctx.cnk_rows.emplace(key, std::move(row)).first;
  }
  return it->second[j];
}

ExpansionRow expansion_row(Context& ctx, int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n) fail(errc::invalid_argument, "k must lie in 0..n");
  ExpansionRow row;
  row.n = n;
  row.k = k;
  row.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) row.coeffs.push_back(cnk_coefficient(ctx, n, k, j));
  return row;
}

ExactInt evaluate_expansion(const ExpansionRow& row, const ExactInt& a, const ExactInt& d) {
  ExactInt sum = 0;
  for (int j = 0; j <= row.n; ++j)
    sum += row.coeffs[j] * binomial(row.n, j) * ipow(d - a, row.n - j) * ipow(a, j);
  return sum;
}

ExactInt a_stat(Context& ctx, int n, int k, long long i) {
  require_positive_n(n);
  if (k < 0 || i < 0) return 0;
  const auto& table = asc_maj_census(ctx, n);
  if (k >= static_cast<int>(table.size())) return 0;
  if (i >= static_cast<long long>(table[k].size())) return 0;
  return table[k][i];
}

void UniPolynomial::set(long long exponent, ExactInt coefficient) {
  if (coefficient == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(coefficient);
}

void UniPolynomial::add(long long exponent, const ExactInt& delta) {
  set(exponent, coefficient(exponent) + delta);
}

ExactInt UniPolynomial::coefficient(long long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

ExactInt UniPolynomial::evaluate(const ExactInt& q) const {
  ExactInt sum = 0;
  for (const auto& [exponent, coeff] : terms_) sum += coeff * ipow(q, exponent);
  return sum;
}

long long UniPolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

std::string to_string(const UniPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string s;
  for (const auto& [exponent, coeff] : poly.terms()) {
    if (!s.empty()) s += " + ";
    if (exponent == 0) {
      s += coeff.str();
    } else {
      if (coeff != 1) s += coeff.str() + "*";
      s += "q^" + std::to_string(exponent);
    }
  }
  return s;
}

UniPolynomial q_eulerian(Context& ctx, int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n - 1) fail(errc::invalid_argument, "k must lie in 0..n-1");
  const long long shift = static_cast<long long>(n - k + 1) * (n - k) / 2;
  const auto& table = asc_maj_census(ctx, n);
  UniPolynomial poly;
  const int ascents = n - k;
  if (ascents < static_cast<int>(table.size())) {
    for (long long i = 0; i < static_cast<long long>(table[ascents].size()); ++i)
      if (table[ascents][i] != 0) poly.set(shift + i, table[ascents][i]);
  }
  return poly;
}

QSupportReport q_support_report(Context& ctx, int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n - 1) fail(errc::invalid_argument, "k must lie in 0..n-1");
  QSupportReport report;
  report.n = n;
  report.k = k;
  report.stated_bound = static_cast<long long>(k) * (n - k - 1);
  const auto& table = asc_maj_census(ctx, n);
  const int ascents = n - k;
  if (ascents < static_cast<int>(table.size())) {
    for (long long i = 0; i < static_cast<long long>(table[ascents].size()); ++i)
      if (table[ascents][i] != 0) report.max_exponent = i;
  }
  report.within = report.max_exponent <= report.stated_bound;
  return report;
}

RemarkSides remark_identity_sides(int n, int k, int j) {
  require_positive_n(n);
  if (k < 0 || k > n || j < 0 || j > n) fail(errc::invalid_argument, "k and j must lie in 0..n");
  RemarkSides sides;
  for (int i = 0; i <= k; ++i) {
    const ExactInt term = ipow(k + 1 - i, n - j) * ipow(k - i, j) * binomial(n + 1, i);
    sides.lhs += (i % 2 == 0) ? term : -term;
  }
  for (int l = 0; l <= n - k; ++l) {
    const ExactInt term = ipow(n + 1 - k - l, j) * ipow(n - k - l, n - j) * binomial(n + 1, l);
    sides.rhs += (l % 2 == 0) ? term : -term;
  }
  return sides;
}

bool remark_identity_holds(int n, int k, int j) {
  const RemarkSides sides = remark_identity_sides(n, k, j);
  return sides.lhs == sides.rhs;
}

}  // namespace geu
