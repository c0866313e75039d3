#pragma once

#include <map>
#include <vector>

#include "context.hpp"
#include "exact.hpp"

namespace geu {

// Eulerian number A(n,k) = #{n-permutations with k weak excedances}, by
// dynamic programming over the recurrence
//   A(n,k) = k A(n-1,k) + (n+1-k) A(n-1,k-1),  A(n,1) = 1.
// Zero outside 1 <= k <= n. Rows are cached in the context.
ExactInt eulerian_recurrence(Context& ctx, int n, int k);

// Closed form: sum_{i=0}^{k-1} (-1)^i (k-i)^n C(n+1,i). Zero outside
// 1 <= k <= n.
ExactInt eulerian_analytic(int n, int k);

// General Eulerian number for the arithmetic progression a, a+d, a+2d, ...:
//   A(n,k;a,d) = sum_{i=0}^{k} (-1)^i [(k+1-i)d - a]^n C(n+1,i).
// a and d may be any exact integers (negative, zero, a > d).
ExactInt general_eulerian(int n, int k, const ExactInt& a, const ExactInt& d);

// Coefficient of C(n,j) (d-a)^{n-j} a^j in the homogeneous expansion of
// A(n,k;a,d):
//   c_{n,k}(j) = sum_{i=0}^{k} (-1)^i (k+1-i)^{n-j} (k-i)^j C(n+1,i),
// with 0^0 = 1. Requires 0 <= j <= n; zero when k < 0 or k > n.
// Rows are memoized per (n,k).
ExactInt cnk_coefficient(Context& ctx, int n, int k, int j);

struct ExpansionRow {
  int n = 0;
  int k = 0;
  std::vector<ExactInt> coeffs;  // c_{n,k}(0..n); coeffs[0]=A(n,k+1), coeffs[n]=A(n,k)
};

ExpansionRow expansion_row(Context& ctx, int n, int k);

// Evaluates the expansion row at a concrete (a,d):
// sum_j c_{n,k}(j) C(n,j) (d-a)^{n-j} a^j. Equals general_eulerian(n,k,a,d).
ExactInt evaluate_expansion(const ExpansionRow& row, const ExactInt& a, const ExactInt& d);

// a(n,k,i) = #{n-permutations with k ascents and major index i}, by
// exhaustive enumeration (cached per n).
ExactInt a_stat(Context& ctx, int n, int k, long long i);

// Integer-coefficient polynomial in one formal variable q. Zero coefficients
// are never stored.
class UniPolynomial {
public:
  void set(long long exponent, ExactInt coefficient);
  void add(long long exponent, const ExactInt& delta);
  ExactInt coefficient(long long exponent) const;
  const std::map<long long, ExactInt>& terms() const { return terms_; }
  ExactInt evaluate(const ExactInt& q) const;
  bool is_zero() const { return terms_.empty(); }
  long long degree() const;  // -1 for the zero polynomial

  bool operator==(const UniPolynomial&) const = default;

private:
  std::map<long long, ExactInt> terms_;
};

std::string to_string(const UniPolynomial& poly);

// q-Eulerian polynomial
//   A_{n,k}(q) = q^{(n-k+1)(n-k)/2} * sum_i a(n, n-k, i) q^i,
// summing over every i with a nonzero count rather than clipping at the
// nominal bound k(n-k-1) (see q_support_report). Requires 0 <= k <= n-1.
UniPolynomial q_eulerian(Context& ctx, int n, int k);

struct QSupportReport {
  int n = 0;
  int k = 0;
  long long max_exponent = -1;  // largest i with a(n,n-k,i) != 0; -1 if none
  long long stated_bound = 0;   // k(n-k-1)
  bool within = true;
};

// Compares the actual support of a(n, n-k, .) with the nominal summation
// bound; discrepancies are reported, never silently clipped.
QSupportReport q_support_report(Context& ctx, int n, int k);

struct RemarkSides {
  ExactInt lhs;
  ExactInt rhs;
};

// The two closed forms
//   sum_{i=0}^{k}   (-1)^i (k+1-i)^{n-j} (k-i)^j     C(n+1,i)
// = sum_{l=0}^{n-k} (-1)^l (n+1-k-l)^j   (n-k-l)^{n-j} C(n+1,l),
// evaluated independently.
RemarkSides remark_identity_sides(int n, int k, int j);

// True iff the two sides above agree.
bool remark_identity_holds(int n, int k, int j);

}  // namespace geu
