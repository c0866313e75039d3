#include "exact.hpp"

#include <cctype>

#include "errors.hpp"

namespace geu {

ExactInt binomial(long long n, long long i) {
  if (i < 0 || i > n) return 0;
  if (n - i < i) i = n - i;
  ExactInt r = 1;
  for (long long t = 1; t <= i; ++t) {
    r *= n - i + t;
    r /= t;  // exact: r is C(n-i+t, t) after this step
  }
  return r;
}

ExactInt ipow(const ExactInt& base, long long exp) {
  if (exp < 0) fail(errc::invalid_argument, "ipow: negative exponent");
  if (exp == 0) return 1;
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

ExactInt factorial(int n) {
  if (n < 0) fail(errc::invalid_argument, "factorial: negative argument");
  ExactInt r = 1;
  for (int t = 2; t <= n; ++t) r *= t;
  return r;
}

ExactInt parse_exact(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) fail(errc::invalid_argument, "not an integer: '" + text + "'");
  for (std::size_t t = start; t < text.size(); ++t) {
    if (!std::isdigit(static_cast<unsigned char>(text[t])))
      fail(errc::invalid_argument, "not an integer: '" + text + "'");
  }
  return ExactInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace geu
