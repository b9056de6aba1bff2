#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hjoints {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighPrecision = boost::multiprecision::cpp_dec_float_100;

// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);
double to_double(const Rational& value);

// A real number kept as a finite sum  sum_j q_j * log2(m_j)  with exact
// rational coefficients q_j and integer bases m_j >= 2. Bases are split into
// prime factors where trial division finishes, so two sums that describe the
// same quantity through different factorizations usually share one term map.
class Log2Sum {
 public:
  Log2Sum() = default;

  // log2(m) * coefficient; m must be >= 1 (m == 1 contributes nothing).
  void add_log2(const BigInt& m, const Rational& coefficient);
  // log2(n!) * coefficient, via Legendre's formula.
  void add_log2_factorial(unsigned n, const Rational& coefficient);
  // log2(r) * coefficient for a positive rational r.
  void add_log2_ratio(const Rational& r, const Rational& coefficient);

  Log2Sum& operator+=(const Log2Sum& other);
  Log2Sum& operator-=(const Log2Sum& other);
  Log2Sum scaled(const Rational& factor) const;

  const std::map<BigInt, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  HighPrecision log2_value() const;
  HighPrecision value() const;  // 2^(log2_value)
  double log2_approx() const;

  // "q1*log2(m1) + q2*log2(m2) ..." in increasing base order.
  std::string to_string() const;

 private:
  std::map<BigInt, Rational> terms_;
};

HighPrecision hp_log2(const HighPrecision& x);
HighPrecision hp_exp2(const HighPrecision& x);

}  // namespace hjoints
