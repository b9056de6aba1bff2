#include "hjoints/rational.hpp"

#include "hjoints/error.hpp"

#include <cctype>
#include <vector>

namespace hjoints {
namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!is_integer_text(text)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

// Returns prime factors (with multiplicity) of m; a cofactor that survives
// trial division is appended as a single base.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt m) {
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (std::uint64_t p = 2; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    BigInt bp = p;
    if (bp * bp > m) break;
    unsigned e = 0;
    while (m % bp == 0) {
      m /= bp;
      ++e;
    }
    if (e > 0) factors.emplace_back(bp, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  return factors;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

void Log2Sum::add_log2(const BigInt& m, const Rational& coefficient) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "log2 of non-positive integer");
  if (coefficient == 0 || m == 1) return;
  for (const auto& [prime, exponent] : factorize(m)) {
    Rational& slot = terms_[prime];
    slot += coefficient * exponent;
    if (slot == 0) terms_.erase(prime);
  }
}

void Log2Sum::add_log2_factorial(unsigned n, const Rational& coefficient) {
  if (coefficient == 0) return;
  // Legendre: v_p(n!) = sum_i floor(n / p^i)
  std::vector<bool> composite(n + 1, false);
  for (unsigned p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned q = 2 * p; q <= n; q += p) composite[q] = true;
    unsigned long long power = p;
    unsigned exponent = 0;
    while (power <= n) {
      exponent += static_cast<unsigned>(n / power);
      power *= p;
    }
    Rational& slot = terms_[BigInt(p)];
    slot += coefficient * exponent;
    if (slot == 0) terms_.erase(BigInt(p));
  }
}

void Log2Sum::add_log2_ratio(const Rational& r, const Rational& coefficient) {
  if (r <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of non-positive rational");
  add_log2(boost::multiprecision::numerator(r), coefficient);
  add_log2(boost::multiprecision::denominator(r), -coefficient);
}

Log2Sum& Log2Sum::operator+=(const Log2Sum& other) {
  for (const auto& [base, q] : other.terms_) {
    Rational& slot = terms_[base];
    slot += q;
    if (slot == 0) terms_.erase(base);
  }
  return *this;
}

Log2Sum& Log2Sum::operator-=(const Log2Sum& other) {
  return *this += other.scaled(Rational(-1));
}

Log2Sum Log2Sum::scaled(const Rational& factor) const {
  Log2Sum out;
  if (factor == 0) return out;
  for (const auto& [base, q] : terms_) out.terms_[base] = q * factor;
  return out;
}

HighPrecision hp_log2(const HighPrecision& x) {
  static const HighPrecision ln2 = boost::multiprecision::log(HighPrecision(2));
  return boost::multiprecision::log(x) / ln2;
}

HighPrecision hp_exp2(const HighPrecision& x) {
  static const HighPrecision ln2 = boost::multiprecision::log(HighPrecision(2));
  return boost::multiprecision::exp(x * ln2);
}

HighPrecision Log2Sum::log2_value() const {
  HighPrecision sum = 0;
  for (const auto& [base, q] : terms_) {
    HighPrecision coeff = HighPrecision(boost::multiprecision::numerator(q).str()) /
                          HighPrecision(boost::multiprecision::denominator(q).str());
    sum += coeff * hp_log2(HighPrecision(base.str()));
  }
  return sum;
}

HighPrecision Log2Sum::value() const { return hp_exp2(log2_value()); }

double Log2Sum::log2_approx() const { return log2_value().convert_to<double>(); }

std::string Log2Sum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [base, q] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + format_rational(q) + ")*log2(" + base.str() + ")";
  }
  return out;
}

}  // namespace hjoints
