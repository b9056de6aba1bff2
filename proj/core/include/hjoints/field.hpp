#pragma once

#include "hjoints/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace hjoints {

// Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

bool is_prime_u64(std::uint64_t n);

// Element of GF(p). Carries its modulus so that generic algorithms can be
// written with ordinary operators; mixing moduli is a logic error.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend Fp operator-(Fp a, Fp b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_);
  }
  friend Fp operator-(Fp a) { return raw(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_); }
  friend Fp operator*(Fp a, Fp b) {
    auto product = static_cast<unsigned __int128>(a.value_) * b.value_;
    return raw(static_cast<std::uint64_t>(product % a.modulus_), a.modulus_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t m) {
    Fp out;
    out.value_ = v;
    out.modulus_ = m;
    return out;
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 1;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

class PrimeField {
 public:
  using value_type = Fp;

  // Throws InvalidArgument unless p is prime and below 2^63.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t characteristic() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t v) const;
  // Throws InvalidArgument when the denominator vanishes mod p.
  Fp from_rational(const Rational& r) const;

  template <class Rng>
  Fp random(Rng& rng) const {
    return Fp(rng() % p_, p_);
  }
  // Number of distinct values random() draws from.
  double sample_space_size() const { return static_cast<double>(p_); }

  std::string format(const Fp& x) const { return std::to_string(x.value()); }
  Fp parse(std::string_view text) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  // Random samples are integers in [-kSampleRadius, kSampleRadius].
  static constexpr std::int64_t kSampleRadius = std::int64_t{1} << 20;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational from_rational(const Rational& r) const { return r; }

  template <class Rng>
  Rational random(Rng& rng) const {
    auto span = static_cast<std::uint64_t>(2 * kSampleRadius + 1);
    return Rational(static_cast<std::int64_t>(rng() % span) - kSampleRadius);
  }
  double sample_space_size() const { return static_cast<double>(2 * kSampleRadius + 1); }

  std::string format(const Rational& x) const { return format_rational(x); }
  Rational parse(std::string_view text) const { return parse_rational(text); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace hjoints
