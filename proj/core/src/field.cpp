#include "hjoints/field.hpp"

#include "hjoints/error.hpp"

#include <cctype>

namespace hjoints {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in GF(p)");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = modulus_, new_r = value_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += modulus_;
  return Fp(static_cast<std::uint64_t>(t), modulus_);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
    throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

Fp PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return Fp(static_cast<std::uint64_t>(v) % p_, p_);
  std::uint64_t magnitude = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return -Fp(magnitude % p_, p_);
}

Fp PrimeField::from_rational(const Rational& r) const {
  BigInt mod = p_;
  BigInt num = boost::multiprecision::numerator(r) % mod;
  if (num < 0) num += mod;
  BigInt den = boost::multiprecision::denominator(r) % mod;
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator vanishes mod p");
  return Fp(num.convert_to<std::uint64_t>(), p_) / Fp(den.convert_to<std::uint64_t>(), p_);
}

Fp PrimeField::parse(std::string_view text) const {
  // Accepts residues and signed integers or fractions, reduced mod p.
  return from_rational(parse_rational(text));
}

}  // namespace hjoints
