#include "chargraph/number_theory.hpp"

#include <cmath>

namespace chargraph {

std::vector<PrimePower> factorize(std::uint64_t d) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    if (d % p != 0) return;
    unsigned e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t i = 5; i <= d / i; i += 6) {
    strip(i);
    strip(i + 2);
  }
  if (d > 1) out.emplace_back(d, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(d)) out.push_back(p);
  return out;
}

bool is_prime(std::uint64_t d) {
  if (d < 2) return false;
  auto f = factorize(d);
  return f.size() == 1 && f.front().second == 1;
}

bool is_prime_power(std::uint64_t d, std::uint64_t* prime) {
  if (d < 2) return false;
  auto f = factorize(d);
  if (f.size() != 1) return false;
  if (prime != nullptr) *prime = f.front().first;
  return true;
}

std::uint64_t isqrt(std::uint64_t d) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(d)));
  while (r > 0 && r > d / r) --r;
  while ((r + 1) <= d / (r + 1)) ++r;
  return r;
}

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

}  // namespace modp

}  // namespace chargraph
