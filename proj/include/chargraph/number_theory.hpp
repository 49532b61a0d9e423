#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chargraph {

using PrimePower = std::pair<std::uint64_t, unsigned>;

// Complete factorization by trial division (6k +/- 1 wheel). Valid for
// 1 <= d < 2^63; factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t d);

std::vector<std::uint64_t> prime_divisors(std::uint64_t d);

bool is_prime(std::uint64_t d);

// True iff d == p^k for some prime p and k >= 1; p is written to *prime.
bool is_prime_power(std::uint64_t d, std::uint64_t* prime = nullptr);

std::uint64_t isqrt(std::uint64_t d);

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// p must be prime and a nonzero mod p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace chargraph
