#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ggx {

bool is_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Largest k with p^k | n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t int_pow(std::uint64_t base, unsigned exponent);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
// n = p^k with k >= 1; nullopt for n <= 1 and for numbers with two prime divisors.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace ggx
