#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gf2nbasis::nt {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors; // ascending primes

  std::vector<u64> primes() const;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exponent, u64 m);
u64 gcd(u64 a, u64 b);

/// Deterministic Miller-Rabin, valid for every m < 2^64.
bool is_prime(u64 m);

/// Trial division, then Pollard-Brent rho on the remaining cofactor.
/// Throws ParameterError for m == 0.
Factorization factorize(u64 m);

/// Exponent of prime p in m (m > 0).
unsigned valuation(u64 m, u64 p);

/// Least t >= 1 with a^t = 1 (mod r). Throws ParameterError when r < 2 or
/// gcd(a, r) != 1.
u64 mult_order(u64 a, u64 r);

std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

/// {p, e} with q = p^e; std::nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(u64 q);

/// Smallest generator of (Z/rZ)^*, r prime.
u64 primitive_root(u64 r);

} // namespace gf2nbasis::nt
