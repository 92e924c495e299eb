#include "gf2nbasis/numtheory.hpp"

#include "gf2nbasis/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gf2nbasis::nt {

namespace {

using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1u << 12;

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    for (u64 len = 1; g == 1; len <<= 1) {
      x = y;
      for (u64 i = 0; i < len; ++i) y = f(y);
      for (u64 k = 0; k < len && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, len - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

} // namespace

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exponent, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % p == 0) return m == p;
  }
  u64 d = m - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This witness set is exact below 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 m) {
  if (m == 0) throw ParameterError("factorize: argument must be positive");
  Factorization out;
  out.value = m;
  std::vector<u64> primes;
  for (u64 p = 2; p < kTrialBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  split(m, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  return out;
}

unsigned valuation(u64 m, u64 p) {
  if (m == 0 || p < 2) throw ParameterError("valuation: need m > 0 and p >= 2");
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

u64 mult_order(u64 a, u64 r) {
  if (r < 2) throw ParameterError("mult_order: modulus must be at least 2");
  if (std::gcd(a % r, r) != 1) {
    throw ParameterError("mult_order: " + std::to_string(a) + " is not a unit modulo " +
                         std::to_string(r));
  }
  u64 order = euler_phi(r);
  for (const auto& f : factorize(order).factors) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (powmod(a, order / f.prime, r) != 1) break;
      order /= f.prime;
    }
  }
  return order;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw ParameterError("divisors: argument must be positive");
  std::vector<u64> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t existing = out.size();
    u64 power = 1;
    for (unsigned i = 0; i < f.exponent; ++i) {
      power *= f.prime;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw ParameterError("euler_phi: argument must be positive");
  u64 phi = n;
  for (const auto& f : factorize(n).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto fac = factorize(q);
  if (fac.factors.size() != 1) return std::nullopt;
  return fac.factors.front();
}

u64 primitive_root(u64 r) {
  if (!is_prime(r)) throw ParameterError("primitive_root: " + std::to_string(r) + " is not prime");
  if (r == 2) return 1;
  const auto primes = factorize(r - 1).primes();
  for (u64 g = 2;; ++g) {
    const bool generates = std::all_of(primes.begin(), primes.end(),
                                       [&](u64 p) { return powmod(g, (r - 1) / p, r) != 1; });
    if (generates) return g;
  }
}

} // namespace gf2nbasis::nt
