#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gf2nbasis::algebraic {

/// Valuation data for one prime l dividing n.
struct PrimeValuation {
  std::uint64_t prime = 0;
  unsigned v_n = 0;       // v_l(n)
  unsigned v_q_minus_1 = 0; // v_l(q - 1)
  unsigned v_nq = 0;      // v_l(n_q)
};

struct NqProfile {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<PrimeValuation> per_prime;
  std::uint64_t nq = 1;
};

/// Couveignes-Lercier's n_q. For every prime l | n:
///   l coprime to q - 1:  v_l(n_q) = v_l(n)
///   l | q - 1:           v_l(n_q) = max(2 v_l(q - 1) + 1, 2 v_l(n))
/// and primes not dividing n do not occur. Throws ParameterError when q is not
/// a prime power or n == 0, DomainError if n_q overflows 64 bits.
NqProfile compute_nq(std::uint64_t n, std::uint64_t q);

/// n_q^2 <= q, i.e. an elliptic curve over F_q with a rational n-torsion
/// point suitable for an elliptic normal basis exists.
bool elliptic_condition(std::uint64_t n, std::uint64_t q);

enum class Mechanism { Elliptic, Multiplicative };

std::string_view to_string(Mechanism m);
std::optional<Mechanism> parse_mechanism(std::string_view text);

/// Two-stage scheme F_2 -> F_{2^e} -> F_{2^n} with d = n / e.
struct EmbeddingResult {
  std::uint64_t n = 0;
  std::optional<unsigned> embed;
  std::optional<std::uint64_t> d;
  Mechanism mechanism = Mechanism::Elliptic;
};

/// Smallest divisor e of n, 2 <= e <= emax, with d = n/e >= 2 and
/// n_q(d, 2^e)^2 <= 2^e. Requires n >= 4 and 2 <= emax <= 20.
EmbeddingResult enb_embedding_degree(std::uint64_t n, unsigned emax);

/// Smallest divisor e of n, 2 <= e <= emax, with d = n/e >= 2 and
/// d | 2^e - 1 (a point of order d in the multiplicative group of F_{2^e}).
EmbeddingResult multgroup_embedding_degree(std::uint64_t n, unsigned emax);

EmbeddingResult embedding_degree(std::uint64_t n, unsigned emax, Mechanism mechanism);

} // namespace gf2nbasis::algebraic
