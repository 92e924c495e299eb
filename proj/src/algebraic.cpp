#include "gf2nbasis/algebraic.hpp"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/numtheory.hpp"

#include <algorithm>
#include <string>

namespace gf2nbasis::algebraic {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("n_q does not fit in 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

void check_search_arguments(std::uint64_t n, unsigned emax) {
  if (n < 4) throw ParameterError("embedding search needs n >= 4");
  if (emax < 2 || emax > 20) throw ParameterError("embedding search needs 2 <= emax <= 20");
}

template <typename Accept>
EmbeddingResult search(std::uint64_t n, unsigned emax, Mechanism mechanism, Accept accept) {
  check_search_arguments(n, emax);
  EmbeddingResult out;
  out.n = n;
  out.mechanism = mechanism;
  for (auto e : nt::divisors(n)) {
    if (e < 2) continue;
    if (e > emax) break;
    const std::uint64_t d = n / e;
    if (d < 2) break;
    if (accept(static_cast<unsigned>(e), d)) {
      out.embed = static_cast<unsigned>(e);
      out.d = d;
      break;
    }
  }
  return out;
}

} // namespace

NqProfile compute_nq(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw ParameterError("compute_nq: n must be positive");
  if (!nt::as_prime_power(q)) {
    throw ParameterError("compute_nq: q = " + std::to_string(q) + " is not a prime power");
  }
  NqProfile profile;
  profile.n = n;
  profile.q = q;
  for (const auto& f : nt::factorize(n).factors) {
    PrimeValuation pv;
    pv.prime = f.prime;
    pv.v_n = f.exponent;
    pv.v_q_minus_1 = nt::valuation(q - 1, f.prime);
    pv.v_nq = pv.v_q_minus_1 == 0 ? pv.v_n : std::max(2 * pv.v_q_minus_1 + 1, 2 * pv.v_n);
    profile.nq = checked_mul(profile.nq, checked_pow(pv.prime, pv.v_nq));
    profile.per_prime.push_back(pv);
  }
  return profile;
}

bool elliptic_condition(std::uint64_t n, std::uint64_t q) {
  const auto nq = static_cast<unsigned __int128>(compute_nq(n, q).nq);
  return nq * nq <= q;
}

std::string_view to_string(Mechanism m) {
  return m == Mechanism::Elliptic ? "elliptic" : "multiplicative";
}

std::optional<Mechanism> parse_mechanism(std::string_view text) {
  if (text == "elliptic") return Mechanism::Elliptic;
  if (text == "multiplicative") return Mechanism::Multiplicative;
  return std::nullopt;
}

EmbeddingResult enb_embedding_degree(std::uint64_t n, unsigned emax) {
  return search(n, emax, Mechanism::Elliptic, [](unsigned e, std::uint64_t d) {
    return elliptic_condition(d, std::uint64_t{1} << e);
  });
}

EmbeddingResult multgroup_embedding_degree(std::uint64_t n, unsigned emax) {
  return search(n, emax, Mechanism::Multiplicative,
                [](unsigned e, std::uint64_t d) { return nt::powmod(2, e, d) == 1; });
}

EmbeddingResult embedding_degree(std::uint64_t n, unsigned emax, Mechanism mechanism) {
  return mechanism == Mechanism::Elliptic ? enb_embedding_degree(n, emax)
                                          : multgroup_embedding_degree(n, emax);
}

} // namespace gf2nbasis::algebraic
