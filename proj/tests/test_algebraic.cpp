#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gf2nbasis/algebraic.hpp"
#include "gf2nbasis/error.hpp"
#include "gf2nbasis/numtheory.hpp"

#include <random>

using namespace gf2nbasis;
using namespace gf2nbasis::algebraic;

namespace {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b ? gcd(b, a % b) : a; }

// Valuations counted by repeated division, then the case split applied directly.
std::uint64_t nq_oracle(std::uint64_t n, std::uint64_t q) {
  std::uint64_t out = 1;
  std::uint64_t rest = n;
  for (std::uint64_t l = 2; rest > 1; ++l) {
    unsigned vn = 0;
    while (rest % l == 0) {
      rest /= l;
      ++vn;
    }
    if (vn == 0) continue;
    unsigned vq = 0;
    for (std::uint64_t m = q - 1; m % l == 0; m /= l) ++vq;
    const unsigned v = vq == 0 ? vn : std::max(2 * vq + 1, 2 * vn);
    for (unsigned i = 0; i < v; ++i) out *= l;
  }
  return out;
}

bool squarefree(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("n_q examples") {
  CHECK(compute_nq(10, 42989).nq == 160);
  CHECK(compute_nq(61, 65536).nq == 61);
  CHECK(compute_nq(1, 8).nq == 1);
  CHECK(compute_nq(7, 9).nq == 7); // gcd(7, 8) = 1

  const auto p = compute_nq(10, 42989);
  REQUIRE(p.per_prime.size() == 2);
  CHECK(p.per_prime[0].prime == 2);
  CHECK(p.per_prime[0].v_n == 1);
  CHECK(p.per_prime[0].v_q_minus_1 == 2);
  CHECK(p.per_prime[0].v_nq == 5);
  CHECK(p.per_prime[1].prime == 5);
  CHECK(p.per_prime[1].v_nq == 1);

  CHECK_THROWS_AS(compute_nq(10, 12), ParameterError);
  CHECK_THROWS_AS(compute_nq(0, 8), ParameterError);
}

TEST_CASE("n_q agrees with direct valuation counting") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = 1 + gen() % 10000;
    const unsigned e = 1 + static_cast<unsigned>(gen() % 20);
    const std::uint64_t q = std::uint64_t{1} << e;
    const auto prof = compute_nq(n, q);
    REQUIRE(prof.nq == nq_oracle(n, q));
    std::uint64_t product = 1;
    for (const auto& pv : prof.per_prime) {
      REQUIRE(n % pv.prime == 0);
      for (unsigned j = 0; j < pv.v_nq; ++j) product *= pv.prime;
    }
    REQUIRE(product == prof.nq);
  }
}

TEST_CASE("sanity properties of n_q") {
  std::mt19937_64 gen(8);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = 1 + gen() % 10000;
    const unsigned e = 1 + static_cast<unsigned>(gen() % 20);
    const std::uint64_t q = std::uint64_t{1} << e;
    const std::uint64_t nq = compute_nq(n, q).nq;
    if (gcd(n, q - 1) == 1) REQUIRE(nq == n);
    if (squarefree(q - 1)) REQUIRE(static_cast<unsigned __int128>(nq) <= static_cast<unsigned __int128>(n) * n * n);
    const auto bound = static_cast<unsigned __int128>(n) * n * (q - 1) * (q - 1);
    REQUIRE(static_cast<unsigned __int128>(nq) <= bound);
  }
}

TEST_CASE("n_q is stable under extensions of degree prime to n phi(n)") {
  std::size_t tested = 0;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const std::uint64_t m = n * nt::euler_phi(n);
    for (unsigned base_e = 1; base_e <= 6; ++base_e) {
      for (unsigned ext = 2; ext * base_e <= 62; ++ext) {
        if (gcd(ext, m) != 1) continue;
        const std::uint64_t q = std::uint64_t{1} << base_e;
        const std::uint64_t qe = std::uint64_t{1} << (base_e * ext);
        REQUIRE_MESSAGE(compute_nq(n, q).nq == compute_nq(n, qe).nq,
                        "n=" << n << " q=2^" << base_e << " e=" << ext);
        ++tested;
      }
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("elliptic embedding degree") {
  CHECK(enb_embedding_degree(507, 20).embed == 13u);
  CHECK(enb_embedding_degree(507, 20).d == 39u);
  CHECK_FALSE(enb_embedding_degree(500, 20).embed.has_value());
  CHECK(enb_embedding_degree(512, 20).embed == 16u);
  CHECK_FALSE(enb_embedding_degree(657, 20).embed.has_value());
  CHECK_FALSE(enb_embedding_degree(979, 20).embed.has_value());
  CHECK(enb_embedding_degree(507, 20).mechanism == Mechanism::Elliptic);
  CHECK_THROWS_AS(enb_embedding_degree(3, 20), ParameterError);
  CHECK_THROWS_AS(enb_embedding_degree(507, 21), ParameterError);
  CHECK_THROWS_AS(enb_embedding_degree(507, 1), ParameterError);
}

TEST_CASE("elliptic search is the smallest qualifying divisor") {
  for (std::uint64_t n = 4; n <= 1200; ++n) {
    std::optional<unsigned> expect;
    for (unsigned e = 2; e <= 20 && !expect; ++e) {
      if (n % e != 0 || n / e < 2) continue;
      const std::uint64_t nq = nq_oracle(n / e, std::uint64_t{1} << e);
      if (nq * nq <= (std::uint64_t{1} << e)) expect = e;
    }
    REQUIRE_MESSAGE(enb_embedding_degree(n, 20).embed == expect, "n = " << n);
  }
}

TEST_CASE("multiplicative-group embedding degree") {
  const auto a = multgroup_embedding_degree(657, 20);
  CHECK(a.embed == 9u);
  CHECK(a.d == 73u);
  CHECK(a.mechanism == Mechanism::Multiplicative);
  CHECK(multgroup_embedding_degree(979, 20).embed == 11u);
  CHECK_FALSE(multgroup_embedding_degree(507, 20).embed.has_value());
  CHECK(embedding_degree(657, 20, Mechanism::Multiplicative).embed == 9u);
  CHECK_FALSE(embedding_degree(657, 20, Mechanism::Elliptic).embed.has_value());
}

TEST_CASE("mechanism names") {
  CHECK(to_string(Mechanism::Elliptic) == "elliptic");
  CHECK(parse_mechanism("multiplicative") == Mechanism::Multiplicative);
  CHECK_FALSE(parse_mechanism("additive").has_value());
}
