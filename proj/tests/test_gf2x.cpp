#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/gf2x.hpp"
#include "test_support.hpp"

using namespace gf2nbasis;
using namespace gf2nbasis::gf2x;
using testing::naive_mul;
using testing::random_below;
using testing::random_poly;

namespace {

BinaryPolynomial P(std::initializer_list<std::size_t> e) { return BinaryPolynomial::from_exponents(e); }

// Long division one bit at a time.
BinaryPolynomial naive_mod(BinaryPolynomial a, const BinaryPolynomial& m) {
  const std::size_t dm = *m.degree();
  while (!a.is_zero() && *a.degree() >= dm) a += m.shifted_up(*a.degree() - dm);
  return a;
}

// Irreducibility by trial division against every polynomial of degree 1..deg/2.
bool irreducible_by_trial(const BinaryPolynomial& f) {
  const std::size_t d = *f.degree();
  for (std::size_t dg = 1; dg <= d / 2; ++dg) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << dg); ++low) {
      auto g = BinaryPolynomial::from_words({low | (std::uint64_t{1} << dg)});
      if (naive_mod(f, g).is_zero()) return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("degree and hex encoding") {
  CHECK_FALSE(BinaryPolynomial().degree().has_value());
  CHECK(BinaryPolynomial::from_hex("b") == P({3, 1, 0}));
  CHECK(P({3, 1, 0}).to_hex() == "b");
  CHECK(BinaryPolynomial().to_hex() == "0");
  CHECK(P({64}).degree() == 64u);
  const auto a = random_poly(300);
  CHECK(BinaryPolynomial::from_hex(a.to_hex()) == a);
  CHECK_THROWS_AS(BinaryPolynomial::from_hex("xyz"), FormatError);
}

TEST_CASE("a + a = 0") {
  for (int i = 0; i < 200; ++i) {
    auto a = random_below(1 + i * 7);
    CHECK((a + a).is_zero());
  }
}

TEST_CASE("schoolbook examples") {
  CHECK(mul_schoolbook(P({1, 0}), P({1, 0})) == P({2, 0}));
  CHECK(mul_schoolbook(P({5, 2}), BinaryPolynomial()).is_zero());
  CHECK(mul_schoolbook(P({3, 1, 0}), P({2, 1})) == P({5, 4, 3, 1}));
}

TEST_CASE("schoolbook matches bitwise convolution") {
  for (std::size_t deg : {0u, 1u, 63u, 64u, 65u, 127u, 200u, 517u}) {
    for (int i = 0; i < 20; ++i) {
      const auto a = random_poly(deg), b = random_poly(deg / 2 + i);
      const auto c = mul_schoolbook(a, b);
      CHECK(c == naive_mul(a, b));
      CHECK(c.degree() == *a.degree() + *b.degree());
    }
  }
}

TEST_CASE("karatsuba equals schoolbook") {
  CHECK(mul_karatsuba(P({1, 0}), P({1, 0}), 1) == P({2, 0}));
  CHECK_THROWS_AS(mul_karatsuba(P({1}), P({1}), 0), ParameterError);
  const auto big_a = random_poly(1000), big_b = random_poly(1000);
  CHECK(mul_karatsuba(big_a, big_b, 1) == mul_schoolbook(big_a, big_b));
  for (std::size_t deg : {7u, 63u, 511u, 4095u}) {
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto a = random_poly(deg), b = random_poly(deg);
      const std::size_t threshold = 1 + static_cast<std::size_t>(i % 4);
      if (mul_karatsuba(a, b, threshold) != mul_schoolbook(a, b)) ++mismatches;
    }
    CHECK_MESSAGE(mismatches == 0, "degree " << deg);
  }
  // Unbalanced operands.
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(2000), b = random_poly(70 + i);
    CHECK(mul_karatsuba(a, b, 1) == mul_schoolbook(a, b));
  }
}

TEST_CASE("square") {
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(10 * i);
    CHECK(square(a) == mul_schoolbook(a, a));
  }
}

TEST_CASE("mulmod_cyclic") {
  CHECK(mulmod_cyclic(P({10}), P({1}), 11).is_one());
  const auto a = P({4, 2, 1});
  CHECK(mulmod_cyclic(a, BinaryPolynomial::one(), 11) == a);
  CHECK(mulmod_cyclic(P({1, 2}), P({1, 2}), 5) == P({2, 4}));
  CHECK_THROWS_AS(mulmod_cyclic(P({11}), P({1}), 11), ParameterError);
  CHECK_THROWS_AS(mulmod_cyclic(P({0}), P({0}), 0), ParameterError);

  for (std::size_t r : {11u, 23u, 2251u}) {
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_below(r), y = random_below(r);
      // Fold exponents of the plain product by hand.
      const auto full = naive_mul(x, y);
      BinaryPolynomial expect;
      if (!full.is_zero()) {
        for (std::size_t e = 0; e <= *full.degree(); ++e) {
          if (full.coefficient(e)) expect.flip_coefficient(e % r);
        }
      }
      REQUIRE(mulmod_cyclic(x, y, r) == expect);
    }
  }
}

TEST_CASE("divmod and mod") {
  for (int i = 0; i < 200; ++i) {
    const auto m = random_poly(1 + i % 150);
    const auto a = random_poly(3 * (i % 150) + 1);
    const auto qr = divmod(a, m);
    CHECK(qr.remainder == naive_mod(a, m));
    CHECK(mul_schoolbook(qr.quotient, m) + qr.remainder == a);
    CHECK(mod(a, m) == qr.remainder);
  }
  CHECK_THROWS_AS(mod(P({3}), BinaryPolynomial()), ParameterError);
}

TEST_CASE("modpow") {
  const auto m = P({3, 1, 0});
  const auto x = P({1});
  CHECK(modpow(x, 0, m).is_one());
  CHECK(modpow(P({4, 0}), 1, m) == naive_mod(P({4, 0}), m));
  // x^3 = x + 1, x^4 = x^2 + x, x^8 = x^4 + x^2 = x (the unit group has order 7).
  CHECK(modpow(x, 8, m) == P({1}));
  CHECK(modpow(x, 4, m) == P({2, 1}));
  CHECK_THROWS_AS(modpow(x, 3, BinaryPolynomial()), ParameterError);
  CHECK_THROWS_AS(modpow(x, 3, BinaryPolynomial::one()), ParameterError);
  // Against repeated naive multiplication.
  const auto f = random_poly(40);
  const auto g = random_below(40);
  BinaryPolynomial acc = BinaryPolynomial::one();
  for (std::uint64_t e = 0; e < 70; ++e) {
    CHECK(modpow(g, e, f) == naive_mod(acc, f));
    acc = naive_mod(naive_mul(acc, g), f);
  }
}

TEST_CASE("gcd") {
  const auto a = random_poly(30), b = random_poly(40), c = random_poly(17);
  const auto g = gcd(mul_schoolbook(a, c), mul_schoolbook(b, c));
  CHECK(naive_mod(g, c).is_zero());
  CHECK(gcd(a, BinaryPolynomial()) == a);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(P({2, 1, 0})));
  CHECK_FALSE(is_irreducible(P({2, 0})));
  CHECK(is_irreducible(P({5, 2, 0})));
  CHECK_THROWS_AS(is_irreducible(BinaryPolynomial::one()), ParameterError);
  CHECK_THROWS_AS(is_irreducible(BinaryPolynomial()), ParameterError);

  // Every polynomial of degree 1..12 against trial division.
  std::size_t count10 = 0;
  for (std::size_t d = 1; d <= 12; ++d) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      const auto f = BinaryPolynomial::from_words({low | (std::uint64_t{1} << d)});
      const bool fast = is_irreducible(f);
      REQUIRE(fast == irreducible_by_trial(f));
      if (d == 10 && fast) ++count10;
    }
  }
  CHECK(count10 == 99); // Necklace count (1/10) sum mu(d) 2^(10/d).
}
