#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/towers.hpp"
#include "test_support.hpp"

using namespace gf2nbasis;
using namespace gf2nbasis::towers;
using gauss::GnbElement;
using gf2x::BinaryPolynomial;
using testing::random_element;

namespace {

TowerElement random_tower(const TowerPtr& t) {
  std::vector<GnbElement> blocks;
  for (std::size_t i = 0; i < block_count(t->form); ++i) blocks.push_back(random_element(t->base));
  return TowerElement::from_blocks(t, std::move(blocks));
}

GnbElement alpha(const TowerPtr& t) { return GnbElement::basis(t->base, 0); }
GnbElement one(const TowerPtr& t) { return GnbElement::one(t->base); }
GnbElement zero(const TowerPtr& t) { return GnbElement::zero(t->base); }

// Fast path against the oracle on random pairs; returns the number of mismatches.
std::size_t oracle_mismatches(const TowerPtr& t, int pairs) {
  const OracleTower oracle(t);
  std::size_t bad = 0;
  for (int i = 0; i < pairs; ++i) {
    const auto x = random_tower(t), y = random_tower(t);
    bad += tower_mul(x, y).value != oracle.mul(x, y);
  }
  return bad;
}

std::size_t ring_violations(const TowerPtr& t, int triples) {
  std::size_t bad = 0;
  for (int i = 0; i < triples; ++i) {
    const auto x = random_tower(t), y = random_tower(t), z = random_tower(t);
    bad += tower_mul(x, y).value != tower_mul(y, x).value;
    bad += tower_mul(x, y + z).value != tower_mul(x, y).value + tower_mul(x, z).value;
    bad += tower_mul(tower_mul(x, y).value, z).value != tower_mul(x, tower_mul(y, z).value).value;
    bad += tower_mul(TowerElement::one(t), x).value != x;
  }
  return bad;
}

// Product of (z + alpha_i) over all conjugates with coefficients in
// F_2[y]/(y^r - 1), each coefficient then reduced modulo 1 + y + ... + y^(r-1).
BinaryPolynomial minpoly_by_conjugates(std::size_t n, std::size_t k) {
  const auto p = gauss::build_params(n, k);
  const std::size_t r = p->r;
  BinaryPolynomial phi;
  for (std::size_t j = 0; j < r; ++j) phi.set_coefficient(j, true);
  std::vector<BinaryPolynomial> conj(n);
  for (std::size_t j = 1; j < r; ++j) conj[p->coset_index[j]].set_coefficient(j, true);

  std::vector<BinaryPolynomial> coeffs{BinaryPolynomial::one()}; // coefficient of z^i
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BinaryPolynomial> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] += gf2x::mulmod_cyclic(coeffs[j], conj[i], r);
    }
    coeffs = std::move(next);
  }
  BinaryPolynomial out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto c = gf2x::mod(coeffs[j], phi);
    REQUIRE((c.is_zero() || c.is_one()));
    if (c.is_one()) out.set_coefficient(j, true);
  }
  return out;
}

} // namespace

TEST_CASE("form names") {
  CHECK(to_string(Form::WITT4) == "witt4");
  CHECK(parse_form("kummer3") == Form::KUMMER3);
  CHECK_FALSE(parse_form("AS3").has_value());
  CHECK(block_count(Form::AS2) == 2);
  CHECK(block_count(Form::WITT4) == 4);
  CHECK(block_count(Form::KUMMER3) == 3);
}

TEST_CASE("minimal polynomial of the Gauss period") {
  const auto p = gauss::build_params(5, 2);
  const auto m = minpoly_gauss_period(p);
  CHECK(m == minpoly_by_conjugates(5, 2));
  CHECK(m.degree() == 5u);
  CHECK(minpoly_gauss_period(gauss::build_params(6, 3)) == minpoly_by_conjugates(6, 3));
  CHECK(minpoly_gauss_period(gauss::build_params(12, 5)) == minpoly_by_conjugates(12, 5));

  for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{12, 5}, std::pair{53, 2}}) {
    const auto base = gauss::build_params(n, k);
    const auto table = gauss::mult_table(base);
    const auto mp = minpoly_gauss_period(table);
    CHECK(gf2x::is_irreducible(mp));
    // m(T) annihilates every basis vector.
    for (std::size_t j = 0; j < base->n; ++j) {
      auto v = GnbElement::basis(base, j);
      auto acc = GnbElement::zero(base);
      for (std::size_t i = 0; i <= base->n; ++i) {
        if (mp.coefficient(i)) acc += v;
        v = table.apply(v);
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("oracle conversions round trip") {
  const auto t = build_as2(gauss::build_params(12, 5));
  const OracleTower oracle(t);
  CHECK(oracle.to_poly(alpha(t)) == BinaryPolynomial::monomial(1));
  CHECK(oracle.to_poly(one(t)).is_one());
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(t->base);
    CHECK(oracle.from_poly(oracle.to_poly(x)) == x);
  }
  const auto y = random_tower(t);
  CHECK(oracle_mul(TowerElement::one(t), y) == y);
}

TEST_CASE("AS2") {
  const auto t = build_as2(gauss::build_params(5, 2));
  const auto a = TowerElement::embed(t, 1, one(t));
  const auto y = random_tower(t);
  CHECK(as2_mul(TowerElement::one(t), y).value == y);
  CHECK(as2_mul(a, a).value == TowerElement::from_blocks(t, {alpha(t), one(t)}));

  for (int i = 0; i < 1000; ++i) {
    const auto p = as2_mul(random_tower(t), random_tower(t));
    REQUIRE(p.counts.subfield_muls == 3);
    REQUIRE(p.counts.table_applications == 1);
    REQUIRE(p.counts.subfield_adds == 4);
  }
  CHECK(oracle_mismatches(t, 1000) == 0);
  CHECK(ring_violations(t, 100) == 0);

  // (X0 + a X1)^2 = (X0^2 + alpha X1^2) + a X1^2
  for (int i = 0; i < 100; ++i) {
    const auto x = random_tower(t);
    const auto x0sq = x.block(0).frobenius(), x1sq = x.block(1).frobenius();
    const auto expect = TowerElement::from_blocks(t, {x0sq + gauss::gnb_mul(alpha(t), x1sq), x1sq});
    REQUIRE(as2_mul(x, x).value == expect);
  }

  // Larger bases.
  const auto big = build_as2(gauss::build_params(254, 2));
  CHECK(oracle_mismatches(big, 20) == 0);
  CHECK(gauss::gnb_type_ok(508, 1));
}

TEST_CASE("AS2 trace of alpha") {
  const auto t = build_as2(gauss::build_params(5, 2));
  const auto x = TowerElement::embed(t, 1, one(t));
  // Tr_{2d/1}(a) = Tr_{d/1}(Tr_{2d/d}(a)) = Tr_{d/1}(1) = d mod 2.
  CHECK(as2_absolute_trace(x) == TowerElement::one(t));
}

TEST_CASE("WITT4") {
  const auto odd = build_witt4(gauss::build_params(5, 2));
  CHECK(odd->witt_constant == WittConstant::A);
  const auto even = build_witt4(gauss::build_params(250, 9));
  CHECK(even->witt_constant == WittConstant::AlphaA);

  for (const auto& t : {odd, build_witt4(gauss::build_params(6, 3))}) {
    const auto b = TowerElement::embed(t, 2, one(t));
    const auto c2_low = t->witt_constant == WittConstant::A ? one(t) : alpha(t);
    CHECK(witt4_mul(b, b).value == TowerElement::from_blocks(t, {zero(t), c2_low, one(t), zero(t)}));
    const auto y = random_tower(t);
    CHECK(witt4_mul(TowerElement::one(t), y).value == y);

    const std::size_t tables = t->witt_constant == WittConstant::A ? 4 : 6;
    for (int i = 0; i < 200; ++i) {
      const auto p = witt4_mul(random_tower(t), random_tower(t));
      REQUIRE(p.counts.subfield_muls == 9);
      REQUIRE(p.counts.table_applications == tables);
    }
    CHECK(oracle_mismatches(t, 1000) == 0);
    CHECK(ring_violations(t, 100) == 0);
  }
}

TEST_CASE("KUMMER3") {
  CHECK_THROWS_AS(build_kummer3(gauss::build_params(5, 2)), DomainError);

  const auto base = gauss::build_params(6, 3);
  const bool cube = gauss::gnb_pow(GnbElement::basis(base, 0), 21).is_one();
  if (cube) {
    CHECK_THROWS_AS(build_kummer3(base), DomainError);
  } else {
    CHECK_NOTHROW(build_kummer3(base));
  }

  for (auto [n, k] : {std::pair{6, 3}, std::pair{12, 5}}) {
    const auto b = gauss::build_params(n, k);
    const std::uint64_t e = ((std::uint64_t{1} << n) - 1) / 3;
    if (gauss::gnb_pow(GnbElement::basis(b, 0), e).is_one()) continue;
    const auto t = build_kummer3(b);
    const auto beta = TowerElement::embed(t, 1, one(t));
    const auto beta2 = TowerElement::embed(t, 2, one(t));
    CHECK(kummer3_mul(beta, beta2).value == TowerElement::embed(t, 0, alpha(t)));
    const auto y = random_tower(t);
    CHECK(kummer3_mul(TowerElement::one(t), y).value == y);
    for (int i = 0; i < 200; ++i) {
      const auto p = kummer3_mul(random_tower(t), random_tower(t));
      REQUIRE(p.counts.subfield_muls == 6);
      REQUIRE(p.counts.table_applications == 2);
      REQUIRE(p.counts.subfield_adds == 15);
    }
    CHECK(oracle_mismatches(t, 1000) == 0);
    CHECK(ring_violations(t, 100) == 0);
  }

  CHECK_NOTHROW(build_kummer3(gauss::build_params(364, 3)));
}

TEST_CASE("element parsing and mismatches") {
  const auto t = build_as2(gauss::build_params(5, 2));
  const auto x = TowerElement::parse(t, "13,1f");
  CHECK(x.to_string() == "13,1f");
  CHECK_THROWS_AS(TowerElement::parse(t, "13"), FormatError);
  CHECK_THROWS_AS(TowerElement::parse(t, "13,zz"), FormatError);
  const auto w = build_witt4(gauss::build_params(5, 2));
  CHECK_THROWS_AS(as2_mul(x, TowerElement::one(w)), ParameterError);
  const auto other = build_as2(gauss::build_params(6, 3));
  CHECK_THROWS_AS(as2_mul(x, TowerElement::one(other)), ParameterError);
  // A separately built tower over an equal basis is compatible.
  const auto twin = build_as2(gauss::build_params(5, 2));
  CHECK(as2_mul(x, TowerElement::one(twin)).value == x);
}
