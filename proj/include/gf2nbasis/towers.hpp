#pragma once

#include "gf2nbasis/gauss.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gf2nbasis::towers {

using gauss::GnbElement;

/// AS2:     F_{2^d}(a),    a^2 = a + alpha;             blocks (1, a)
/// WITT4:   F_{2^d}(a, b), b^2 = b + c2 over AS2;       blocks (1, a, b, ab)
/// KUMMER3: F_{2^d}(beta), beta^3 = alpha;              blocks (1, beta, beta^2)
enum class Form { AS2, WITT4, KUMMER3 };

std::string_view to_string(Form form);
std::optional<Form> parse_form(std::string_view text);
std::size_t block_count(Form form);

/// The Artin-Schreier constant of the second WITT4 step.
enum class WittConstant {
  A,      // c2 = a, trace 1 when d is odd
  AlphaA, // c2 = alpha * a, trace 1 for every d
};

struct TowerParams {
  gauss::ParamsPtr base;
  /// Multiplication-by-alpha table of the base; every alpha product in the
  /// fast paths is one application of it.
  gauss::MultTable table;
  Form form = Form::AS2;
  WittConstant witt_constant = WittConstant::A;

  std::size_t d() const { return base->n; }
};

using TowerPtr = std::shared_ptr<const TowerParams>;

TowerPtr build_as2(const gauss::ParamsPtr& base);

/// c2 = a for odd d, alpha * a for even d. The absolute trace of c2 is
/// recomputed by repeated squaring; a value other than 1 throws InvariantError.
TowerPtr build_witt4(const gauss::ParamsPtr& base);

/// Throws DomainError when d is odd (3 does not divide 2^d - 1) or when
/// alpha^((2^d - 1)/3) = 1 (alpha is a cube, so u^3 - alpha is reducible).
TowerPtr build_kummer3(const gauss::ParamsPtr& base);

TowerPtr build_tower(const gauss::ParamsPtr& base, Form form);

class TowerElement {
public:
  explicit TowerElement(TowerPtr params);

  static TowerElement zero(TowerPtr params) { return TowerElement(std::move(params)); }
  static TowerElement one(TowerPtr params);
  /// Element whose only nonzero block is `block` at position `index`.
  static TowerElement embed(TowerPtr params, std::size_t index, const GnbElement& block);
  static TowerElement from_blocks(TowerPtr params, std::vector<GnbElement> blocks);
  /// Comma-separated GNB hex strings, block 0 first.
  static TowerElement parse(TowerPtr params, std::string_view text);
  std::string to_string() const;

  const TowerParams& params() const { return *params_; }
  const TowerPtr& params_ptr() const { return params_; }
  Form form() const { return params_->form; }
  const std::vector<GnbElement>& blocks() const { return blocks_; }
  const GnbElement& block(std::size_t i) const { return blocks_.at(i); }

  TowerElement& operator+=(const TowerElement& other);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) {
    a += b;
    return a;
  }
  friend bool operator==(const TowerElement& a, const TowerElement& b);

private:
  TowerPtr params_;
  std::vector<GnbElement> blocks_;
};

/// Per-call operation counts over the base field.
struct OpCounts {
  std::size_t subfield_muls = 0;
  std::size_t table_applications = 0;
  std::size_t subfield_adds = 0;
};

struct Product {
  TowerElement value;
  OpCounts counts;
};

/// Karatsuba over (1, a): 3 base multiplications, one table application and
/// 4 base additions.
Product as2_mul(const TowerElement& x, const TowerElement& y);
/// Karatsuba over the AS2 level: 9 base multiplications, at most 9 table
/// applications (4 for odd d, 6 for even d).
Product witt4_mul(const TowerElement& x, const TowerElement& y);
/// Degree-2 convolution with the symmetric terms paired Karatsuba-style:
/// 6 base multiplications, 2 table applications for the alpha foldings.
Product kummer3_mul(const TowerElement& x, const TowerElement& y);

Product tower_mul(const TowerElement& x, const TowerElement& y);

/// Absolute trace Tr_{F_{2^{2d}}/F_2} of an AS2 element, by 2d squarings.
TowerElement as2_absolute_trace(const TowerElement& x);

/// The degree-d minimal polynomial of the Gauss period alpha, from the
/// Krylov sequence 1, alpha, alpha^2, ... of the multiplication-by-alpha
/// matrix. Throws InvariantError if it is not irreducible of degree d.
gf2x::BinaryPolynomial minpoly_gauss_period(const gauss::MultTable& table);
gf2x::BinaryPolynomial minpoly_gauss_period(const gauss::ParamsPtr& base);

/// Polynomial-basis model of a tower over F_2[z]/(m), m the minimal
/// polynomial of alpha; alpha_i maps to z^(2^i) mod m. Multiplication
/// expands the tower relations naively.
class OracleTower {
public:
  explicit OracleTower(TowerPtr params);

  const gf2x::BinaryPolynomial& modulus() const { return modulus_; }

  gf2x::BinaryPolynomial to_poly(const GnbElement& x) const;
  GnbElement from_poly(const gf2x::BinaryPolynomial& p) const;

  TowerElement mul(const TowerElement& x, const TowerElement& y) const;

private:
  TowerPtr params_;
  gf2x::BinaryPolynomial modulus_;
  std::vector<gf2x::BinaryPolynomial> images_;  // images_[i] = z^(2^i) mod m
  std::vector<GnbElement> preimages_;           // preimages_[j] maps to z^j
};

/// One-shot oracle product; builds an OracleTower per call.
TowerElement oracle_mul(const TowerElement& x, const TowerElement& y);

} // namespace gf2nbasis::towers
