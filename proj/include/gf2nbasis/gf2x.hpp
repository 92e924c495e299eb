#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2nbasis::gf2x {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Karatsuba falls back to the word schoolbook kernel at or below this many
/// words per operand.
inline constexpr std::size_t kDefaultKaratsubaThreshold = 8;

/// Polynomial over GF(2), coefficients packed least-significant-bit first.
///
/// The word vector is kept normalized: no trailing zero words, so the zero
/// polynomial has an empty support and `degree()` returns `std::nullopt`.
class BinaryPolynomial {
public:
  BinaryPolynomial() = default;

  static BinaryPolynomial one() { return monomial(0); }
  static BinaryPolynomial monomial(std::size_t exponent);
  static BinaryPolynomial from_words(std::vector<Word> words);
  static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exponents);

  /// Lowercase hex of the packed bits; "b" is x^3 + x + 1. Accepts an
  /// optional "0x" prefix and either case.
  static BinaryPolynomial from_hex(std::string_view hex);
  std::string to_hex() const;

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  bool coefficient(std::size_t exponent) const;
  void set_coefficient(std::size_t exponent, bool value);
  void flip_coefficient(std::size_t exponent);

  std::span<const Word> words() const { return words_; }
  std::size_t weight() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) {
    a += b;
    return a;
  }
  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  /// Multiplication by x^shift.
  BinaryPolynomial shifted_up(std::size_t shift) const;
  /// Floor division by x^shift.
  BinaryPolynomial shifted_down(std::size_t shift) const;
  /// Coefficients of exponents below `count` only.
  BinaryPolynomial truncated(std::size_t count) const;

private:
  void normalize();
  std::vector<Word> words_;
};

BinaryPolynomial mul_schoolbook(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// Recursive Karatsuba on word arrays; operands of at most `threshold_words`
/// words go through the schoolbook kernel. Throws ParameterError if
/// `threshold_words` is 0.
BinaryPolynomial mul_karatsuba(const BinaryPolynomial& a, const BinaryPolynomial& b,
                               std::size_t threshold_words = kDefaultKaratsubaThreshold);

inline BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return mul_karatsuba(a, b);
}

/// Bit-spreading square; linear in the operand size.
BinaryPolynomial square(const BinaryPolynomial& a);

/// Reduction modulo x^r - 1: exponent j folds onto j mod r.
BinaryPolynomial fold_cyclic(const BinaryPolynomial& a, std::size_t r);

/// a * b mod (x^r - 1). Requires deg a, deg b < r.
BinaryPolynomial mulmod_cyclic(const BinaryPolynomial& a, const BinaryPolynomial& b,
                               std::size_t r);

struct DivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};
DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& modulus);
BinaryPolynomial mod(const BinaryPolynomial& a, const BinaryPolynomial& modulus);
BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& modulus);
BinaryPolynomial modpow(const BinaryPolynomial& a, std::uint64_t exponent,
                        const BinaryPolynomial& modulus);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

/// Rabin's test: x^(2^d) = x mod f and gcd(x^(2^(d/p)) - x, f) = 1 for every
/// prime p | d.
bool is_irreducible(const BinaryPolynomial& f);

} // namespace gf2nbasis::gf2x
