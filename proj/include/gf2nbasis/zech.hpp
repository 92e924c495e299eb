#pragma once

#include "gf2nbasis/gf2x.hpp"

#include <cstdint>
#include <vector>

namespace gf2nbasis::gf2x {

/// F_{2^e} for 2 <= e <= 20 via discrete-log tables of a primitive root of
/// the modulus. Elements are the packed polynomial residues (bit i is the
/// coefficient of x^i), so addition is xor.
class ZechField {
public:
  using Element = std::uint32_t;
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 20;

  /// Picks the lexicographically least irreducible degree-e modulus whose
  /// root x is primitive. Throws ParameterError outside [2, 20].
  static ZechField build(unsigned e);

  unsigned degree() const { return e_; }
  const BinaryPolynomial& modulus() const { return modulus_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(log_.size()); }
  std::uint32_t multiplicative_order() const { return order() - 1; }

  Element add(Element a, Element b) const { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t exponent) const;

  /// Discrete log base x; a must be nonzero.
  std::uint32_t log(Element a) const;
  /// x^i for 0 <= i < 2^e - 1.
  Element exp(std::uint32_t i) const;

  /// z(i) with 1 + x^i = x^{z(i)}; std::nullopt when 1 + x^i = 0 (i = 0).
  std::optional<std::uint32_t> zech(std::uint32_t i) const;

  std::size_t log_table_size() const { return log_.size(); }
  std::size_t antilog_table_size() const { return antilog_.size(); }

private:
  unsigned e_ = 0;
  BinaryPolynomial modulus_;
  std::vector<std::uint32_t> log_;     // log_[0] unused
  std::vector<Element> antilog_;       // antilog_[2^e - 1] repeats antilog_[0]
};

} // namespace gf2nbasis::gf2x
