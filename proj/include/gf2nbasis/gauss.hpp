#pragma once

#include "gf2nbasis/gf2x.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2nbasis::gauss {

using gf2x::BinaryPolynomial;
using gf2x::Word;

/// Wassermann's condition for F_{2^n}/F_2: some Gauss period is normal iff 8 does not divide n.
bool gnb_exists(std::uint64_t n);

/// r = nk + 1 is prime and the cosets 2^i K (i < n) partition Z_r^*.
/// Requires n >= 2, k >= 1, nk + 1 < 2^31.
bool gnb_type_ok(std::uint64_t n, std::uint64_t k);

/// The gcd(nk / ord_r(2), n) = 1 criterion. Agrees with gnb_type_ok; kept as
/// an independent route for cross-checking.
bool gnb_type_ok_by_order(std::uint64_t n, std::uint64_t k);

/// Smallest k <= kmax with gnb_type_ok(n, k).
std::optional<unsigned> lowest_type(std::uint64_t n, unsigned kmax);

/// Combinatorial data of a type (n, k) Gauss period basis.
struct GnbParams {
  static constexpr std::uint32_t kUnused = std::numeric_limits<std::uint32_t>::max();

  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  /// The order-k subgroup K of Z_r^*, ascending.
  std::vector<std::uint32_t> subgroup;
  /// coset_index[j] = i iff j lies in 2^i K; slot 0 holds kUnused.
  std::vector<std::uint32_t> coset_index;
  /// representative[i] = 2^i mod r, an element of coset i.
  std::vector<std::uint32_t> representative;
};

using ParamsPtr = std::shared_ptr<const GnbParams>;

/// Throws DomainError naming the failed certificate (composite r or
/// overlapping cosets), ParameterError on out-of-range arguments.
ParamsPtr build_params(std::uint64_t n, std::uint64_t k);

/// Coordinates with respect to (alpha_0, ..., alpha_{n-1}), alpha_i = alpha^{2^i}.
/// Coordinate 0 is the least significant bit of the packed words.
class GnbElement {
public:
  explicit GnbElement(ParamsPtr params);

  static GnbElement zero(ParamsPtr params) { return GnbElement(std::move(params)); }
  /// All-ones: sum of the alpha_i, which is the field identity.
  static GnbElement one(ParamsPtr params);
  /// e_i, i.e. alpha_i itself.
  static GnbElement basis(ParamsPtr params, std::size_t i);
  static GnbElement from_words(ParamsPtr params, std::vector<Word> words);
  /// ceil(n/4) nibbles, most significant first. Shorter strings are
  /// accepted; set bits at or above n are rejected with FormatError.
  static GnbElement from_hex(ParamsPtr params, std::string_view hex);
  std::string to_hex() const;

  const GnbParams& params() const { return *params_; }
  const ParamsPtr& params_ptr() const { return params_; }
  std::size_t size() const { return params_->n; }

  bool coord(std::size_t i) const { return (words_[i / gf2x::kWordBits] >> (i % gf2x::kWordBits)) & 1; }
  void set_coord(std::size_t i, bool value);
  std::span<const Word> words() const { return words_; }

  bool is_zero() const;
  bool is_one() const;
  std::size_t weight() const;

  /// Squaring applied `times` times: coordinate i moves to i + times mod n.
  GnbElement frobenius(std::size_t times = 1) const;

  GnbElement& operator+=(const GnbElement& other);
  friend GnbElement operator+(GnbElement a, const GnbElement& b) {
    a += b;
    return a;
  }
  friend bool operator==(const GnbElement& a, const GnbElement& b);

private:
  ParamsPtr params_;
  std::vector<Word> words_;
};

bool same_basis(const GnbParams& a, const GnbParams& b);

/// Image in F_2[x]/(x^r - 1): exponent j >= 1 carries coords[coset_index[j]].
BinaryPolynomial embed_phi(const GnbElement& a);

/// Inverse of embed_phi after folding the constant term
/// (1 = x + x^2 + ... + x^{r-1} modulo the r-th cyclotomic polynomial).
/// Throws DomainError when the folded coefficients are not constant on cosets.
GnbElement project_back(const BinaryPolynomial& p, const ParamsPtr& params);

GnbElement gnb_mul(const GnbElement& a, const GnbElement& b);

/// a^(2^n - 2) by an Itoh-Tsujii chain. Throws DomainError for a = 0.
GnbElement gnb_inverse(const GnbElement& a);

GnbElement gnb_pow(const GnbElement& a, std::uint64_t exponent);

/// Row i holds the coordinates of alpha_0 * alpha_i.
struct MultTable {
  ParamsPtr params;
  std::vector<GnbElement> rows;
  std::size_t complexity = 0;

  /// alpha * v as a vector-matrix product against the rows.
  GnbElement apply(const GnbElement& v) const;
};

MultTable mult_table(const ParamsPtr& params);

/// Proven bounds on the table complexity, and the exact value for k <= 6
/// when n > 3.
struct ComplexityBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
};

ComplexityBounds complexity_bounds(std::uint64_t n, std::uint64_t k);

} // namespace gf2nbasis::gauss
