#include "gf2nbasis/gauss.hpp"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <variant>

namespace gf2nbasis::gauss {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::size_t words_for(std::size_t bits) { return (bits + gf2x::kWordBits - 1) / gf2x::kWordBits; }

enum class Failure { CompositeModulus, OverlappingCosets };

std::string describe(std::uint64_t n, std::uint64_t k, Failure f) {
  const std::string tag = "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
  if (f == Failure::CompositeModulus) {
    return "not a normal basis type " + tag + ": r = " + std::to_string(n * k + 1) +
           " is composite";
  }
  return "not a normal basis type " + tag + ": cosets 2^i K do not partition Z_r^*";
}

void check_arguments(std::uint64_t n, std::uint64_t k) {
  if (n < 2 || k < 1) throw ParameterError("Gauss period type needs n >= 2 and k >= 1");
  if (k > kMaxModulus / n) throw ParameterError("Gauss period type: nk + 1 exceeds 2^31");
}

// Builds K and walks the cosets 2^i K; the walk is the normality certificate.
std::variant<GnbParams, Failure> try_build(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t r = n * k + 1;
  if (!nt::is_prime(r)) return Failure::CompositeModulus;

  GnbParams p;
  p.n = n;
  p.k = k;
  p.r = r;
  const std::uint64_t h = nt::powmod(nt::primitive_root(r), n, r);
  std::uint64_t a = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    p.subgroup.push_back(static_cast<std::uint32_t>(a));
    a = a * h % r;
  }
  std::sort(p.subgroup.begin(), p.subgroup.end());

  p.coset_index.assign(r, GnbParams::kUnused);
  p.representative.resize(n);
  std::uint64_t t = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    p.representative[i] = static_cast<std::uint32_t>(t);
    for (auto s : p.subgroup) {
      const std::uint64_t j = t * s % r;
      if (p.coset_index[j] != GnbParams::kUnused) return Failure::OverlappingCosets;
      p.coset_index[j] = static_cast<std::uint32_t>(i);
    }
    t = 2 * t % r;
  }
  return p;
}

} // namespace

bool gnb_exists(std::uint64_t n) { return n % 8 != 0; }

bool gnb_type_ok(std::uint64_t n, std::uint64_t k) {
  check_arguments(n, k);
  return std::holds_alternative<GnbParams>(try_build(n, k));
}

bool gnb_type_ok_by_order(std::uint64_t n, std::uint64_t k) {
  check_arguments(n, k);
  const std::uint64_t r = n * k + 1;
  if (!nt::is_prime(r)) return false;
  const std::uint64_t e = nt::mult_order(2, r);
  return std::gcd(n * k / e, n) == 1;
}

std::optional<unsigned> lowest_type(std::uint64_t n, unsigned kmax) {
  for (unsigned k = 1; k <= kmax; ++k) {
    if (gnb_type_ok(n, k)) return k;
  }
  return std::nullopt;
}

ParamsPtr build_params(std::uint64_t n, std::uint64_t k) {
  check_arguments(n, k);
  auto result = try_build(n, k);
  if (auto* failure = std::get_if<Failure>(&result)) throw DomainError(describe(n, k, *failure));
  return std::make_shared<const GnbParams>(std::move(std::get<GnbParams>(result)));
}

// ---------------------------------------------------------------------------

GnbElement::GnbElement(ParamsPtr params) : params_(std::move(params)) {
  if (!params_) throw ParameterError("GnbElement: null parameters");
  words_.assign(words_for(params_->n), 0);
}

GnbElement GnbElement::one(ParamsPtr params) {
  GnbElement e(std::move(params));
  const std::size_t n = e.size();
  std::fill(e.words_.begin(), e.words_.end(), ~Word{0});
  if (n % gf2x::kWordBits) e.words_.back() = (Word{1} << (n % gf2x::kWordBits)) - 1;
  return e;
}

GnbElement GnbElement::basis(ParamsPtr params, std::size_t i) {
  GnbElement e(std::move(params));
  if (i >= e.size()) throw ParameterError("GnbElement::basis: index out of range");
  e.set_coord(i, true);
  return e;
}

GnbElement GnbElement::from_words(ParamsPtr params, std::vector<Word> words) {
  GnbElement e(std::move(params));
  const auto poly = BinaryPolynomial::from_words(std::move(words));
  if (poly.degree() && *poly.degree() >= e.size()) {
    throw FormatError("GnbElement: coordinate index beyond n = " + std::to_string(e.size()));
  }
  std::copy(poly.words().begin(), poly.words().end(), e.words_.begin());
  return e;
}

GnbElement GnbElement::from_hex(ParamsPtr params, std::string_view hex) {
  const auto poly = BinaryPolynomial::from_hex(hex);
  return from_words(std::move(params), {poly.words().begin(), poly.words().end()});
}

std::string GnbElement::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = (size() + 3) / 4;
  std::string out(nibbles, '0');
  for (std::size_t i = 0; i < nibbles; ++i) {
    out[nibbles - 1 - i] = kDigits[(words_[i / 16] >> (4 * (i % 16))) & 0xf];
  }
  return out;
}

void GnbElement::set_coord(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % gf2x::kWordBits);
  if (value) {
    words_[i / gf2x::kWordBits] |= mask;
  } else {
    words_[i / gf2x::kWordBits] &= ~mask;
  }
}

bool GnbElement::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool GnbElement::is_one() const { return *this == one(params_); }

std::size_t GnbElement::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

GnbElement GnbElement::frobenius(std::size_t times) const {
  const std::size_t n = size();
  const auto rotated =
      gf2x::fold_cyclic(BinaryPolynomial::from_words(words_).shifted_up(times % n), n);
  GnbElement out(params_);
  std::copy(rotated.words().begin(), rotated.words().end(), out.words_.begin());
  return out;
}

GnbElement& GnbElement::operator+=(const GnbElement& other) {
  if (!same_basis(*params_, *other.params_)) throw ParameterError("GnbElement: basis mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool operator==(const GnbElement& a, const GnbElement& b) {
  return same_basis(*a.params_, *b.params_) && a.words_ == b.words_;
}

bool same_basis(const GnbParams& a, const GnbParams& b) {
  return &a == &b || (a.n == b.n && a.k == b.k);
}

// ---------------------------------------------------------------------------

BinaryPolynomial embed_phi(const GnbElement& a) {
  const auto& p = a.params();
  std::vector<Word> words(words_for(p.r), 0);
  for (std::size_t j = 1; j < p.r; ++j) {
    if (a.coord(p.coset_index[j])) words[j / gf2x::kWordBits] |= Word{1} << (j % gf2x::kWordBits);
  }
  return BinaryPolynomial::from_words(std::move(words));
}

GnbElement project_back(const BinaryPolynomial& poly, const ParamsPtr& params) {
  const auto& p = *params;
  if (poly.degree() && *poly.degree() >= p.r) {
    throw ParameterError("project_back: polynomial degree must be below r");
  }
  const bool c0 = poly.coefficient(0);
  GnbElement out(params);
  for (std::size_t i = 0; i < p.n; ++i) out.set_coord(i, poly.coefficient(p.representative[i]) != c0);
  for (std::size_t j = 1; j < p.r; ++j) {
    if ((poly.coefficient(j) != c0) != out.coord(p.coset_index[j])) {
      throw DomainError("project_back: polynomial is not in the image of phi (coefficient at x^" +
                        std::to_string(j) + " breaks coset constancy)");
    }
  }
  return out;
}

GnbElement gnb_mul(const GnbElement& a, const GnbElement& b) {
  if (!same_basis(a.params(), b.params())) throw ParameterError("gnb_mul: basis mismatch");
  const auto& params = a.params_ptr();
  return project_back(gf2x::mulmod_cyclic(embed_phi(a), embed_phi(b), params->r), params);
}

GnbElement gnb_inverse(const GnbElement& a) {
  if (a.is_zero()) throw DomainError("gnb_inverse: division by zero");
  // beta = a^(2^len - 1); grow len along the bits of n - 1.
  const std::uint64_t target = a.size() - 1;
  GnbElement beta = a;
  std::uint64_t len = 1;
  for (int bit = std::bit_width(target) - 2; bit >= 0; --bit) {
    beta = gnb_mul(beta.frobenius(len), beta);
    len *= 2;
    if ((target >> bit) & 1) {
      beta = gnb_mul(beta.frobenius(1), a);
      len += 1;
    }
  }
  return beta.frobenius(1);
}

GnbElement gnb_pow(const GnbElement& a, std::uint64_t exponent) {
  GnbElement result = GnbElement::one(a.params_ptr());
  GnbElement base = a;
  while (exponent) {
    if (exponent & 1) result = gnb_mul(result, base);
    exponent >>= 1;
    if (exponent) base = base.frobenius(1);
  }
  return result;
}

GnbElement MultTable::apply(const GnbElement& v) const {
  if (!same_basis(*params, v.params())) throw ParameterError("MultTable::apply: basis mismatch");
  GnbElement out(params);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (v.coord(i)) out += rows[i];
  }
  return out;
}

MultTable mult_table(const ParamsPtr& params) {
  MultTable table{params, {}, 0};
  const auto alpha = GnbElement::basis(params, 0);
  table.rows.reserve(params->n);
  for (std::size_t i = 0; i < params->n; ++i) {
    table.rows.push_back(gnb_mul(alpha, GnbElement::basis(params, i)));
    table.complexity += table.rows.back().weight();
  }
  return table;
}

ComplexityBounds complexity_bounds(std::uint64_t n, std::uint64_t k) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sk = static_cast<std::int64_t>(k);
  ComplexityBounds b;
  if (k % 2 == 0) {
    b.lower = sk * sn - (sk * sk - 3 * sk + 3);
    b.upper = (sn - 1) * sk + 1;
  } else {
    b.lower = (sk + 1) * sn - (sk * sk - sk + 1);
    b.upper = (sn - 2) * sk + sn + 1;
  }
  if (n <= 3) return b;
  if (k <= 2) {
    b.exact = 2 * sn - 1;
  } else if (k <= 4) {
    b.exact = 4 * sn - 7;
  } else if (k <= 6) {
    b.exact = 6 * sn - 21;
  }
  return b;
}

} // namespace gf2nbasis::gauss
