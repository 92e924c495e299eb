#include "gf2nbasis/gf2x.hpp"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace gf2nbasis::gf2x {

namespace {

using u128 = unsigned __int128;

// 64x64 -> 128 carryless product with a 4-bit window.
u128 clmul64(Word a, Word b) {
  u128 table[16];
  table[0] = 0;
  table[1] = b;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ b;
  }
  u128 acc = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    acc ^= table[(a >> shift) & 0xf] << shift;
  }
  return acc;
}

// out[0 .. na+nb) ^= a * b
void schoolbook_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u128 p = clmul64(a[i], b[j]);
      out[i + j] ^= static_cast<Word>(p);
      out[i + j + 1] ^= static_cast<Word>(p >> 64);
    }
  }
}

// out[0 .. 2n) = a * b for equal-length operands; out must be zeroed.
void karatsuba_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                     std::size_t threshold) {
  const std::size_t n = a.size();
  if (n <= threshold) {
    schoolbook_words(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;

  std::vector<Word> low_prod(2 * lo, 0);
  std::vector<Word> high_prod(2 * hi, 0);
  karatsuba_words(a.first(lo), b.first(lo), low_prod, threshold);
  karatsuba_words(a.subspan(lo), b.subspan(lo), high_prod, threshold);

  std::vector<Word> sum_a(a.begin() + lo, a.end());
  std::vector<Word> sum_b(b.begin() + lo, b.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sum_a[i] ^= a[i];
    sum_b[i] ^= b[i];
  }
  std::vector<Word> mid(2 * hi, 0);
  karatsuba_words(sum_a, sum_b, mid, threshold);
  for (std::size_t i = 0; i < low_prod.size(); ++i) mid[i] ^= low_prod[i];
  for (std::size_t i = 0; i < high_prod.size(); ++i) mid[i] ^= high_prod[i];

  for (std::size_t i = 0; i < low_prod.size(); ++i) out[i] ^= low_prod[i];
  for (std::size_t i = 0; i < high_prod.size(); ++i) out[2 * lo + i] ^= high_prod[i];
  for (std::size_t i = 0; i < mid.size(); ++i) out[lo + i] ^= mid[i];
}

// Spreads the 32 bits of x to the even positions of a 64-bit word.
Word spread32(std::uint32_t x) {
  Word v = x;
  v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
  v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
  v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

} // namespace

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
  BinaryPolynomial p;
  p.set_coefficient(exponent, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<Word> words) {
  BinaryPolynomial p;
  p.words_ = std::move(words);
  p.normalize();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::size_t> exponents) {
  BinaryPolynomial p;
  for (std::size_t e : exponents) p.flip_coefficient(e);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw FormatError("empty hex string");
  std::vector<Word> words((hex.size() + 15) / 16, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int v = hex_value(hex[hex.size() - 1 - i]);
    if (v < 0) throw FormatError("invalid hex digit in '" + std::string(hex) + "'");
    words[i / 16] |= static_cast<Word>(v) << (4 * (i % 16));
  }
  return from_words(std::move(words));
}

std::string BinaryPolynomial::to_hex() const {
  if (is_zero()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = *degree() / 4 + 1;
  std::string out(nibbles, '0');
  for (std::size_t i = 0; i < nibbles; ++i) {
    out[nibbles - 1 - i] = kDigits[(words_[i / 16] >> (4 * (i % 16))) & 0xf];
  }
  return out;
}

std::optional<std::size_t> BinaryPolynomial::degree() const {
  if (words_.empty()) return std::nullopt;
  return (words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coefficient(std::size_t exponent) const {
  const std::size_t w = exponent / kWordBits;
  return w < words_.size() && ((words_[w] >> (exponent % kWordBits)) & 1);
}

void BinaryPolynomial::set_coefficient(std::size_t exponent, bool value) {
  if (coefficient(exponent) != value) flip_coefficient(exponent);
}

void BinaryPolynomial::flip_coefficient(std::size_t exponent) {
  const std::size_t w = exponent / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= Word{1} << (exponent % kWordBits);
  normalize();
}

std::size_t BinaryPolynomial::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

BinaryPolynomial BinaryPolynomial::shifted_up(std::size_t shift) const {
  if (is_zero()) return {};
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = shift % kWordBits;
  std::vector<Word> out(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + ws] ^= words_[i] << bs;
    if (bs) out[i + ws + 1] ^= words_[i] >> (kWordBits - bs);
  }
  return from_words(std::move(out));
}

BinaryPolynomial BinaryPolynomial::shifted_down(std::size_t shift) const {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = shift % kWordBits;
  if (ws >= words_.size()) return {};
  std::vector<Word> out(words_.size() - ws, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = words_[i + ws] >> bs;
    if (bs && i + ws + 1 < words_.size()) out[i] |= words_[i + ws + 1] << (kWordBits - bs);
  }
  return from_words(std::move(out));
}

BinaryPolynomial BinaryPolynomial::truncated(std::size_t count) const {
  const std::size_t nw = (count + kWordBits - 1) / kWordBits;
  std::vector<Word> out(words_.begin(), words_.begin() + std::min(nw, words_.size()));
  if (count % kWordBits && out.size() == nw) {
    out.back() &= (Word{1} << (count % kWordBits)) - 1;
  }
  return from_words(std::move(out));
}

void BinaryPolynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial mul_schoolbook(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> out(a.words().size() + b.words().size(), 0);
  schoolbook_words(a.words(), b.words(), out);
  return BinaryPolynomial::from_words(std::move(out));
}

BinaryPolynomial mul_karatsuba(const BinaryPolynomial& a, const BinaryPolynomial& b,
                               std::size_t threshold_words) {
  if (threshold_words == 0) throw ParameterError("mul_karatsuba: threshold must be at least 1");
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = std::max(a.words().size(), b.words().size());
  if (n <= threshold_words) return mul_schoolbook(a, b);
  std::vector<Word> pa(a.words().begin(), a.words().end());
  std::vector<Word> pb(b.words().begin(), b.words().end());
  pa.resize(n, 0);
  pb.resize(n, 0);
  std::vector<Word> out(2 * n, 0);
  karatsuba_words(pa, pb, out, threshold_words);
  return BinaryPolynomial::from_words(std::move(out));
}

BinaryPolynomial square(const BinaryPolynomial& a) {
  std::vector<Word> out(2 * a.words().size(), 0);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    out[2 * i] = spread32(static_cast<std::uint32_t>(a.words()[i]));
    out[2 * i + 1] = spread32(static_cast<std::uint32_t>(a.words()[i] >> 32));
  }
  return BinaryPolynomial::from_words(std::move(out));
}

BinaryPolynomial fold_cyclic(const BinaryPolynomial& a, std::size_t r) {
  if (r < 1) throw ParameterError("fold_cyclic: r must be at least 1");
  BinaryPolynomial acc = a;
  while (acc.degree() && *acc.degree() >= r) {
    acc = acc.truncated(r) + acc.shifted_down(r);
  }
  return acc;
}

BinaryPolynomial mulmod_cyclic(const BinaryPolynomial& a, const BinaryPolynomial& b,
                               std::size_t r) {
  if (r < 1) throw ParameterError("mulmod_cyclic: r must be at least 1");
  if ((a.degree() && *a.degree() >= r) || (b.degree() && *b.degree() >= r)) {
    throw ParameterError("mulmod_cyclic: operands must have degree below r");
  }
  return fold_cyclic(mul_karatsuba(a, b), r);
}

DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& modulus) {
  if (modulus.is_zero()) throw ParameterError("divmod: zero modulus");
  const std::size_t dm = *modulus.degree();
  DivMod out{{}, a};
  // Long division one leading term at a time; the remainder shrinks each step.
  while (out.remainder.degree() && *out.remainder.degree() >= dm) {
    const std::size_t shift = *out.remainder.degree() - dm;
    out.quotient.flip_coefficient(shift);
    out.remainder += modulus.shifted_up(shift);
  }
  return out;
}

BinaryPolynomial mod(const BinaryPolynomial& a, const BinaryPolynomial& modulus) {
  if (modulus.is_zero()) throw ParameterError("mod: zero modulus");
  const std::size_t dm = *modulus.degree();
  if (!a.degree() || *a.degree() < dm) return a;
  // Word-level reduction in place; avoids reallocating per leading term.
  std::vector<Word> rem(a.words().begin(), a.words().end());
  const auto mw = modulus.words();
  for (std::size_t top = *a.degree() + 1; top-- > dm;) {
    if (!((rem[top / kWordBits] >> (top % kWordBits)) & 1)) continue;
    const std::size_t shift = top - dm;
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = shift % kWordBits;
    for (std::size_t i = 0; i < mw.size(); ++i) {
      rem[i + ws] ^= mw[i] << bs;
      if (bs && i + ws + 1 < rem.size()) rem[i + ws + 1] ^= mw[i] >> (kWordBits - bs);
    }
  }
  return BinaryPolynomial::from_words(std::move(rem));
}

BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& modulus) {
  return mod(mul_karatsuba(a, b), modulus);
}

BinaryPolynomial modpow(const BinaryPolynomial& a, std::uint64_t exponent,
                        const BinaryPolynomial& modulus) {
  if (modulus.is_zero()) throw ParameterError("modpow: zero modulus");
  if (*modulus.degree() < 1) throw ParameterError("modpow: modulus must have degree >= 1");
  BinaryPolynomial result = BinaryPolynomial::one();
  BinaryPolynomial base = mod(a, modulus);
  while (exponent) {
    if (exponent & 1) result = mulmod(result, base, modulus);
    exponent >>= 1;
    if (exponent) base = mod(square(base), modulus);
  }
  return result;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const BinaryPolynomial& f) {
  if (f.is_zero() || *f.degree() < 1) {
    throw ParameterError("is_irreducible: polynomial must have degree >= 1");
  }
  const std::size_t d = *f.degree();
  const auto x = BinaryPolynomial::monomial(1);
  // frob[i] = x^(2^i) mod f
  std::vector<BinaryPolynomial> frob{mod(x, f)};
  frob.reserve(d + 1);
  for (std::size_t i = 1; i <= d; ++i) frob.push_back(mod(square(frob.back()), f));
  if (frob[d] != mod(x, f)) return false;
  for (auto p : nt::factorize(d).primes()) {
    if (!gcd(frob[d / p] + x, f).is_one()) return false;
  }
  return true;
}

} // namespace gf2nbasis::gf2x
