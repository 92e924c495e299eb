#include "gf2nbasis/zech.hpp"

#include "gf2nbasis/error.hpp"
#include "gf2nbasis/numtheory.hpp"

#include <string>

namespace gf2nbasis::gf2x {

namespace {

bool root_is_primitive(const BinaryPolynomial& f, std::uint64_t group_order,
                       const std::vector<nt::u64>& primes) {
  const auto x = BinaryPolynomial::monomial(1);
  for (auto p : primes) {
    if (modpow(x, group_order / p, f).is_one()) return false;
  }
  return true;
}

} // namespace

ZechField ZechField::build(unsigned e) {
  if (e < kMinDegree || e > kMaxDegree) {
    throw ParameterError("ZechField: degree " + std::to_string(e) + " outside [2, 20]");
  }
  const std::uint64_t size = std::uint64_t{1} << e;
  const std::uint64_t group_order = size - 1;
  const auto primes = nt::factorize(group_order).primes();

  ZechField field;
  field.e_ = e;
  for (std::uint64_t candidate = size | 1; candidate < 2 * size; candidate += 2) {
    auto f = BinaryPolynomial::from_words({candidate});
    if (is_irreducible(f) && root_is_primitive(f, group_order, primes)) {
      field.modulus_ = std::move(f);
      break;
    }
  }
  const auto reduction = static_cast<std::uint32_t>(field.modulus_.words()[0] ^ size);

  field.log_.assign(size, 0);
  field.antilog_.assign(size, 0);
  std::uint32_t value = 1;
  for (std::uint32_t i = 0; i < group_order; ++i) {
    field.antilog_[i] = value;
    field.log_[value] = i;
    value <<= 1;
    if (value & size) value = static_cast<std::uint32_t>((value ^ size) ^ reduction);
  }
  field.antilog_[group_order] = field.antilog_[0];
  return field;
}

ZechField::Element ZechField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= multiplicative_order()) s -= multiplicative_order();
  return antilog_[s];
}

ZechField::Element ZechField::inv(Element a) const {
  if (a == 0) throw DomainError("ZechField: inverse of zero");
  const std::uint32_t l = log_[a];
  return antilog_[l == 0 ? 0 : multiplicative_order() - l];
}

ZechField::Element ZechField::div(Element a, Element b) const { return mul(a, inv(b)); }

ZechField::Element ZechField::pow(Element a, std::uint64_t exponent) const {
  if (a == 0) return exponent == 0 ? 1 : 0;
  const std::uint64_t l = (std::uint64_t{log_[a]} * (exponent % multiplicative_order())) %
                          multiplicative_order();
  return antilog_[l];
}

std::uint32_t ZechField::log(Element a) const {
  if (a == 0 || a >= order()) throw ParameterError("ZechField: log of zero or out-of-range element");
  return log_[a];
}

ZechField::Element ZechField::exp(std::uint32_t i) const {
  return antilog_[i % multiplicative_order()];
}

std::optional<std::uint32_t> ZechField::zech(std::uint32_t i) const {
  const Element s = 1 ^ exp(i);
  if (s == 0) return std::nullopt;
  return log_[s];
}

} // namespace gf2nbasis::gf2x
