#include "gf2nbasis/towers.hpp"

#include "gf2nbasis/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace gf2nbasis::towers {

using gauss::gnb_mul;
using gf2x::BinaryPolynomial;

namespace {

struct Pair {
  GnbElement lo; // coefficient of 1
  GnbElement hi; // coefficient of a
};

Pair add(const Pair& x, const Pair& y, OpCounts& c) {
  c.subfield_adds += 2;
  return {x.lo + y.lo, x.hi + y.hi};
}

// (x0 + a x1)(y0 + a y1) with a^2 = a + alpha.
Pair as2_product(const gauss::MultTable& table, const Pair& x, const Pair& y, OpCounts& c) {
  const auto p1 = gnb_mul(x.lo, y.lo);
  const auto p2 = gnb_mul(x.hi, y.hi);
  const auto p3 = gnb_mul(x.lo + x.hi, y.lo + y.hi);
  c.subfield_muls += 3;
  c.subfield_adds += 2;
  // The a^2 term contributes p2 to both blocks; it cancels the p2 of the
  // middle Karatsuba term, leaving p3 + p1.
  const auto alpha_p2 = table.apply(p2);
  c.table_applications += 1;
  c.subfield_adds += 2;
  return {p1 + alpha_p2, p3 + p1};
}

// a * (q0 + a q1) = alpha q1 + a (q0 + q1)
Pair times_a(const gauss::MultTable& table, const Pair& q, OpCounts& c) {
  c.table_applications += 1;
  c.subfield_adds += 1;
  return {table.apply(q.hi), q.lo + q.hi};
}

Pair times_alpha(const gauss::MultTable& table, const Pair& q, OpCounts& c) {
  c.table_applications += 2;
  return {table.apply(q.lo), table.apply(q.hi)};
}

void require_form(const TowerElement& x, const TowerElement& y, Form form, const char* op) {
  if (x.form() != form || y.form() != form) {
    throw ParameterError(std::string(op) + ": operands must both be " +
                         std::string(to_string(form)) + " elements");
  }
  if (x.params_ptr() != y.params_ptr() &&
      !gauss::same_basis(*x.params().base, *y.params().base)) {
    throw ParameterError(std::string(op) + ": tower parameter mismatch");
  }
}

std::shared_ptr<TowerParams> make_tower(const gauss::ParamsPtr& base, Form form) {
  auto params = std::make_shared<TowerParams>();
  params->base = base;
  params->table = gauss::mult_table(base);
  params->form = form;
  return params;
}

} // namespace

std::string_view to_string(Form form) {
  switch (form) {
  case Form::AS2:
    return "as2";
  case Form::WITT4:
    return "witt4";
  case Form::KUMMER3:
    return "kummer3";
  }
  return "?";
}

std::optional<Form> parse_form(std::string_view text) {
  for (Form f : {Form::AS2, Form::WITT4, Form::KUMMER3}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::size_t block_count(Form form) {
  switch (form) {
  case Form::AS2:
    return 2;
  case Form::WITT4:
    return 4;
  case Form::KUMMER3:
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------

TowerPtr build_as2(const gauss::ParamsPtr& base) {
  // y^2 + y + alpha is irreducible over F_{2^d} because Tr(alpha) = sum alpha_i = 1.
  return make_tower(base, Form::AS2);
}

TowerPtr build_witt4(const gauss::ParamsPtr& base) {
  auto params = make_tower(base, Form::WITT4);
  params->witt_constant = base->n % 2 == 1 ? WittConstant::A : WittConstant::AlphaA;

  auto as2 = std::make_shared<TowerParams>(*params);
  as2->form = Form::AS2;
  const auto c2_block = params->witt_constant == WittConstant::A
                            ? GnbElement::one(base)
                            : GnbElement::basis(base, 0);
  const auto c2 = TowerElement::embed(as2, 1, c2_block);
  if (as2_absolute_trace(c2) != TowerElement::one(as2)) {
    throw InvariantError("build_witt4: absolute trace of c2 is not 1");
  }
  return params;
}

TowerPtr build_kummer3(const gauss::ParamsPtr& base) {
  const std::size_t d = base->n;
  if (d % 2 != 0) {
    throw DomainError("Kummer unavailable: 3 does not divide 2^" + std::to_string(d) + " - 1");
  }
  // (2^d - 1)/3 has its set bits at the even positions below d, so
  // alpha^((2^d - 1)/3) is the product of the alpha_i with i even.
  auto power = GnbElement::basis(base, 0);
  for (std::size_t i = 2; i < d; i += 2) power = gnb_mul(power, GnbElement::basis(base, i));
  if (power.is_one()) {
    throw DomainError("normal element is a cube; basis (" + std::to_string(d) + ", " +
                      std::to_string(base->k) + ") is not Kummer-eligible");
  }
  return make_tower(base, Form::KUMMER3);
}

TowerPtr build_tower(const gauss::ParamsPtr& base, Form form) {
  switch (form) {
  case Form::AS2:
    return build_as2(base);
  case Form::WITT4:
    return build_witt4(base);
  case Form::KUMMER3:
    return build_kummer3(base);
  }
  throw ParameterError("build_tower: unknown form");
}

// ---------------------------------------------------------------------------

TowerElement::TowerElement(TowerPtr params) : params_(std::move(params)) {
  if (!params_) throw ParameterError("TowerElement: null parameters");
  blocks_.assign(block_count(params_->form), GnbElement::zero(params_->base));
}

TowerElement TowerElement::one(TowerPtr params) {
  TowerElement e(std::move(params));
  e.blocks_[0] = GnbElement::one(e.params_->base);
  return e;
}

TowerElement TowerElement::embed(TowerPtr params, std::size_t index, const GnbElement& block) {
  TowerElement e(std::move(params));
  if (index >= e.blocks_.size()) throw ParameterError("TowerElement::embed: block index out of range");
  if (!gauss::same_basis(block.params(), *e.params_->base)) {
    throw ParameterError("TowerElement::embed: block basis mismatch");
  }
  e.blocks_[index] = block;
  return e;
}

TowerElement TowerElement::from_blocks(TowerPtr params, std::vector<GnbElement> blocks) {
  TowerElement e(std::move(params));
  if (blocks.size() != e.blocks_.size()) {
    throw ParameterError("TowerElement: " + std::string(towers::to_string(e.form())) + " needs " +
                         std::to_string(e.blocks_.size()) + " blocks, got " +
                         std::to_string(blocks.size()));
  }
  for (const auto& b : blocks) {
    if (!gauss::same_basis(b.params(), *e.params_->base)) {
      throw ParameterError("TowerElement: block basis mismatch");
    }
  }
  e.blocks_ = std::move(blocks);
  return e;
}

TowerElement TowerElement::parse(TowerPtr params, std::string_view text) {
  std::vector<GnbElement> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    blocks.push_back(GnbElement::from_hex(params->base, piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (blocks.size() != block_count(params->form)) {
    throw FormatError("expected " + std::to_string(block_count(params->form)) +
                      " comma-separated blocks, got " + std::to_string(blocks.size()));
  }
  return from_blocks(std::move(params), std::move(blocks));
}

std::string TowerElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += blocks_[i].to_hex();
  }
  return out;
}

TowerElement& TowerElement::operator+=(const TowerElement& other) {
  if (form() != other.form()) throw ParameterError("TowerElement: form mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += other.blocks_[i];
  return *this;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  return a.form() == b.form() && a.blocks_ == b.blocks_;
}

// ---------------------------------------------------------------------------

Product as2_mul(const TowerElement& x, const TowerElement& y) {
  require_form(x, y, Form::AS2, "as2_mul");
  OpCounts c;
  const auto r = as2_product(x.params().table, {x.block(0), x.block(1)},
                             {y.block(0), y.block(1)}, c);
  return {TowerElement::from_blocks(x.params_ptr(), {r.lo, r.hi}), c};
}

Product witt4_mul(const TowerElement& x, const TowerElement& y) {
  require_form(x, y, Form::WITT4, "witt4_mul");
  const auto& tp = x.params();
  const auto& table = tp.table;
  OpCounts c;
  // x = u0 + b u1, y = v0 + b v1 with u_i, v_i in the AS2 level.
  const Pair u0{x.block(0), x.block(1)}, u1{x.block(2), x.block(3)};
  const Pair v0{y.block(0), y.block(1)}, v1{y.block(2), y.block(3)};
  const auto p1 = as2_product(table, u0, v0, c);
  const auto p2 = as2_product(table, u1, v1, c);
  const auto p3 = as2_product(table, add(u0, u1, c), add(v0, v1, c), c);

  // b^2 = b + c2  =>  xy = (p1 + c2 p2) + b (p3 + p1)
  Pair c2p2 = times_a(table, p2, c);
  if (tp.witt_constant == WittConstant::AlphaA) c2p2 = times_alpha(table, c2p2, c);
  const auto low = add(p1, c2p2, c);
  const auto high = add(p3, p1, c);
  return {TowerElement::from_blocks(x.params_ptr(), {low.lo, low.hi, high.lo, high.hi}), c};
}

Product kummer3_mul(const TowerElement& x, const TowerElement& y) {
  require_form(x, y, Form::KUMMER3, "kummer3_mul");
  const auto& table = x.params().table;
  const auto &x0 = x.block(0), &x1 = x.block(1), &x2 = x.block(2);
  const auto &y0 = y.block(0), &y1 = y.block(1), &y2 = y.block(2);
  OpCounts c;
  const auto p0 = gnb_mul(x0, y0);
  const auto p1 = gnb_mul(x1, y1);
  const auto p2 = gnb_mul(x2, y2);
  const auto m01 = gnb_mul(x0 + x1, y0 + y1);
  const auto m02 = gnb_mul(x0 + x2, y0 + y2);
  const auto m12 = gnb_mul(x1 + x2, y1 + y2);
  c.subfield_muls += 6;
  c.subfield_adds += 6;

  // beta^3 = alpha folds the x1y2 + x2y1 and x2y2 terms down two places.
  const auto cross12 = m12 + p1 + p2;
  const auto c0 = p0 + table.apply(cross12);
  const auto c1 = m01 + p0 + p1 + table.apply(p2);
  const auto c2 = m02 + p0 + p2 + p1;
  c.table_applications += 2;
  c.subfield_adds += 9;
  return {TowerElement::from_blocks(x.params_ptr(), {c0, c1, c2}), c};
}

Product tower_mul(const TowerElement& x, const TowerElement& y) {
  switch (x.form()) {
  case Form::AS2:
    return as2_mul(x, y);
  case Form::WITT4:
    return witt4_mul(x, y);
  case Form::KUMMER3:
    return kummer3_mul(x, y);
  }
  throw ParameterError("tower_mul: unknown form");
}

TowerElement as2_absolute_trace(const TowerElement& x) {
  if (x.form() != Form::AS2) throw ParameterError("as2_absolute_trace: AS2 element required");
  TowerElement sum = x;
  TowerElement power = x;
  for (std::size_t i = 1; i < 2 * x.params().d(); ++i) {
    power = as2_mul(power, power).value;
    sum += power;
  }
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

// Incremental GF(2) elimination: each stored row keeps the combination of
// inserted vectors that produced it.
class Eliminator {
public:
  /// Returns the combination that reduces `v` to zero, if it is dependent.
  std::optional<BinaryPolynomial> insert(BinaryPolynomial v, BinaryPolynomial tag) {
    for (const auto& row : rows_) {
      if (v.coefficient(row.pivot)) {
        v += row.vec;
        tag += row.tag;
      }
    }
    if (v.is_zero()) return tag;
    const std::size_t pivot = *v.degree();
    for (auto& row : rows_) {
      if (row.vec.coefficient(pivot)) {
        row.vec += v;
        row.tag += tag;
      }
    }
    rows_.push_back({pivot, std::move(v), std::move(tag)});
    return std::nullopt;
  }

  /// After full rank: the tag whose vector is the unit vector e_j.
  const BinaryPolynomial& tag_for_unit(std::size_t j) const {
    for (const auto& row : rows_) {
      if (row.pivot == j) return row.tag;
    }
    throw InvariantError("Eliminator: no pivot for unit vector");
  }

private:
  struct Row {
    std::size_t pivot;
    BinaryPolynomial vec;
    BinaryPolynomial tag;
  };
  std::vector<Row> rows_;
};

BinaryPolynomial coords_of(const GnbElement& x) {
  return BinaryPolynomial::from_words({x.words().begin(), x.words().end()});
}

} // namespace

BinaryPolynomial minpoly_gauss_period(const gauss::MultTable& table) {
  const std::size_t d = table.params->n;
  Eliminator elim;
  auto v = GnbElement::one(table.params);
  for (std::size_t i = 0; i <= d; ++i) {
    if (auto relation = elim.insert(coords_of(v), BinaryPolynomial::monomial(i))) {
      if (*relation->degree() != d || !gf2x::is_irreducible(*relation)) {
        throw InvariantError("minpoly_gauss_period: Gauss period has a minimal polynomial of "
                             "degree " + std::to_string(*relation->degree()) + " or reducible");
      }
      return *relation;
    }
    v = table.apply(v);
  }
  throw InvariantError("minpoly_gauss_period: no linear relation among d + 1 powers");
}

BinaryPolynomial minpoly_gauss_period(const gauss::ParamsPtr& base) {
  return minpoly_gauss_period(gauss::mult_table(base));
}

OracleTower::OracleTower(TowerPtr params)
    : params_(std::move(params)), modulus_(minpoly_gauss_period(params_->table)) {
  const std::size_t d = params_->d();
  const auto& base = params_->base;

  // m(alpha) = 0 evaluated with GNB arithmetic.
  auto acc = GnbElement::zero(base);
  auto power = GnbElement::one(base);
  const auto alpha = GnbElement::basis(base, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    if (modulus_.coefficient(i)) acc += power;
    power = gnb_mul(power, alpha);
  }
  if (!acc.is_zero()) throw InvariantError("OracleTower: minimal polynomial does not vanish at alpha");

  images_.reserve(d);
  images_.push_back(gf2x::mod(BinaryPolynomial::monomial(1), modulus_));
  for (std::size_t i = 1; i < d; ++i) images_.push_back(gf2x::mod(gf2x::square(images_.back()), modulus_));

  Eliminator elim;
  for (std::size_t i = 0; i < d; ++i) {
    if (elim.insert(images_[i], BinaryPolynomial::monomial(i))) {
      throw InvariantError("OracleTower: conjugates of alpha are linearly dependent");
    }
  }
  preimages_.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& tag = elim.tag_for_unit(j);
    preimages_.push_back(GnbElement::from_words(base, {tag.words().begin(), tag.words().end()}));
  }
}

BinaryPolynomial OracleTower::to_poly(const GnbElement& x) const {
  BinaryPolynomial out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (x.coord(i)) out += images_[i];
  }
  return out;
}

GnbElement OracleTower::from_poly(const BinaryPolynomial& p) const {
  const auto reduced = gf2x::mod(p, modulus_);
  auto out = GnbElement::zero(params_->base);
  for (std::size_t j = 0; j < preimages_.size(); ++j) {
    if (reduced.coefficient(j)) out += preimages_[j];
  }
  return out;
}

TowerElement OracleTower::mul(const TowerElement& x, const TowerElement& y) const {
  if (x.form() != params_->form || y.form() != params_->form) {
    throw ParameterError("OracleTower::mul: form mismatch");
  }
  const auto z = BinaryPolynomial::monomial(1);
  auto mulm = [&](const BinaryPolynomial& a, const BinaryPolynomial& b) {
    return gf2x::mod(gf2x::mul_schoolbook(a, b), modulus_);
  };

  // Coefficients indexed by (power of the first generator, power of the second).
  constexpr std::size_t kMax = 5;
  std::array<std::array<BinaryPolynomial, kMax>, kMax> c{};
  auto exponents = [&](std::size_t block) -> std::pair<std::size_t, std::size_t> {
    if (params_->form == Form::WITT4) return {block % 2, block / 2};
    return {block, 0};
  };
  for (std::size_t i = 0; i < x.blocks().size(); ++i) {
    const auto [xi, xj] = exponents(i);
    const auto px = to_poly(x.block(i));
    for (std::size_t j = 0; j < y.blocks().size(); ++j) {
      const auto [yi, yj] = exponents(j);
      c[xi + yi][xj + yj] += mulm(px, to_poly(y.block(j)));
    }
  }

  switch (params_->form) {
  case Form::KUMMER3:
    // u^k = z u^(k-3)
    for (std::size_t k = kMax - 1; k >= 3; --k) {
      c[k - 3][0] += mulm(z, c[k][0]);
      c[k][0] = {};
    }
    break;
  case Form::WITT4:
    // b^2 = b + c2
    for (std::size_t j = kMax - 1; j >= 2; --j) {
      for (std::size_t i = 0; i + 1 < kMax; ++i) {
        if (c[i][j].is_zero()) continue;
        c[i][j - 1] += c[i][j];
        c[i + 1][j - 2] +=
            params_->witt_constant == WittConstant::A ? c[i][j] : mulm(z, c[i][j]);
        c[i][j] = {};
      }
    }
    [[fallthrough]];
  case Form::AS2:
    // a^2 = a + z
    for (std::size_t i = kMax - 1; i >= 2; --i) {
      for (std::size_t j = 0; j < kMax; ++j) {
        if (c[i][j].is_zero()) continue;
        c[i - 1][j] += c[i][j];
        c[i - 2][j] += mulm(z, c[i][j]);
        c[i][j] = {};
      }
    }
    break;
  }

  std::vector<GnbElement> blocks;
  for (std::size_t b = 0; b < block_count(params_->form); ++b) {
    const auto [bi, bj] = exponents(b);
    blocks.push_back(from_poly(c[bi][bj]));
  }
  return TowerElement::from_blocks(params_, std::move(blocks));
}

TowerElement oracle_mul(const TowerElement& x, const TowerElement& y) {
  return OracleTower(x.params_ptr()).mul(x, y);
}

} // namespace gf2nbasis::towers
