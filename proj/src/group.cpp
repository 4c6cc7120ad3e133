#include "oag/group.hpp"

#include "oag/arith.hpp"
#include "oag/order.hpp"

#include <cstdlib>
#include <string>

namespace oag {

bool Block::divisible_by(std::int64_t n) const {
  n = std::llabs(n);
  switch (kind) {
    case BlockKind::Int:
      return n == 1;
    case BlockKind::Rat:
      return true;
    case BlockKind::PLocal:
    case BlockKind::PSpan:
      return n % p != 0;
  }
  return false;
}

GroupSpec::GroupSpec(std::vector<Block> blocks) {
  if (blocks.empty()) throw PreconditionError("group spec needs at least one block");
  for (const Block& b : blocks) {
    bool local = b.kind == BlockKind::PLocal || b.kind == BlockKind::PSpan;
    if (local && !is_prime(b.p))
      throw PreconditionError("block parameter " + std::to_string(b.p) + " is not prime");
  }
  blocks_ = std::make_shared<const std::vector<Block>>(std::move(blocks));
}

BlockElement::BlockElement(const mpq_class& scalar) {
  if (scalar != 0) terms_.emplace(0, scalar);
}

BlockElement::BlockElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (auto& [index, c] : terms_) c.canonicalize();
}

BlockElement BlockElement::basis(std::uint32_t index, const mpq_class& coeff) {
  return BlockElement(Terms{{index, coeff}});
}

mpq_class BlockElement::coefficient(std::uint32_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::uint32_t BlockElement::max_basis() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

BlockElement& BlockElement::operator+=(const BlockElement& other) {
  for (const auto& [index, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BlockElement& BlockElement::operator-=(const BlockElement& other) {
  for (const auto& [index, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(index, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BlockElement& BlockElement::operator*=(const mpq_class& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= factor;
  return *this;
}

bool block_contains(const Block& block, const BlockElement& value) {
  const auto& terms = value.terms();
  if (block.kind != BlockKind::PSpan && !terms.empty() && terms.rbegin()->first != 0) return false;
  for (const auto& [index, c] : terms) {
    switch (block.kind) {
      case BlockKind::Int:
        if (c.get_den() != 1) return false;
        break;
      case BlockKind::Rat:
        break;
      case BlockKind::PLocal:
      case BlockKind::PSpan:
        if (valuation(c, block.p) < 0) return false;
        break;
    }
  }
  return true;
}

bool block_divisible(const Block& block, const BlockElement& value, std::int64_t n) {
  switch (block.kind) {
    case BlockKind::Rat:
      return true;
    case BlockKind::Int: {
      mpz_class v = value.coefficient(0).get_num();
      return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(std::llabs(n))) != 0;
    }
    case BlockKind::PLocal:
    case BlockKind::PSpan: {
      int need = valuation(n, block.p);
      if (need == 0) return true;
      for (const auto& [index, c] : value.terms())
        if (valuation(c, block.p) < need) return false;
      return true;
    }
  }
  return false;
}

void require_same_spec(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) throw SpecMismatch("elements belong to different group specs");
}

Element::Element(GroupSpec spec, std::vector<BlockElement> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
  if (coords_.size() != spec_.size())
    throw PreconditionError("element has " + std::to_string(coords_.size()) +
                            " coordinates, spec has " + std::to_string(spec_.size()));
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!block_contains(spec_[i], coords_[i]))
      throw PreconditionError("coordinate " + std::to_string(i) + " is outside its block");
}

Element::Element(GroupSpec spec, std::vector<BlockElement> coords, Unchecked)
    : spec_(std::move(spec)), coords_(std::move(coords)) {}

Element Element::zero(const GroupSpec& spec) {
  return Element(spec, std::vector<BlockElement>(spec.size()), Unchecked{});
}

Element Element::unit(const GroupSpec& spec, std::size_t coord, std::uint32_t basis,
                      const mpq_class& coeff) {
  std::vector<BlockElement> coords(spec.size());
  coords.at(coord) = BlockElement::basis(basis, coeff);
  return Element(spec, std::move(coords));
}

bool Element::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Element& Element::operator+=(const Element& other) {
  require_same_spec(spec_, other.spec_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_spec(spec_, other.spec_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Element operator-(const Element& a) { return scale(-1, a); }

Element operator*(std::int64_t k, const Element& a) {
  Element out = a;
  mpq_class factor(static_cast<long>(k));
  for (auto& c : out.coords_) c *= factor;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  return a.spec_ == b.spec_ && a.coords_ == b.coords_;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element sub(const Element& a, const Element& b) { return a - b; }
Element neg(const Element& a) { return -a; }
Element scale(std::int64_t k, const Element& a) { return k * a; }

bool is_divisible(const Element& a, std::int64_t n) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!block_divisible(a.spec()[i], a[i], n)) return false;
  return true;
}

Element divide_exact(const Element& a, std::int64_t n) {
  if (n == 0 || !is_divisible(a, n))
    throw NotDivisible("element is not divisible by " + std::to_string(n));
  std::vector<BlockElement> coords = a.coords();
  mpq_class inv(1, static_cast<unsigned long>(std::llabs(n)));
  if (n < 0) inv = -inv;
  for (auto& c : coords) c *= inv;
  return Element(a.spec(), std::move(coords), Element::Unchecked{});
}

std::strong_ordering compare(const Element& a, const Element& b) {
  require_same_spec(a.spec(), b.spec());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = compare_blocks(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace oag
