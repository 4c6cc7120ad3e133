#pragma once

// Finite lexicographic sums of Archimedean blocks and their elements.
//
// A GroupSpec lists blocks from the most significant coordinate (index 0)
// down. Every block is a Z_(p)-, Z- or Q-module inside R with a formal
// basis b0 = 1, b1, b2, ...; only PSpan blocks use basis symbols beyond b0.

#include "oag/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace oag {

enum class BlockKind { Int, Rat, PLocal, PSpan };

struct Block {
  BlockKind kind = BlockKind::Rat;
  std::uint32_t p = 0;  // PLocal / PSpan only

  static Block integers() { return {BlockKind::Int, 0}; }
  static Block rationals() { return {BlockKind::Rat, 0}; }
  static Block plocal(std::uint32_t p) { return {BlockKind::PLocal, p}; }
  static Block pspan(std::uint32_t p) { return {BlockKind::PSpan, p}; }

  // True when nB == B.
  bool divisible_by(std::int64_t n) const;

  bool operator==(const Block&) const = default;
};

class GroupSpec {
 public:
  // Throws PreconditionError on an empty list or a non-prime p.
  explicit GroupSpec(std::vector<Block> blocks);

  std::size_t size() const { return blocks_->size(); }
  const Block& operator[](std::size_t i) const { return (*blocks_)[i]; }
  const std::vector<Block>& blocks() const { return *blocks_; }
  auto begin() const { return blocks_->begin(); }
  auto end() const { return blocks_->end(); }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.blocks_ == b.blocks_ || *a.blocks_ == *b.blocks_;
  }

 private:
  std::shared_ptr<const std::vector<Block>> blocks_;
};

// Sparse rational coefficient vector over the basis symbols of one block.
// Zero coefficients are never stored. Values outside the block (e.g.
// non-integers in an Int block) are allowed here; block_contains checks.
class BlockElement {
 public:
  using Terms = std::map<std::uint32_t, mpq_class>;

  BlockElement() = default;
  explicit BlockElement(const mpq_class& scalar);
  explicit BlockElement(Terms terms);

  static BlockElement basis(std::uint32_t index, const mpq_class& coeff = 1);

  const Terms& terms() const { return terms_; }
  mpq_class coefficient(std::uint32_t index) const;
  bool is_zero() const { return terms_.empty(); }
  // Largest basis index with a nonzero coefficient; 0 when zero.
  std::uint32_t max_basis() const;

  BlockElement& operator+=(const BlockElement& other);
  BlockElement& operator-=(const BlockElement& other);
  BlockElement& operator*=(const mpq_class& factor);

  friend BlockElement operator+(BlockElement a, const BlockElement& b) { return a += b; }
  friend BlockElement operator-(BlockElement a, const BlockElement& b) { return a -= b; }
  friend BlockElement operator-(BlockElement a) { return a *= -1; }
  friend BlockElement operator*(const mpq_class& k, BlockElement a) { return a *= k; }
  friend bool operator==(const BlockElement&, const BlockElement&) = default;

 private:
  Terms terms_;
};

bool block_contains(const Block& block, const BlockElement& value);

// value in n * block.
bool block_divisible(const Block& block, const BlockElement& value, std::int64_t n);

class Element {
 public:
  // Throws PreconditionError when a coordinate lies outside its block.
  Element(GroupSpec spec, std::vector<BlockElement> coords);

  static Element zero(const GroupSpec& spec);
  static Element unit(const GroupSpec& spec, std::size_t coord, std::uint32_t basis = 0,
                      const mpq_class& coeff = 1);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return coords_.size(); }
  const BlockElement& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BlockElement>& coords() const { return coords_; }
  bool is_zero() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a);
  friend Element operator*(std::int64_t k, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  struct Unchecked {};
  Element(GroupSpec spec, std::vector<BlockElement> coords, Unchecked);
  friend Element divide_exact(const Element& a, std::int64_t n);

  GroupSpec spec_;
  std::vector<BlockElement> coords_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element scale(std::int64_t k, const Element& a);

// a in nG.
bool is_divisible(const Element& a, std::int64_t n);

// The unique y with n*y == a. Throws NotDivisible.
Element divide_exact(const Element& a, std::int64_t n);

// Lexicographic order, most significant coordinate first.
std::strong_ordering compare(const Element& a, const Element& b);

inline std::strong_ordering operator<=>(const Element& a, const Element& b) {
  return compare(a, b);
}

void require_same_spec(const GroupSpec& a, const GroupSpec& b);

}  // namespace oag
