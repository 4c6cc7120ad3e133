#include "oag/syntax.hpp"

#include "oag/arith.hpp"

#include <cctype>
#include <limits>

namespace oag {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Character after the optional sign and digits starting here.
  char peek_after_number() {
    skip_space();
    std::size_t q = pos_;
    if (q < text_.size() && (text_[q] == '-' || text_[q] == '+')) ++q;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    return q < text_.size() ? text_[q] : '\0';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  mpz_class unsigned_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpz_class signed_integer() {
    bool negative = false;
    while (true) {
      if (accept("-"))
        negative = !negative;
      else if (!accept("+"))
        break;
    }
    mpz_class n = unsigned_integer();
    return negative ? mpz_class(-n) : n;
  }

  std::int64_t small_integer(const mpz_class& n) {
    if (!n.fits_slong_p()) fail("number out of range");
    return n.get_si();
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Block> parse_blocks(Cursor& in) {
  std::vector<Block> blocks;
  do {
    Block block;
    std::size_t at = in.position();
    if (in.accept("Zloc")) {
      in.expect("(");
      auto p = in.small_integer(in.unsigned_integer());
      if (!is_prime(static_cast<std::uint64_t>(p))) throw ParseError(std::to_string(p) + " is not prime", at);
      in.expect(")");
      block = Block::plocal(static_cast<std::uint32_t>(p));
    } else if (in.accept("Gp")) {
      in.expect("(");
      auto p = in.small_integer(in.unsigned_integer());
      if (!is_prime(static_cast<std::uint64_t>(p))) throw ParseError(std::to_string(p) + " is not prime", at);
      in.expect(")");
      block = Block::pspan(static_cast<std::uint32_t>(p));
    } else if (in.accept("Z")) {
      block = Block::integers();
    } else if (in.accept("Q")) {
      block = Block::rationals();
    } else {
      in.fail("expected a block (Z, Q, Zloc(p) or Gp(p))");
    }
    std::int64_t repeat = 1;
    if (in.accept("^")) {
      repeat = in.small_integer(in.unsigned_integer());
      if (repeat < 1 || repeat > 4096) in.fail("repeat count must be between 1 and 4096");
    }
    blocks.insert(blocks.end(), static_cast<std::size_t>(repeat), block);
  } while (in.accept(","));
  return blocks;
}

mpq_class parse_rational(Cursor& in) {
  mpz_class num = in.unsigned_integer();
  mpz_class den = 1;
  if (in.accept("/")) {
    den = in.unsigned_integer();
    if (den == 0) in.fail("zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// [sign] (rational ["*" "b" n] | "b" n)
BlockElement parse_coord_term(Cursor& in, bool negative) {
  while (true) {
    if (in.accept("-"))
      negative = !negative;
    else if (!in.accept("+"))
      break;
  }
  mpq_class coeff = 1;
  std::uint32_t basis = 0;
  if (in.peek() == 'b') {
    in.expect("b");
    basis = static_cast<std::uint32_t>(in.small_integer(in.unsigned_integer()));
  } else {
    coeff = parse_rational(in);
    if (in.accept("*")) {
      in.expect("b");
      basis = static_cast<std::uint32_t>(in.small_integer(in.unsigned_integer()));
    }
  }
  if (negative) coeff = -coeff;
  return BlockElement::basis(basis, coeff);
}

BlockElement parse_coord(Cursor& in) {
  BlockElement value = parse_coord_term(in, false);
  while (true) {
    if (in.accept("+"))
      value += parse_coord_term(in, false);
    else if (in.accept("-"))
      value += parse_coord_term(in, true);
    else
      break;
  }
  return value;
}

Element parse_element_at(Cursor& in, const GroupSpec& spec) {
  std::size_t at = in.position();
  in.expect("(");
  std::vector<BlockElement> coords{parse_coord(in)};
  while (in.accept("|")) coords.push_back(parse_coord(in));
  in.expect(")");
  if (coords.size() != spec.size())
    throw ParseError("element has " + std::to_string(coords.size()) + " coordinates, spec has " +
                         std::to_string(spec.size()),
                     at);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!block_contains(spec[i], coords[i]))
      throw ParseError("coordinate " + std::to_string(i) + " is not in block " + to_string(spec[i]),
                       at);
  return Element(spec, std::move(coords));
}

ConvexCut parse_cut(Cursor& in) {
  in.expect("cut");
  return {static_cast<std::size_t>(in.small_integer(in.unsigned_integer()))};
}

// int "x" | "x"
std::int64_t parse_kx(Cursor& in) {
  std::int64_t k = 1;
  bool negative = false;
  while (true) {
    if (in.accept("-"))
      negative = !negative;
    else if (!in.accept("+"))
      break;
  }
  if (in.peek() != 'x') k = in.small_integer(in.unsigned_integer());
  in.expect("x");
  if (k == 0) in.fail("coefficient of x must be nonzero");
  return negative ? -k : k;
}

// [sign] [int "*"] "a" n
void parse_term_item(Cursor& in, Term& term, bool negative) {
  while (true) {
    if (in.accept("-"))
      negative = !negative;
    else if (!in.accept("+"))
      break;
  }
  std::int64_t c = 1;
  if (in.peek() != 'a') {
    c = in.small_integer(in.unsigned_integer());
    if (c == 0 && in.peek() != '*') return;  // the literal "0"
    in.expect("*");
  }
  in.expect("a");
  auto index = static_cast<std::size_t>(in.small_integer(in.unsigned_integer()));
  if (negative) c = -c;
  term.coeffs[index] = checked_add(term.coeffs[index], c);
}

Term parse_term(Cursor& in) {
  Term term;
  parse_term_item(in, term, false);
  while (true) {
    if (in.accept("+"))
      parse_term_item(in, term, false);
    else if (in.accept("-"))
      parse_term_item(in, term, true);
    else
      break;
  }
  std::erase_if(term.coeffs, [](const auto& kv) { return kv.second == 0; });
  return term;
}

bool at_kx(Cursor& in) {
  char c = in.peek();
  if (c == 'x') return true;
  return in.peek_after_number() == 'x';
}

Cmp parse_cmp(Cursor& in) {
  if (in.accept("<=")) return Cmp::Le;
  if (in.accept(">=")) return Cmp::Ge;
  if (in.accept("<")) return Cmp::Lt;
  if (in.accept(">")) return Cmp::Gt;
  if (in.accept("=")) return Cmp::Eq;
  in.fail("expected a comparison");
}

Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::Lt: return Cmp::Gt;
    case Cmp::Le: return Cmp::Ge;
    case Cmp::Gt: return Cmp::Lt;
    case Cmp::Ge: return Cmp::Le;
    case Cmp::Eq: return Cmp::Eq;
  }
  return c;
}

Cmp negate(Cmp c) {
  switch (c) {
    case Cmp::Lt: return Cmp::Ge;
    case Cmp::Le: return Cmp::Gt;
    case Cmp::Gt: return Cmp::Le;
    case Cmp::Ge: return Cmp::Lt;
    case Cmp::Eq: return Cmp::Eq;
  }
  return c;
}

Literal parse_literal(Cursor& in) {
  bool negated = in.accept("!");
  if (in.accept("cong")) {
    in.expect("[");
    std::int64_t m = in.small_integer(in.unsigned_integer());
    if (m < 1) in.fail("modulus must be positive");
    in.expect(",");
    ConvexCut alpha = parse_cut(in);
    in.expect("]");
    in.expect("(");
    std::int64_t k = parse_kx(in);
    in.expect(",");
    Term t = parse_term(in);
    in.expect(")");
    return negated ? Literal::ncong(k, m, alpha, t) : Literal::cong(k, m, alpha, t);
  }
  if (in.accept("ing")) {
    in.expect("[");
    ConvexCut alpha = parse_cut(in);
    in.expect("]");
    in.expect("(");
    std::int64_t k = parse_kx(in);
    in.expect(",");
    Term t = parse_term(in);
    in.expect(")");
    return negated ? Literal::not_in_coset(k, alpha, t) : Literal::in_coset(k, alpha, t);
  }
  std::int64_t k = 0;
  Term t;
  Cmp cmp;
  if (at_kx(in)) {
    k = parse_kx(in);
    cmp = parse_cmp(in);
    t = parse_term(in);
  } else {
    t = parse_term(in);
    cmp = flip(parse_cmp(in));
    if (!at_kx(in)) in.fail("comparison must mention x on one side");
    k = parse_kx(in);
  }
  if (negated && cmp == Cmp::Eq) return Literal::neq(k, t);
  return Literal::ord(k, negated ? negate(cmp) : cmp, t);
}

std::string rational(const mpq_class& q) { return q.get_str(); }

std::string kx(std::int64_t k) { return std::to_string(k) + "x"; }

const char* cmp_text(Cmp c) {
  switch (c) {
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Eq: return "=";
    case Cmp::Ge: return ">=";
    case Cmp::Gt: return ">";
  }
  return "=";
}

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  Cursor in(text);
  in.expect("lex");
  in.expect("(");
  std::vector<Block> blocks = parse_blocks(in);
  in.expect(")");
  if (!in.done()) in.fail("trailing input");
  return GroupSpec(std::move(blocks));
}

Element parse_element(std::string_view text, const GroupSpec& spec) {
  Cursor in(text);
  Element out = parse_element_at(in, spec);
  if (!in.done()) in.fail("trailing input");
  return out;
}

std::vector<Element> parse_params(std::string_view text, const GroupSpec& spec) {
  Cursor in(text);
  std::vector<Element> out;
  while (!in.done()) {
    out.push_back(parse_element_at(in, spec));
    if (!in.accept(",")) in.accept(";");
  }
  return out;
}

std::vector<Literal> parse_formula(std::string_view text) {
  Cursor in(text);
  std::vector<Literal> out{parse_literal(in)};
  while (in.accept("&")) out.push_back(parse_literal(in));
  if (!in.done()) in.fail("trailing input");
  return out;
}

std::string to_string(const Block& block) {
  switch (block.kind) {
    case BlockKind::Int: return "Z";
    case BlockKind::Rat: return "Q";
    case BlockKind::PLocal: return "Zloc(" + std::to_string(block.p) + ")";
    case BlockKind::PSpan: return "Gp(" + std::to_string(block.p) + ")";
  }
  return "?";
}

std::string to_string(const GroupSpec& spec) {
  std::string out = "lex(";
  for (std::size_t i = 0; i < spec.size();) {
    std::size_t run = 1;
    while (i + run < spec.size() && spec[i + run] == spec[i]) ++run;
    if (i > 0) out += ", ";
    out += to_string(spec[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out + ")";
}

std::string to_string(const BlockElement& value, const Block& block) {
  if (value.is_zero()) return "0";
  if (block.kind != BlockKind::PSpan) return rational(value.coefficient(0));
  std::string out;
  for (const auto& [b, c] : value.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += rational(c) + "*";
    out += "b" + std::to_string(b);
  }
  return out;
}

std::string to_string(const Element& element) {
  std::string out = "(";
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (i > 0) out += " | ";
    out += to_string(element[i], element.spec()[i]);
  }
  return out + ")";
}

std::string to_string(const Term& term) {
  if (term.is_zero()) return "0";
  std::string out;
  for (const auto& [index, c] : term.coeffs) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*a" + std::to_string(index);
  }
  return out;
}

std::string to_string(ConvexCut cut) { return "cut" + std::to_string(cut.s); }

std::string to_string(const Literal& lit) {
  std::string args = "(" + kx(lit.k) + ", " + to_string(lit.t) + ")";
  switch (lit.kind) {
    case LiteralKind::Cong:
      return "cong[" + std::to_string(lit.m) + ", " + to_string(lit.alpha) + "]" + args;
    case LiteralKind::NCong:
      return "!cong[" + std::to_string(lit.m) + ", " + to_string(lit.alpha) + "]" + args;
    case LiteralKind::InCoset:
      return "ing[" + to_string(lit.alpha) + "]" + args;
    case LiteralKind::NotInCoset:
      return "!ing[" + to_string(lit.alpha) + "]" + args;
    case LiteralKind::Ord:
      return kx(lit.k) + " " + cmp_text(lit.cmp) + " " + to_string(lit.t);
    case LiteralKind::Neq:
      return "!" + kx(lit.k) + " = " + to_string(lit.t);
  }
  return "?";
}

std::string to_string(const std::vector<Literal>& conj) {
  std::string out;
  for (const Literal& lit : conj) {
    if (!out.empty()) out += " & ";
    out += to_string(lit);
  }
  return out;
}

}  // namespace oag
