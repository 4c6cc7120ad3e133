#pragma once

// Text forms used by the command line.
//
//   spec     lex(Q, Gp(2)^2, Zloc(3), Z)
//   element  (1/2 | b0 + 2*b1 | 0)
//   formula  cong[4, cut2](3x, 1*a0 + -2*a1) & 1x < 1*a2
//
// Printers emit text the parsers read back to an identical value.

#include "oag/formula.hpp"
#include "oag/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace oag {

GroupSpec parse_spec(std::string_view text);
Element parse_element(std::string_view text, const GroupSpec& spec);
// Zero or more elements, optionally separated by ',' or ';'.
std::vector<Element> parse_params(std::string_view text, const GroupSpec& spec);
std::vector<Literal> parse_formula(std::string_view text);

std::string to_string(const GroupSpec& spec);
std::string to_string(const Block& block);
std::string to_string(const BlockElement& value, const Block& block);
std::string to_string(const Element& element);
std::string to_string(const Term& term);
std::string to_string(const Literal& lit);
std::string to_string(const std::vector<Literal>& conj);
std::string to_string(ConvexCut cut);

}  // namespace oag
