#pragma once

#include <string_view>

#include "practium/natural.hpp"

namespace practium {

// Certificate-file expression grammar:
//   term := int | int '^' int | term '*' term
// i.e. a product of decimal integers and integer powers, e.g. "2^316" or
// "3^35 * 2". Whitespace between tokens is ignored. Raises ParseError.
Natural parse_product(std::string_view text);

// Command-line superset: products joined by top-level '+' and '-', e.g.
// "2^316+2" or "3^71-3". The result may be negative.
Integer parse_sum(std::string_view text);

}  // namespace practium
