#ifndef NEGDER_PARSER_HPP
#define NEGDER_PARSER_HPP

#include <string>
#include <vector>

#include "negder/polynomial.hpp"

namespace negder {

// Parses the ASCII polynomial grammar
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := (var | coeff | '(' poly ')') ('^' uint)?
//   coeff  := uint | uint '/' uint
//
// over the given variable names. Throws ParseError with a byte position on
// syntax errors and unknown variable names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

// Default variable names x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

}  // namespace negder

#endif
