#pragma once

#include <string>
#include <string_view>

#include "hpt/graded_poly.hpp"

namespace hpt {

// Position of the first character of a parsed snippet inside a larger
// document, so that syntax errors point into the original file.
struct SourcePos {
  int line = 1;
  int column = 1;
};

// Grammar (whitespace-insensitive):
//   poly   := "0" | term ("+" term)*
//   term   := [uint] ["[N" (("+"|"-") uint)? "]"] factor*
//   factor := ("a" | "q" | "t") ["^" ["-"] uint ["/2"]]
// Only t may carry a half-integer exponent. An empty input is the zero
// polynomial. Laurent polynomials additionally accept "-" between terms.
FamilyPoincare parse_family(std::string_view text, SourcePos at = {});
Poincare parse_poincare(std::string_view text, SourcePos at = {});
LaurentPoly parse_laurent(std::string_view text, SourcePos at = {});
TriDegree parse_monomial(std::string_view text, SourcePos at = {});

std::string format(const Poincare& p);
std::string format(const FamilyPoincare& f);
std::string format(const LaurentPoly& p);
std::string format_degree(TriDegree d);
std::string format_t(int t2);

}  // namespace hpt
