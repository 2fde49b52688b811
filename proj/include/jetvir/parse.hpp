#pragma once

// Text grammar for polynomial literals.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := INT ['/' INT] | 'x' [INT] ['^' INT] | 'z' ['^' ['-'] INT]
//
// Variables are x0..x{d-1}; a bare 'x' means x0 and is only accepted when
// d = 1. 'z' is the contour variable and may carry negative exponents.
// Vector-valued literals separate components with ';'.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jetvir/poly.hpp"

namespace jetvir {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::invalid_argument(message + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Polynomial in x only.
Poly parse_poly(std::string_view text, int d);
/// Laurent polynomial in z only.
LaurentPoly parse_laurent(std::string_view text);
/// Polynomial in x with Laurent-in-z coefficients.
FieldPoly parse_field(std::string_view text, int d);

std::vector<Poly> parse_poly_vector(std::string_view text, int d);
std::vector<FieldPoly> parse_field_vector(std::string_view text, int d);
/// Trajectory q^mu(z): exactly d components.
LaurentVector parse_trajectory(std::string_view text, int d);

}  // namespace jetvir
