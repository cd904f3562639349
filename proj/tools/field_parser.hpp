#pragma once

#include <stdexcept>
#include <string>

#include "folia/plane_field.hpp"

namespace folia::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Sum of terms "coeff mono... Dx|Dy", e.g. "x^2*y Dx - (1+2i) x*y^2 Dy".
/// Coefficients may also be written with rational parts, "(1/2-3i)", as printed.
PolyVectorField parse_field(const std::string& text);

/// Same grammar without the trailing Dx / Dy.
BiPoly parse_polynomial(const std::string& text);

}  // namespace folia::cli
