#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gda/factors.hpp"

namespace gda {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// EXPR := FACTOR ('*' FACTOR)*
// FACTOR := C(INT;SIGN) | D(INT,INT;SIGN,SIGN) | E(INT;SIGN) | H | CG[GROUP]
//         | R[GROUP] | Pauli(GROUP; MATRIX) | NAME
// Catalog names expand to their factors. Warnings (odd C orders with a minus
// sign) are appended to `warnings` when given.
FactorList parse_expr(const std::string& text, std::vector<std::string>* warnings = nullptr);

}  // namespace gda
