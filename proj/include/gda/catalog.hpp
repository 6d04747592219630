#pragma once

#include <string>
#include <vector>

#include "gda/algebra.hpp"

namespace gda {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidBicharacter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// C(m; eta): x^m = eta I over Z_m. An odd m with eta = -1 is rewritten to
// eta = +1 (x -> -x) and a notice is stored when `notice` is given.
Presentation basic_c(int m, int eta, std::string* notice = nullptr);

// D(k, l; mu, nu): u^k = mu I, v^l = nu I, uv = -vu. Orders must be powers
// of two; k > l is swapped together with the signs.
Presentation basic_d(int k_ord, int l_ord, int mu, int nu);

// E(n; eps): J^2 = -I, v^n = eps I, Jv = -vJ over Z_n.
Presentation basic_e(int n_ord, int eps);

Presentation quaternion();
Presentation group_algebra(const FiniteAbelianGroup& g);
Presentation complex_group_algebra(const FiniteAbelianGroup& g);

// beta is read against the declared cyclic factors of g.
Presentation pauli(const FiniteAbelianGroup& g, const Bicharacter& beta);

// C2, H2, H4, M2_2, M2_4, M2_8, M2C_Z4, M4_4, H.
Presentation named(const std::string& name);
const std::vector<std::string>& named_catalog();

}  // namespace gda
