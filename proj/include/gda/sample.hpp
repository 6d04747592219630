#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gda/factors.hpp"
#include "gda/group.hpp"
#include "gda/normalize.hpp"

namespace gda {

struct SampleOptions {
  int max_factors = 3;
  int64_t max_dim = 64;
  int max_exp = 3;          // 2-power orders up to 2^max_exp
  bool allow_odd = true;    // odd C orders and odd group algebras
  bool allow_e = true;
  bool allow_h = true;
};

// Random tensor product of basic factors with at most one E or H factor.
FactorList random_factor_list(std::mt19937_64& rng, const SampleOptions& opt = {});

// Uniform choice among the applicable moves.
NormalizeOptions random_chooser(std::mt19937_64& rng);

// Every tensor product of basic factors (C, D, at most one of E and H) plus
// an odd group algebra whose grading group is isomorphic to g and whose
// dimension is at most max_dim. Also includes CG[g]. Sorted, deduplicated.
std::vector<FactorList> products_with_support(const FiniteAbelianGroup& g, int64_t max_dim);

}  // namespace gda
