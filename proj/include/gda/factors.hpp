#pragma once

#include <string>
#include <vector>

#include "gda/algebra.hpp"

namespace gda {

enum class FactorType { C, D, E, H, RG, CG, Pauli };

// One tensor factor of an algebra expression. Orders are actual orders,
// not exponents: D(2,4;...) has generators of orders 2 and 4.
struct Factor {
  FactorType type = FactorType::C;
  int a = 0;
  int b = 0;
  int s1 = 1;
  int s2 = 1;
  std::vector<int> group;                // RG, CG, Pauli
  std::vector<std::vector<int>> matrix;  // Pauli, exponents mod exp(group)

  auto tie() const { return std::tie(type, a, b, s1, s2, group, matrix); }
  bool operator==(const Factor& o) const { return tie() == o.tie(); }
  bool operator<(const Factor& o) const { return tie() < o.tie(); }
};

using FactorList = std::vector<Factor>;

Factor factor_c(int m, int eta);
Factor factor_d(int k_ord, int l_ord, int mu, int nu);
Factor factor_e(int n_ord, int eps);
Factor factor_h();
Factor factor_rg(std::vector<int> orders);
Factor factor_cg(std::vector<int> orders);
Factor factor_pauli(std::vector<int> orders, std::vector<std::vector<int>> matrix);

// Number of presentation generators contributed by a factor.
int generator_count(const Factor& f);
// Index of the first generator of each factor inside presentation_of(fs).
std::vector<int> generator_offsets(const FactorList& fs);

bool is_one_dim(const Factor& f);

Presentation factor_presentation(const Factor& f);
Presentation presentation_of(const FactorList& fs);

int64_t factor_dim(const Factor& f);
int64_t total_dim(const FactorList& fs);

std::string factor_to_string(const Factor& f);
std::string factors_to_string(const FactorList& fs);

}  // namespace gda
