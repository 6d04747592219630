#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gda/algebra.hpp"
#include "gda/factors.hpp"

namespace gda {

// Exponent notation: (k, l) stands for orders (2^k, 2^l).
struct DTuple {
  int k = 1;
  int l = 1;
  int mu = 1;
  int nu = 1;
  auto tie() const { return std::tie(k, l, mu, nu); }
  bool operator==(const DTuple& o) const { return tie() == o.tie(); }
  bool operator<(const DTuple& o) const { return tie() < o.tie(); }
};

struct CTuple {
  int m = 1;
  int eta = 1;
  auto tie() const { return std::tie(m, eta); }
  bool operator==(const CTuple& o) const { return tie() == o.tie(); }
  bool operator<(const CTuple& o) const { return tie() < o.tie(); }
};

struct Characteristic {
  std::vector<DTuple> d;  // sorted
  std::vector<CTuple> c;  // sorted
  std::optional<std::pair<int, int>> e;  // (k, rho)
  bool h = false;
  bool central_complex = false;
  std::vector<int> odd_part;  // primary orders

  bool operator==(const Characteristic& o) const {
    return d == o.d && c == o.c && e == o.e && h == o.h && central_complex == o.central_complex &&
           odd_part == o.odd_part;
  }
};

struct TruncatedCharacteristic {
  std::vector<std::pair<int, int>> d;
  std::vector<int> c;
  bool operator==(const TruncatedCharacteristic& o) const { return d == o.d && c == o.c; }
};

enum class Parity { Even, Odd, Other };

Characteristic characteristic(const FactorList& factors);
TruncatedCharacteristic truncated(const Characteristic& chi);
// Even: no -1 signs, allowing D(1,1;-,+) and D(1,1;+,-). Odd: exactly one -1.
Parity d_parity(const std::vector<DTuple>& d);

std::string characteristic_to_string(const Characteristic& chi);
std::string truncated_to_string(const TruncatedCharacteristic& t);

struct CliffordCounts {
  int64_t d_plus = 0;
  int64_t d_minus = 0;
  bool brute_checked = false;
};

// Closed form ((4^m + 2^m)/2, (4^m - 2^m)/2); with brute = true the support
// counts of x^2 = +-1 in D(2,2;+,+)^m are enumerated and must agree.
CliffordCounts clifford_counts(int m, bool brute = false);

struct SolutionSupport {
  int64_t count = 0;      // degrees admitting a homogeneous solution
  int64_t finite = 0;     // ... whose solution set is finite up to positive scalars
  int64_t continuum = 0;  // ... carrying a continuous family
};

// Homogeneous solutions of x^(2^k) = sign * I, counted by degree.
SolutionSupport solution_support(const Presentation& p, int k, int sign);
int64_t solution_support_count(const Presentation& p, int k, int sign);

bool central_solution_exists(const Presentation& p, int k, int sign);

// (a0, a1): ordered degree pairs (g, h) carrying x in R_g, y in R_h with
// x^(2^k) = y^(2^l) = I that commute (a0) or anticommute (a1).
std::pair<int64_t, int64_t> pair_solution_counts(const Presentation& p, int k, int l);

std::optional<int> minimal_noncommuting_degree(const Presentation& p);

bool is_commutative(const Presentation& p);

// (num_complex, num_real) simple summands of a commutative algebra.
std::pair<int64_t, int64_t> ungraded_decomposition_commutative(const Presentation& p);

}  // namespace gda
