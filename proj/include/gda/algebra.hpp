#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gda/group.hpp"

namespace gda {

class NotDivisionGrading : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IdentityKind { OneDim, CentralJ, NoncentralJ, Quaternion };

const char* kind_name(IdentityKind k);

// x^power = sign * I; x_i x_j = zeta^comm[j] x_j x_i.
struct Generator {
  GroupElement degree;
  int power = 2;
  int sign = 1;
  std::vector<int> comm;
  bool j_anti = false;  // anticommutes with J (NoncentralJ only)
};

// zeta^coeff * q * x_1^exps[0] ... x_r^exps[r-1], q in {1,i,j,k}.
// For J kinds zeta lives in R_e = R[J] with J = zeta^(N/4); for the other
// kinds only the real values zeta^0 and zeta^(N/2) occur.
struct UnitMonomial {
  int coeff = 0;
  int quat = 0;
  std::vector<int> exps;

  bool operator==(const UnitMonomial& o) const {
    return coeff == o.coeff && quat == o.quat && exps == o.exps;
  }
  bool operator!=(const UnitMonomial& o) const { return !(*this == o); }
  bool operator<(const UnitMonomial& o) const {
    if (exps != o.exps) return exps < o.exps;
    if (quat != o.quat) return quat < o.quat;
    return coeff < o.coeff;
  }
};

// beta(g_i, g_j) = zeta_N^b[i][j] on the declared generators.
struct Bicharacter {
  int root_order = 2;
  std::vector<std::vector<int>> b;

  bool operator==(const Bicharacter& o) const { return root_order == o.root_order && b == o.b; }
};

struct Presentation {
  FiniteAbelianGroup group;
  std::vector<Generator> gens;
  int root_order = 2;
  IdentityKind kind = IdentityKind::OneDim;

  int rank() const { return static_cast<int>(gens.size()); }
  int64_t dim() const;

  UnitMonomial one() const;
  UnitMonomial gen(int i, int e = 1) const;
  UnitMonomial scalar(int t) const;
  UnitMonomial j_unit() const;
  UnitMonomial quat_unit(int q) const;
  UnitMonomial from_degree(const GroupElement& g) const;

  GroupElement degree(const UnitMonomial& m) const;
  bool is_scalar(const UnitMonomial& m) const;
  bool has_j() const { return kind == IdentityKind::CentralJ || kind == IdentityKind::NoncentralJ; }
  int minus_one() const { return root_order / 2; }

  // Throws InvalidPresentation when an invariant fails.
  void validate() const;
};

UnitMonomial mul_monomials(const Presentation& p, const UnitMonomial& a, const UnitMonomial& b);
UnitMonomial power_monomial(const Presentation& p, const UnitMonomial& m, int64_t e);
UnitMonomial inverse_monomial(const Presentation& p, const UnitMonomial& m);

// Exponent c with a*b = zeta^c * b*a, or -1 when the two products differ by
// more than a scalar (cannot happen for valid presentations).
int commutation_exponent(const Presentation& p, const UnitMonomial& a, const UnitMonomial& b);

// Whether m commutes with J (always true for kinds without a noncentral J).
bool commutes_with_j(const Presentation& p, const UnitMonomial& m);

Presentation tensor(const Presentation& a, const Presentation& b);
Presentation with_root_order(const Presentation& p, int n);

std::pair<int, IdentityKind> identity_component_dim(const Presentation& p);

struct CenterSupport {
  SubgroupInfo subgroup;
  std::vector<GroupElement> degrees;
};

CenterSupport center_support(const Presentation& p);

Bicharacter beta_of(const Presentation& p);
int beta_value(const FiniteAbelianGroup& g, const Bicharacter& beta, const GroupElement& x, const GroupElement& y);
bool is_alternating(const FiniteAbelianGroup& g, const Bicharacter& beta);

// Every unit monomial is invertible with a scalar product (division check).
bool check_division(const Presentation& p);

std::string monomial_to_string(const Presentation& p, const UnitMonomial& m);

}  // namespace gda
