#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gda/algebra.hpp"
#include "gda/factors.hpp"
#include "gda/invariants.hpp"

namespace gda {

class UnknownRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RuleId {
  OddSplit,
  Swap,
  D22,
  DSingle,
  Lce,
  Cd,
  DdConsol,
  Hh,
  E1,
  E2,
  E3,
  E4,
  E5,
  E6,
  E7,
  E8,  // disabled: the printed substitution fails verification
  E8C,
  E9,
  E10,
  E11,
  E12,
};

// Priority order used by normalize (E8 is absent).
const std::vector<RuleId>& rule_priority();
const std::vector<RuleId>& all_rules();
const char* rule_name(RuleId r);
RuleId rule_from_name(const std::string& name);  // throws UnknownRule
bool rule_enabled(RuleId r);

// A rewrite `before -> after` together with its witness: images[i] is the
// image of generator i of presentation_of(after), written as a unit monomial
// of presentation_of(before). J and the quaternion units map to themselves.
struct RewriteStep {
  RuleId rule = RuleId::Swap;
  FactorList before;
  FactorList after;
  std::vector<UnitMonomial> images;
};

// Applicable sites of a rule, leftmost first. A site is opaque to callers.
struct RuleSite {
  int i = -1;
  int j = -1;
  int gi = 0;
  int gj = 0;
};
std::vector<RuleSite> rule_sites(const FactorList& fs, RuleId rule);
RewriteStep apply_rule(const FactorList& fs, RuleId rule, const RuleSite& site);

// First applicable site, or nullopt.
std::optional<RewriteStep> rewrite_step(const FactorList& fs, RuleId rule);

enum class CanonicalTag {
  CommRg,
  CommCg,
  CommCneg,
  Nc1Plain,
  Nc1Cneg,
  Nc1Quat,
  EEven,
  ECneg,
  ENeg,
  EOdd,
  HPlain,
  HCneg,
  HQuat,
  Pauli,
};

const char* tag_name(CanonicalTag t);

// D tuples and C exponents use exponent notation: (k, l) means orders
// (2^k, 2^l). For the *_QUAT tags chi excludes the D(1,1;-,-) factor.
struct CanonicalForm {
  CanonicalTag tag = CanonicalTag::CommRg;
  std::vector<DTuple> chi;
  int m = 0;    // C(2^m;-) exponent, 0 when absent
  int k = 0;    // E(2^k;rho) exponent, 0 when absent
  int rho = 1;
  std::vector<int> group;  // primary orders of the group algebra part
  std::vector<std::vector<int>> beta;  // PAULI: exponents mod exp(group)

  bool operator==(const CanonicalForm& o) const {
    return tag == o.tag && chi == o.chi && m == o.m && k == o.k && rho == o.rho && group == o.group &&
           beta == o.beta;
  }
};

struct NormalizeOptions {
  // Picks one (rule, site) among the applicable moves; the default takes the
  // first rule in priority order at its leftmost site.
  std::function<size_t(const std::vector<std::pair<RuleId, RuleSite>>&)> chooser;
  int64_t max_steps = 100000;
  int64_t aut_limit = 2000000;  // Pauli orbit enumeration
  bool keep_trace = false;
};

struct NormalizeResult {
  CanonicalForm form;
  FactorList reduced;  // fixpoint of the rewrite system (before classification)
  std::vector<RewriteStep> trace;
};

NormalizeResult normalize_full(const FactorList& fs, const NormalizeOptions& opt = {});
CanonicalForm normalize(const FactorList& fs);

// Stable label grammar:
//   RG[G] | CG[G] | CNEG[C(m;-)*RG[G]] | NC1[T] | E[E(k;s)*T] | H[T] | PAULI[G;rows]
// T is '*'-joined D(k,l;s,s) tokens (sorted), then C(m;-), then RG[G] when G is
// nontrivial; an empty T is written 1. Exponents, not orders.
std::string canonical_label(const CanonicalForm& cf);

// A factor list realizing the form; normalize(expand(cf)) == cf.
FactorList expand(const CanonicalForm& cf);

// Lexicographically minimal exponent matrix of beta (given on the canonical
// basis of G) over Aut G x {beta, conj beta}.
std::vector<std::vector<int>> pauli_orbit_representative(const std::vector<int>& group,
                                                         const std::vector<std::vector<int>>& beta,
                                                         int64_t aut_limit);

}  // namespace gda
