#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gda/algebra.hpp"
#include "gda/factors.hpp"
#include "gda/normalize.hpp"

namespace gda {

// Source generator i maps to gen_images[i], a unit monomial of the target
// whose coefficients are read in zeta_{root_order}. J maps to j_sign * J.
// For quaternion kinds the identity component is fixed pointwise and the
// images live in the centralizer.
struct WeakIsomorphism {
  std::vector<GroupElement> group_map;
  std::vector<UnitMonomial> gen_images;
  int root_order = 2;
  int j_sign = 1;
  bool quaternion_fixed = false;
};

// True iff the images (monomials of `host`, coefficients in zeta_{image_root},
// 0 meaning host.root_order) satisfy every relation of `relations` and their
// degrees define an isomorphism relations.group -> host.group.
bool verify_substitution(const Presentation& host, const Presentation& relations,
                         const std::vector<UnitMonomial>& images, int j_sign = 1, int image_root = 0);
bool verify_step(const RewriteStep& step);
bool verify_weak_isomorphism(const Presentation& source, const Presentation& target, const WeakIsomorphism& w);

struct OracleStats {
  int64_t nodes = 0;
};

// Exhaustive search for a weak isomorphism source -> target. Returns nullopt
// once the search space is exhausted; throws BudgetExceeded after `budget`
// search nodes.
std::optional<WeakIsomorphism> oracle_search(const Presentation& source, const Presentation& target,
                                             int64_t budget, OracleStats* stats = nullptr);

struct Certificate {
  std::string invariant;
  std::string value1;
  std::string value2;
};

enum class VerdictKind { Equivalent, NotEquivalent, Unknown };
const char* verdict_name(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<WeakIsomorphism> witness;
  std::optional<Certificate> certificate;
  std::string label1;
  std::string label2;
  std::string note;
};

struct EquivOptions {
  bool oracle = false;
  int64_t budget = 20000000;
  int64_t aut_limit = 2000000;
};

// Label comparison, or the oracle when requested.
Verdict equivalent(const FactorList& a, const FactorList& b, const EquivOptions& opt = {});

struct InvariantValue {
  std::string name;
  std::string value;
};

// Probe order: identity kind, group, truncated characteristic, central
// solution profile, solution-count profile, canonical label. `max_k` bounds
// the 2^k exponents probed (0 picks it from the group exponent).
std::vector<InvariantValue> invariant_probes(const FactorList& fs, int max_k = 0);
int default_probe_depth(const FactorList& fs);
// First probe on which the two inputs differ.
std::optional<Certificate> separating_invariant(const FactorList& a, const FactorList& b);

// G and beta exponents read against the declared cyclic factors of g.
Verdict pauli_equivalent(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& beta1,
                         const std::vector<std::vector<int>>& beta2, int64_t aut_limit);

struct LemmaReport {
  std::string rule;
  bool shipped = true;  // part of the active rule set
  int instances = 0;
  int passed = 0;
  std::vector<std::string> failures;  // failing instances (before lists)
  std::string note;
};

// Checks every rule witness over parameter exponents 1..max_exp.
std::vector<LemmaReport> verify_lemmas(int max_exp);

}  // namespace gda
