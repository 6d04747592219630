#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gda {

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GroupElement = std::vector<int>;

// Finite abelian group presented as a product of cyclic factors. The declared
// factor order is significant: element exponents are read against it.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int64_t cardinality() const;
  int exponent() const;

  GroupElement identity() const { return GroupElement(orders_.size(), 0); }
  GroupElement generator(int i) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(int64_t k, const GroupElement& a) const;
  GroupElement reduce(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;
  bool valid(const GroupElement& a) const;

  // Mixed-radix index in [0, cardinality).
  int64_t index_of(const GroupElement& a) const;
  GroupElement element_at(int64_t idx) const;

  // Invariant factors n_1 | n_2 | ... with trivial factors dropped.
  std::vector<int> invariant_factors() const;

  // "Z4xZ2"; the trivial group prints as "1".
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<int> orders_;
};

struct PrimaryFactor {
  int prime;
  int exponent;
  int multiplicity;
  bool operator==(const PrimaryFactor& o) const {
    return prime == o.prime && exponent == o.exponent && multiplicity == o.multiplicity;
  }
};

struct GroupAutomorphism {
  std::vector<GroupElement> images;
};

// Map from the declared generators of a source group into a target group.
struct GroupMap {
  std::vector<GroupElement> images;
  GroupElement apply(const FiniteAbelianGroup& target, const GroupElement& x) const;
};

struct SubgroupInfo {
  int64_t cardinality = 1;
  std::vector<int> invariant_factors;
  std::vector<bool> members;  // indexed by FiniteAbelianGroup::index_of
  bool contains(const FiniteAbelianGroup& g, const GroupElement& x) const {
    return members[static_cast<size_t>(g.index_of(x))];
  }
};

FiniteAbelianGroup make_group(const std::vector<int>& orders);
FiniteAbelianGroup parse_group(const std::string& text);

int element_order(const FiniteAbelianGroup& g, const GroupElement& x);

std::vector<PrimaryFactor> primary_decomposition(const FiniteAbelianGroup& g);

// The primary cyclic orders in canonical order (prime asc, exponent asc),
// e.g. [8,6] -> [2,8,3].
std::vector<int> primary_orders(const FiniteAbelianGroup& g);

// Generators of the primary cyclic factors, aligned with primary_orders().
std::vector<GroupElement> primary_basis(const FiniteAbelianGroup& g);

// Canonical presentation of the isomorphism type (primary orders).
FiniteAbelianGroup canonical_group(const FiniteAbelianGroup& g);

// Calls fn for every automorphism; throws BudgetExceeded once more than
// `limit` automorphisms have been produced. fn may return false to stop.
int64_t enumerate_automorphisms(const FiniteAbelianGroup& g, int64_t limit,
                                const std::function<bool(const GroupAutomorphism&)>& fn);
std::vector<GroupAutomorphism> automorphisms(const FiniteAbelianGroup& g, int64_t limit);

SubgroupInfo subgroup_generated(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens);

// Generator images of an isomorphism g -> h, or nullopt.
std::optional<GroupMap> isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

// True when the images define a homomorphism (order-compatible) that is bijective.
bool is_isomorphism(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                    const GroupMap& map);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t mod(int64_t a, int64_t n);
bool is_power_of_two(int64_t n);
int log2_exact(int64_t n);

}  // namespace gda
