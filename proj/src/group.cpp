#include "gda/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace gda {

int64_t gcd64(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

bool is_power_of_two(int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_exact(int64_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("not a power of two: " + std::to_string(n));
  int k = 0;
  while ((int64_t{1} << k) < n) ++k;
  return k;
}

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<int64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Inverse of a modulo m (gcd(a, m) = 1).
int64_t inverse_mod(int64_t a, int64_t m) {
  if (m == 1) return 0;
  int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return mod(x, m);
}

struct PrimaryPiece {
  int prime;
  int exponent;
  int source;  // declared factor it was cut from
  GroupElement element;
  int64_t crt_coeff;
};

std::vector<PrimaryPiece> primary_pieces(const FiniteAbelianGroup& g) {
  std::vector<PrimaryPiece> pieces;
  for (int i = 0; i < g.rank(); ++i) {
    int n = g.orders()[i];
    for (auto [p, a] : factorize(n)) {
      int pa = ipow(p, a);
      int cof = n / pa;
      GroupElement e = g.identity();
      e[i] = cof % n;
      pieces.push_back({p, a, i, e, inverse_mod(cof, pa)});
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const PrimaryPiece& x, const PrimaryPiece& y) {
    return std::make_pair(x.prime, x.exponent) < std::make_pair(y.prime, y.exponent);
  });
  return pieces;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n <= 0) throw InvalidGroup("cyclic factor order must be >= 1, got " + std::to_string(n));
  }
}

int64_t FiniteAbelianGroup::cardinality() const {
  int64_t c = 1;
  for (int n : orders_) c *= n;
  return c;
}

int FiniteAbelianGroup::exponent() const {
  int64_t e = 1;
  for (int n : orders_) e = lcm64(e, n);
  return static_cast<int>(e);
}

GroupElement FiniteAbelianGroup::generator(int i) const {
  GroupElement e = identity();
  e[i] = orders_[i] > 1 ? 1 : 0;
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  GroupElement r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = (orders_[i] - a[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::scale(int64_t k, const GroupElement& a) const {
  GroupElement r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = static_cast<int>(mod(k * a[i], orders_[i]));
  return r;
}

GroupElement FiniteAbelianGroup::reduce(const GroupElement& a) const {
  GroupElement r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = static_cast<int>(mod(a[i], orders_[i]));
  return r;
}

bool FiniteAbelianGroup::is_identity(const GroupElement& a) const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool FiniteAbelianGroup::valid(const GroupElement& a) const {
  if (a.size() != orders_.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  }
  return true;
}

int64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
  int64_t idx = 0;
  for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(int64_t idx) const {
  GroupElement r(orders_.size());
  for (size_t i = orders_.size(); i-- > 0;) {
    r[i] = static_cast<int>(idx % orders_[i]);
    idx /= orders_[i];
  }
  return r;
}

std::vector<int> FiniteAbelianGroup::invariant_factors() const {
  std::map<int, std::vector<int>> by_prime;
  for (const auto& f : primary_decomposition(*this)) {
    for (int i = 0; i < f.multiplicity; ++i) by_prime[f.prime].push_back(ipow(f.prime, f.exponent));
  }
  size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<int> out(len, 1);
  for (auto& [p, v] : by_prime) {
    for (size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
  }
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n : orders_) {
    if (!first) os << 'x';
    os << 'Z' << n;
    first = false;
  }
  return first ? "1" : os.str();
}

FiniteAbelianGroup make_group(const std::vector<int>& orders) { return FiniteAbelianGroup(orders); }

FiniteAbelianGroup parse_group(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "1") return FiniteAbelianGroup();
  std::vector<int> orders;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'Z') throw InvalidGroup("expected 'Z' at position " + std::to_string(i) + " in group '" + text + "'");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw InvalidGroup("expected order at position " + std::to_string(i) + " in group '" + text + "'");
    orders.push_back(std::stoi(s.substr(start, i - start)));
    if (i < s.size()) {
      if (s[i] != 'x') throw InvalidGroup("expected 'x' at position " + std::to_string(i) + " in group '" + text + "'");
      ++i;
      if (i == s.size()) throw InvalidGroup("trailing 'x' in group '" + text + "'");
    }
  }
  if (orders.empty()) throw InvalidGroup("empty group literal");
  return FiniteAbelianGroup(orders);
}

int element_order(const FiniteAbelianGroup& g, const GroupElement& x) {
  int64_t ord = 1;
  for (int i = 0; i < g.rank(); ++i) {
    int n = g.orders()[i];
    ord = lcm64(ord, n / gcd64(n, x[i]));
  }
  return static_cast<int>(ord);
}

std::vector<PrimaryFactor> primary_decomposition(const FiniteAbelianGroup& g) {
  std::map<std::pair<int, int>, int> counts;
  for (int n : g.orders()) {
    for (auto [p, a] : factorize(n)) counts[{p, a}]++;
  }
  std::vector<PrimaryFactor> out;
  for (auto& [key, mult] : counts) out.push_back({key.first, key.second, mult});
  return out;
}

std::vector<int> primary_orders(const FiniteAbelianGroup& g) {
  std::vector<int> out;
  for (const auto& f : primary_decomposition(g)) {
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(ipow(f.prime, f.exponent));
  }
  return out;
}

std::vector<GroupElement> primary_basis(const FiniteAbelianGroup& g) {
  std::vector<GroupElement> out;
  for (auto& piece : primary_pieces(g)) out.push_back(piece.element);
  return out;
}

FiniteAbelianGroup canonical_group(const FiniteAbelianGroup& g) { return FiniteAbelianGroup(primary_orders(g)); }

GroupElement GroupMap::apply(const FiniteAbelianGroup& target, const GroupElement& x) const {
  GroupElement r = target.identity();
  for (size_t i = 0; i < images.size(); ++i) {
    if (x[i] != 0) r = target.add(r, target.scale(x[i], images[i]));
  }
  return r;
}

namespace {

// Extends a subgroup (membership bitmap + element list) by a new generator
// of declared order n. Returns false if the extension is not a direct sum.
bool extend_direct(const FiniteAbelianGroup& g, std::vector<bool>& members, std::vector<int64_t>& elems,
                   const GroupElement& h, int n) {
  std::vector<int64_t> added;
  added.reserve(elems.size() * static_cast<size_t>(n - 1));
  GroupElement step = h;
  for (int k = 1; k < n; ++k) {
    for (int64_t s : elems) {
      int64_t t = g.index_of(g.add(g.element_at(s), step));
      if (members[static_cast<size_t>(t)]) {
        for (int64_t a : added) members[static_cast<size_t>(a)] = false;
        return false;
      }
      members[static_cast<size_t>(t)] = true;
      added.push_back(t);
    }
    step = g.add(step, h);
  }
  elems.insert(elems.end(), added.begin(), added.end());
  return true;
}

}  // namespace

int64_t enumerate_automorphisms(const FiniteAbelianGroup& g, int64_t limit,
                                const std::function<bool(const GroupAutomorphism&)>& fn) {
  const int r = g.rank();
  const int64_t card = g.cardinality();
  std::vector<GroupElement> all;
  all.reserve(static_cast<size_t>(card));
  for (int64_t i = 0; i < card; ++i) all.push_back(g.element_at(i));
  std::vector<int> orders(static_cast<size_t>(card));
  for (int64_t i = 0; i < card; ++i) orders[static_cast<size_t>(i)] = element_order(g, all[static_cast<size_t>(i)]);

  int64_t count = 0;
  bool stop = false;
  GroupAutomorphism current;
  current.images.resize(static_cast<size_t>(r));

  std::function<void(int, std::vector<bool>&, std::vector<int64_t>&)> rec =
      [&](int i, std::vector<bool>& members, std::vector<int64_t>& elems) {
        if (stop) return;
        if (i == r) {
          ++count;
          if (count > limit) {
            throw BudgetExceeded("automorphism budget " + std::to_string(limit) + " exceeded for group of order " +
                                 std::to_string(card));
          }
          if (!fn(current)) stop = true;
          return;
        }
        int n = g.orders()[static_cast<size_t>(i)];
        for (int64_t c = 0; c < card && !stop; ++c) {
          if (orders[static_cast<size_t>(c)] != n) continue;
          std::vector<bool> m2 = members;
          std::vector<int64_t> e2 = elems;
          if (!extend_direct(g, m2, e2, all[static_cast<size_t>(c)], n)) continue;
          current.images[static_cast<size_t>(i)] = all[static_cast<size_t>(c)];
          rec(i + 1, m2, e2);
        }
      };

  std::vector<bool> members(static_cast<size_t>(card), false);
  members[0] = true;
  std::vector<int64_t> elems{0};
  rec(0, members, elems);
  return count;
}

std::vector<GroupAutomorphism> automorphisms(const FiniteAbelianGroup& g, int64_t limit) {
  std::vector<GroupAutomorphism> out;
  enumerate_automorphisms(g, limit, [&](const GroupAutomorphism& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

SubgroupInfo subgroup_generated(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  SubgroupInfo info;
  const int64_t card = g.cardinality();
  info.members.assign(static_cast<size_t>(card), false);
  info.members[0] = true;
  std::vector<int64_t> elems{0};
  for (const auto& h : gens) {
    for (size_t idx = 0; idx < elems.size(); ++idx) {
      int64_t t = g.index_of(g.add(g.element_at(elems[idx]), h));
      if (!info.members[static_cast<size_t>(t)]) {
        info.members[static_cast<size_t>(t)] = true;
        elems.push_back(t);
      }
    }
  }
  info.cardinality = static_cast<int64_t>(elems.size());
  // Invariant factors from the counts of elements of each order: the number
  // of elements killed by d determines the isomorphism type of the subgroup.
  std::vector<int> element_orders;
  for (int64_t e : elems) element_orders.push_back(element_order(g, g.element_at(e)));
  std::vector<int> pieces;
  for (auto [p, a] : factorize(static_cast<int>(info.cardinality))) {
    // rank of the p-part at level j: log_p(|S[p^j]| / |S[p^(j-1)]|)
    std::vector<int64_t> sz(static_cast<size_t>(a) + 1, 0);
    for (int j = 0; j <= a; ++j) {
      int pj = ipow(p, j);
      for (int o : element_orders) {
        int op = 1;
        int oo = o;
        while (oo % p == 0) {
          oo /= p;
          op *= p;
        }
        if (oo == 1 && pj % op == 0) sz[static_cast<size_t>(j)]++;
      }
    }
    std::vector<int> rank_at(static_cast<size_t>(a) + 2, 0);
    for (int j = 1; j <= a; ++j) {
      int64_t q = sz[static_cast<size_t>(j)] / sz[static_cast<size_t>(j - 1)];
      int rk = 0;
      while (q > 1) {
        q /= p;
        ++rk;
      }
      rank_at[static_cast<size_t>(j)] = rk;
    }
    for (int j = 1; j <= a; ++j) {
      int exact = rank_at[static_cast<size_t>(j)] - rank_at[static_cast<size_t>(j + 1)];
      for (int t = 0; t < exact; ++t) pieces.push_back(ipow(p, j));
    }
  }
  info.invariant_factors = FiniteAbelianGroup(pieces).invariant_factors();
  return info;
}

std::optional<GroupMap> isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
  if (primary_orders(g) != primary_orders(h)) return std::nullopt;
  auto gp = primary_pieces(g);
  auto hp = primary_pieces(h);
  GroupMap map;
  map.images.assign(static_cast<size_t>(g.rank()), h.identity());
  for (size_t pos = 0; pos < gp.size(); ++pos) {
    const auto& piece = gp[pos];
    GroupElement contrib = h.scale(piece.crt_coeff, hp[pos].element);
    auto& img = map.images[static_cast<size_t>(piece.source)];
    img = h.add(img, contrib);
  }
  return map;
}

bool is_isomorphism(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, const GroupMap& map) {
  if (source.cardinality() != target.cardinality()) return false;
  if (static_cast<int>(map.images.size()) != source.rank()) return false;
  for (int i = 0; i < source.rank(); ++i) {
    if (!target.valid(map.images[static_cast<size_t>(i)])) return false;
    if (!target.is_identity(target.scale(source.orders()[static_cast<size_t>(i)], map.images[static_cast<size_t>(i)]))) {
      return false;
    }
  }
  return subgroup_generated(target, map.images).cardinality == target.cardinality();
}

}  // namespace gda
