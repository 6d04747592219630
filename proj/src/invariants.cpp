#include "gda/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "gda/catalog.hpp"
#include "gda/kernels.hpp"

namespace gda {

namespace {

void split_order(int n, int* two_exp, std::vector<int>* odd_primary) {
  int a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++a;
  }
  *two_exp = a;
  if (n > 1) {
    for (int q : primary_orders(FiniteAbelianGroup({n}))) odd_primary->push_back(q);
  }
}

void add_group(const std::vector<int>& orders, Characteristic& chi) {
  for (int q : primary_orders(FiniteAbelianGroup(orders))) {
    if (q % 2 == 0) {
      chi.c.push_back({log2_exact(q), 1});
    } else {
      chi.odd_part.push_back(q);
    }
  }
}

const char* sign_str(int s) { return s < 0 ? "-" : "+"; }

bool divides_degree(const FiniteAbelianGroup& g, const GroupElement& x, int64_t p) {
  return g.is_identity(g.scale(p, x));
}

int real_sign_of(const Presentation& p, const UnitMonomial& s) {
  if (s.coeff == 0) return 1;
  if (s.coeff == p.root_order / 2) return -1;
  return 0;
}

}  // namespace

Characteristic characteristic(const FactorList& factors) {
  Characteristic chi;
  for (const auto& f : factors) {
    switch (f.type) {
      case FactorType::C: {
        int a = 0;
        split_order(f.a, &a, &chi.odd_part);
        if (a > 0) chi.c.push_back({a, f.s1});
        break;
      }
      case FactorType::D: chi.d.push_back({log2_exact(f.a), log2_exact(f.b), f.s1, f.s2}); break;
      case FactorType::E: chi.e = std::make_pair(log2_exact(f.a), f.s1); break;
      case FactorType::H: chi.h = true; break;
      case FactorType::RG: add_group(f.group, chi); break;
      case FactorType::CG:
      case FactorType::Pauli:
        chi.central_complex = true;
        add_group(f.group, chi);
        break;
    }
  }
  std::sort(chi.d.begin(), chi.d.end());
  std::sort(chi.c.begin(), chi.c.end());
  chi.odd_part = primary_orders(FiniteAbelianGroup(chi.odd_part));
  return chi;
}

TruncatedCharacteristic truncated(const Characteristic& chi) {
  TruncatedCharacteristic t;
  for (const auto& d : chi.d) t.d.emplace_back(d.k, d.l);
  for (const auto& c : chi.c) t.c.push_back(c.m);
  std::sort(t.d.begin(), t.d.end());
  std::sort(t.c.begin(), t.c.end());
  return t;
}

Parity d_parity(const std::vector<DTuple>& d) {
  int minus = 0;
  for (const auto& t : d) {
    bool m22 = t.k == 1 && t.l == 1 && t.mu != t.nu;
    if (m22) continue;
    minus += (t.mu < 0) + (t.nu < 0);
  }
  if (minus == 0) return Parity::Even;
  if (minus == 1) return Parity::Odd;
  return Parity::Other;
}

std::string characteristic_to_string(const Characteristic& chi) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  auto sep = [&] {
    if (!first) os << ',';
    first = false;
  };
  for (const auto& d : chi.d) {
    sep();
    os << "D(" << d.k << ',' << d.l << ';' << sign_str(d.mu) << ',' << sign_str(d.nu) << ')';
  }
  for (const auto& c : chi.c) {
    sep();
    os << "C(" << c.m << ';' << sign_str(c.eta) << ')';
  }
  if (chi.e) {
    sep();
    os << "E(" << chi.e->first << ';' << sign_str(chi.e->second) << ')';
  }
  if (chi.h) {
    sep();
    os << 'H';
  }
  if (chi.central_complex) {
    sep();
    os << "CJ";
  }
  if (!chi.odd_part.empty()) {
    sep();
    os << "odd=" << FiniteAbelianGroup(chi.odd_part).to_string();
  }
  os << '}';
  return os.str();
}

std::string truncated_to_string(const TruncatedCharacteristic& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& d : t.d) {
    if (!first) os << ',';
    first = false;
    os << '(' << d.first << ',' << d.second << ')';
  }
  for (int c : t.c) {
    if (!first) os << ',';
    first = false;
    os << c;
  }
  os << '}';
  return os.str();
}

CliffordCounts clifford_counts(int m, bool brute) {
  if (m < 0 || m > 30) throw std::invalid_argument("clifford_counts needs 0 <= m <= 30");
  CliffordCounts out;
  int64_t four = int64_t{1} << (2 * m);
  int64_t two = int64_t{1} << m;
  out.d_plus = (four + two) / 2;
  out.d_minus = (four - two) / 2;
  if (brute) {
    if (m > 12) throw std::invalid_argument("brute Clifford count limited to m <= 12");
    Presentation p = group_algebra(FiniteAbelianGroup());
    for (int i = 0; i < m; ++i) p = tensor(p, basic_d(2, 2, 1, 1));
    auto form = f2_form(p);
    if (!form) throw std::logic_error("Clifford presentation lost its F2 form");
    std::vector<uint64_t> all(static_cast<size_t>(four));
    for (int64_t a = 0; a < four; ++a) all[static_cast<size_t>(a)] = static_cast<uint64_t>(a);
    std::vector<uint8_t> parity(all.size());
    square_parity(*form, all.data(), parity.data(), all.size());
    int64_t minus = std::count(parity.begin(), parity.end(), uint8_t{1});
    if (minus != out.d_minus || four - minus != out.d_plus) {
      throw std::logic_error("brute Clifford count disagrees with the closed form at m=" + std::to_string(m));
    }
    out.brute_checked = true;
  }
  return out;
}

SolutionSupport solution_support(const Presentation& p, int k, int sign) {
  if (k < 1) throw std::invalid_argument("solution_support needs k >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const int64_t e = int64_t{1} << k;
  const int64_t card = p.group.cardinality();
  SolutionSupport out;
  if (k == 1 && p.kind == IdentityKind::OneDim) {
    if (auto form = f2_form(p)) {
      std::vector<uint64_t> all(static_cast<size_t>(card));
      for (int64_t idx = 0; idx < card; ++idx) {
        GroupElement g = p.group.element_at(idx);
        uint64_t bits = 0;
        for (size_t i = 0; i < g.size(); ++i) bits |= static_cast<uint64_t>(g[i]) << i;
        all[static_cast<size_t>(idx)] = bits;
      }
      std::vector<uint8_t> parity(all.size());
      square_parity(*form, all.data(), parity.data(), all.size());
      const uint8_t want = sign < 0 ? 1 : 0;
      out.count = std::count(parity.begin(), parity.end(), want);
      out.finite = out.count;
      return out;
    }
  }
  for (int64_t idx = 0; idx < card; ++idx) {
    GroupElement g = p.group.element_at(idx);
    if (!divides_degree(p.group, g, e)) continue;
    UnitMonomial x = p.from_degree(g);
    UnitMonomial s = power_monomial(p, x, e);
    switch (p.kind) {
      case IdentityKind::OneDim:
        if (real_sign_of(p, s) == sign) {
          ++out.count;
          ++out.finite;
        }
        break;
      case IdentityKind::CentralJ:
        ++out.count;
        ++out.finite;
        break;
      case IdentityKind::NoncentralJ:
        if (commutes_with_j(p, x)) {
          ++out.count;
          ++out.finite;
        } else if (real_sign_of(p, s) == sign) {
          // (zX)^e = |z|^e X^e for every unit z.
          ++out.count;
          ++out.continuum;
        }
        break;
      case IdentityKind::Quaternion: {
        // q^e = sign * X^-e has a solution for every target; it is finite only for q^2 = 1.
        int target = sign * real_sign_of(p, s);
        ++out.count;
        if (target == 1 && e <= 2) {
          ++out.finite;
        } else {
          ++out.continuum;
        }
        break;
      }
    }
  }
  return out;
}

int64_t solution_support_count(const Presentation& p, int k, int sign) { return solution_support(p, k, sign).count; }

bool central_solution_exists(const Presentation& p, int k, int sign) {
  if (sign == 1) return true;
  if (p.kind == IdentityKind::CentralJ) return true;
  const int64_t e = int64_t{1} << k;
  const int64_t card = p.group.cardinality();
  const int quarter = p.root_order / 4;
  for (int64_t idx = 0; idx < card; ++idx) {
    GroupElement g = p.group.element_at(idx);
    if (!divides_degree(p.group, g, e)) continue;
    UnitMonomial x = p.from_degree(g);
    if (!commutes_with_j(p, x)) continue;
    // Relative to J-commuting generators X must be central; against the
    // anticommuting ones it must behave uniformly (z real or z in R J).
    int anti_sign = 0;
    bool ok = true;
    for (int j = 0; j < p.rank() && ok; ++j) {
      int c = commutation_exponent(p, x, p.gen(j));
      bool j_anti = p.kind == IdentityKind::NoncentralJ && p.gens[static_cast<size_t>(j)].j_anti;
      if (!j_anti) {
        ok = c == 0;
      } else {
        int s = c == 0 ? 1 : (c == p.root_order / 2 ? -1 : 0);
        if (s == 0 || (anti_sign != 0 && s != anti_sign)) ok = false;
        anti_sign = s;
      }
    }
    if (!ok) continue;
    UnitMonomial s = power_monomial(p, x, e);
    int t = s.coeff;
    if (anti_sign == -1) t = static_cast<int>(mod(t + static_cast<int64_t>(quarter) * e, p.root_order));
    if ((sign < 0 && t == p.root_order / 2) || (sign > 0 && t == 0)) return true;
  }
  return false;
}

std::pair<int64_t, int64_t> pair_solution_counts(const Presentation& p, int k, int l) {
  if (p.kind != IdentityKind::OneDim) throw UnsupportedKind("pair_solution_counts needs a ONE_DIM presentation");
  if (k < 1 || l < 1) throw std::invalid_argument("pair_solution_counts needs k, l >= 1");
  const int64_t card = p.group.cardinality();
  std::vector<UnitMonomial> xs, ys;
  for (int64_t idx = 0; idx < card; ++idx) {
    UnitMonomial m = p.from_degree(p.group.element_at(idx));
    for (int which = 0; which < 2; ++which) {
      int64_t e = int64_t{1} << (which == 0 ? k : l);
      if (!divides_degree(p.group, p.degree(m), e)) continue;
      if (real_sign_of(p, power_monomial(p, m, e)) == 1) (which == 0 ? xs : ys).push_back(m);
    }
  }
  int64_t a0 = 0, a1 = 0;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (commutation_exponent(p, x, y) == 0) {
        ++a0;
      } else {
        ++a1;
      }
    }
  }
  return {a0, a1};
}

std::optional<int> minimal_noncommuting_degree(const Presentation& p) {
  if (p.kind != IdentityKind::NoncentralJ) {
    throw UnsupportedKind("minimal_noncommuting_degree needs a NONCENTRAL_J presentation");
  }
  std::optional<int> best;
  const int64_t card = p.group.cardinality();
  for (int64_t idx = 0; idx < card; ++idx) {
    GroupElement g = p.group.element_at(idx);
    if (commutes_with_j(p, p.from_degree(g))) continue;
    int o = element_order(p.group, g);
    if (!best || o < *best) best = o;
  }
  return best;
}

bool is_commutative(const Presentation& p) {
  if (p.kind != IdentityKind::OneDim && p.kind != IdentityKind::CentralJ) return false;
  for (const auto& g : p.gens) {
    for (int c : g.comm) {
      if (mod(c, p.root_order) != 0) return false;
    }
  }
  return true;
}

std::pair<int64_t, int64_t> ungraded_decomposition_commutative(const Presentation& p) {
  if (!is_commutative(p)) throw UnsupportedKind("ungraded decomposition is implemented for commutative algebras only");
  const int64_t card = p.group.cardinality();
  if (p.kind == IdentityKind::CentralJ) return {card, 0};
  // Real characters send each x_i to +-1 with (+-1)^n_i = eps_i.
  int64_t real = 1;
  for (const auto& g : p.gens) {
    if (g.power % 2 == 1) continue;
    real *= g.sign > 0 ? 2 : 0;
  }
  return {(card - real) / 2, real};
}

}  // namespace gda
