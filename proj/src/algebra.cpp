#include "gda/algebra.hpp"

#include <sstream>

namespace gda {

const char* kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::OneDim: return "ONE_DIM";
    case IdentityKind::CentralJ: return "CENTRAL_J";
    case IdentityKind::NoncentralJ: return "NONCENTRAL_J";
    case IdentityKind::Quaternion: return "QUATERNION";
  }
  return "?";
}

namespace {

// Quaternion units 1,i,j,k as 0..3; product sign flag set when the result is negated.
struct QuatProduct {
  int unit;
  bool negative;
};

QuatProduct quat_mul(int a, int b) {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const bool neg[4][4] = {{false, false, false, false},
                                 {false, true, false, true},
                                 {false, true, true, false},
                                 {false, false, true, true}};
  return {unit[a][b], neg[a][b]};
}

}  // namespace

int64_t Presentation::dim() const {
  return group.cardinality() * identity_component_dim(*this).first;
}

UnitMonomial Presentation::one() const {
  UnitMonomial m;
  m.exps.assign(gens.size(), 0);
  return m;
}

UnitMonomial Presentation::gen(int i, int e) const {
  UnitMonomial g = one();
  g.exps[static_cast<size_t>(i)] = 1 % gens[static_cast<size_t>(i)].power;
  return power_monomial(*this, g, e);
}

UnitMonomial Presentation::scalar(int t) const {
  UnitMonomial m = one();
  m.coeff = static_cast<int>(mod(t, root_order));
  return m;
}

UnitMonomial Presentation::j_unit() const {
  if (!has_j()) throw UnsupportedKind("presentation has no J element");
  return scalar(root_order / 4);
}

UnitMonomial Presentation::quat_unit(int q) const {
  if (kind != IdentityKind::Quaternion) throw UnsupportedKind("presentation has no quaternion part");
  UnitMonomial m = one();
  m.quat = q;
  return m;
}

UnitMonomial Presentation::from_degree(const GroupElement& g) const {
  UnitMonomial m = one();
  for (size_t i = 0; i < gens.size(); ++i) m.exps[i] = g[i];
  return m;
}

GroupElement Presentation::degree(const UnitMonomial& m) const {
  GroupElement d = group.identity();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (m.exps[i] != 0) d = group.add(d, group.scale(m.exps[i], gens[i].degree));
  }
  return d;
}

bool Presentation::is_scalar(const UnitMonomial& m) const {
  if (m.quat != 0) return false;
  for (int e : m.exps) {
    if (e != 0) return false;
  }
  return true;
}

void Presentation::validate() const {
  if (root_order < 2 || root_order % 2 != 0) throw InvalidPresentation("root order must be even and >= 2");
  if (has_j() && root_order % 4 != 0) throw InvalidPresentation("J kinds need a root order divisible by 4");
  const int r = rank();
  for (int i = 0; i < r; ++i) {
    const auto& g = gens[static_cast<size_t>(i)];
    if (g.degree != group.generator(i)) {
      throw InvalidPresentation("generator " + std::to_string(i + 1) + " must have the unit degree e_" + std::to_string(i + 1));
    }
    if (g.power < 1 || element_order(group, g.degree) != g.power) {
      throw InvalidPresentation("generator " + std::to_string(i + 1) + ": power exponent differs from degree order");
    }
    if (g.sign != 1 && g.sign != -1) throw InvalidPresentation("power sign must be +1 or -1");
    if (static_cast<int>(g.comm.size()) != r) throw InvalidPresentation("commutation row has wrong length");
    if (mod(g.comm[static_cast<size_t>(i)], root_order) != 0) throw InvalidPresentation("c_ii must vanish");
    for (int j = 0; j < r; ++j) {
      int cij = g.comm[static_cast<size_t>(j)];
      int cji = gens[static_cast<size_t>(j)].comm[static_cast<size_t>(i)];
      if (mod(cij + cji, root_order) != 0) throw InvalidPresentation("commutation exponents are not alternating");
      if (mod(static_cast<int64_t>(cij) * g.power, root_order) != 0) {
        throw InvalidPresentation("commutation exponent incompatible with generator order");
      }
      if (kind == IdentityKind::NoncentralJ && mod(cij, root_order / 2) != 0) {
        throw InvalidPresentation("noncentral J presentations need real commutation factors");
      }
    }
    if (g.j_anti && kind != IdentityKind::NoncentralJ) throw InvalidPresentation("J flag on a kind without noncentral J");
    if (g.j_anti && g.power % 2 != 0) throw InvalidPresentation("J-anticommuting generator of odd order");
  }
  if (kind == IdentityKind::NoncentralJ) {
    bool any = false;
    for (const auto& g : gens) any = any || g.j_anti;
    if (!any) throw InvalidPresentation("NONCENTRAL_J kind needs a generator anticommuting with J");
  }
  if (group.rank() != r) throw InvalidPresentation("one generator per cyclic factor of the group is required");
}

bool commutes_with_j(const Presentation& p, const UnitMonomial& m) {
  if (p.kind != IdentityKind::NoncentralJ) return true;
  int parity = 0;
  for (size_t i = 0; i < p.gens.size(); ++i) {
    if (p.gens[i].j_anti) parity ^= (m.exps[i] & 1);
  }
  return parity == 0;
}

UnitMonomial mul_monomials(const Presentation& p, const UnitMonomial& a, const UnitMonomial& b) {
  const int n = p.root_order;
  const size_t r = p.gens.size();
  int64_t c = a.coeff;
  c += commutes_with_j(p, a) ? b.coeff : -b.coeff;
  UnitMonomial out;
  out.exps.resize(r);
  QuatProduct q = quat_mul(a.quat, b.quat);
  out.quat = q.unit;
  if (q.negative) c += n / 2;
  for (size_t i = 0; i < r; ++i) {
    if (a.exps[i] == 0) continue;
    const auto& row = p.gens[i].comm;
    for (size_t j = 0; j < i; ++j) {
      if (b.exps[j] != 0) c += static_cast<int64_t>(row[j]) * a.exps[i] * b.exps[j];
    }
  }
  for (size_t i = 0; i < r; ++i) {
    int e = a.exps[i] + b.exps[i];
    const auto& g = p.gens[i];
    if (e >= g.power) {
      e -= g.power;
      if (g.sign < 0) c += n / 2;
    }
    out.exps[i] = e;
  }
  out.coeff = static_cast<int>(mod(c, n));
  return out;
}

UnitMonomial power_monomial(const Presentation& p, const UnitMonomial& m, int64_t e) {
  if (e < 0) throw std::invalid_argument("negative power");
  const int64_t n = p.root_order;
  const size_t r = p.gens.size();
  UnitMonomial out;
  out.exps.resize(r);
  int64_t c = 0;
  if (commutes_with_j(p, m)) {
    c = mod(static_cast<int64_t>(m.coeff) * mod(e, n), n);
  } else {
    c = (e % 2 == 1) ? m.coeff : 0;
  }
  // Quaternion part: q^e for a unit q in {1,i,j,k}.
  if (m.quat != 0) {
    int64_t e4 = e % 4;
    if (e4 == 2 || e4 == 3) c += n / 2;
    out.quat = (e4 % 2 == 1) ? m.quat : 0;
  }
  // (X^a)^e = zeta^(S e(e-1)/2) X^(e a) with S = sum_{i>j} c_ij a_i a_j.
  int64_t s = 0;
  for (size_t i = 0; i < r; ++i) {
    if (m.exps[i] == 0) continue;
    for (size_t j = 0; j < i; ++j) {
      if (m.exps[j] != 0) s = mod(s + static_cast<int64_t>(p.gens[i].comm[j]) * m.exps[i] * m.exps[j], n);
    }
  }
  if (s != 0) {
    // e(e-1)/2 mod n without overflow.
    int64_t t = (e % 2 == 0) ? mod(e / 2, n) * mod(e - 1, n) : mod(e, n) * mod((e - 1) / 2, n);
    c += mod(s * mod(t, n), n);
  }
  for (size_t i = 0; i < r; ++i) {
    const auto& g = p.gens[i];
    int64_t total = static_cast<int64_t>(m.exps[i]) * e;
    int64_t wraps = total / g.power;
    out.exps[i] = static_cast<int>(total % g.power);
    if (g.sign < 0 && (wraps & 1)) c += n / 2;
  }
  out.coeff = static_cast<int>(mod(c, n));
  return out;
}

UnitMonomial inverse_monomial(const Presentation& p, const UnitMonomial& m) {
  int64_t ord = element_order(p.group, p.degree(m));
  // m^(ord) is a scalar s (times a quaternion unit); m^-1 = m^(4 ord - 1) / m^(4 ord).
  UnitMonomial full = power_monomial(p, m, 4 * ord);
  UnitMonomial inv = power_monomial(p, m, 4 * ord - 1);
  UnitMonomial corr = p.one();
  corr.coeff = static_cast<int>(mod(-full.coeff, p.root_order));
  // full is a central real-or-complex scalar commuting with everything relevant
  return mul_monomials(p, corr, inv);
}

int commutation_exponent(const Presentation& p, const UnitMonomial& a, const UnitMonomial& b) {
  UnitMonomial ab = mul_monomials(p, a, b);
  UnitMonomial ba = mul_monomials(p, b, a);
  if (ab.exps != ba.exps || ab.quat != ba.quat) return -1;
  return static_cast<int>(mod(ab.coeff - ba.coeff, p.root_order));
}

Presentation with_root_order(const Presentation& p, int n) {
  if (n % p.root_order != 0) throw std::invalid_argument("root order must be a multiple of the current one");
  int f = n / p.root_order;
  Presentation q = p;
  q.root_order = n;
  for (auto& g : q.gens) {
    for (auto& c : g.comm) c *= f;
  }
  return q;
}

Presentation tensor(const Presentation& a, const Presentation& b) {
  if (a.kind != IdentityKind::OneDim && b.kind != IdentityKind::OneDim) {
    throw NotDivisionGrading(std::string("tensor product of two factors with non-trivial identity components (") +
                             kind_name(a.kind) + ", " + kind_name(b.kind) + ") is not a division grading");
  }
  int n = static_cast<int>(lcm64(a.root_order, b.root_order));
  Presentation pa = with_root_order(a, n);
  Presentation pb = with_root_order(b, n);
  std::vector<int> orders = pa.group.orders();
  orders.insert(orders.end(), pb.group.orders().begin(), pb.group.orders().end());
  Presentation out;
  out.group = FiniteAbelianGroup(orders);
  out.root_order = n;
  out.kind = a.kind != IdentityKind::OneDim ? a.kind : b.kind;
  const size_t ra = pa.gens.size(), rb = pb.gens.size();
  const size_t ga = pa.group.orders().size(), gb = pb.group.orders().size();
  for (size_t i = 0; i < ra; ++i) {
    Generator g = pa.gens[i];
    g.degree.resize(ga + gb, 0);
    g.comm.resize(ra + rb, 0);
    out.gens.push_back(g);
  }
  for (size_t i = 0; i < rb; ++i) {
    Generator g = pb.gens[i];
    GroupElement d(ga, 0);
    d.insert(d.end(), g.degree.begin(), g.degree.end());
    g.degree = d;
    std::vector<int> row(ra, 0);
    row.insert(row.end(), g.comm.begin(), g.comm.end());
    g.comm = row;
    out.gens.push_back(g);
  }
  return out;
}

std::pair<int, IdentityKind> identity_component_dim(const Presentation& p) {
  switch (p.kind) {
    case IdentityKind::OneDim: return {1, p.kind};
    case IdentityKind::CentralJ:
    case IdentityKind::NoncentralJ: return {2, p.kind};
    case IdentityKind::Quaternion: return {4, p.kind};
  }
  return {1, p.kind};
}

Bicharacter beta_of(const Presentation& p) {
  if (p.kind != IdentityKind::OneDim && p.kind != IdentityKind::CentralJ) {
    throw UnsupportedKind(std::string("bicharacter undefined for ") + kind_name(p.kind));
  }
  Bicharacter beta;
  beta.root_order = p.root_order;
  for (const auto& g : p.gens) beta.b.push_back(g.comm);
  return beta;
}

int beta_value(const FiniteAbelianGroup& g, const Bicharacter& beta, const GroupElement& x, const GroupElement& y) {
  int64_t t = 0;
  for (int i = 0; i < g.rank(); ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < g.rank(); ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      t += static_cast<int64_t>(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(j)] *
           beta.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return static_cast<int>(mod(t, beta.root_order));
}

bool is_alternating(const FiniteAbelianGroup& g, const Bicharacter& beta) {
  const int r = g.rank();
  if (static_cast<int>(beta.b.size()) != r) return false;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(beta.b[static_cast<size_t>(i)].size()) != r) return false;
    if (mod(beta.b[static_cast<size_t>(i)][static_cast<size_t>(i)], beta.root_order) != 0) return false;
    for (int j = 0; j < r; ++j) {
      int bij = beta.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (mod(bij + beta.b[static_cast<size_t>(j)][static_cast<size_t>(i)], beta.root_order) != 0) return false;
      if (mod(static_cast<int64_t>(bij) * g.orders()[static_cast<size_t>(i)], beta.root_order) != 0) return false;
    }
  }
  return true;
}

CenterSupport center_support(const Presentation& p) {
  if (p.kind != IdentityKind::OneDim && p.kind != IdentityKind::CentralJ) {
    throw UnsupportedKind(std::string("center support unsupported for ") + kind_name(p.kind));
  }
  CenterSupport out;
  const int64_t card = p.group.cardinality();
  for (int64_t idx = 0; idx < card; ++idx) {
    GroupElement g = p.group.element_at(idx);
    UnitMonomial m = p.from_degree(g);
    bool central = true;
    for (int j = 0; j < p.rank() && central; ++j) central = commutation_exponent(p, m, p.gen(j)) == 0;
    if (central) out.degrees.push_back(g);
  }
  out.subgroup = subgroup_generated(p.group, out.degrees);
  return out;
}

bool check_division(const Presentation& p) {
  const int64_t card = p.group.cardinality();
  for (int64_t idx = 0; idx < card; ++idx) {
    UnitMonomial m = p.from_degree(p.group.element_at(idx));
    UnitMonomial inv = inverse_monomial(p, m);
    UnitMonomial prod = mul_monomials(p, m, inv);
    if (!p.is_scalar(prod) || prod.coeff != 0) return false;
  }
  return true;
}

std::string monomial_to_string(const Presentation& p, const UnitMonomial& m) {
  std::ostringstream os;
  int t = m.coeff;
  int j = 0;
  if (p.has_j()) {
    int quarter = p.root_order / 4;
    if ((t / quarter) % 2 == 1) {
      j = 1;
      t = static_cast<int>(mod(t - quarter, p.root_order));
    }
  }
  os << "zeta^" << t;
  if (p.has_j()) os << " J^" << j;
  if (p.kind == IdentityKind::Quaternion) os << " q^" << "1ijk"[m.quat];
  os << ' ';
  for (size_t i = 0; i < m.exps.size(); ++i) os << 'x' << (i + 1) << '^' << m.exps[i];
  return os.str();
}

}  // namespace gda
