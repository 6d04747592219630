#include "gda/catalog.hpp"

namespace gda {

namespace {

void require_power_of_two(int n, const char* what) {
  if (n < 2 || !is_power_of_two(n)) {
    throw InvalidParameter(std::string(what) + " order " + std::to_string(n) + " is not a power of 2 (>= 2)");
  }
}

void require_sign(int s) {
  if (s != 1 && s != -1) throw InvalidParameter("sign must be +1 or -1");
}

std::vector<int> nontrivial_orders(const FiniteAbelianGroup& g) {
  std::vector<int> out;
  for (int n : g.orders()) {
    if (n > 1) out.push_back(n);
  }
  return out;
}

Presentation cyclic_product(const std::vector<int>& orders, int root_order, IdentityKind kind) {
  Presentation p;
  p.group = FiniteAbelianGroup(orders);
  p.root_order = root_order;
  p.kind = kind;
  const size_t r = orders.size();
  for (size_t i = 0; i < r; ++i) {
    Generator g;
    g.degree = p.group.generator(static_cast<int>(i));
    g.power = orders[i];
    g.comm.assign(r, 0);
    p.gens.push_back(g);
  }
  return p;
}

}  // namespace

Presentation basic_c(int m, int eta, std::string* notice) {
  if (m < 2) throw InvalidParameter("C(m; eta) needs m >= 2, got " + std::to_string(m));
  require_sign(eta);
  if (m % 2 == 1 && eta == -1) {
    eta = 1;
    if (notice) *notice = "C(" + std::to_string(m) + ";-) has odd order; normalized to C(" + std::to_string(m) + ";+)";
  }
  Presentation p = cyclic_product({m}, 2, IdentityKind::OneDim);
  p.gens[0].sign = eta;
  return p;
}

Presentation basic_d(int k_ord, int l_ord, int mu, int nu) {
  require_power_of_two(k_ord, "D");
  require_power_of_two(l_ord, "D");
  require_sign(mu);
  require_sign(nu);
  if (k_ord > l_ord) {
    std::swap(k_ord, l_ord);
    std::swap(mu, nu);
  }
  Presentation p = cyclic_product({k_ord, l_ord}, 2, IdentityKind::OneDim);
  p.gens[0].sign = mu;
  p.gens[1].sign = nu;
  p.gens[0].comm[1] = 1;
  p.gens[1].comm[0] = 1;
  return p;
}

Presentation basic_e(int n_ord, int eps) {
  require_power_of_two(n_ord, "E");
  require_sign(eps);
  Presentation p = cyclic_product({n_ord}, 4, IdentityKind::NoncentralJ);
  p.gens[0].sign = eps;
  p.gens[0].j_anti = true;
  return p;
}

Presentation quaternion() { return cyclic_product({}, 2, IdentityKind::Quaternion); }

Presentation group_algebra(const FiniteAbelianGroup& g) {
  return cyclic_product(nontrivial_orders(g), 2, IdentityKind::OneDim);
}

Presentation complex_group_algebra(const FiniteAbelianGroup& g) {
  return cyclic_product(nontrivial_orders(g), 4, IdentityKind::CentralJ);
}

Presentation pauli(const FiniteAbelianGroup& g, const Bicharacter& beta) {
  if (beta.root_order < 1) throw InvalidBicharacter("bicharacter root order must be positive");
  if (!is_alternating(g, beta)) {
    throw InvalidBicharacter("bicharacter is not alternating or not compatible with the group orders");
  }
  for (int n : g.orders()) {
    if (n < 2) throw InvalidBicharacter("Pauli groups must not contain trivial cyclic factors");
  }
  int n = static_cast<int>(lcm64(4, beta.root_order));
  Presentation p = cyclic_product(g.orders(), n, IdentityKind::CentralJ);
  int f = n / beta.root_order;
  for (size_t i = 0; i < p.gens.size(); ++i) {
    for (size_t j = 0; j < p.gens.size(); ++j) {
      p.gens[i].comm[j] = static_cast<int>(mod(static_cast<int64_t>(beta.b[i][j]) * f, n));
    }
  }
  return p;
}

const std::vector<std::string>& named_catalog() {
  static const std::vector<std::string> names = {"C2", "H2", "H4", "M2_2", "M2_4", "M2_8", "M2C_Z4", "M4_4", "H"};
  return names;
}

Presentation named(const std::string& name) {
  if (name == "C2") return basic_c(2, -1);
  if (name == "H2") return basic_e(2, -1);
  if (name == "H4") return basic_d(2, 2, -1, -1);
  if (name == "M2_2") return basic_e(2, 1);
  if (name == "M2_4") return basic_d(2, 2, 1, 1);
  // C of degree alpha and wA of degree gamma: C^2 = -I, (wA)^4 = -I, anticommuting.
  if (name == "M2_8") return basic_d(2, 4, -1, -1);
  // J = C, v = wA with v^4 = w^4 I = -I.
  if (name == "M2C_Z4") return basic_e(4, -1);
  // Identity component is H; its centralizer is spanned by I x C and C x A,
  // both squaring to -I and anticommuting.
  if (name == "M4_4") return tensor(quaternion(), basic_d(2, 2, -1, -1));
  if (name == "H") return quaternion();
  throw InvalidParameter("unknown catalog name: " + name);
}

}  // namespace gda
