#include "gda/factors.hpp"

#include <sstream>

#include "gda/catalog.hpp"

namespace gda {

Factor factor_c(int m, int eta) {
  Factor f;
  f.type = FactorType::C;
  f.a = m;
  f.s1 = eta;
  return f;
}

Factor factor_d(int k_ord, int l_ord, int mu, int nu) {
  Factor f;
  f.type = FactorType::D;
  if (k_ord > l_ord) {
    std::swap(k_ord, l_ord);
    std::swap(mu, nu);
  }
  f.a = k_ord;
  f.b = l_ord;
  f.s1 = mu;
  f.s2 = nu;
  return f;
}

Factor factor_e(int n_ord, int eps) {
  Factor f;
  f.type = FactorType::E;
  f.a = n_ord;
  f.s1 = eps;
  return f;
}

Factor factor_h() {
  Factor f;
  f.type = FactorType::H;
  return f;
}

namespace {

std::vector<int> drop_trivial(std::vector<int> orders) {
  std::vector<int> out;
  for (int n : orders) {
    if (n < 1) throw InvalidGroup("group orders must be >= 1");
    if (n > 1) out.push_back(n);
  }
  return out;
}

}  // namespace

Factor factor_rg(std::vector<int> orders) {
  Factor f;
  f.type = FactorType::RG;
  f.group = drop_trivial(std::move(orders));
  return f;
}

Factor factor_cg(std::vector<int> orders) {
  Factor f;
  f.type = FactorType::CG;
  f.group = drop_trivial(std::move(orders));
  return f;
}

Factor factor_pauli(std::vector<int> orders, std::vector<std::vector<int>> matrix) {
  Factor f;
  f.type = FactorType::Pauli;
  f.group = std::move(orders);
  f.matrix = std::move(matrix);
  return f;
}

int generator_count(const Factor& f) {
  switch (f.type) {
    case FactorType::C:
    case FactorType::E: return 1;
    case FactorType::D: return 2;
    case FactorType::H: return 0;
    case FactorType::RG:
    case FactorType::CG:
    case FactorType::Pauli: return static_cast<int>(f.group.size());
  }
  return 0;
}

std::vector<int> generator_offsets(const FactorList& fs) {
  std::vector<int> out;
  int at = 0;
  for (const auto& f : fs) {
    out.push_back(at);
    at += generator_count(f);
  }
  return out;
}

bool is_one_dim(const Factor& f) {
  return f.type == FactorType::C || f.type == FactorType::D || f.type == FactorType::RG;
}

Presentation factor_presentation(const Factor& f) {
  switch (f.type) {
    case FactorType::C: return basic_c(f.a, f.s1);
    case FactorType::D: {
      Presentation p = basic_d(f.a, f.b, f.s1, f.s2);
      if (f.a > f.b) {
        // Keep the declared slot order of a hand-built factor.
        p.group = FiniteAbelianGroup({f.a, f.b});
        std::swap(p.gens[0].power, p.gens[1].power);
        std::swap(p.gens[0].sign, p.gens[1].sign);
      }
      return p;
    }
    case FactorType::E: return basic_e(f.a, f.s1);
    case FactorType::H: return quaternion();
    case FactorType::RG: return group_algebra(FiniteAbelianGroup(f.group));
    case FactorType::CG: return complex_group_algebra(FiniteAbelianGroup(f.group));
    case FactorType::Pauli: {
      FiniteAbelianGroup g(f.group);
      Bicharacter beta;
      beta.root_order = std::max(1, g.exponent());
      beta.b = f.matrix;
      return pauli(g, beta);
    }
  }
  throw std::logic_error("unhandled factor type");
}

Presentation presentation_of(const FactorList& fs) {
  Presentation p = group_algebra(FiniteAbelianGroup());
  for (const auto& f : fs) p = tensor(p, factor_presentation(f));
  return p;
}

int64_t factor_dim(const Factor& f) {
  int64_t d = 1;
  switch (f.type) {
    case FactorType::C:
    case FactorType::E: d = f.a; break;
    case FactorType::D: d = static_cast<int64_t>(f.a) * f.b; break;
    case FactorType::H: d = 1; break;
    case FactorType::RG:
    case FactorType::CG:
    case FactorType::Pauli:
      for (int n : f.group) d *= n;
      break;
  }
  if (f.type == FactorType::E || f.type == FactorType::CG || f.type == FactorType::Pauli) d *= 2;
  if (f.type == FactorType::H) d *= 4;
  return d;
}

int64_t total_dim(const FactorList& fs) {
  int64_t d = 1;
  for (const auto& f : fs) d *= factor_dim(f);
  return d;
}

namespace {

const char* sign_char(int s) { return s < 0 ? "-" : "+"; }

std::string group_literal(const std::vector<int>& orders) {
  if (orders.empty()) return "Z1";
  std::string s;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(orders[i]);
  }
  return s;
}

}  // namespace

std::string factor_to_string(const Factor& f) {
  std::ostringstream os;
  switch (f.type) {
    case FactorType::C: os << "C(" << f.a << ';' << sign_char(f.s1) << ')'; break;
    case FactorType::D:
      os << "D(" << f.a << ',' << f.b << ';' << sign_char(f.s1) << ',' << sign_char(f.s2) << ')';
      break;
    case FactorType::E: os << "E(" << f.a << ';' << sign_char(f.s1) << ')'; break;
    case FactorType::H: os << 'H'; break;
    case FactorType::RG: os << "R[" << group_literal(f.group) << ']'; break;
    case FactorType::CG: os << "CG[" << group_literal(f.group) << ']'; break;
    case FactorType::Pauli:
      os << "Pauli(" << group_literal(f.group) << ';';
      for (size_t i = 0; i < f.matrix.size(); ++i) {
        if (i) os << ';';
        for (size_t j = 0; j < f.matrix[i].size(); ++j) {
          if (j) os << ',';
          os << f.matrix[i][j];
        }
      }
      os << ')';
      break;
  }
  return os.str();
}

std::string factors_to_string(const FactorList& fs) {
  if (fs.empty()) return "R[Z1]";
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += " * ";
    s += factor_to_string(fs[i]);
  }
  return s;
}

}  // namespace gda
