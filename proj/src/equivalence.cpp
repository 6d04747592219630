#include "gda/equivalence.hpp"

#include <algorithm>
#include <sstream>

#include "gda/invariants.hpp"

namespace gda {

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::NotEquivalent: return "not_equivalent";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

bool verify_substitution(const Presentation& host, const Presentation& relations,
                         const std::vector<UnitMonomial>& images, int j_sign, int image_root) {
  if (image_root == 0) image_root = host.root_order;
  if (images.size() != relations.gens.size() || host.kind != relations.kind) return false;
  if (j_sign != 1 && j_sign != -1) return false;
  const int n = static_cast<int>(lcm64(lcm64(host.root_order, relations.root_order), image_root));
  const Presentation h = with_root_order(host, n);
  const int fi = n / image_root, fr = n / relations.root_order;
  std::vector<UnitMonomial> img;
  for (const auto& m : images) {
    if (m.exps.size() != h.gens.size()) return false;
    for (size_t t = 0; t < m.exps.size(); ++t) {
      if (m.exps[t] < 0 || m.exps[t] >= h.gens[t].power) return false;
    }
    if (m.quat < 0 || m.quat > 3 || (m.quat != 0 && h.kind != IdentityKind::Quaternion)) return false;
    UnitMonomial x = m;
    x.coeff = static_cast<int>(mod(static_cast<int64_t>(m.coeff) * fi, n));
    img.push_back(x);
  }
  const size_t r = img.size();
  for (size_t i = 0; i < r; ++i) {
    const auto& g = relations.gens[i];
    if (power_monomial(h, img[i], g.power) != h.scalar(g.sign < 0 ? n / 2 : 0)) return false;
    if (h.kind == IdentityKind::NoncentralJ && commutes_with_j(h, img[i]) == g.j_anti) return false;
    if (h.kind == IdentityKind::Quaternion) {
      for (int q = 1; q <= 3; ++q) {
        if (commutation_exponent(h, img[i], h.quat_unit(q)) != 0) return false;
      }
    }
    for (size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      int want = static_cast<int>(mod(static_cast<int64_t>(j_sign) * g.comm[j] * fr, n));
      if (commutation_exponent(h, img[i], img[j]) != want) return false;
    }
  }
  GroupMap gm;
  for (const auto& x : img) gm.images.push_back(h.degree(x));
  return is_isomorphism(relations.group, h.group, gm);
}

bool verify_step(const RewriteStep& step) {
  return verify_substitution(presentation_of(step.before), presentation_of(step.after), step.images);
}

bool verify_weak_isomorphism(const Presentation& source, const Presentation& target, const WeakIsomorphism& w) {
  if (!verify_substitution(target, source, w.gen_images, w.j_sign, w.root_order)) return false;
  for (size_t i = 0; i < w.group_map.size() && i < w.gen_images.size(); ++i) {
    if (target.degree(w.gen_images[i]) != w.group_map[i]) return false;
  }
  return w.group_map.size() == w.gen_images.size();
}

namespace {

class Search {
 public:
  Search(const Presentation& src, const Presentation& dst, int j_sign, int64_t budget, int64_t* nodes)
      : src_(src), dst_(dst), j_sign_(j_sign), budget_(budget), nodes_(nodes) {
    const auto& g = dst_.group;
    size_ = g.cardinality();
    for (int64_t idx = 0; idx < size_; ++idx) {
      GroupElement e = g.element_at(idx);
      elems_.push_back(e);
      orders_.push_back(element_order(g, e));
      base_.push_back(dst_.from_degree(e));
    }
    images_.resize(src_.gens.size());
    first_anti_ = -1;
    for (size_t i = 0; i < src_.gens.size(); ++i) {
      if (src_.gens[i].j_anti) {
        first_anti_ = static_cast<int>(i);
        break;
      }
    }
  }

  std::optional<std::vector<UnitMonomial>> run() {
    std::vector<char> members(static_cast<size_t>(size_), 0);
    members[0] = 1;
    if (dfs(0, members)) return images_;
    return std::nullopt;
  }

 private:
  int64_t add_idx(int64_t a, int64_t b) const {
    return dst_.group.index_of(dst_.group.add(elems_[static_cast<size_t>(a)], elems_[static_cast<size_t>(b)]));
  }

  std::vector<int> coefficient_options(size_t i, const UnitMonomial& x) const {
    const int n = dst_.root_order;
    const auto& g = src_.gens[i];
    std::vector<int> out;
    switch (src_.kind) {
      case IdentityKind::OneDim:
      case IdentityKind::Quaternion:
        out.push_back(0);
        if (g.power % 2 == 1) out.push_back(n / 2);
        break;
      case IdentityKind::CentralJ: {
        // Only the power relation sees a central coefficient: solve it.
        UnitMonomial p = power_monomial(dst_, x, g.power);
        int want = g.sign < 0 ? n / 2 : 0;
        for (int t = 0; t < n; ++t) {
          if (mod(static_cast<int64_t>(t) * g.power + p.coeff, n) == want) {
            out.push_back(t);
            break;
          }
        }
        break;
      }
      case IdentityKind::NoncentralJ:
        if (g.j_anti) {
          // Inner automorphisms by units of R_e rotate anti-J images freely,
          // so the first one is fixed; later ones are determined up to zeta_4.
          out.push_back(0);
          if (static_cast<int>(i) != first_anti_) out.push_back(n / 4);
        } else {
          const int top = g.power % 2 == 0 ? n / 2 : n;
          for (int t = 0; t < top; ++t) out.push_back(t);
        }
        break;
    }
    return out;
  }

  bool dfs(size_t i, const std::vector<char>& members) {
    if (i == src_.gens.size()) return true;
    const auto& g = src_.gens[i];
    const int n = dst_.root_order;
    for (int64_t h = 1; h < size_; ++h) {
      if (orders_[static_cast<size_t>(h)] != g.power) continue;
      // <h> must meet the subgroup generated so far trivially.
      bool independent = true;
      int64_t mult = h;
      for (int t = 1; t < g.power && independent; ++t) {
        if (members[static_cast<size_t>(mult)]) independent = false;
        mult = add_idx(mult, h);
      }
      if (!independent) continue;
      const UnitMonomial& x = base_[static_cast<size_t>(h)];
      if (src_.kind == IdentityKind::NoncentralJ && commutes_with_j(dst_, x) == g.j_anti) continue;
      for (int c : coefficient_options(i, x)) {
        if (++*nodes_ > budget_) throw BudgetExceeded("oracle search budget exhausted");
        UnitMonomial img = mul_monomials(dst_, dst_.scalar(c), x);
        if (power_monomial(dst_, img, g.power) != dst_.scalar(g.sign < 0 ? n / 2 : 0)) continue;
        bool ok = true;
        for (size_t j = 0; j < i && ok; ++j) {
          int want = static_cast<int>(mod(static_cast<int64_t>(j_sign_) * g.comm[j], n));
          ok = commutation_exponent(dst_, img, images_[j]) == want;
        }
        if (!ok) continue;
        images_[i] = img;
        std::vector<char> next(members.size(), 0);
        for (int64_t a = 0; a < size_; ++a) {
          if (!members[static_cast<size_t>(a)]) continue;
          int64_t y = a;
          for (int t = 0; t < g.power; ++t) {
            next[static_cast<size_t>(y)] = 1;
            y = add_idx(y, h);
          }
        }
        if (dfs(i + 1, next)) return true;
      }
    }
    return false;
  }

  const Presentation& src_;
  const Presentation& dst_;
  int j_sign_;
  int64_t budget_;
  int64_t* nodes_;
  int64_t size_ = 0;
  std::vector<GroupElement> elems_;
  std::vector<int> orders_;
  std::vector<UnitMonomial> base_;
  std::vector<UnitMonomial> images_;
  int first_anti_ = -1;
};

}  // namespace

std::optional<WeakIsomorphism> oracle_search(const Presentation& source, const Presentation& target,
                                             int64_t budget, OracleStats* stats) {
  OracleStats local;
  OracleStats& st = stats ? *stats : local;
  if (source.kind != target.kind) return std::nullopt;
  if (source.group.cardinality() != target.group.cardinality()) return std::nullopt;
  if (canonical_group(source.group).orders() != canonical_group(target.group).orders()) return std::nullopt;
  Presentation src = source, dst = target;
  const bool quat = source.kind == IdentityKind::Quaternion;
  if (quat) {
    // Compare the one-dimensional centralizers of R_e = H.
    src.kind = dst.kind = IdentityKind::OneDim;
  }
  const int ex = std::max(1, target.group.exponent());
  int n = static_cast<int>(lcm64(src.root_order, dst.root_order));
  if (src.kind == IdentityKind::NoncentralJ) n = static_cast<int>(lcm64(lcm64(2 * n, 2 * ex), 4));
  if (src.kind == IdentityKind::CentralJ) n *= ex;
  src = with_root_order(src, n);
  dst = with_root_order(dst, n);
  std::vector<int> signs = {1};
  if (src.kind == IdentityKind::CentralJ) signs.push_back(-1);
  for (int js : signs) {
    Search s(src, dst, js, budget, &st.nodes);
    auto found = s.run();
    if (!found) continue;
    WeakIsomorphism w;
    w.gen_images = *found;
    w.root_order = n;
    w.j_sign = js;
    w.quaternion_fixed = quat;
    for (const auto& m : w.gen_images) w.group_map.push_back(dst.degree(m));
    if (!verify_weak_isomorphism(source, target, w)) throw std::logic_error("oracle produced an invalid witness");
    return w;
  }
  return std::nullopt;
}

int default_probe_depth(const FactorList& fs) {
  Presentation p = presentation_of(fs);
  int e = std::max(1, p.group.exponent());
  int two = e & -e;
  return std::max(1, log2_exact(two));
}

std::vector<InvariantValue> invariant_probes(const FactorList& fs, int max_k) {
  if (max_k <= 0) max_k = default_probe_depth(fs);
  Presentation p = presentation_of(fs);
  std::vector<InvariantValue> out;
  out.push_back({"identity_kind", kind_name(p.kind)});
  out.push_back({"group", canonical_group(p.group).to_string()});
  out.push_back({"truncated_characteristic", truncated_to_string(truncated(characteristic(fs)))});
  for (int k = 1; k <= max_k; ++k) {
    out.push_back({"central_solution(k=" + std::to_string(k) + ",-1)",
                   central_solution_exists(p, k, -1) ? "yes" : "no"});
  }
  for (int k = 1; k <= max_k; ++k) {
    for (int s : {-1, 1}) {
      SolutionSupport ss = solution_support(p, k, s);
      std::string tag = "(k=" + std::to_string(k) + "," + (s < 0 ? "-1" : "+1") + ")";
      out.push_back({"solution_support_count" + tag, std::to_string(ss.count)});
      out.push_back({"solution_support_finite" + tag, std::to_string(ss.finite)});
    }
  }
  out.push_back({"canonical_label", canonical_label(normalize(fs))});
  return out;
}

std::optional<Certificate> separating_invariant(const FactorList& a, const FactorList& b) {
  int k = std::max(default_probe_depth(a), default_probe_depth(b));
  auto pa = invariant_probes(a, k), pb = invariant_probes(b, k);
  for (size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].value != pb[i].value) return Certificate{pa[i].name, pa[i].value, pb[i].value};
  }
  return std::nullopt;
}

Verdict equivalent(const FactorList& a, const FactorList& b, const EquivOptions& opt) {
  Verdict v;
  bool labels = true;
  try {
    NormalizeOptions no;
    no.aut_limit = opt.aut_limit;
    v.label1 = canonical_label(normalize_full(a, no).form);
    v.label2 = canonical_label(normalize_full(b, no).form);
  } catch (const BudgetExceeded& e) {
    labels = false;
    v.note = e.what();
  }
  auto not_equivalent = [&] {
    v.kind = VerdictKind::NotEquivalent;
    if (labels) v.certificate = separating_invariant(a, b);
    if (!v.certificate) v.certificate = Certificate{"canonical_label", v.label1, v.label2};
  };
  if (!opt.oracle) {
    if (!labels) {
      v.kind = VerdictKind::Unknown;
    } else if (v.label1 == v.label2) {
      v.kind = VerdictKind::Equivalent;
    } else {
      not_equivalent();
    }
    return v;
  }
  try {
    auto w = oracle_search(presentation_of(a), presentation_of(b), opt.budget);
    if (w) {
      v.kind = VerdictKind::Equivalent;
      v.witness = w;
      if (labels && v.label1 != v.label2) v.note = "oracle witness contradicts the canonical labels";
    } else {
      not_equivalent();
      if (labels && v.label1 == v.label2) v.note = "canonical labels agree but the oracle found no witness";
    }
  } catch (const BudgetExceeded& e) {
    v.kind = VerdictKind::Unknown;
    v.note = e.what();
  }
  return v;
}

namespace {

int64_t radical_size(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& beta) {
  const int e = std::max(1, g.exponent());
  const size_t r = g.orders().size();
  int64_t count = 0;
  for (int64_t i = 0; i < g.cardinality(); ++i) {
    GroupElement x = g.element_at(i);
    bool rad = true;
    for (size_t c = 0; c < r && rad; ++c) {
      int64_t t = 0;
      for (size_t a = 0; a < r; ++a) t += static_cast<int64_t>(x[a]) * beta[a][c];
      rad = mod(t, e) == 0;
    }
    if (rad) ++count;
  }
  return count;
}

Factor pauli_factor(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& beta) {
  return factor_pauli(g.orders(), beta);
}

}  // namespace

Verdict pauli_equivalent(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& beta1,
                         const std::vector<std::vector<int>>& beta2, int64_t aut_limit) {
  Verdict v;
  const Factor f1 = pauli_factor(g, beta1), f2 = pauli_factor(g, beta2);
  const Presentation p1 = factor_presentation(f1), p2 = factor_presentation(f2);
  const int e = std::max(1, g.exponent());
  const size_t r = g.orders().size();
  std::optional<GroupAutomorphism> hit;
  int j_sign = 1;
  try {
    enumerate_automorphisms(g, aut_limit, [&](const GroupAutomorphism& alpha) {
      std::vector<std::vector<int>> m(r, std::vector<int>(r));
      for (size_t a = 0; a < r; ++a) {
        for (size_t c = 0; c < r; ++c) {
          int64_t t = 0;
          for (size_t x = 0; x < r; ++x) {
            for (size_t y = 0; y < r; ++y) {
              t += static_cast<int64_t>(alpha.images[a][x]) * alpha.images[c][y] * beta2[x][y];
            }
          }
          m[a][c] = static_cast<int>(mod(t, e));
        }
      }
      bool same = true, conj = true;
      for (size_t a = 0; a < r; ++a) {
        for (size_t c = 0; c < r; ++c) {
          same = same && m[a][c] == mod(beta1[a][c], e);
          conj = conj && m[a][c] == mod(-beta1[a][c], e);
        }
      }
      if (same || conj) {
        hit = alpha;
        j_sign = same ? 1 : -1;
        return false;
      }
      return true;
    });
  } catch (const BudgetExceeded& ex) {
    v.kind = VerdictKind::Unknown;
    v.note = ex.what();
    return v;
  }
  if (!hit) {
    v.kind = VerdictKind::NotEquivalent;
    int64_t r1 = radical_size(g, beta1), r2 = radical_size(g, beta2);
    if (r1 != r2) {
      v.certificate = Certificate{"radical_size", std::to_string(r1), std::to_string(r2)};
    } else {
      NormalizeOptions no;
      no.aut_limit = aut_limit;
      v.certificate = Certificate{"pauli_orbit_representative", canonical_label(normalize_full({f1}, no).form),
                                  canonical_label(normalize_full({f2}, no).form)};
    }
    return v;
  }
  // X_i -> z_i X_alpha(e_i), z_i solving the power relation, J -> j_sign J.
  const int n = p2.root_order * e;
  const Presentation dst = with_root_order(p2, n);
  WeakIsomorphism w;
  w.root_order = n;
  w.j_sign = j_sign;
  for (size_t i = 0; i < r; ++i) {
    UnitMonomial x = dst.from_degree(hit->images[i]);
    const auto& gi = p1.gens[i];
    UnitMonomial pw = power_monomial(dst, x, gi.power);
    int want = gi.sign < 0 ? n / 2 : 0;
    for (int t = 0; t < n; ++t) {
      if (mod(static_cast<int64_t>(t) * gi.power + pw.coeff, n) == want) {
        x.coeff = t;
        break;
      }
    }
    w.gen_images.push_back(x);
    w.group_map.push_back(hit->images[i]);
  }
  if (!verify_weak_isomorphism(p1, p2, w)) throw std::logic_error("pauli witness failed verification");
  v.kind = VerdictKind::Equivalent;
  v.witness = w;
  return v;
}

namespace {

Factor raw_d(int k, int l, int mu, int nu) {
  Factor f;
  f.type = FactorType::D;
  f.a = 1 << k;
  f.b = 1 << l;
  f.s1 = mu;
  f.s2 = nu;
  return f;
}

struct Sweep {
  LemmaReport rep;
  void check(const FactorList& fs, RuleId rule, const RuleSite& site) {
    ++rep.instances;
    bool ok = false;
    try {
      ok = verify_step(apply_rule(fs, rule, site));
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) {
      ++rep.passed;
    } else {
      rep.failures.push_back(factors_to_string(fs));
    }
  }
  // Every site the rule reports on `fs`.
  void check_sites(const FactorList& fs, RuleId rule) {
    for (const auto& s : rule_sites(fs, rule)) check(fs, rule, s);
  }
};

}  // namespace

std::vector<LemmaReport> verify_lemmas(int max_exp) {
  const int K = std::max(1, max_exp);
  std::vector<LemmaReport> out;
  const int signs[] = {1, -1};
  auto named = [](const std::string& rule, bool shipped) {
    Sweep s;
    s.rep.rule = rule;
    s.rep.shipped = shipped;
    return s;
  };
  const RuleSite pair{0, 1, 0, 0};

  {
    auto s = named("R_LCE", true);
    for (int m = 1; m <= K; ++m) {
      for (int n = 1; n <= K; ++n) s.check_sites({factor_c(1 << m, -1), factor_c(1 << n, -1)}, RuleId::Lce);
    }
    out.push_back(s.rep);
  }
  {
    auto s1 = named("R_E1", true), s2 = named("R_E2", true);
    for (int k = 1; k <= K; ++k) {
      for (int l = 1; l <= K; ++l) {
        FactorList fs = {factor_e(1 << k, -1), factor_c(1 << l, -1)};
        if (k <= l) s1.check(fs, RuleId::E1, pair);
        if (k > l) s2.check(fs, RuleId::E2, pair);
      }
    }
    out.push_back(s1.rep);
    out.push_back(s2.rep);
  }
  {
    // (-k][l,-m]
    auto s3 = named("R_E3", true), s4 = named("R_E4", true), s5 = named("R_E5", true), s6 = named("R_E6", true);
    for (int k = 1; k <= K; ++k) {
      for (int l = 1; l <= K; ++l) {
        for (int m = 1; m <= K; ++m) {
          FactorList fs = {factor_e(1 << k, -1), raw_d(l, m, 1, -1)};
          if (k < m) s3.check(fs, RuleId::E3, pair);
          if (k > m) s4.check(fs, RuleId::E4, pair);
          if (k == m && l >= 2) s5.check(fs, RuleId::E5, pair);
          if (k == m && l == 1 && k >= 2) s6.check(fs, RuleId::E6, pair);
        }
      }
    }
    out.push_back(s3.rep);
    out.push_back(s4.rep);
    out.push_back(s5.rep);
    out.push_back(s6.rep);
  }
  {
    // (-k][-l,m]
    auto s7 = named("R_E7", true), s8 = named("R_E8", false), s8c = named("R_E8C", true), s9 = named("R_E9", true);
    for (int k = 1; k <= K; ++k) {
      for (int l = 1; l <= K; ++l) {
        for (int m = 1; m <= K; ++m) {
          FactorList fs = {factor_e(1 << k, -1), raw_d(l, m, -1, 1)};
          if (k > l) s7.check(fs, RuleId::E7, pair);
          if (k < l) {
            s8.check(fs, RuleId::E8, pair);
            s8c.check(fs, RuleId::E8C, pair);
          }
          if (k == l && m >= 2) s9.check(fs, RuleId::E9, pair);
        }
      }
    }
    s8.rep.note = "substitution {J,u w v^(2^(l-k))}{v,w} as printed: the new u anticommutes with v; disabled, R_E8C uses {J,u v^(2^(l-k))}{v,w}";
    s8c.rep.note = "corrected form of item 8";
    out.push_back(s7.rep);
    out.push_back(s8.rep);
    out.push_back(s8c.rep);
    out.push_back(s9.rep);
  }
  {
    // (rho k][-1, nu l], l <= k
    auto s10 = named("R_E10", true), s10p = named("R_E10 (printed side condition)", false);
    auto s11 = named("R_E11", true), s12 = named("R_E12", true);
    for (int k = 1; k <= K; ++k) {
      for (int rho : signs) {
        for (int l = 1; l <= k; ++l) {
          for (int nu : signs) {
            FactorList fs = {factor_e(1 << k, rho), raw_d(1, l, -1, nu)};
            s10p.check(fs, RuleId::E10, pair);
            if (!rule_sites(fs, RuleId::E10).empty()) s10.check(fs, RuleId::E10, pair);
          }
        }
        FactorList h = {factor_e(1 << k, rho), raw_d(1, 1, -1, -1)};
        if (k >= 2) s11.check(h, RuleId::E11, pair);
        if (k == 1) s12.check(h, RuleId::E12, pair);
      }
    }
    s10p.rep.note = "fails exactly when l = k and nu = -1: (u w)^(2^k) = rho * nu";
    out.push_back(s10.rep);
    out.push_back(s10p.rep);
    out.push_back(s11.rep);
    out.push_back(s12.rep);
  }
  {
    auto cd = named("R_CD", true), dd = named("R_DD_CONSOL", true), hh = named("R_HH", true);
    auto d22 = named("R_D22", true), ds = named("R_DSINGLE", true), sw = named("R_SWAP", true);
    auto os = named("R_ODD_SPLIT", true);
    for (int k = 1; k <= K; ++k) {
      for (int l = 1; l <= K; ++l) {
        for (int mu : signs) {
          for (int nu : signs) {
            Factor d = raw_d(k, l, mu, nu);
            ds.check_sites({d}, RuleId::DSingle);
            d22.check_sites({d}, RuleId::D22);
            sw.check_sites({d}, RuleId::Swap);
            for (int m = 1; m <= K; ++m) {
              cd.check_sites({d, factor_c(1 << m, -1)}, RuleId::Cd);
              cd.check_sites({factor_c(1 << m, -1), d}, RuleId::Cd);
            }
            for (int k2 = 1; k2 <= K; ++k2) {
              for (int l2 = 1; l2 <= K; ++l2) {
                for (int mu2 : signs) {
                  for (int nu2 : signs) dd.check_sites({d, raw_d(k2, l2, mu2, nu2)}, RuleId::DdConsol);
                }
              }
            }
          }
        }
      }
    }
    hh.check_sites({raw_d(1, 1, -1, -1), raw_d(1, 1, -1, -1)}, RuleId::Hh);
    for (int n : {3, 5, 6, 9, 12, 15, 20, 24, 36}) {
      for (int eta : signs) os.check_sites({factor_c(n, eta)}, RuleId::OddSplit);
    }
    for (const auto& g : std::vector<std::vector<int>>{{2}, {6}, {4, 6}, {3, 9}, {2, 2, 3}, {12, 8}}) {
      os.check_sites({factor_rg(g)}, RuleId::OddSplit);
    }
    for (auto* s : {&os, &sw, &d22, &ds, &cd, &dd, &hh}) out.push_back(s->rep);
  }
  return out;
}

}  // namespace gda
