#include "gda/normalize.hpp"

#include <algorithm>
#include <sstream>

namespace gda {

namespace {

struct RuleInfo {
  RuleId id;
  const char* name;
};

const RuleInfo kRules[] = {
    {RuleId::OddSplit, "R_ODD_SPLIT"}, {RuleId::Swap, "R_SWAP"}, {RuleId::D22, "R_D22"},
    {RuleId::DSingle, "R_DSINGLE"},    {RuleId::Lce, "R_LCE"},   {RuleId::Cd, "R_CD"},
    {RuleId::DdConsol, "R_DD_CONSOL"}, {RuleId::Hh, "R_HH"},     {RuleId::E1, "R_E1"},
    {RuleId::E2, "R_E2"},              {RuleId::E3, "R_E3"},     {RuleId::E4, "R_E4"},
    {RuleId::E5, "R_E5"},              {RuleId::E6, "R_E6"},     {RuleId::E7, "R_E7"},
    {RuleId::E8, "R_E8"},              {RuleId::E8C, "R_E8C"},   {RuleId::E9, "R_E9"},
    {RuleId::E10, "R_E10"},            {RuleId::E11, "R_E11"},   {RuleId::E12, "R_E12"},
};

int ex(int order) { return log2_exact(order); }

bool is_c2(const Factor& f) { return f.type == FactorType::C && is_power_of_two(f.a); }
bool is_c_odd(const Factor& f) { return is_c2(f) && f.s1 < 0; }
bool is_h4(const Factor& f) { return f.type == FactorType::D && f.a == 2 && f.b == 2 && f.s1 < 0 && f.s2 < 0; }

int slot_order(const Factor& f, int local) { return local == 0 ? f.a : f.b; }
int slot_sign(const Factor& f, int local) { return local == 0 ? f.s1 : f.s2; }
void set_slot_sign(Factor& f, int local, int s) { (local == 0 ? f.s1 : f.s2) = s; }

std::vector<int> odd_slots(const Factor& f) {
  std::vector<int> out;
  if (f.type != FactorType::D) return out;
  if (f.s1 < 0) out.push_back(0);
  if (f.s2 < 0) out.push_back(1);
  return out;
}

bool needs_split(const Factor& f) {
  if (f.type == FactorType::RG) return true;
  if (f.type != FactorType::C) return false;
  if (f.a % 2 == 1) return f.s1 < 0;
  int two = f.a & -f.a;
  return two != f.a;
}

// Builds the rewritten list and the images of its generators in `before`.
class Builder {
 public:
  explicit Builder(const FactorList& before)
      : before_(before), p_(presentation_of(before)), off_(generator_offsets(before)) {}

  UnitMonomial g(int factor, int local, int64_t e = 1) const {
    return p_.gen(off_[static_cast<size_t>(factor)] + local, static_cast<int>(e));
  }
  UnitMonomial j() const { return p_.j_unit(); }
  UnitMonomial neg() const { return p_.scalar(p_.minus_one()); }
  UnitMonomial one() const { return p_.one(); }
  UnitMonomial mul(std::initializer_list<UnitMonomial> xs) const {
    UnitMonomial out = p_.one();
    for (const auto& x : xs) out = mul_monomials(p_, out, x);
    return out;
  }
  const Presentation& presentation() const { return p_; }

  void keep(int factor) {
    after_.push_back(before_[static_cast<size_t>(factor)]);
    for (int l = 0; l < generator_count(before_[static_cast<size_t>(factor)]); ++l) images_.push_back(g(factor, l));
  }
  void put(const Factor& f, std::vector<UnitMonomial> imgs) {
    if (static_cast<int>(imgs.size()) != generator_count(f)) throw std::logic_error("image count mismatch");
    after_.push_back(f);
    for (auto& m : imgs) images_.push_back(std::move(m));
  }
  RewriteStep finish(RuleId r) {
    RewriteStep s;
    s.rule = r;
    s.before = before_;
    s.after = std::move(after_);
    s.images = std::move(images_);
    return s;
  }

 private:
  const FactorList& before_;
  Presentation p_;
  std::vector<int> off_;
  FactorList after_;
  std::vector<UnitMonomial> images_;
};

// Rewrites factors i (and j) through `fn`, keeping the rest in place.
template <typename Fn>
RewriteStep rebuild(const FactorList& fs, RuleId r, int i, int j, Fn fn) {
  Builder b(fs);
  for (int t = 0; t < static_cast<int>(fs.size()); ++t) {
    if (t == i || t == j) {
      fn(b, t);
    } else {
      b.keep(t);
    }
  }
  return b.finish(r);
}

// Same-degree consolidation for two D factors: kill the odd slot `kz` of
// factor `z` using odd slot `ku` of factor `u`. Valid when the partner w of
// the killed slot satisfies d(w) <= d(v) (v the partner of ku) with strict
// inequality or w even.
bool dd_same_degree_ok(const Factor& fu, int ku, const Factor& fz, int kz) {
  int v = 1 - ku, w = 1 - kz;
  int dv = slot_order(fu, v), dw = slot_order(fz, w);
  if (dw > dv) return false;
  return dw < dv || slot_sign(fz, w) > 0;
}

struct DdPlan {
  bool valid = false;
  bool kill_j = true;  // kill the odd slot of factor j (else of factor i)
};

DdPlan dd_plan(const FactorList& fs, int i, int j, int gi, int gj) {
  const Factor& a = fs[static_cast<size_t>(i)];
  const Factor& c = fs[static_cast<size_t>(j)];
  int da = slot_order(a, gi), dc = slot_order(c, gj);
  DdPlan p;
  if (da != dc) {
    p.valid = true;
    p.kill_j = dc < da;
    return p;
  }
  if (dd_same_degree_ok(a, gi, c, gj)) {
    p.valid = true;
    p.kill_j = true;
  } else if (dd_same_degree_ok(c, gj, a, gi)) {
    p.valid = true;
    p.kill_j = false;
  }
  return p;
}

int e_index(const FactorList& fs) {
  for (size_t t = 0; t < fs.size(); ++t) {
    if (fs[t].type == FactorType::E) return static_cast<int>(t);
  }
  return -1;
}

// Side conditions of the E rules for partner factor t.
bool e_rule_applies(RuleId r, const Factor& e, const Factor& f) {
  const int k = ex(e.a);
  const int rho = e.s1;
  if (r == RuleId::E1 || r == RuleId::E2) {
    if (rho > 0 || !is_c_odd(f)) return false;
    int l = ex(f.a);
    return r == RuleId::E1 ? k <= l : k > l;
  }
  if (f.type != FactorType::D) return false;
  const int l = ex(f.a), m = ex(f.b);
  switch (r) {
    case RuleId::E3:
    case RuleId::E4:
    case RuleId::E5:
    case RuleId::E6:
      if (rho > 0 || f.s1 < 0 || f.s2 > 0) return false;
      if (r == RuleId::E3) return k < m;
      if (r == RuleId::E4) return k > m;
      if (r == RuleId::E5) return k == m && l >= 2;
      return k == m && l == 1 && k >= 2;
    case RuleId::E7:
    case RuleId::E8:
    case RuleId::E8C:
    case RuleId::E9:
      if (rho > 0 || f.s1 > 0 || f.s2 < 0) return false;
      if (r == RuleId::E7) return k > l;
      if (r == RuleId::E8 || r == RuleId::E8C) return k < l;
      return k == l && m >= 2;
    case RuleId::E10:
      // The printed condition also admits l = k with nu = -1, where the
      // substitution fails; that case is left to R_E11/R_E12 or stays put.
      if (f.s1 > 0 || l != 1 || is_h4(f)) return false;
      return m < k || (m == k && f.s2 > 0);
    case RuleId::E11: return is_h4(f) && k >= 2;
    case RuleId::E12: return is_h4(f) && k == 1;
    default: return false;
  }
}

bool is_e_rule(RuleId r) {
  switch (r) {
    case RuleId::E1:
    case RuleId::E2:
    case RuleId::E3:
    case RuleId::E4:
    case RuleId::E5:
    case RuleId::E6:
    case RuleId::E7:
    case RuleId::E8:
    case RuleId::E8C:
    case RuleId::E9:
    case RuleId::E10:
    case RuleId::E11:
    case RuleId::E12: return true;
    default: return false;
  }
}

RewriteStep apply_e_rule(const FactorList& fs, RuleId r, int ie, int it) {
  const Factor& e = fs[static_cast<size_t>(ie)];
  const Factor& f = fs[static_cast<size_t>(it)];
  const int k = ex(e.a);
  Factor e2 = e, f2 = f;
  return rebuild(fs, r, ie, it, [&](Builder& b, int t) {
    const auto u = b.g(ie, 0);
    if (r == RuleId::E1 || r == RuleId::E2) {
      const int l = ex(f.a);
      if (r == RuleId::E1) {
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, b.g(it, 0, int64_t{1} << (l - k))})});
        } else {
          b.keep(t);
        }
      } else {
        if (t == it) {
          f2.s1 = 1;
          b.put(f2, {b.mul({b.g(ie, 0, int64_t{1} << (k - l)), b.g(it, 0)})});
        } else {
          b.keep(t);
        }
      }
      return;
    }
    const int l = ex(f.a), m = ex(f.b);
    const auto v = b.g(it, 0), w = b.g(it, 1);
    switch (r) {
      case RuleId::E3:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, b.g(it, 1, int64_t{1} << (m - k))})});
        } else {
          b.keep(t);
        }
        break;
      case RuleId::E4:
        if (t == it) {
          f2.s2 = 1;
          b.put(f2, {v, b.mul({b.g(ie, 0, int64_t{1} << (k - m)), w})});
        } else {
          b.keep(t);
        }
        break;
      case RuleId::E5:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, w})});
        } else {
          b.put(f2, {b.mul({b.j(), v}), w});
        }
        break;
      case RuleId::E6:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, w})});
        } else {
          b.put(f2, {b.mul({b.j(), v, b.g(it, 1, int64_t{1} << (k - 1))}), w});
        }
        break;
      case RuleId::E7:
        if (t == it) {
          f2.s1 = 1;
          b.put(f2, {b.mul({b.g(ie, 0, int64_t{1} << (k - l)), v}), w});
        } else {
          b.keep(t);
        }
        break;
      case RuleId::E8:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, w, b.g(it, 0, int64_t{1} << (l - k))})});
        } else {
          b.keep(t);
        }
        break;
      case RuleId::E8C:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, b.g(it, 0, int64_t{1} << (l - k))})});
        } else {
          b.keep(t);
        }
        break;
      case RuleId::E9:
        if (t == ie) {
          e2.s1 = 1;
          b.put(e2, {b.mul({u, v})});
        } else {
          b.put(f2, {v, b.mul({b.j(), w})});
        }
        break;
      case RuleId::E10:
      case RuleId::E11:
      case RuleId::E12:
        if (t == ie) {
          if (r == RuleId::E12) e2.s1 = -e2.s1;
          b.put(e2, {b.mul({u, w})});
        } else {
          f2.s1 = 1;
          b.put(f2, {b.mul({b.j(), v}), w});
        }
        break;
      default: throw std::logic_error("not an E rule");
    }
  });
}

}  // namespace

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> v = [] {
    std::vector<RuleId> out;
    for (const auto& r : kRules) out.push_back(r.id);
    return out;
  }();
  return v;
}

const std::vector<RuleId>& rule_priority() {
  static const std::vector<RuleId> v = [] {
    std::vector<RuleId> out;
    for (const auto& r : kRules) {
      if (rule_enabled(r.id)) out.push_back(r.id);
    }
    return out;
  }();
  return v;
}

const char* rule_name(RuleId r) {
  for (const auto& x : kRules) {
    if (x.id == r) return x.name;
  }
  return "?";
}

RuleId rule_from_name(const std::string& name) {
  for (const auto& x : kRules) {
    if (name == x.name) return x.id;
  }
  throw UnknownRule("unknown rule id: " + name);
}

bool rule_enabled(RuleId r) { return r != RuleId::E8; }

std::vector<RuleSite> rule_sites(const FactorList& fs, RuleId rule) {
  std::vector<RuleSite> out;
  const int n = static_cast<int>(fs.size());
  auto at = [&](int t) -> const Factor& { return fs[static_cast<size_t>(t)]; };
  switch (rule) {
    case RuleId::OddSplit:
      for (int i = 0; i < n; ++i) {
        if (needs_split(at(i))) out.push_back({i, -1, 0, 0});
      }
      break;
    case RuleId::Swap:
      for (int i = 0; i < n; ++i) {
        if (at(i).type == FactorType::D && at(i).a > at(i).b) out.push_back({i, -1, 0, 0});
      }
      break;
    case RuleId::D22:
      for (int i = 0; i < n; ++i) {
        const Factor& f = at(i);
        if (f.type == FactorType::D && f.a == 2 && f.b == 2 && f.s1 != f.s2) out.push_back({i, -1, 0, 0});
      }
      break;
    case RuleId::DSingle:
      for (int i = 0; i < n; ++i) {
        const Factor& f = at(i);
        if (f.type != FactorType::D) continue;
        bool lt = f.a < f.b && f.s1 < 0 && f.s2 < 0;
        bool eq = f.a == f.b && f.a > 2 && f.s2 < 0;
        if (lt || eq) out.push_back({i, -1, 0, 0});
      }
      break;
    case RuleId::Lce:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (is_c_odd(at(i)) && is_c_odd(at(j))) out.push_back({i, j, 0, 0});
        }
      }
      break;
    case RuleId::Cd:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          int c = -1, d = -1;
          if (is_c_odd(at(i)) && !odd_slots(at(j)).empty()) c = i, d = j;
          if (is_c_odd(at(j)) && !odd_slots(at(i)).empty()) c = j, d = i;
          if (c < 0) continue;
          const int m = ex(at(c).a);
          auto slots = odd_slots(at(d));
          int pick = slots.front();
          for (int s : slots) {
            if (ex(slot_order(at(d), s)) <= m) {
              pick = s;
              break;
            }
          }
          out.push_back({c, d, pick, 0});
        }
      }
      break;
    case RuleId::DdConsol:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          auto si = odd_slots(at(i)), sj = odd_slots(at(j));
          bool done = false;
          for (int a : si) {
            for (int c : sj) {
              if (!done && dd_plan(fs, i, j, a, c).valid) {
                out.push_back({i, j, a, c});
                done = true;
              }
            }
          }
        }
      }
      break;
    case RuleId::Hh:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (is_h4(at(i)) && is_h4(at(j))) out.push_back({i, j, 0, 0});
        }
      }
      break;
    default: {
      if (!is_e_rule(rule)) throw UnknownRule("unknown rule id");
      if (!rule_enabled(rule)) break;
      int ie = e_index(fs);
      if (ie < 0) break;
      for (int t = 0; t < n; ++t) {
        if (t != ie && e_rule_applies(rule, at(ie), at(t))) out.push_back({ie, t, 0, 0});
      }
      break;
    }
  }
  return out;
}

RewriteStep apply_rule(const FactorList& fs, RuleId rule, const RuleSite& s) {
  auto at = [&](int t) -> const Factor& { return fs.at(static_cast<size_t>(t)); };
  switch (rule) {
    case RuleId::OddSplit:
      return rebuild(fs, rule, s.i, -1, [&](Builder& b, int t) {
        const Factor& f = at(t);
        if (f.type == FactorType::RG) {
          FiniteAbelianGroup g(f.group);
          auto orders = primary_orders(g);
          auto basis = primary_basis(g);
          for (size_t q = 0; q < orders.size(); ++q) {
            UnitMonomial img = b.one();
            for (int l = 0; l < g.rank(); ++l) {
              if (basis[q][static_cast<size_t>(l)] != 0) img = b.mul({img, b.g(t, l, basis[q][static_cast<size_t>(l)])});
            }
            b.put(factor_c(orders[q], 1), {img});
          }
          return;
        }
        if (f.a % 2 == 1) {
          // basic_c already reads an odd C(n;-) as C(n;+).
          b.put(factor_c(f.a, 1), {b.g(t, 0)});
          return;
        }
        const int two = f.a & -f.a, odd = f.a / two;
        b.put(factor_c(two, f.s1), {b.g(t, 0, odd)});
        UnitMonomial w = b.g(t, 0, two);
        if (f.s1 < 0) w = b.mul({b.neg(), w});
        b.put(factor_c(odd, 1), {w});
      });
    case RuleId::Swap:
      return rebuild(fs, rule, s.i, -1, [&](Builder& b, int t) {
        const Factor& f = at(t);
        Factor g = f;
        std::swap(g.a, g.b);
        std::swap(g.s1, g.s2);
        b.put(g, {b.g(t, 1), b.g(t, 0)});
      });
    case RuleId::D22:
      return rebuild(fs, rule, s.i, -1, [&](Builder& b, int t) {
        const Factor& f = at(t);
        Factor g = f;
        g.s1 = g.s2 = 1;
        auto u = b.g(t, 0), v = b.g(t, 1);
        if (f.s1 < 0) {
          b.put(g, {v, b.mul({u, v})});
        } else {
          b.put(g, {b.mul({u, v}), u});
        }
      });
    case RuleId::DSingle:
      return rebuild(fs, rule, s.i, -1, [&](Builder& b, int t) {
        const Factor& f = at(t);
        Factor g = f;
        auto u = b.g(t, 0), v = b.g(t, 1);
        if (f.a < f.b) {
          g.s1 = 1;
          b.put(g, {b.mul({u, b.g(t, 1, f.b / f.a)}), v});
        } else if (f.s1 < 0) {
          g.s2 = 1;
          b.put(g, {u, b.mul({u, v})});
        } else {
          g.s1 = -1;
          g.s2 = 1;
          b.put(g, {v, u});
        }
      });
    case RuleId::Lce: {
      const int mi = ex(at(s.i).a), mj = ex(at(s.j).a);
      const int kill = mi <= mj ? s.i : s.j, keep = kill == s.i ? s.j : s.i;
      const int64_t pw = int64_t{1} << std::abs(mj - mi);
      return rebuild(fs, rule, kill, -1, [&](Builder& b, int t) {
        Factor g = at(t);
        g.s1 = 1;
        b.put(g, {b.mul({b.g(t, 0), b.g(keep, 0, pw)})});
      });
    }
    case RuleId::Cd: {
      const int c = s.i, d = s.j, y = s.gi;
      const int m = ex(at(c).a), jd = ex(slot_order(at(d), y));
      if (jd <= m) {
        return rebuild(fs, rule, d, -1, [&](Builder& b, int t) {
          Factor g = at(t);
          set_slot_sign(g, y, 1);
          std::vector<UnitMonomial> imgs = {b.g(t, 0), b.g(t, 1)};
          imgs[static_cast<size_t>(y)] = b.mul({b.g(t, y), b.g(c, 0, int64_t{1} << (m - jd))});
          b.put(g, imgs);
        });
      }
      return rebuild(fs, rule, c, -1, [&](Builder& b, int t) {
        Factor g = at(t);
        g.s1 = 1;
        b.put(g, {b.mul({b.g(d, y, int64_t{1} << (jd - m)), b.g(t, 0)})});
      });
    }
    case RuleId::DdConsol: {
      DdPlan plan = dd_plan(fs, s.i, s.j, s.gi, s.gj);
      if (!plan.valid) throw std::invalid_argument("R_DD_CONSOL not applicable at this site");
      const int fu = plan.kill_j ? s.i : s.j, fz = plan.kill_j ? s.j : s.i;
      const int ku = plan.kill_j ? s.gi : s.gj, kz = plan.kill_j ? s.gj : s.gi;
      const int du = slot_order(at(fu), ku), dz = slot_order(at(fz), kz);
      if (du != dz) {
        // z -> y^(2^(d(y)-d(z))) z with y the higher odd generator.
        return rebuild(fs, rule, fz, -1, [&](Builder& b, int t) {
          Factor g = at(t);
          set_slot_sign(g, kz, 1);
          std::vector<UnitMonomial> imgs = {b.g(t, 0), b.g(t, 1)};
          imgs[static_cast<size_t>(kz)] = b.mul({b.g(fu, ku, du / dz), b.g(t, kz)});
          b.put(g, imgs);
        });
      }
      // {u, v w}{w, u z}: v is the partner of u, w the partner of z.
      return rebuild(fs, rule, fu, fz, [&](Builder& b, int t) {
        Factor g = at(t);
        std::vector<UnitMonomial> imgs = {b.g(t, 0), b.g(t, 1)};
        if (t == fu) {
          imgs[static_cast<size_t>(1 - ku)] = b.mul({b.g(fu, 1 - ku), b.g(fz, 1 - kz)});
        } else {
          set_slot_sign(g, kz, 1);
          imgs[static_cast<size_t>(kz)] = b.mul({b.g(fu, ku), b.g(fz, kz)});
        }
        b.put(g, imgs);
      });
    }
    case RuleId::Hh:
      return rebuild(fs, rule, s.i, s.j, [&](Builder& b, int t) {
        const auto u1 = b.g(s.i, 0), v1 = b.g(s.i, 1), u2 = b.g(s.j, 0), v2 = b.g(s.j, 1);
        Factor g = at(t);
        g.s1 = g.s2 = 1;
        if (t == s.i) {
          b.put(g, {b.mul({v1, v2}), b.mul({v1, u2})});
        } else {
          b.put(g, {b.mul({u1, u2, v2}), b.mul({u1, v1, u2, v2})});
        }
      });
    default:
      if (!is_e_rule(rule)) throw UnknownRule("unknown rule id");
      return apply_e_rule(fs, rule, s.i, s.j);
  }
}

std::optional<RewriteStep> rewrite_step(const FactorList& fs, RuleId rule) {
  auto sites = rule_sites(fs, rule);
  if (sites.empty()) return std::nullopt;
  return apply_rule(fs, rule, sites.front());
}

const char* tag_name(CanonicalTag t) {
  switch (t) {
    case CanonicalTag::CommRg: return "COMM_RG";
    case CanonicalTag::CommCg: return "COMM_CG";
    case CanonicalTag::CommCneg: return "COMM_CNEG";
    case CanonicalTag::Nc1Plain: return "NC1_PLAIN";
    case CanonicalTag::Nc1Cneg: return "NC1_CNEG";
    case CanonicalTag::Nc1Quat: return "NC1_QUAT";
    case CanonicalTag::EEven: return "E_EVEN";
    case CanonicalTag::ECneg: return "E_CNEG";
    case CanonicalTag::ENeg: return "E_NEG";
    case CanonicalTag::EOdd: return "E_ODD";
    case CanonicalTag::HPlain: return "H_PLAIN";
    case CanonicalTag::HCneg: return "H_CNEG";
    case CanonicalTag::HQuat: return "H_QUAT";
    case CanonicalTag::Pauli: return "PAULI";
  }
  return "?";
}

std::vector<std::vector<int>> pauli_orbit_representative(const std::vector<int>& group,
                                                         const std::vector<std::vector<int>>& beta,
                                                         int64_t aut_limit) {
  FiniteAbelianGroup g(group);
  const int e = std::max(1, g.exponent());
  const size_t r = group.size();
  auto eval = [&](const GroupElement& x, const GroupElement& y) {
    int64_t t = 0;
    for (size_t a = 0; a < r; ++a) {
      if (x[a] == 0) continue;
      for (size_t c = 0; c < r; ++c) t += static_cast<int64_t>(x[a]) * y[c] * beta[a][c];
    }
    return static_cast<int>(mod(t, e));
  };
  std::vector<std::vector<int>> best;
  enumerate_automorphisms(g, aut_limit, [&](const GroupAutomorphism& alpha) {
    std::vector<std::vector<int>> m(r, std::vector<int>(r));
    for (size_t a = 0; a < r; ++a) {
      for (size_t c = 0; c < r; ++c) m[a][c] = eval(alpha.images[a], alpha.images[c]);
    }
    auto conj = m;
    for (auto& row : conj) {
      for (auto& x : row) x = static_cast<int>(mod(-x, e));
    }
    if (best.empty() || m < best) best = m;
    if (conj < best) best = conj;
    return true;
  });
  if (best.empty()) best = beta;
  return best;
}

namespace {

void check_kinds(const FactorList& fs) {
  int nonone = 0;
  for (const auto& f : fs) {
    if (!is_one_dim(f)) ++nonone;
  }
  if (nonone > 1) {
    throw NotDivisionGrading("at most one factor with a non-trivial identity component (E, H, CG, Pauli) is allowed");
  }
}

CanonicalForm classify_central(const FactorList& fs, int64_t aut_limit) {
  Presentation p = presentation_of(fs);
  CanonicalForm cf;
  const FiniteAbelianGroup& g = p.group;
  cf.group = primary_orders(g);
  auto basis = primary_basis(g);
  Bicharacter beta = beta_of(p);
  const int e = std::max(1, canonical_group(g).exponent());
  const size_t r = basis.size();
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  bool trivial = true;
  for (size_t a = 0; a < r; ++a) {
    for (size_t c = 0; c < r; ++c) {
      int v = beta_value(g, beta, basis[a], basis[c]);
      int64_t scaled = static_cast<int64_t>(v) * e;
      if (scaled % beta.root_order != 0) throw std::logic_error("bicharacter value outside exp(G)-th roots");
      m[a][c] = static_cast<int>(mod(scaled / beta.root_order, e));
      trivial = trivial && m[a][c] == 0;
    }
  }
  if (trivial) {
    cf.tag = CanonicalTag::CommCg;
    return cf;
  }
  cf.tag = CanonicalTag::Pauli;
  cf.beta = pauli_orbit_representative(cf.group, m, aut_limit);
  return cf;
}

CanonicalForm classify(const FactorList& fs) {
  CanonicalForm cf;
  std::vector<int> orders;
  int e_at = -1, h_count = 0, quat = 0, c_odd = 0, d_odd = 0;
  for (size_t t = 0; t < fs.size(); ++t) {
    const Factor& f = fs[t];
    switch (f.type) {
      case FactorType::C:
        if (f.s1 < 0) {
          if (!is_power_of_two(f.a)) throw std::logic_error("normalize: unsplit C factor at fixpoint");
          ++c_odd;
          cf.m = ex(f.a);
        } else {
          orders.push_back(f.a);
        }
        break;
      case FactorType::D:
        if (is_h4(f)) {
          ++quat;
        } else {
          DTuple d{ex(f.a), ex(f.b), f.s1, f.s2};
          if (f.s1 < 0 || f.s2 < 0) ++d_odd;
          cf.chi.push_back(d);
        }
        break;
      case FactorType::E:
        e_at = static_cast<int>(t);
        cf.k = ex(f.a);
        cf.rho = f.s1;
        break;
      case FactorType::H: ++h_count; break;
      default: throw std::logic_error("normalize: unexpected factor type at fixpoint");
    }
  }
  std::sort(cf.chi.begin(), cf.chi.end());
  cf.group = primary_orders(FiniteAbelianGroup(orders));
  if (c_odd + d_odd + quat > 1) throw std::logic_error("normalize: more than one odd mark at fixpoint");
  const bool noncomm = !cf.chi.empty() || quat > 0;
  if (e_at >= 0) {
    if (quat) throw std::logic_error("normalize: H4 next to E at fixpoint");
    if (cf.rho < 0) {
      if (c_odd || d_odd) throw std::logic_error("normalize: odd mark next to E(-) at fixpoint");
      cf.tag = CanonicalTag::ENeg;
    } else if (c_odd) {
      cf.tag = CanonicalTag::ECneg;
    } else if (d_odd) {
      cf.tag = CanonicalTag::EOdd;
    } else {
      cf.tag = CanonicalTag::EEven;
    }
  } else if (h_count) {
    cf.tag = quat ? CanonicalTag::HQuat : c_odd ? CanonicalTag::HCneg : CanonicalTag::HPlain;
  } else if (!noncomm) {
    cf.tag = c_odd ? CanonicalTag::CommCneg : CanonicalTag::CommRg;
  } else {
    cf.tag = quat ? CanonicalTag::Nc1Quat : c_odd ? CanonicalTag::Nc1Cneg : CanonicalTag::Nc1Plain;
  }
  if (!c_odd) cf.m = 0;
  if (e_at < 0) cf.rho = 1;
  return cf;
}

}  // namespace

NormalizeResult normalize_full(const FactorList& fs, const NormalizeOptions& opt) {
  check_kinds(fs);
  NormalizeResult res;
  FactorList cur = fs;
  std::sort(cur.begin(), cur.end());
  for (const auto& f : cur) {
    if (f.type == FactorType::CG || f.type == FactorType::Pauli) {
      res.reduced = cur;
      res.form = classify_central(cur, opt.aut_limit);
      return res;
    }
  }
  for (int64_t step = 0;; ++step) {
    if (step > opt.max_steps) throw std::logic_error("normalize: step limit exceeded");
    std::vector<std::pair<RuleId, RuleSite>> moves;
    for (RuleId r : rule_priority()) {
      auto sites = rule_sites(cur, r);
      for (const auto& s : sites) {
        moves.emplace_back(r, s);
        if (!opt.chooser) break;
      }
      if (!opt.chooser && !moves.empty()) break;
    }
    if (moves.empty()) break;
    size_t pick = opt.chooser ? opt.chooser(moves) % moves.size() : 0;
    RewriteStep st = apply_rule(cur, moves[pick].first, moves[pick].second);
    cur = st.after;
    if (opt.keep_trace) res.trace.push_back(std::move(st));
  }
  res.reduced = cur;
  res.form = classify(cur);
  return res;
}

CanonicalForm normalize(const FactorList& fs) { return normalize_full(fs).form; }

namespace {

const char* sc(int s) { return s < 0 ? "-" : "+"; }

std::string group_token(const std::vector<int>& orders) {
  if (orders.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(orders[i]);
  }
  return s;
}

std::string d_token(const DTuple& d) {
  std::ostringstream os;
  os << "D(" << d.k << ',' << d.l << ';' << sc(d.mu) << ',' << sc(d.nu) << ')';
  return os.str();
}

bool quat_tag(CanonicalTag t) { return t == CanonicalTag::Nc1Quat || t == CanonicalTag::HQuat; }

std::string tokens(const CanonicalForm& cf) {
  std::vector<DTuple> ds = cf.chi;
  if (quat_tag(cf.tag)) ds.push_back(DTuple{1, 1, -1, -1});
  std::sort(ds.begin(), ds.end());
  std::vector<std::string> parts;
  for (const auto& d : ds) parts.push_back(d_token(d));
  if (cf.m > 0) parts.push_back("C(" + std::to_string(cf.m) + ";-)");
  if (!cf.group.empty()) parts.push_back("RG[" + group_token(cf.group) + "]");
  if (parts.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "*";
    s += parts[i];
  }
  return s;
}

}  // namespace

std::string canonical_label(const CanonicalForm& cf) {
  switch (cf.tag) {
    case CanonicalTag::CommRg: return "RG[" + group_token(cf.group) + "]";
    case CanonicalTag::CommCg: return "CG[" + group_token(cf.group) + "]";
    case CanonicalTag::CommCneg: return "CNEG[" + tokens(cf) + "]";
    case CanonicalTag::Nc1Plain:
    case CanonicalTag::Nc1Cneg:
    case CanonicalTag::Nc1Quat: return "NC1[" + tokens(cf) + "]";
    case CanonicalTag::EEven:
    case CanonicalTag::ECneg:
    case CanonicalTag::ENeg:
    case CanonicalTag::EOdd: {
      std::string e = "E(" + std::to_string(cf.k) + ";" + sc(cf.rho) + ")";
      std::string t = tokens(cf);
      return "E[" + e + (t == "1" ? "" : "*" + t) + "]";
    }
    case CanonicalTag::HPlain:
    case CanonicalTag::HCneg:
    case CanonicalTag::HQuat: return "H[" + tokens(cf) + "]";
    case CanonicalTag::Pauli: {
      std::string s = "PAULI[" + group_token(cf.group);
      for (const auto& row : cf.beta) {
        s += ";";
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) s += ",";
          s += std::to_string(row[j]);
        }
      }
      return s + "]";
    }
  }
  return "?";
}

FactorList expand(const CanonicalForm& cf) {
  FactorList out;
  if (cf.tag == CanonicalTag::CommCg) {
    out.push_back(factor_cg(cf.group));
    return out;
  }
  if (cf.tag == CanonicalTag::Pauli) {
    out.push_back(factor_pauli(cf.group, cf.beta));
    return out;
  }
  if (cf.k > 0) out.push_back(factor_e(1 << cf.k, cf.rho));
  if (cf.tag == CanonicalTag::HPlain || cf.tag == CanonicalTag::HCneg || cf.tag == CanonicalTag::HQuat) {
    out.push_back(factor_h());
  }
  if (quat_tag(cf.tag)) out.push_back(factor_d(2, 2, -1, -1));
  for (const auto& d : cf.chi) out.push_back(factor_d(1 << d.k, 1 << d.l, d.mu, d.nu));
  if (cf.m > 0) out.push_back(factor_c(1 << cf.m, -1));
  if (!cf.group.empty()) out.push_back(factor_rg(cf.group));
  return out;
}

}  // namespace gda
