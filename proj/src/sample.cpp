#include "gda/sample.hpp"

#include <algorithm>
#include <set>

namespace gda {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
int sign(std::mt19937_64& rng) { return pick(rng, 0, 1) ? 1 : -1; }

}  // namespace

FactorList random_factor_list(std::mt19937_64& rng, const SampleOptions& opt) {
  for (;;) {
    FactorList fs;
    bool special = false;
    const int count = pick(rng, 1, std::max(1, opt.max_factors));
    for (int i = 0; i < count; ++i) {
      int roll = pick(rng, 0, 9);
      if (roll <= 2) {
        if (opt.allow_odd && pick(rng, 0, 4) == 0) {
          const int odd[] = {3, 5, 6, 12};
          fs.push_back(factor_c(odd[pick(rng, 0, 3)], sign(rng)));
        } else {
          fs.push_back(factor_c(1 << pick(rng, 1, opt.max_exp), sign(rng)));
        }
      } else if (roll <= 6) {
        fs.push_back(factor_d(1 << pick(rng, 1, opt.max_exp), 1 << pick(rng, 1, opt.max_exp), sign(rng), sign(rng)));
      } else if (roll == 7 && opt.allow_e && !special) {
        fs.push_back(factor_e(1 << pick(rng, 1, opt.max_exp), sign(rng)));
        special = true;
      } else if (roll == 8 && opt.allow_h && !special) {
        fs.push_back(factor_h());
        special = true;
      } else if (opt.allow_odd) {
        fs.push_back(factor_rg({pick(rng, 0, 1) ? 3 : 2}));
      } else {
        fs.push_back(factor_c(2, sign(rng)));
      }
    }
    if (total_dim(fs) <= opt.max_dim) return fs;
  }
}

NormalizeOptions random_chooser(std::mt19937_64& rng) {
  NormalizeOptions o;
  o.chooser = [&rng](const std::vector<std::pair<RuleId, RuleSite>>& moves) {
    return static_cast<size_t>(std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng));
  };
  return o;
}

namespace {

struct Enumerator {
  std::vector<int> twos;
  FactorList tail;
  int64_t max_dim = 0;
  std::set<FactorList> out;

  void emit(FactorList fs) {
    fs.insert(fs.end(), tail.begin(), tail.end());
    if (total_dim(fs) > max_dim) return;
    std::sort(fs.begin(), fs.end());
    out.insert(fs);
  }

  // Assign the orders in `rest` to factors; `special` tracks an E already used.
  void rec(std::vector<int> rest, FactorList acc, bool special) {
    if (rest.empty()) {
      emit(acc);
      if (!special) {
        acc.push_back(factor_h());
        emit(acc);
      }
      return;
    }
    const int n = rest.front();
    rest.erase(rest.begin());
    for (int s : {1, -1}) {
      FactorList a = acc;
      a.push_back(factor_c(n, s));
      rec(rest, a, special);
      if (!special) {
        FactorList e = acc;
        e.push_back(factor_e(n, s));
        rec(rest, e, true);
      }
    }
    for (size_t p = 0; p < rest.size(); ++p) {
      if (p > 0 && rest[p] == rest[p - 1]) continue;
      std::vector<int> r2 = rest;
      const int m = r2[p];
      r2.erase(r2.begin() + static_cast<long>(p));
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          FactorList a = acc;
          a.push_back(factor_d(n, m, s1, s2));
          rec(r2, a, special);
        }
      }
    }
  }
};

}  // namespace

std::vector<FactorList> products_with_support(const FiniteAbelianGroup& g, int64_t max_dim) {
  Enumerator en;
  en.max_dim = max_dim;
  std::vector<int> odd;
  for (int n : primary_orders(g)) {
    if (n % 2 == 0) {
      en.twos.push_back(n);
    } else {
      odd.push_back(n);
    }
  }
  if (!odd.empty()) en.tail.push_back(factor_rg(odd));
  en.rec(en.twos, {}, false);
  std::vector<FactorList> out(en.out.begin(), en.out.end());
  FactorList cg = {factor_cg(g.orders())};
  if (total_dim(cg) <= max_dim) out.push_back(cg);
  return out;
}

}  // namespace gda
