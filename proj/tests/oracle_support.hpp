#pragma once

// Test-side reference arithmetic, written independently of the library's
// closed-form sign accumulation: products are formed by literally sorting the
// concatenated generator word one adjacent swap at a time.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gda/algebra.hpp"

namespace oracle {

struct Elem {
  int coeff = 0;  // zeta^coeff
  std::vector<int> exps;
  bool operator==(const Elem& o) const { return coeff == o.coeff && exps == o.exps; }
  bool operator<(const Elem& o) const { return exps != o.exps ? exps < o.exps : coeff < o.coeff; }
};

inline int md(int64_t a, int64_t n) { return static_cast<int>(((a % n) + n) % n); }

// Relations copied out of a presentation as plain integers.
struct Rel {
  int n = 2;                              // root order
  std::vector<int> order;                 // x_i^order[i] = zeta^power_coeff[i]
  std::vector<int> power_coeff;
  std::vector<std::vector<int>> comm;     // x_i x_j = zeta^comm[i][j] x_j x_i
  std::vector<bool> conj;                 // x_i zeta^t = zeta^-t x_i
};

inline Rel relations_of(const gda::Presentation& p) {
  Rel r;
  r.n = p.root_order;
  for (const auto& g : p.gens) {
    r.order.push_back(g.power);
    r.power_coeff.push_back(g.sign < 0 ? p.root_order / 2 : 0);
    r.comm.push_back(g.comm);
    r.conj.push_back(p.kind == gda::IdentityKind::NoncentralJ && g.j_anti);
  }
  return r;
}

// Product by word sorting.
inline Elem mul(const Rel& r, const Elem& a, const Elem& b) {
  // Word of (generator, count=1) letters, with a running scalar on the far left.
  std::vector<int> word;
  for (size_t i = 0; i < a.exps.size(); ++i) word.insert(word.end(), a.exps[i], static_cast<int>(i));
  int scalar = a.coeff;
  // Moving zeta^b.coeff left across a's word conjugates it once per conj letter.
  int bc = b.coeff;
  for (int g : word) {
    if (r.conj[static_cast<size_t>(g)]) bc = -bc;
  }
  scalar += bc;
  for (size_t i = 0; i < b.exps.size(); ++i) word.insert(word.end(), b.exps[i], static_cast<int>(i));
  // Bubble sort: swapping x_i x_j (i > j) into x_j x_i costs zeta^comm[i][j].
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t t = 0; t + 1 < word.size(); ++t) {
      if (word[t] > word[t + 1]) {
        scalar += r.comm[static_cast<size_t>(word[t])][static_cast<size_t>(word[t + 1])];
        std::swap(word[t], word[t + 1]);
        moved = true;
      }
    }
  }
  Elem out;
  out.exps.assign(a.exps.size(), 0);
  for (int g : word) ++out.exps[static_cast<size_t>(g)];
  for (size_t i = 0; i < out.exps.size(); ++i) {
    while (out.exps[i] >= r.order[i]) {
      out.exps[i] -= r.order[i];
      scalar += r.power_coeff[i];
    }
  }
  out.coeff = md(scalar, r.n);
  return out;
}

inline Elem one(const Rel& r) { return Elem{0, std::vector<int>(r.order.size(), 0)}; }

inline Elem pow(const Rel& r, const Elem& a, int e) {
  Elem out = one(r);
  for (int i = 0; i < e; ++i) out = mul(r, out, a);
  return out;
}

inline Elem from(const gda::UnitMonomial& m) { return Elem{m.coeff, m.exps}; }

// Commutation exponent c with a b = zeta^c b a.
inline int comm_exp(const Rel& r, const Elem& a, const Elem& b) {
  Elem ab = mul(r, a, b), ba = mul(r, b, a);
  return md(ab.coeff - ba.coeff, r.n);
}

// All monomials of a presentation with coefficients from `coeffs`.
inline std::vector<Elem> all_elements(const Rel& r, const std::vector<int>& coeffs) {
  std::vector<Elem> out;
  std::vector<int> e(r.order.size(), 0);
  for (;;) {
    for (int c : coeffs) out.push_back(Elem{c, e});
    size_t i = 0;
    while (i < e.size() && ++e[i] == r.order[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

// Exhaustive search for a weak isomorphism between two real (ONE_DIM)
// presentations: images are +-monomials of the target satisfying every source
// relation whose degrees generate the target with the right cardinality.
inline bool brute_equivalent_real(const gda::Presentation& src, const gda::Presentation& dst) {
  if (src.group.cardinality() != dst.group.cardinality()) return false;
  const int n = std::lcm(src.root_order, dst.root_order);
  Rel rs = relations_of(gda::with_root_order(src, n)), rd = relations_of(gda::with_root_order(dst, n));
  const auto cands = all_elements(rd, {0, n / 2});
  const size_t r = rs.order.size();
  std::vector<Elem> img(r);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == r) {
      // Closure of the image words must reach every degree.
      std::set<std::vector<int>> seen;
      std::vector<Elem> frontier = {one(rd)};
      seen.insert(one(rd).exps);
      while (!frontier.empty()) {
        Elem x = frontier.back();
        frontier.pop_back();
        for (const auto& g : img) {
          Elem y = mul(rd, x, g);
          if (seen.insert(y.exps).second) frontier.push_back(y);
        }
      }
      return static_cast<int64_t>(seen.size()) == dst.group.cardinality();
    }
    for (const auto& c : cands) {
      if (!(pow(rd, c, rs.order[i]) == Elem{rs.power_coeff[i], std::vector<int>(rd.order.size(), 0)})) continue;
      // Images of a generator of order n must have degree of order exactly n.
      bool exact = true;
      for (int t = 1; t < rs.order[i] && exact; ++t) {
        Elem p = pow(rd, c, t);
        bool trivial = true;
        for (int x : p.exps) trivial = trivial && x == 0;
        exact = !trivial;
      }
      if (!exact) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) ok = comm_exp(rd, c, img[j]) == rs.comm[i][j];
      if (!ok) continue;
      img[i] = c;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Independent re-check of a substitution: images (monomials of `host`) satisfy
// every relation of `rel` and their degrees generate the host support.
inline bool verify_images(const gda::Presentation& host0, const gda::Presentation& rel0,
                          const std::vector<gda::UnitMonomial>& images, int j_sign = 1, int image_root = 0) {
  if (image_root == 0) image_root = host0.root_order;
  const int n = std::lcm(std::lcm(host0.root_order, rel0.root_order), image_root);
  gda::Presentation host = gda::with_root_order(host0, n), rel = gda::with_root_order(rel0, n);
  Rel rh = relations_of(host), rr = relations_of(rel);
  if (images.size() != rr.order.size()) return false;
  std::vector<Elem> img;
  for (const auto& m : images) {
    if (m.quat != 0) return false;
    img.push_back(Elem{md(static_cast<int64_t>(m.coeff) * (n / image_root), n), m.exps});
  }
  const std::vector<int> zero(rh.order.size(), 0);
  for (size_t i = 0; i < img.size(); ++i) {
    if (!(pow(rh, img[i], rr.order[i]) == Elem{rr.power_coeff[i], zero})) return false;
    for (size_t j = 0; j < img.size(); ++j) {
      if (i != j && comm_exp(rh, img[i], img[j]) != md(static_cast<int64_t>(j_sign) * rr.comm[i][j], n)) return false;
    }
    if (host.kind == gda::IdentityKind::NoncentralJ) {
      int anti = 0;
      for (size_t t = 0; t < img[i].exps.size(); ++t) anti += rh.conj[t] ? img[i].exps[t] : 0;
      if ((anti % 2 == 1) != rr.conj[i]) return false;
    }
  }
  std::set<std::vector<int>> seen = {zero};
  std::vector<Elem> frontier = {one(rh)};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (const auto& g : img) {
      Elem y = mul(rh, x, g);
      if (seen.insert(y.exps).second) frontier.push_back(y);
    }
  }
  return static_cast<int64_t>(seen.size()) == host.group.cardinality() &&
         host.group.cardinality() == rel.group.cardinality();
}

}  // namespace oracle
