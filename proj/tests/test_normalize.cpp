#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "gda/equivalence.hpp"
#include "gda/normalize.hpp"
#include "gda/parse.hpp"
#include "gda/sample.hpp"
#include "oracle_support.hpp"

using namespace gda;

namespace {

std::string label(const std::string& expr) { return canonical_label(normalize(parse_expr(expr))); }

NormalizeOptions seeded_chooser(std::mt19937& rng) {
  NormalizeOptions o;
  o.chooser = [&rng](const std::vector<std::pair<RuleId, RuleSite>>& moves) {
    return std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng);
  };
  return o;
}

}  // namespace

TEST(Normalize, Examples) {
  CanonicalForm a = normalize(parse_expr("C(2;-) * C(4;-)"));
  EXPECT_EQ(a.tag, CanonicalTag::CommCneg);
  EXPECT_EQ(a.m, 2);
  EXPECT_EQ(a.group, (std::vector<int>{2}));

  CanonicalForm b = normalize(parse_expr("H4 * H4"));
  EXPECT_EQ(b.tag, CanonicalTag::Nc1Plain);
  EXPECT_EQ(b.chi, (std::vector<DTuple>{{1, 1, 1, 1}, {1, 1, 1, 1}}));

  CanonicalForm c = normalize(parse_expr("E(2;-) * C(4;-)"));
  EXPECT_EQ(c.tag, CanonicalTag::ECneg);
  EXPECT_EQ(c.k, 1);
  EXPECT_TRUE(c.chi.empty());
  EXPECT_EQ(c.m, 2);
}

TEST(Normalize, LabelExamples) {
  CanonicalForm nc1;
  nc1.tag = CanonicalTag::Nc1Plain;
  nc1.chi = {{1, 1, 1, 1}};
  EXPECT_EQ(canonical_label(nc1), "NC1[D(1,1;+,+)]");
  CanonicalForm rg;
  rg.tag = CanonicalTag::CommRg;
  rg.group = {2, 3};
  EXPECT_EQ(canonical_label(rg), "RG[Z2xZ3]");
  EXPECT_EQ(label("R[Z6]"), "RG[Z2xZ3]");
  CanonicalForm hp;
  hp.tag = CanonicalTag::HPlain;
  hp.chi = {{1, 2, -1, 1}};
  EXPECT_EQ(canonical_label(hp), "H[D(1,2;-,+)]");
}

TEST(Normalize, RuleExamples) {
  auto lce = rewrite_step(parse_expr("C(2;-) * C(4;-)"), RuleId::Lce);
  ASSERT_TRUE(lce);
  EXPECT_EQ(lce->after, parse_expr("C(2;+) * C(4;-)"));
  auto e1 = rewrite_step(parse_expr("E(2;-) * C(4;-)"), RuleId::E1);
  ASSERT_TRUE(e1);
  EXPECT_EQ(e1->after, parse_expr("E(2;+) * C(4;-)"));
  auto hh = rewrite_step(parse_expr("D(2,2;-,-) * D(2,2;-,-)"), RuleId::Hh);
  ASSERT_TRUE(hh);
  EXPECT_EQ(hh->after, parse_expr("D(2,2;+,+) * D(2,2;+,+)"));
  EXPECT_FALSE(rewrite_step(parse_expr("C(4;+)"), RuleId::Lce));
  for (const auto* s : {&*lce, &*e1, &*hh}) EXPECT_TRUE(verify_step(*s));
}

TEST(Normalize, RuleNames) {
  for (RuleId r : all_rules()) EXPECT_EQ(rule_from_name(rule_name(r)), r);
  EXPECT_THROW(rule_from_name("R_BOGUS"), UnknownRule);
  EXPECT_FALSE(rule_enabled(RuleId::E8));
  EXPECT_EQ(std::count(rule_priority().begin(), rule_priority().end(), RuleId::E8), 0);
}

TEST(Normalize, PsingleClasses) {
  // H4 and M2_4 are distinct; the (-,+) and (+,-) 2x2 variants join M2_4.
  EXPECT_NE(label("H4"), label("M2_4"));
  EXPECT_EQ(label("D(2,2;-,+)"), label("M2_4"));
  EXPECT_EQ(label("D(2,2;+,-)"), label("M2_4"));
}

TEST(Normalize, Errors) {
  EXPECT_THROW(normalize(parse_expr("E(2;+) * E(4;-)")), NotDivisionGrading);
  EXPECT_THROW(normalize(parse_expr("H * E(2;-)")), NotDivisionGrading);
}

TEST(Normalize, PrintedE8FailsVerification) {
  FactorList fs = {factor_e(2, -1), factor_d(4, 8, -1, 1)};
  // Disabled rules expose no sites; apply at the explicit pair.
  EXPECT_TRUE(rule_sites(fs, RuleId::E8).empty());
  EXPECT_FALSE(verify_step(apply_rule(fs, RuleId::E8, RuleSite{0, 1, 0, 0})));
  EXPECT_TRUE(verify_step(apply_rule(fs, RuleId::E8C, rule_sites(fs, RuleId::E8C).front())));
}

TEST(Normalize, PauliCanonicalization) {
  CanonicalForm a = normalize(parse_expr("Pauli(Z4xZ4; 0,1;3,0)"));
  CanonicalForm b = normalize(parse_expr("Pauli(Z4xZ4; 0,3;1,0)"));
  EXPECT_EQ(a.tag, CanonicalTag::Pauli);
  EXPECT_EQ(a, b);
  EXPECT_EQ(normalize(parse_expr("Pauli(Z2xZ2; 0,0;0,0)")).tag, CanonicalTag::CommCg);
  EXPECT_NE(a, normalize(parse_expr("Pauli(Z4xZ4; 0,2;2,0)")));
}

TEST(NormalizeProperty, EveryTraceStepVerifiesIndependently) {
  std::mt19937 rng(71);
  NormalizeOptions opt;
  opt.keep_trace = true;
  int steps = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    FactorList fs = gen::factors(rng, 3, 64);
    NormalizeResult r = normalize_full(fs, opt);
    for (const auto& s : r.trace) {
      ++steps;
      ASSERT_TRUE(verify_step(s)) << rule_name(s.rule) << " on " << factors_to_string(s.before);
      ASSERT_TRUE(oracle::verify_images(presentation_of(s.before), presentation_of(s.after), s.images))
          << rule_name(s.rule) << " on " << factors_to_string(s.before);
    }
  }
  EXPECT_GT(steps, 300);
}

TEST(NormalizeProperty, CorruptedWitnessRejected) {
  std::mt19937 rng(72);
  NormalizeOptions opt;
  opt.keep_trace = true;
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 100; ++trial) {
    NormalizeResult r = normalize_full(gen::factors(rng, 3, 64, false), opt);
    for (auto s : r.trace) {
      if (s.images.empty()) continue;
      Presentation host = presentation_of(s.before);
      size_t i = std::uniform_int_distribution<size_t>(0, s.images.size() - 1)(rng);
      // Flip the sign of one image: its square or a commutation must break.
      auto& m = s.images[i];
      m.coeff = (m.coeff + host.root_order / 2) % host.root_order;
      Presentation after = presentation_of(s.after);
      if (after.gens[i].power % 2 == 0) continue;  // even powers hide the sign
      EXPECT_FALSE(verify_step(s));
      ++checked;
    }
  }
}

TEST(NormalizeProperty, ConfluenceUnderRandomStrategies) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 400; ++trial) {
    FactorList fs = gen::factors(rng, 3, 64);
    const std::string want = canonical_label(normalize(fs));
    for (int run = 0; run < 4; ++run) {
      ASSERT_EQ(canonical_label(normalize_full(fs, seeded_chooser(rng)).form), want) << factors_to_string(fs);
    }
  }
}

TEST(NormalizeProperty, IdempotentAndPermutationInvariant) {
  std::mt19937 rng(74);
  for (int trial = 0; trial < 500; ++trial) {
    FactorList fs = gen::factors(rng, 4, 256);
    CanonicalForm cf = normalize(fs);
    EXPECT_EQ(normalize(expand(cf)), cf) << factors_to_string(fs);
    std::shuffle(fs.begin(), fs.end(), rng);
    EXPECT_EQ(normalize(fs), cf) << factors_to_string(fs);
  }
}

TEST(NormalizeProperty, ExpandIsEquivalent) {
  std::mt19937 rng(75);
  for (int trial = 0; trial < 150; ++trial) {
    FactorList fs = gen::factors(rng, 3, 32);
    FactorList ex = expand(normalize(fs));
    EXPECT_TRUE(oracle_search(presentation_of(fs), presentation_of(ex), 50000000).has_value())
        << factors_to_string(fs) << " vs " << factors_to_string(ex);
  }
}

TEST(NormalizeProperty, EOddExcludesSmallMinusTuples) {
  std::mt19937 rng(76);
  for (int trial = 0; trial < 500; ++trial) {
    FactorList fs = gen::factors(rng, 3, 256);
    CanonicalForm cf = normalize(fs);
    if (cf.tag != CanonicalTag::EOdd) continue;
    for (const auto& d : cf.chi) EXPECT_FALSE(d.k == 1 && d.mu < 0 && d.nu > 0 && d.l <= cf.k);
    EXPECT_EQ(d_parity(cf.chi), Parity::Odd);
  }
}

TEST(NormalizeProperty, EqualFormsShareInvariantProfiles) {
  std::mt19937 rng(77);
  std::vector<FactorList> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(gen::factors(rng, 3, 32));
  for (size_t i = 0; i < corpus.size(); ++i) {
    for (size_t j = i + 1; j < corpus.size(); ++j) {
      bool same = normalize(corpus[i]) == normalize(corpus[j]);
      auto cert = separating_invariant(corpus[i], corpus[j]);
      EXPECT_EQ(same, !cert.has_value()) << factors_to_string(corpus[i]) << " vs " << factors_to_string(corpus[j]);
    }
  }
}
