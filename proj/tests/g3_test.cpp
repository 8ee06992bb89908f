#include <gtest/gtest.h>

#include "support.hpp"

namespace isl {
namespace {

using test::F;
using test::S;

Occ occ(const char* f) { return {fresh_id(), F(f)}; }

Multiset formulas(std::vector<Formula> fs) { return sorted(std::move(fs)); }

Multiset ante_at(const G3Ptr& p, const Path& path) { return node_at(*p, path).seq.formulas().ante; }

void expect_valid(const G3Ptr& p, Profile profile = Profile::Core) {
  CheckResult r = check_g3_proof(*p, profile);
  EXPECT_TRUE(r) << r.message << " at " << r.path;
}

struct MinimalSegment {
  Formula phi = F("p -> p");
  G3Ptr proof = test::minimal_segment(phi);
};

TEST(G3, MinimalSegmentChecks) {
  MinimalSegment m;
  expect_valid(m.proof);
  EXPECT_EQ(height(*m.proof), 4u);
}

TEST(G3, CheckerRejectsBoxedPi) {
  // □q sits in the premise without being principal.
  Occ q = occ("[]q"), d = occ("[]p");
  Occ a = occ("p");
  G3Ptr at = make_g3(G3Seq{{q, d, a}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr top = make_g3(G3Seq{{q, d}, F("p -> p")}, RuleG3::RImp, {at});
  G3Ptr bad = make_g3(G3Seq{{q}, F("[](p -> p)")}, RuleG3::RSL, {top}, {.diag = d.id});
  EXPECT_FALSE(check_g3_proof(*bad, Profile::Core));
}

TEST(G3, CheckerRejectsCutUnderCore) {
  Occ a = occ("p"), c = occ("p");
  G3Ptr left = make_g3(G3Seq{{a}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr right = make_g3(G3Seq{{c}, F("p")}, RuleG3::At, {}, {.principal = c.id});
  G3Ptr cut = make_g3(G3Seq{{a}, F("p")}, RuleG3::Cut, {left, right}, {.cut = F("p"), .cut_id = c.id});
  EXPECT_FALSE(check_g3_proof(*cut, Profile::Core));
  expect_valid(cut, Profile::WithCut);
}

TEST(G3, Heights) {
  Occ a = occ("p"), b = occ("q");
  G3Ptr ax = make_g3(G3Seq{{a}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  EXPECT_EQ(height(*ax), 1u);
  G3Ptr one = make_g3(G3Seq{{}, F("p -> p")}, RuleG3::RImp, {ax});
  EXPECT_EQ(height(*one), 2u);
  G3Ptr l = make_g3(G3Seq{{a, b}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr r = make_g3(G3Seq{{a, b}, F("q")}, RuleG3::At, {}, {.principal = b.id});
  G3Ptr both = make_g3(G3Seq{{a, b}, F("p & q")}, RuleG3::RAnd, {l, r});
  EXPECT_EQ(height(*both), 2u);
  expect_valid(both);
}

TEST(G3, WeakenExamples) {
  Occ a = occ("p");
  G3Ptr ax = make_g3(G3Seq{{a}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr w = weaken(ax, occ("q"));
  expect_valid(w);
  EXPECT_EQ(test::ante_of(*w), formulas({F("p"), F("q")}));
  EXPECT_EQ(height(*w), 1u);

  MinimalSegment m;
  G3Ptr boxed = weaken(m.proof, occ("[]r"));
  expect_valid(boxed);
  EXPECT_EQ(ante_at(boxed, {}), formulas({F("[]r")}));
  EXPECT_EQ(ante_at(boxed, {0}), ante_at(m.proof, {0}));
  EXPECT_EQ(height(*boxed), height(*m.proof));

  G3Ptr plain = weaken(m.proof, occ("r"));
  expect_valid(plain);
  EXPECT_EQ(ante_at(plain, {}), formulas({F("r")}));
  Multiset mid = ante_at(m.proof, {0});
  mid.push_back(F("r"));
  EXPECT_EQ(ante_at(plain, {0}), sorted(mid));
  EXPECT_EQ(height(*plain), height(*m.proof));
}

TEST(G3, ContractAndInvert) {
  Occ a = occ("p"), b = occ("p");
  G3Ptr ax = make_g3(G3Seq{{a, b}, F("p")}, RuleG3::At, {}, {.principal = b.id});
  G3Ptr c = contract(ax, a.id, b.id);
  expect_valid(c);
  EXPECT_EQ(test::ante_of(*c), formulas({F("p")}));

  Occ x = occ("q & r");
  G3Ptr p = identity(G3Seq{{x}, F("q & r")}, x.id);
  G3Ptr inv = invert(p, Inversion::LAnd, x.id);
  expect_valid(inv);
  EXPECT_EQ(test::ante_of(*inv), formulas({F("q"), F("r")}));

  G3Ptr imp_proof = make_g3(G3Seq{{}, F("q & r -> q & r")}, RuleG3::RImp, {p});
  G3Ptr ri = invert(imp_proof, Inversion::RImp);
  expect_valid(ri);
  EXPECT_EQ(ri->seq.formulas(), S("q & r => q & r"));
  EXPECT_LE(height(*ri), height(*imp_proof));

  Occ f = occ("false"), y = occ("s");
  G3Ptr bot_proof = make_g3(G3Seq{{f, y}, bot()}, RuleG3::LBot, {}, {.principal = f.id});
  G3Ptr fr = falsum(bot_proof, F("[]t"));
  expect_valid(fr);
  EXPECT_EQ(fr->seq.formulas(), S("false, s => []t"));
}

TEST(G3, Grades) {
  // S1 (RSL) / S2 (R∧) / S3 (R→) / S5 (RSL) / S6, and S4 on the right.
  Formula x = F("(s -> [](t -> t)) & (p -> p)");
  Occ d = {fresh_id(), box(x)};
  Occ s = occ("s"), e = occ("[](t -> t)"), t = occ("t"), p = occ("p");
  G3Ptr s6 = make_g3(G3Seq{{s, e}, F("t -> t")}, RuleG3::RImp,
                     {make_g3(G3Seq{{s, e, t}, F("t")}, RuleG3::At, {}, {.principal = t.id})});
  G3Ptr s5 = make_g3(G3Seq{{d, s}, F("[](t -> t)")}, RuleG3::RSL, {s6}, {.diag = e.id});
  G3Ptr s3 = make_g3(G3Seq{{d}, F("s -> [](t -> t)")}, RuleG3::RImp, {s5});
  G3Ptr s4 = make_g3(G3Seq{{d}, F("p -> p")}, RuleG3::RImp,
                     {make_g3(G3Seq{{d, p}, F("p")}, RuleG3::At, {}, {.principal = p.id})});
  G3Ptr s2 = make_g3(G3Seq{{d}, x}, RuleG3::RAnd, {s3, s4});
  G3Ptr s1 = make_g3(G3Seq{{}, box(x)}, RuleG3::RSL, {s2}, {.diag = d.id});
  expect_valid(s1);
  EXPECT_EQ(grade(*s1, {}), 0u);
  EXPECT_EQ(grade(*s1, {0}), 1u);
  EXPECT_EQ(grade(*s1, {0, 0}), 1u);
  EXPECT_EQ(grade(*s1, {0, 1}), 1u);
  EXPECT_EQ(grade(*s1, {0, 0, 0}), 1u);
  EXPECT_EQ(grade(*s1, {0, 0, 0, 0}), 2u);
  EXPECT_EQ(grade(*s1, {0, 0, 0, 0, 0}), 2u);
}

TEST(G3, StrongWeakeningReproducesMinimalSegment) {
  MinimalSegment m;
  Formula bb = box(box(m.phi)), b = box(m.phi);

  Formula chi = F("[]q");
  G3Ptr boxed = strong_weaken_down(m.proof, chi);
  expect_valid(boxed);
  EXPECT_EQ(boxed->seq.formulas(), Sequent({box(chi)}, bb));
  EXPECT_EQ(node_at(*boxed, {0}).seq.formulas(), Sequent({box(chi), chi, bb}, b));
  EXPECT_EQ(node_at(*boxed, {0, 0}).seq.formulas(), Sequent({box(chi), chi, bb, b, b}, m.phi));
  EXPECT_EQ(height(*boxed), height(*m.proof));

  Formula q = F("q");
  G3Ptr plain = strong_weaken_down(m.proof, q);
  expect_valid(plain);
  EXPECT_EQ(plain->seq.formulas(), Sequent({box(q)}, bb));
  EXPECT_EQ(node_at(*plain, {0}).seq.formulas(), Sequent({box(q), q, bb}, b));
  EXPECT_EQ(node_at(*plain, {0, 0}).seq.formulas(), Sequent({box(q), q, q, bb, b, b}, m.phi));
  EXPECT_EQ(height(*plain), height(*m.proof));
}

TEST(G3, StrongWeakeningUp) {
  MinimalSegment m;
  G3Ptr boxed = strong_weaken_up(m.proof, F("[]q"));
  expect_valid(boxed);
  EXPECT_EQ(ante_at(boxed, {}), formulas({F("[]q")}));
  EXPECT_EQ(ante_at(boxed, {0}), ante_at(m.proof, {0}));
  EXPECT_EQ(ante_at(boxed, {0, 0}), ante_at(m.proof, {0, 0}));

  G3Ptr plain = strong_weaken_up(m.proof, F("q"));
  expect_valid(plain);
  for (const Path& path : {Path{}, Path{0}, Path{0, 0}, Path{0, 0, 0}}) {
    Multiset want = ante_at(m.proof, path);
    want.push_back(F("q"));
    EXPECT_EQ(ante_at(plain, path), sorted(want));
  }
}

TEST(G3, StrongWeakeningKeepsHeightOnCorpus) {
  std::vector<G3Ptr> proofs = test::cut_free_proofs(60, 3);
  for (const G3Ptr& p : proofs) {
    for (Formula chi : {F("r"), F("[]r"), F("[](p -> r)")}) {
      G3Ptr d = strong_weaken_down(p, chi);
      G3Ptr u = strong_weaken_up(p, chi);
      expect_valid(d);
      expect_valid(u);
      EXPECT_EQ(height(*d), height(*p));
      EXPECT_EQ(height(*u), height(*p));
      Multiset wd = test::ante_of(*p), wu = wd;
      wd.push_back(box(chi));
      wu.push_back(chi);
      EXPECT_EQ(test::ante_of(*d), sorted(wd));
      EXPECT_EQ(test::ante_of(*u), sorted(wu));
    }
  }
}

// ψ1 ∨ ψ2 ⇒ □φ with φ = φ' → □χ; the leftmost branch is critical.
TEST(G3, CriticalInferenceOnLeftmostBranch) {
  Formula phi = F("q -> []r");
  Occ x = occ("r | false");
  Occ d{fresh_id(), box(phi)};
  Occ psi1 = occ("r"), psi2 = occ("false"), q = occ("q"), copy{fresh_id(), phi}, e = occ("[]r");
  G3Ptr top = make_g3(G3Seq{{psi1, d, q, copy, e}, F("r")}, RuleG3::At, {}, {.principal = psi1.id});
  G3Ptr inner = make_g3(G3Seq{{psi1, d, q}, F("[]r")}, RuleG3::RSL, {top},
                        {.diag = e.id, .links = {{copy.id, d.id}}});
  G3Ptr left = make_g3(G3Seq{{psi1, d}, phi}, RuleG3::RImp, {inner});
  G3Ptr right = make_g3(G3Seq{{psi2, d}, phi}, RuleG3::LBot, {}, {.principal = psi2.id});
  G3Ptr lor = make_g3(G3Seq{{x, d}, phi}, RuleG3::LOr, {left, right}, {.principal = x.id});
  G3Ptr root = make_g3(G3Seq{{x}, box(phi)}, RuleG3::RSL, {lor}, {.diag = d.id});
  expect_valid(root);
  EXPECT_EQ(critical_inferences(*root, box(phi)), (std::vector<Path>{{0, 0, 0}}));
}

TEST(G3, NoCriticalInferenceBehindNonPrincipalBox) {
  // The inner RSL drops □φ into Σ, so nothing above can be critical.
  Formula phi = F("[]q -> []q");
  Occ d{fresh_id(), box(phi)};
  Occ bq = occ("[]q"), cq = occ("q"), e = occ("[]q");
  G3Ptr at = make_g3(G3Seq{{bq, cq, e}, F("q")}, RuleG3::At, {}, {.principal = cq.id});
  G3Ptr inner = make_g3(G3Seq{{d, bq}, F("[]q")}, RuleG3::RSL, {at}, {.diag = e.id, .links = {{cq.id, bq.id}}});
  G3Ptr mid = make_g3(G3Seq{{d}, phi}, RuleG3::RImp, {inner});
  G3Ptr root = make_g3(G3Seq{{}, box(phi)}, RuleG3::RSL, {mid}, {.diag = d.id});
  expect_valid(root);
  EXPECT_TRUE(critical_inferences(*root, box(phi)).empty());
}

TEST(G3, DwlOfCutFreeIsZero) {
  MinimalSegment m;
  EXPECT_EQ(dwl(*m.proof), (CutMeasure{0, 0, 0}));
}

TEST(G3, DwlOfAtomCut) {
  Occ a = occ("p"), c = occ("p");
  G3Ptr left = make_g3(G3Seq{{a}, F("p")}, RuleG3::At, {}, {.principal = a.id});
  G3Ptr right = make_g3(G3Seq{{c}, F("p")}, RuleG3::At, {}, {.principal = c.id});
  G3Ptr cut = make_g3(G3Seq{{a}, F("p")}, RuleG3::Cut, {left, right}, {.cut = F("p"), .cut_id = c.id});
  EXPECT_EQ(dwl(*cut), (CutMeasure{1, 0, 2}));
}

// □p ⇒ □□p where the inner RSL has the diagonal □□p principal.
G3Ptr box_box_left() {
  Occ a = occ("[]p"), a1 = occ("p"), d = occ("[][]p");
  Occ a2 = occ("p"), d1 = occ("[]p"), e = occ("[]p");
  G3Ptr at = make_g3(G3Seq{{a, a1, d, a2, d1, e}, F("p")}, RuleG3::At, {}, {.principal = a2.id});
  G3Ptr inner = make_g3(G3Seq{{a, a1, d}, F("[]p")}, RuleG3::RSL, {at},
                        {.diag = e.id, .links = {{a2.id, a.id}, {d1.id, d.id}}});
  return make_g3(G3Seq{{a}, F("[][]p")}, RuleG3::RSL, {inner}, {.diag = d.id, .links = {{a1.id, a.id}}});
}

TEST(G3, DwlOfBoxCutWithOneCriticalInference) {
  G3Ptr left = box_box_left();
  expect_valid(left);
  EXPECT_EQ(critical_inferences(*left, F("[][]p")).size(), 1u);
  Occ c = occ("[][]p");
  G3Ptr right = identity(G3Seq{{c}, F("[][]p")}, c.id);
  G3Ptr cut = make_g3(left->seq, RuleG3::Cut, {left, right}, {.cut = F("[][]p"), .cut_id = c.id});
  expect_valid(cut, Profile::WithCut);
  CutMeasure m = dwl(*cut);
  EXPECT_EQ(m.degree, 3u);
  EXPECT_EQ(m.width, 1u);
  EXPECT_EQ(m.level, height(*left) + height(*right));
}

TEST(G3, JsonRoundTrip) {
  G3Ptr p = box_box_left();
  nlohmann::json j = g3_to_json(*p);
  G3Ptr back = g3_from_json(j);
  expect_valid(back);
  EXPECT_EQ(g3_to_json(*back), j);
  EXPECT_EQ(back->seq.formulas(), p->seq.formulas());
  EXPECT_NE(g3_to_dot(*p).find("digraph"), std::string::npos);
}

TEST(G3, StructuralLemmasOnCorpus) {
  std::vector<G3Ptr> proofs = test::cut_free_proofs(120, 4);
  ASSERT_EQ(proofs.size(), 120u);
  std::mt19937_64 rng(5);
  for (const G3Ptr& p : proofs) {
    unsigned h = height(*p);
    Occ w{fresh_id(), F("[]q -> r")};
    G3Ptr pw = weaken(p, w);
    expect_valid(pw);
    EXPECT_LE(height(*pw), h);
    if (!p->seq.ante.empty()) {
      const Occ& x = p->seq.ante[rng() % p->seq.ante.size()];
      Occ dup{fresh_id(), x.f};
      G3Ptr pc = contract(weaken(p, dup), x.id, dup.id);
      expect_valid(pc);
      EXPECT_LE(height(*pc), h);
      EXPECT_EQ(pc->seq.formulas(), p->seq.formulas());
    }
  }
}

}  // namespace
}  // namespace isl
