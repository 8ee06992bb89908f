#include <gtest/gtest.h>

#include "support.hpp"

namespace isl {
namespace {

using test::S;

TEST(Fuzz, ConfigValidation) {
  FuzzConfig c;
  c.count = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.count = 1;
  c.max_weight = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.max_weight = 1;
  EXPECT_NO_THROW(validate(c));
}

TEST(Fuzz, AtomNames) {
  EXPECT_EQ(atom_names(3), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_EQ(atom_names(10).back(), "a9");
}

TEST(Fuzz, GeneratorRespectsWeightAndAtoms) {
  FuzzConfig c;
  c.count = 2000;
  c.max_weight = 9;
  c.atoms = 2;
  for (const Sequent& s : fuzz_corpus(c)) {
    unsigned w = 0;
    for (Formula f : s.ante) w += f.weight();
    if (s.succ) w += s.succ->weight();
    EXPECT_LE(w, 9u);
    EXPECT_GE(w, 1u);
    for (const std::string& a : atoms(s)) EXPECT_TRUE(a == "p" || a == "q");
  }
}

TEST(Fuzz, StreamsAreSeedDeterministic) {
  FuzzConfig a;
  a.count = 200;
  FuzzConfig b = a;
  b.seed = 2;
  EXPECT_EQ(fuzz_corpus(a), fuzz_corpus(a));
  EXPECT_NE(fuzz_corpus(a), fuzz_corpus(b));
}

TEST(Fuzz, ReportIsByteIdenticalOnReplay) {
  FuzzConfig c;
  c.count = 60;
  EXPECT_EQ(run_fuzz(c).text(), run_fuzz(c).text());
}

TEST(Fuzz, DefaultRunHasNoFailures) {
  FuzzConfig c;  // seed 1, 100 sequents, weight 12, 2 atoms
  FuzzReport r = run_fuzz(c);
  EXPECT_EQ(r.failures, 0u) << r.text();
  EXPECT_EQ(r.provable + r.refuted, 100u);
  EXPECT_GT(r.provable, 0u);
  EXPECT_GT(r.refuted, 0u);
}

TEST(Fuzz, ModelPoolCatchesUnsoundVerdicts) {
  ModelPool pool({"p"}, 2);
  EXPECT_TRUE(pool.refute(S("=> []p -> p")));
  EXPECT_TRUE(pool.refute(S("=> p | ~p")));
  EXPECT_FALSE(pool.refute(S("=> ([]p -> p) -> p")));
}

TEST(Fuzz, CrossCheckFlagsTamperedProofs) {
  // The cross-check relies on check_g3_proof; a single wrong rule label
  // must be rejected.
  G3Ptr p = eliminate_cuts(g4_to_g3(*extract_proof(search(S("p & q => q & p"))))).proof;
  ASSERT_TRUE(check_g3_proof(*p, Profile::Core));
  G3Ptr bad = make_g3(p->seq, RuleG3::LOr, p->premises, {.principal = p->principal});
  EXPECT_FALSE(check_g3_proof(*bad, Profile::Core));
}

TEST(Fuzz, CrossCheckCase) {
  ModelPool pool({"p", "q"}, 2);
  FuzzCase a = cross_check(S("=> []([]p -> p) -> []p"), pool);
  EXPECT_TRUE(a.ok) << a.error;
  EXPECT_TRUE(a.provable);
  FuzzCase b = cross_check(S("=> []p -> p"), pool);
  EXPECT_TRUE(b.ok) << b.error;
  EXPECT_FALSE(b.provable);
  EXPECT_GE(b.worlds, 1u);
}

}  // namespace
}  // namespace isl
