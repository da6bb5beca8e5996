#include <gtest/gtest.h>

#include <set>

#include "scomult/catalog.hpp"
#include "scomult/errors.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/verifier.hpp"

using namespace scomult;

namespace {

const Catalog& catalog() {
  static const Catalog c = generate_catalog();
  return c;
}

bool qualifies_text(const std::string& id, const std::string& text) {
  return qualifies(id, deserialize(parse_instance_text(text)));
}

const std::string kZ4 = "ring R zn 4\nmodule M self R\n";
const std::string kZ5 = "ring R zn 5\nmodule M self R\n";
const std::string kZ6 = "ring R zn 6\nmodule M self R\n";
// F2 + F2 over F2; not comultiplication, since a line L has
// (0 : ann L) = (0 : 0) = everything.
const std::string kV =
    "ring R zn 2\nmodule M explicit R 4 zero 0\n"
    "madd M 0 1 2 3\nmadd M 1 0 3 2\nmadd M 2 3 0 1\nmadd M 3 2 1 0\n"
    "action M 0 0 0 0\naction M 0 1 2 3\n";

struct FilterCase {
  const char* id;
  std::string text;
  bool expected;
};

// One instance on each side of every hypothesis, worked out by hand.
const std::vector<FilterCase>& filter_cases() {
  static const std::vector<FilterCase> cases = {
      {"P-MONO", kZ6 + "mcs A R {1}\nmcs B R {1,5}\n", true},
      {"P-MONO", kV + "mcs A R {1}\nmcs B R {1}\n", false},
      {"P-LOC", kZ6 + "mcs S R {1}\n", true},
      {"P-LOC", kV + "mcs S R {1}\n", false},
      {"C-SUB", kZ6 + "mcs S R {1}\nsubmodule N M {0,3}\n", true},
      {"C-SUB", kV + "mcs S R {1}\nsubmodule N M {0,1}\n", false},
      // (0 :_M R) = 0, but (0 :_M {0,3}) = {0,2,4}
      {"P-PF", kZ6 + "mcs S R {1}\nideal I R {0,1,2,3,4,5}\n", true},
      {"P-PF", kZ6 + "mcs S R {1}\nideal I R {0,3}\n", false},
      // Jac(Z4) = {0,2} and (0 :_Z4 {0,2}) = {0,2}
      {"T-DU", kZ4 + "mcs S R {1}\nideal I R {0,2}\n", false},
      {"C-DU", kZ4 + "mcs S R {1}\nideal I R {0,2}\n", false},
      // Z5 is its own minimal ideal; the minimal ideals of Z6 have nonzero colons
      {"P-CY1", kZ5 + "mcs S R {1}\nideal I R {0,1,2,3,4}\n", true},
      {"P-CY1", kZ6 + "mcs S R {1}\nideal I R {0,3}\n", false},
      {"P-FAM", kZ6 + "mcs S R {1}\nsubmodule A M {0,3}\nsubmodule B M {0,2,4}\n", true},
      {"P-FAM", kZ6 + "mcs S R {1}\nsubmodule A M {0,3}\n", false},
      // N = {0,3} = (0 :_M {0,2,4}); (0 :_M R) = 0 does not contain it
      {"P-EXT", kZ6 + "mcs S R {1}\nideal I R {0,2,4}\nsubmodule N M {0,3}\n", true},
      {"P-EXT", kZ6 + "mcs S R {1}\nideal I R {0,1,2,3,4,5}\nsubmodule N M {0,3}\n", false},
      {"T-TOR", kZ6 + "mcs S R {1}\n", true},
      {"T-TOR", kV + "mcs S R {1}\n", false},
      {"T-CY2", kZ5 + "mcs S R {1}\n", true},
      {"T-CY2", kZ6 + "mcs S R {1}\n", false},
      // 2 * 2 = 0 in Z4 with neither factor killed by s = 1
      {"T-CY3", kZ5 + "mcs S R {1}\n", true},
      {"T-CY3", kZ4 + "mcs S R {1}\n", false},
      // ann({0,2}) = {0,2} differs from ann(Z4) = 0
      {"T-MIN", kZ5 + "mcs S R {1}\n", true},
      {"T-MIN", kZ4 + "mcs S R {1}\n", false},
      // ({0,3} : Z6) = {0,3}
      {"P-SPR", kZ6 + "mcs S R {1,5}\nsubmodule P M {0,3}\n", true},
      {"P-SPR", kZ6 + "mcs S R {1,3}\nsubmodule P M {0,3}\n", false},
      // ann({0,3}) = {0,2,4}
      {"T-SEC", kZ6 + "mcs S R {1,5}\nsubmodule N M {0,3}\n", true},
      {"T-SEC", kZ6 + "mcs S R {1,2,4}\nsubmodule N M {0,3}\n", false},
      {"T-M3", kZ6 + "mcs S R {1}\nsubmodule N M {0,3}\n", true},
      {"T-M3", kV + "mcs S R {1}\nsubmodule N M {0,1}\n", false},
      {"C-M3", kZ6 + "mcs S R {1}\nsubmodule N M {0,3}\n", true},
      {"C-M3", kV + "mcs S R {1}\nsubmodule N M {0,1}\n", false},
      // {0,3} is second; 2 * Z4 = {0,2} is neither 0 nor Z4
      {"T-SSUM", kZ6 + "mcs S R {1}\nsubmodule N M {0,3}\n", true},
      {"T-SSUM", kZ4 + "mcs S R {1}\nsubmodule N M {0,1,2,3}\n", false},
      {"P-PROD",
       "ring A zn 2\nring B zn 3\nmodule M self A\nmodule N self B\nmcs S A {1}\nmcs T B {1,2}\n", true},
      {"P-PROD", kZ6 + "mcs S R {1}\n", false},
  };
  return cases;
}

}  // namespace

TEST(HypothesisFilter, HandWorkedInstances) {
  for (const auto& c : filter_cases())
    EXPECT_EQ(qualifies_text(c.id, c.text), c.expected) << c.id << "\n" << c.text;
}

// These statements carry no hypothesis beyond the shape of the instance, or
// (T-LOC) one that every finite ring meets: the product of all of S is a
// multiple of each element.
TEST(HypothesisFilter, UnconditionalStatementsAlwaysQualify) {
  for (const char* id : {"L-EQ", "P-SAT", "T-LOC"}) {
    EXPECT_TRUE(qualifies_text(id, kZ6 + "mcs S R {1,3}\n")) << id;
    EXPECT_TRUE(qualifies_text(id, kV + "mcs S R {1}\n")) << id;
  }
  EXPECT_TRUE(qualifies_text("T-COM", kV));
}

// Finite rings have nilpotent Jacobson radical, so the dual Nakayama
// hypotheses (0 :_M I) = 0 with I in Jac(R) never hold on a nonzero module.
TEST(HypothesisFilter, DualNakayamaNeverQualifiesOnTheCatalog) {
  for (const char* id : {"T-DU", "C-DU"}) {
    const auto r = verify(id, catalog());
    EXPECT_EQ(r.instances, 0u) << id;
    EXPECT_GT(r.candidates, 0u) << id;
    EXPECT_EQ(r.verdict, Verdict::vacuous) << id;
  }
}

TEST(HypothesisFilter, MutantsDoNotChangeQualification) {
  for (const auto& st : statements()) {
    std::size_t seen = 0;
    st.enumerate(catalog(), [&](const Instance& inst) {
      if (seen++ % 97 != 0) return;
      const bool q = st.check(inst, Mutant::none).qualifies;
      for (Mutant m : kAllMutants) EXPECT_EQ(st.check(inst, m).qualifies, q) << st.id;
      EXPECT_EQ(qualifies(st.id, inst), q) << st.id;
    });
  }
}

TEST(Statements, TwentySixInReportOrder) {
  const auto& all = statements();
  ASSERT_EQ(all.size(), 26u);
  std::set<std::string_view> ids;
  for (const auto& s : all) ids.insert(s.id);
  EXPECT_EQ(ids.size(), 26u);
  EXPECT_EQ(all.front().id, "L-EQ");
  EXPECT_THROW(find_statement("X-NONE"), UnknownStatement);
}

TEST(Statements, DefaultSuiteHasNoFailures) {
  std::size_t live = 0;
  for (const auto& r : verify_all(catalog())) {
    EXPECT_NE(r.verdict, Verdict::fail) << r.id << ": " << (r.counterexample ? r.counterexample->detail : "");
    live += r.verdict == Verdict::pass;
  }
  EXPECT_GE(live, 20u);
}

// A mutant's counterexample has to fail again from its serialized text
// under that mutant, and pass under the real predicates.
TEST(Mutants, CounterexamplesRevalidateAndAreGenuinelyMutantOnly) {
  for (Mutant m : kAllMutants) {
    std::size_t fails = 0;
    for (const auto& r : verify_all(catalog(), m)) {
      if (r.verdict != Verdict::fail) continue;
      ++fails;
      ASSERT_TRUE(r.counterexample) << r.id;
      EXPECT_TRUE(r.counterexample->revalidated) << r.id;
      EXPECT_TRUE(revalidate(r.id, r.counterexample->instance, m)) << r.id << " " << mutant_name(m);
      EXPECT_FALSE(revalidate(r.id, r.counterexample->instance, Mutant::none)) << r.id << " " << mutant_name(m);
    }
    EXPECT_GE(fails, 1u) << mutant_name(m);
  }
}

TEST(Mutants, NamesRoundTrip) {
  for (Mutant m : kAllMutants) EXPECT_EQ(mutant_from_name(mutant_name(m)), m);
  EXPECT_FALSE(mutant_from_name("no-such-mutant").has_value());
}
