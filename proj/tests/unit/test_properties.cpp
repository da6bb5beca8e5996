// Invariants checked across the whole default catalog.
#include <gtest/gtest.h>

#include "scomult/catalog.hpp"
#include "scomult/errors.hpp"
#include "scomult/ideals.hpp"
#include "scomult/mcs.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"
#include "scomult/verifier.hpp"
#include "scomult/witness_check.hpp"

using namespace scomult;

namespace {

const Catalog& catalog() {
  static const Catalog c = generate_catalog();
  return c;
}

}  // namespace

TEST(Catalog, SnapshotCounts) {
  const auto& c = catalog();
  EXPECT_EQ(c.rings.size(), 15u);
  EXPECT_EQ(c.modules.size(), 123u);
  EXPECT_EQ(c.module_mcs_pairs(), 789u);
  EXPECT_EQ(c.homs.size(), 12650u);
}

TEST(Catalog, EveryListedMcsIsValid) {
  for (const auto& cr : catalog().rings)
    for (const auto& s : cr.mcs) {
      EXPECT_FALSE(s.contains(cr.ring->zero())) << cr.name;
      EXPECT_TRUE(s.contains(cr.ring->one())) << cr.name;
      for (Elem a : s.elements())
        for (Elem b : s.elements()) EXPECT_TRUE(s.contains(cr.ring->mul(a, b))) << cr.name;
    }
}

TEST(Mcs, ValidationNamesTheViolation) {
  const auto z6 = make_zn_ring({6});
  EXPECT_THROW(validate_mcs(*z6, ElementSet{0, 1}), McsError);
  EXPECT_THROW(validate_mcs(*z6, ElementSet{3}), McsError);
  EXPECT_THROW(validate_mcs(*z6, ElementSet{1, 2}), McsError);  // 2*2 = 4 missing
  EXPECT_NO_THROW(validate_mcs(*z6, ElementSet{1, 2, 4}));
}

// With S = {1} every S-notion collapses to its classical one.
TEST(ReductionLaws, TrivialMcsGivesClassicalPredicates) {
  std::size_t checked = 0;
  for (const auto& cm : catalog().modules) {
    const Module& m = *cm.module;
    const Mcs one = trivial_mcs(m.ring());
    EXPECT_EQ(is_s_comultiplication(*cm.lattice, one).holds, is_comultiplication(*cm.lattice)) << m.name();
    EXPECT_EQ(is_s_cyclic(m, one).has_value(), is_cyclic(m)) << m.name();
    for (ElementSet n : cm.lattice->submodules()) {
      const auto prime = is_s_prime_submodule(m, n, one);
      if (prime.status != Status::disjointness_failure)
        EXPECT_EQ(prime.holds(), is_prime_submodule(m, n)) << m.name() << " P=" << n.bits();
      if (n.size() > 1) {
        const auto second = is_s_second(m, n, one);
        if (second.status != Status::disjointness_failure)
          EXPECT_EQ(second.holds(), is_second(m, n)) << m.name() << " N=" << n.bits();
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(LemmaForms, AgreeOnEveryModuleAndMcs) {
  std::size_t pairs = 0;
  for (const auto& cm : catalog().modules)
    for (const auto& s : catalog().rings[cm.ring].mcs) {
      const Triple t = lemma_equivalence_bundle(*cm.lattice, s);
      EXPECT_TRUE(t.agree()) << cm.module->name() << " S=" << s.elements().bits();
      ++pairs;
    }
  EXPECT_EQ(pairs, catalog().module_mcs_pairs());
}

// Searching for s outside the universal quantifier is the whole content of
// the S-prime definition; swapping the order has to be observable on the
// Z6 family.
TEST(QuantifierOrder, SwappedSPrimeDiffersOnZ6Family) {
  std::size_t differences = 0;
  for (const auto& cm : catalog().modules) {
    const std::string& ring = catalog().rings[cm.ring].name;
    if (ring != "Z6" && ring != "Z12") continue;
    for (const auto& s : catalog().rings[cm.ring].mcs)
      for (ElementSet p : cm.lattice->submodules()) {
        const auto right = is_s_prime_submodule(*cm.module, p, s);
        const auto swapped = is_s_prime_submodule(*cm.module, p, s, Mutant::s_prime_universal_s);
        differences += right.holds() != swapped.holds();
      }
  }
  EXPECT_GT(differences, 0u);
}

// Finite rings have nilpotent Jacobson radical, so (0:_M I) is nonzero for
// every nonzero M and I in Jac(R). This is what leaves the dual Nakayama
// statements without qualifying instances.
TEST(DualNakayama, JacobsonRadicalIsNilpotent) {
  for (const auto& cr : catalog().rings) {
    const Ring& r = *cr.ring;
    Ideal power = cr.jacobson;
    for (std::size_t k = 0; k < r.order() && power.elements != zero_ideal(r).elements; ++k)
      power = ideal_product(r, power, cr.jacobson);
    EXPECT_EQ(power.elements, zero_ideal(r).elements) << cr.name;
  }
}

TEST(DualNakayama, ColonByRadicalIdealIsNeverZero) {
  for (const auto& cm : catalog().modules) {
    const Module& m = *cm.module;
    if (m.is_zero()) continue;
    const auto& cr = catalog().rings[cm.ring];
    for (const auto& i : cm.lattice->ideals()) {
      if (!i.elements.subset_of(cr.jacobson.elements)) continue;
      EXPECT_GT(colon_into_module(m, m.zero_set(), i.elements).size(), 1u) << m.name();
    }
  }
}

TEST(DualNakayama, StatementsReportVacuous) {
  EXPECT_EQ(verify("T-DU", catalog()).verdict, Verdict::vacuous);
  EXPECT_EQ(verify("C-DU", catalog()).verdict, Verdict::vacuous);
}

TEST(Witnesses, EveryEmittedWitnessRevalidates) {
  const WitnessAudit audit = audit_witnesses(catalog());
  EXPECT_GT(audit.checked, 100000u);
  EXPECT_EQ(audit.failed, 0u) << (audit.failures.empty() ? "" : audit.failures.front());
}

TEST(Determinism, ThreadCountDoesNotChangeReports) {
  const auto one = verify_all(catalog(), Mutant::none, {}, 1);
  const auto two = verify_all(catalog(), Mutant::none, {}, 2);
  ASSERT_EQ(one.size(), two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, two[i].id);
    EXPECT_EQ(one[i].verdict, two[i].verdict) << one[i].id;
    EXPECT_EQ(one[i].instances, two[i].instances) << one[i].id;
    EXPECT_EQ(one[i].tags, two[i].tags) << one[i].id;
    EXPECT_EQ(one[i].notes, two[i].notes) << one[i].id;
  }
}

TEST(Determinism, CounterexamplesAreStable) {
  const auto a = verify("P-SPR", catalog(), Mutant::s_prime_universal_s);
  const auto b = verify("P-SPR", catalog(), Mutant::s_prime_universal_s);
  ASSERT_TRUE(a.counterexample && b.counterexample);
  EXPECT_EQ(a.counterexample->instance, b.counterexample->instance);
  EXPECT_EQ(a.failures, b.failures);
}
