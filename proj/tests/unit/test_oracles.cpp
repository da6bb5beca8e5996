// Brute-force oracles. Everything here is recomputed from the operation
// tables by subset scans; nothing calls the closure-based enumerators to
// produce an expected value.
#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "scomult/catalog.hpp"
#include "scomult/ideals.hpp"
#include "scomult/localization.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"

using namespace scomult;

namespace {

using Bits = std::uint64_t;

bool closed_ideal(const Ring& r, Bits set) {
  auto in = [&](Elem x) { return (set >> x) & 1u; };
  if (!in(r.zero())) return false;
  for (Elem a = 0; a < r.order(); ++a) {
    if (!in(a)) continue;
    for (Elem b = 0; b < r.order(); ++b) {
      if (in(b) && !in(r.sub(a, b))) return false;
      if (!in(r.mul(b, a))) return false;
    }
  }
  return true;
}

bool closed_submodule(const Module& m, Bits set) {
  auto in = [&](Elem x) { return (set >> x) & 1u; };
  if (!in(m.zero())) return false;
  for (Elem a = 0; a < m.order(); ++a) {
    if (!in(a)) continue;
    for (Elem b = 0; b < m.order(); ++b)
      if (in(b) && !in(m.sub(a, b))) return false;
    for (Elem r = 0; r < m.ring().order(); ++r)
      if (!in(m.act(r, a))) return false;
  }
  return true;
}

std::set<Bits> subset_scan(std::size_t n, const std::function<bool(Bits)>& keep) {
  std::set<Bits> out;
  for (Bits s = 0; s < (Bits{1} << n); ++s)
    if (keep(s)) out.insert(s);
  return out;
}

std::set<Bits> as_bits(const std::vector<ElementSet>& sets) {
  std::set<Bits> out;
  for (auto s : sets) out.insert(s.bits());
  return out;
}

const Catalog& catalog() {
  static const Catalog c = generate_catalog();
  return c;
}

/// N = (0 :_M ann N) for every submodule, straight from the tables.
bool comultiplication_oracle(const Module& m) {
  const auto subs = subset_scan(m.order(), [&](Bits s) { return closed_submodule(m, s); });
  for (Bits n : subs) {
    Bits dual = 0;
    for (Elem x = 0; x < m.order(); ++x) {
      bool killed = true;
      for (Elem r = 0; r < m.ring().order() && killed; ++r) {
        bool kills_n = true;
        for (Elem y = 0; y < m.order(); ++y)
          if ((n >> y) & 1u) kills_n = kills_n && m.act(r, y) == m.zero();
        if (kills_n) killed = m.act(r, x) == m.zero();
      }
      if (killed) dual |= Bits{1} << x;
    }
    if (dual != n) return false;
  }
  return true;
}

/// N = IM for some ideal I, straight from the tables.
bool multiplication_oracle(const Module& m) {
  const Ring& r = m.ring();
  const auto subs = subset_scan(m.order(), [&](Bits s) { return closed_submodule(m, s); });
  const auto ideals = subset_scan(r.order(), [&](Bits s) { return closed_ideal(r, s); });
  std::set<Bits> products;
  for (Bits i : ideals) {
    // IM: products am, closed under addition by fixpoint.
    std::set<Elem> gen;
    for (Elem a = 0; a < r.order(); ++a)
      if ((i >> a) & 1u)
        for (Elem x = 0; x < m.order(); ++x) gen.insert(m.act(a, x));
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem x : std::vector<Elem>(gen.begin(), gen.end()))
        for (Elem y : std::vector<Elem>(gen.begin(), gen.end()))
          grew = gen.insert(m.add(x, y)).second || grew;
    }
    Bits bits = 0;
    for (Elem x : gen) bits |= Bits{1} << x;
    products.insert(bits);
  }
  return std::all_of(subs.begin(), subs.end(), [&](Bits n) { return products.count(n) > 0; });
}

}  // namespace

TEST(IdealOracle, MatchesSubsetScanUpToOrderEight) {
  std::size_t rings = 0;
  for (const auto& cr : catalog().rings) {
    if (cr.ring->order() > 8) continue;
    std::vector<ElementSet> got;
    for (const auto& i : enumerate_ideals(*cr.ring)) got.push_back(i.elements);
    EXPECT_EQ(as_bits(got), subset_scan(cr.ring->order(), [&](Bits s) { return closed_ideal(*cr.ring, s); }))
        << cr.name;
    EXPECT_EQ(as_bits(got).size(), got.size()) << cr.name << " lists an ideal twice";
    ++rings;
  }
  EXPECT_GE(rings, 10u);
}

TEST(SubmoduleOracle, MatchesSubsetScanUpToCarrierSixteen) {
  std::size_t modules = 0;
  for (const auto& cm : catalog().modules) {
    const Module& m = *cm.module;
    if (m.order() > 16) continue;
    const auto got = enumerate_submodules(m);
    EXPECT_EQ(as_bits(got), subset_scan(m.order(), [&](Bits s) { return closed_submodule(m, s); })) << m.name();
    EXPECT_EQ(as_bits(got).size(), got.size()) << m.name();
    ++modules;
  }
  EXPECT_EQ(modules, catalog().modules.size());
}

TEST(KnownInstances, Z6Ideals) {
  const auto z6 = make_zn_ring({6});
  std::vector<Bits> got;
  for (const auto& i : enumerate_ideals(*z6)) got.push_back(i.elements.bits());
  // {0}, {0,3}, {0,2,4}, Z6
  EXPECT_EQ(got, (std::vector<Bits>{0b1, 0b1001, 0b10101, 0b111111}));
}

TEST(KnownInstances, ZnOverItselfIsComultiplicationUpTo30) {
  for (unsigned n = 2; n <= 30; ++n) {
    const auto m = self_module(make_zn_ring({n}));
    const auto lattice = make_lattice(m);
    EXPECT_TRUE(is_comultiplication(*lattice)) << "Z" << n;
    EXPECT_TRUE(comultiplication_oracle(*m)) << "Z" << n;
    EXPECT_TRUE(is_s_comultiplication(*lattice, trivial_mcs(m->ring())).holds) << "Z" << n;
  }
}

// F2 + F2 over F2. The lines are submodules that no ideal of F2 produces,
// so the module is not a multiplication module; the brute-force oracle
// agrees with the library on that.
TEST(KnownInstances, TwoDimensionalSpaceOverF2) {
  const auto f2 = make_zn_ring({2});
  const auto v = direct_sum(*self_module(f2), *self_module(f2));
  const auto lattice = make_lattice(v);
  EXPECT_EQ(lattice->submodules().size(), 5u);
  EXPECT_FALSE(is_comultiplication(*lattice));
  EXPECT_FALSE(comultiplication_oracle(*v));
  EXPECT_FALSE(is_multiplication(*lattice));
  EXPECT_FALSE(multiplication_oracle(*v));
}

TEST(KnownInstances, SaturationOfOneThreeInZ6) {
  const auto z6 = make_zn_ring({6});
  const Mcs s = validate_mcs(*z6, ElementSet{1, 3});
  EXPECT_EQ(saturation(*z6, s).elements(), (ElementSet{1, 3, 5}));
  // Oracle: x with rx in S for some r.
  ElementSet expected;
  for (Elem x = 0; x < 6; ++x)
    for (Elem r = 0; r < 6; ++r)
      if (s.elements().contains(z6->mul(r, x))) expected.insert(x);
  EXPECT_EQ(saturation(*z6, s).elements(), expected);
}

TEST(KnownInstances, LocalizingZ6AtOneThree) {
  const auto z6 = make_zn_ring({6});
  const Mcs s = validate_mcs(*z6, ElementSet{1, 3});
  const auto lr = localize_ring(z6, s);
  EXPECT_EQ(lr.ring->order(), 2u);
  // Oracle: count classes of R x S under u(s'r - sr') = 0.
  const std::vector<Elem> den{1, 3};
  std::vector<std::pair<Elem, Elem>> reps;
  for (Elem r = 0; r < 6; ++r)
    for (Elem d : den) {
      bool seen = false;
      for (auto [r2, d2] : reps)
        for (Elem u : den)
          seen = seen || z6->mul(u, z6->sub(z6->mul(d2, r), z6->mul(d, r2))) == 0;
      if (!seen) reps.emplace_back(r, d);
    }
  EXPECT_EQ(reps.size(), 2u);
}

TEST(KnownInstances, McsOfZ6BySubsetScan) {
  const auto z6 = make_zn_ring({6});
  std::set<Bits> expected = subset_scan(6, [&](Bits s) {
    if (!((s >> 1) & 1u) || (s & 1u)) return false;
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b)
        if (((s >> a) & 1u) && ((s >> b) & 1u) && !((s >> z6->mul(a, b)) & 1u)) return false;
    return true;
  });
  std::vector<ElementSet> got;
  for (const auto& s : enumerate_mcs(*z6)) got.push_back(s.elements());
  EXPECT_EQ(as_bits(got), expected);
  EXPECT_EQ(got.size(), 7u);
}
