#pragma once

#include <span>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ideals.hpp"
#include "scomult/module.hpp"

namespace scomult {

/// Submodules are carried around as their full element set; generators are
/// kept only where a closure produced them.
struct Submodule {
  ElementSet elements;
  std::vector<Elem> generators;

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.elements == b.elements; }
};

bool is_submodule(const Module& m, ElementSet subset);
Submodule submodule_closure(const Module& m, std::span<const Elem> generators);
/// Rm
ElementSet cyclic_submodule(const Module& m, Elem x);
ElementSet submodule_sum(const Module& m, ElementSet a, ElementSet b);

/// Generating set of N picked greedily in index order: each element not
/// yet in the span is added.
std::vector<Elem> greedy_generators(const Module& m, ElementSet n);

/// All submodules by breadth-first closure from {0}, sorted by cardinality
/// then element list.
std::vector<ElementSet> enumerate_submodules(const Module& m);

/// (N : K) = {x in R : xK in N}
Ideal colon_into_ring(const Module& m, ElementSet n, ElementSet k);
/// ann(K) = (0 : K)
Ideal annihilator(const Module& m, ElementSet k);
/// (N :_M J) = {x in M : Jx in N}
ElementSet colon_into_module(const Module& m, ElementSet n, ElementSet j);
/// IX, the submodule generated by all products ix.
ElementSet ideal_times(const Module& m, ElementSet ideal, ElementSet x);

/// T(M) = {m : rm = 0 for some r != 0}
ElementSet torsion_set(const Module& m);
bool is_torsion(const Module& m);
/// z(M) = {r : rm = 0 for some m != 0}
ElementSet zero_divisors_on(const Module& m);

}  // namespace scomult
