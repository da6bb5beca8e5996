#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scomult/catalog.hpp"
#include "scomult/element_set.hpp"
#include "scomult/module.hpp"
#include "scomult/morphisms.hpp"

namespace scomult {

/// Second opinion on witnesses. Everything here re-evaluates a definition
/// straight from the operation tables with std::set, sharing no code with
/// the search that produced the witness.
namespace naive {

/// s(0:_M I) in N in (0:_M I)
bool comultiplication_witness(const Module& m, ElementSet n, Elem s, ElementSet ideal);
/// s(0:_M ann N) in N
bool dual_witness(const Module& m, ElementSet n, Elem s);
/// sM in Rx
bool cyclic_witness(const Module& m, Elem s, Elem x);
/// (P:M) misses S, and am in P forces saM in P or sm in P
bool s_prime_witness(const Module& m, ElementSet p, ElementSet s_set, Elem s);
/// ann(N) misses S, and saN is 0 or sN for every a
bool s_second_witness(const Module& m, ElementSet n, ElementSet s_set, Elem s);
/// am = 0 forces sa = 0 or sm = 0
bool torsion_free_witness(const Module& m, Elem s);

bool s_zero_witness(const ModuleHom& f, Elem s);
bool s_monic_witness(const ModuleHom& f, Elem s);
bool s_epic_witness(const ModuleHom& f, Elem s);

}  // namespace naive

struct WitnessAudit {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
};

/// Collects every witness the predicates emit over the catalog and checks
/// each one with the naive evaluators.
WitnessAudit audit_witnesses(const Catalog& catalog);

}  // namespace scomult
