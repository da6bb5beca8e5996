#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/lattice.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"
#include "scomult/mutants.hpp"

namespace scomult {

enum class Status { holds, fails, disjointness_failure };

enum class WitnessKind { none, single_s, s_and_ideal, s_and_element };

struct Witness {
  WitnessKind kind = WitnessKind::none;
  Elem s = 0;
  ElementSet ideal;
  Elem element = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PredicateResult {
  Status status = Status::fails;
  std::optional<Witness> witness;

  bool holds() const { return status == Status::holds; }
};

/// Three verdicts that the theory says must coincide.
struct Triple {
  bool first = false;
  bool second = false;
  bool third = false;
  bool agree() const { return first == second && second == third; }
};

// -- S-prime ---------------------------------------------------------------

/// (P :_M s) = {m : sm in P}
ElementSet residual(const Module& m, ElementSet p, Elem s);

/// (P:M) n S = empty, then one s in S with: am in P implies sa in (P:M) or
/// sm in P, for all a, m. Disjointness failure is its own status.
PredicateResult is_s_prime_submodule(const Module& m, ElementSet p, const Mcs& s, Mutant mutant = Mutant::none);
PredicateResult is_s_prime_ideal(const RingPtr& ring, ElementSet ideal, const Mcs& s, Mutant mutant = Mutant::none);
bool is_prime_submodule(const Module& m, ElementSet p);

/// First s with (P :_M s) prime and (P :_M s') in (P :_M s) for all s'.
/// The second clause already forces (P:M) n S = empty.
std::optional<Elem> s_prime_by_residuals(const Module& m, ElementSet p, const Mcs& s,
                                         Mutant mutant = Mutant::none);

/// (definition, residual form, homothety form on M/P). Throws
/// DisjointnessFailure when (P:M) meets S.
Triple s_prime_characterizations(const ModulePtr& m, ElementSet p, const Mcs& s, Mutant mutant = Mutant::none);

// -- S-second --------------------------------------------------------------

/// N nonzero, ann(N) n S = empty, then one s with saN = 0 or saN = sN.
PredicateResult is_s_second(const Module& m, ElementSet n, const Mcs& s, Mutant mutant = Mutant::none);
/// N nonzero and aN in {0, N} for every a.
bool is_second(const Module& m, ElementSet n);
/// (definition, homothety on N S-zero or S-onto, saN = 0 or sN in aN).
/// Throws DisjointnessFailure when ann(N) meets S.
Triple s_second_characterizations(const ModulePtr& m, ElementSet n, const Mcs& s, Mutant mutant = Mutant::none);

/// First s with sN in s'N for every s' in S.
std::optional<Elem> common_multiple_witness(const Module& m, ElementSet n, const Mcs& s);

// -- S-comultiplication ----------------------------------------------------

struct ComultiplicationResult {
  bool holds = false;
  /// Per lattice submodule: first s with s(0 :_M ann N) in N.
  std::vector<std::optional<Elem>> witnesses;
  std::optional<ElementSet> failing;
};

/// Lemma form (ii), used as the primary test.
ComultiplicationResult is_s_comultiplication(const SubmoduleLattice& lattice, const Mcs& s);
/// Definition: per N some s and some ideal I with s(0:_M I) in N in (0:_M I).
/// Returns the (s, I) witnesses, or the failing N.
struct DefinitionResult {
  bool holds = false;
  std::vector<Witness> witnesses;
  std::optional<ElementSet> failing;
};
DefinitionResult s_comultiplication_by_definition(const SubmoduleLattice& lattice, const Mcs& s);
/// Form (iii): ann(K) in ann(N) implies sN in K for some s.
bool s_comultiplication_by_pairs(const SubmoduleLattice& lattice, const Mcs& s, Mutant mutant = Mutant::none);
/// (definition, (ii), (iii))
Triple lemma_equivalence_bundle(const SubmoduleLattice& lattice, const Mcs& s, Mutant mutant = Mutant::none);

bool is_comultiplication(const SubmoduleLattice& lattice);
bool is_multiplication(const SubmoduleLattice& lattice);

struct SMultiplicationResult {
  bool holds = false;          // with I = (N:M)
  bool general_holds = false;  // some I, scanned over all ideals
};
SMultiplicationResult is_s_multiplication(const SubmoduleLattice& lattice, const Mcs& s);

// -- cyclic, finite, torsion, minimal --------------------------------------

/// First (s, m) with sM in Rm.
std::optional<Witness> is_s_cyclic(const Module& m, const Mcs& s);
bool is_cyclic(const Module& m);

struct FiniteWitness {
  Elem s = 0;
  std::vector<Elem> generators;
};
/// Always succeeds at finite scale: s = 1 and a greedy generating set of N.
FiniteWitness is_s_finite(const Module& m, ElementSet n, const Mcs& s);

/// First s with: am = 0 implies sa = 0 or sm = 0.
std::optional<Elem> is_s_torsion_free(const Module& m, const Mcs& s);

enum class MinimalReading { all_submodules, nonzero_submodules };
/// Witness s for each qualifying L in K (lattice order), or nothing.
std::optional<std::vector<Elem>> is_s_minimal(const SubmoduleLattice& lattice, ElementSet k, const Mcs& s,
                                              MinimalReading reading);
/// M nonzero and ann(N) = ann(M) for every nonzero submodule N.
bool is_prime_module(const SubmoduleLattice& lattice);

/// ann(M) n S != empty
bool annihilated_by_s(const Module& m, const Mcs& s);

}  // namespace scomult
