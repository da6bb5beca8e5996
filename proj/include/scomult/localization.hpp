#pragma once

#include <utility>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ideals.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"

namespace scomult {

/// `without_u_factor` drops the u in u(s'x - sx') = 0. It is the broken
/// variant used in mutation runs; on rings with zero divisors the relation
/// stops being transitive and construction throws LocalizationError.
enum class PairRelation { standard, without_u_factor };

/// Upper bound on |carrier| * |S| for the pair scan.
inline constexpr std::size_t kMaxPairs = 1024;

/// S^-1 R as a table ring. Class k is represented by its least pair
/// (r, s), ordered by r then s; classes are numbered by representative.
struct LocalizedRing {
  RingPtr base;
  std::vector<Elem> denominators;  // S in canonical order
  RingPtr ring;
  std::vector<std::pair<Elem, Elem>> representatives;

  /// Class of r/s; s must lie in S.
  Elem fraction(Elem r, Elem s) const;
  /// Image of r under R -> S^-1 R.
  Elem canonical(Elem r) const;

  std::vector<Elem> class_of;  // indexed by r * |S| + position of s
};

/// S^-1 M as a module over the table ring S^-1 R.
struct LocalizedModule {
  ModulePtr base;
  LocalizedRing ring;
  ModulePtr module;
  std::vector<std::pair<Elem, Elem>> representatives;

  Elem fraction(Elem m, Elem s) const;
  Elem canonical(Elem m) const;

  std::vector<Elem> class_of;
};

LocalizedRing localize_ring(const RingPtr& ring, const Mcs& s, PairRelation relation = PairRelation::standard);
LocalizedModule localize_module(const ModulePtr& m, const Mcs& s, PairRelation relation = PairRelation::standard);

/// S^-1 N = {n/s}
ElementSet localize_submodule(const LocalizedModule& lm, ElementSet n);
/// S^-1 I = {a/s}
ElementSet localize_ideal(const LocalizedRing& lr, ElementSet ideal);

/// S^-1 (0 :_M I) == (0 :_{S^-1 M} S^-1 I)
bool localized_colon_identity_check(const LocalizedModule& lm, ElementSet ideal);

/// M localized at R \ m has more than one element.
bool mm_locally_nonzero(const ModulePtr& m, const Ideal& maximal);

/// {m : sm = 0 for some s in S}, the kernel of M -> S^-1 M.
ElementSet localization_kernel(const Module& m, const Mcs& s);

}  // namespace scomult
