#pragma once

#include <optional>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/lattice.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"

namespace scomult {

/// An R-linear map between modules over the same ring, stored as its value
/// table on the source carrier.
class ModuleHom {
 public:
  /// Validates additivity and R-linearity exhaustively; throws AxiomViolation.
  static ModuleHom make(ModulePtr source, ModulePtr target, std::vector<Elem> table);

  const Module& source() const { return *source_; }
  const Module& target() const { return *target_; }
  const ModulePtr& source_ptr() const { return source_; }
  const ModulePtr& target_ptr() const { return target_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem m) const { return table_[m]; }

  ElementSet kernel() const;
  ElementSet image() const;
  ElementSet image_of(ElementSet xs) const;
  /// f^-1(Y)
  ElementSet preimage(ElementSet ys) const;
  bool injective() const { return kernel() == source_->zero_set(); }
  bool surjective() const { return image() == target_->all(); }

  friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
    return a.table_ == b.table_ && *a.source_ == *b.source_ && *a.target_ == *b.target_;
  }

 private:
  ModuleHom() = default;
  ModulePtr source_;
  ModulePtr target_;
  std::vector<Elem> table_;
};

/// g after f
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom identity_hom(ModulePtr m);
/// N -> M for a submodule N, with N presented by submodule_as_module.
ModuleHom inclusion(ModulePtr m, ElementSet n);
/// M -> M/N, with M/N presented by quotient_module.
ModuleHom projection(ModulePtr m, ElementSet n);
/// m -> am on M.
ModuleHom multiplication_map(ModulePtr m, Elem a);
/// The homothety a. on M/P.
ModuleHom homothety(const ModulePtr& m, ElementSet p, Elem a);
/// The homothety a. on N, viewed as a module in its own right.
ModuleHom homothety_on(const ModulePtr& m, ElementSet n, Elem a);

/// Every homomorphism source -> target, generated from images of a greedy
/// generating set of the source. Ordered lexicographically by table.
std::vector<ModuleHom> enumerate_homs(const ModulePtr& source, const ModulePtr& target);

/// s Im f = 0
bool is_s_zero_with(const ModuleHom& f, Elem s);
/// f(m) = 0 implies sm = 0
bool is_s_monic_with(const ModuleHom& f, Elem s);
/// s Ker f = 0
bool kills_kernel(const ModuleHom& f, Elem s);
/// sM' in Im f
bool is_s_epic_with(const ModuleHom& f, Elem s);

std::optional<Elem> is_s_zero(const ModuleHom& f, const Mcs& s);
/// Throws std::logic_error if the definition and the sKer(f) = 0 form
/// disagree for some s.
std::optional<Elem> is_s_monic(const ModuleHom& f, const Mcs& s);
std::optional<Elem> is_s_epic(const ModuleHom& f, const Mcs& s);

struct BridgeReport {
  bool monic_gives_s_monic = true;
  bool epic_gives_s_epic = true;
  bool monic_converse_applies = false;  // S misses z(M)
  bool monic_converse_holds = true;
  bool epic_converse_applies = false;  // S inside u(R)
  bool epic_converse_holds = true;
  bool all_hold() const {
    return monic_gives_s_monic && epic_gives_s_epic && monic_converse_holds && epic_converse_holds;
  }
};
BridgeReport monic_epic_bridge(const ModuleHom& f, const Mcs& s);

struct TransferReport {
  Elem t = 0;
  bool part_i_applies = false;  // target S-comultiplication
  bool part_i_holds = true;
  bool part_ii_applies = false;  // f onto and source S-comultiplication
  bool part_ii_holds = true;
  std::optional<ElementSet> counterexample;  // failing submodule
};
/// Throws PreconditionUnmet when no t in S kills Ker f.
TransferReport transfer_theorem_check(const ModuleHom& f, const Mcs& s, const SubmoduleLattice& source,
                                      const SubmoduleLattice& target);

}  // namespace scomult
