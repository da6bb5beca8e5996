#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ideals.hpp"
#include "scomult/module.hpp"

namespace scomult {

/// Everything about a module's submodules that the predicates reuse:
/// the submodule list, the ring's ideals, and the annihilator/colon maps
/// between them. Built once, then read-only.
class SubmoduleLattice {
 public:
  explicit SubmoduleLattice(ModulePtr module);

  const Module& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }

  /// Canonical order; index 0 is {0}, the last entry is M.
  const std::vector<ElementSet>& submodules() const { return subs_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  ElementSet ann(std::size_t i) const { return ann_[i]; }
  /// (0 :_M ann(N_i))
  ElementSet dual(std::size_t i) const { return dual_[i]; }
  /// (0 :_M I_j)
  ElementSet colon_of_ideal(std::size_t j) const { return colon_of_ideal_[j]; }

  std::optional<std::size_t> index_of(ElementSet n) const;
  /// ann(N) for any submodule, cached or not.
  ElementSet ann_of(ElementSet n) const;
  ElementSet dual_of(ElementSet n) const;

 private:
  ModulePtr module_;
  std::vector<ElementSet> subs_;
  std::vector<Ideal> ideals_;
  std::vector<ElementSet> ann_;
  std::vector<ElementSet> dual_;
  std::vector<ElementSet> colon_of_ideal_;
};

using LatticePtr = std::shared_ptr<const SubmoduleLattice>;

LatticePtr make_lattice(ModulePtr module);

}  // namespace scomult
