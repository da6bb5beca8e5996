#include "scomult/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "scomult/submodules.hpp"

namespace scomult {

SubmoduleLattice::SubmoduleLattice(ModulePtr module) : module_(std::move(module)) {
  if (!module_) throw std::invalid_argument("lattice needs a module");
  const Module& m = *module_;
  subs_ = enumerate_submodules(m);
  ideals_ = enumerate_ideals(m.ring());
  ann_.reserve(subs_.size());
  dual_.reserve(subs_.size());
  for (ElementSet n : subs_) {
    const ElementSet a = annihilator(m, n).elements;
    ann_.push_back(a);
    dual_.push_back(colon_into_module(m, m.zero_set(), a));
  }
  colon_of_ideal_.reserve(ideals_.size());
  for (const auto& i : ideals_) colon_of_ideal_.push_back(colon_into_module(m, m.zero_set(), i.elements));
}

std::optional<std::size_t> SubmoduleLattice::index_of(ElementSet n) const {
  auto it = std::lower_bound(subs_.begin(), subs_.end(), n, CanonicalLess{});
  if (it == subs_.end() || *it != n) return std::nullopt;
  return static_cast<std::size_t>(it - subs_.begin());
}

ElementSet SubmoduleLattice::ann_of(ElementSet n) const {
  if (auto i = index_of(n)) return ann_[*i];
  return annihilator(*module_, n).elements;
}

ElementSet SubmoduleLattice::dual_of(ElementSet n) const {
  if (auto i = index_of(n)) return dual_[*i];
  return colon_into_module(*module_, module_->zero_set(), ann_of(n));
}

LatticePtr make_lattice(ModulePtr module) { return std::make_shared<const SubmoduleLattice>(std::move(module)); }

}  // namespace scomult
