#include "statements.hpp"

namespace scomult::detail {

namespace {

Instance base_instance(const CatalogModule& cm) {
  Instance inst;
  inst.modules.push_back(cm.module);
  inst.remember(cm.lattice);
  return inst;
}

}  // namespace

void each_module_mcs(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    for (const auto& s : ring.mcs) {
      Instance inst = base_instance(cm);
      inst.mcs.emplace_back(ring.ring, s);
      visit(inst);
    }
  }
}

void each_module(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    Instance inst = base_instance(cm);
    inst.mcs.emplace_back(ring.ring, trivial_mcs(*ring.ring));
    visit(inst);
  }
}

void each_module_mcs_submodule(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    const auto& subs = cm.lattice->submodules();
    for (const auto& s : ring.mcs)
      for (std::size_t i = 1; i < subs.size(); ++i) {
        Instance inst = base_instance(cm);
        inst.mcs.emplace_back(ring.ring, s);
        inst.submodules.push_back(subs[i]);
        visit(inst);
      }
  }
}

void each_module_mcs_ideal(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    for (const auto& s : ring.mcs)
      for (const auto& ideal : ring.ideals) {
        Instance inst = base_instance(cm);
        inst.mcs.emplace_back(ring.ring, s);
        inst.ideals.push_back(ideal.elements);
        visit(inst);
      }
  }
}

void each_hom_mcs(const Catalog& cat, const Visit& visit) {
  for (const auto& h : cat.homs) {
    const auto& ring = cat.rings[h.ring];
    for (const auto& s : ring.mcs) {
      Instance inst;
      inst.hom = h.hom;
      inst.remember(h.source);
      inst.remember(h.target);
      inst.mcs.emplace_back(ring.ring, s);
      visit(inst);
    }
  }
}

bool comult(const Instance& inst, const ModulePtr& m, const Mcs& s) {
  return is_s_comultiplication(inst.lattice(m), s).holds;
}

bool comult(const Instance& inst) { return comult(inst, inst.modules.at(0), inst.s()); }

std::string show(ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (Elem e : set) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string show(bool b) { return b ? "true" : "false"; }

std::vector<std::vector<ElementSet>> families(const std::vector<ElementSet>& pool, std::size_t max_size) {
  // Keeps the family count in the low thousands for the largest lattices.
  if (pool.size() > 24) max_size = std::min<std::size_t>(max_size, 2);
  std::vector<std::vector<ElementSet>> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      std::vector<ElementSet> fam;
      for (std::size_t i : idx) fam.push_back(pool[i]);
      out.push_back(std::move(fam));
    }
    if (idx.size() == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace scomult::detail
