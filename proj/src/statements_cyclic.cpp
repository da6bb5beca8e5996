#include "scomult/submodules.hpp"
#include "statements.hpp"

namespace scomult::detail {

namespace {

Outcome minimal_ideal_cyclic(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  const ElementSet n = inst.ideals.at(0);
  bool minimal = false;
  for (const auto& ideal : minimal_nonzero_ideals(m.ring())) minimal = minimal || ideal.elements == n;
  if (!minimal || colon_into_module(m, m.zero_set(), n) != m.zero_set() || !comult(inst)) return out;
  out.qualifies = true;
  out.holds = is_s_cyclic(m, inst.s()).has_value();
  if (!out.holds) out.detail = "minimal ideal " + show(n) + " but M is not S-cyclic";
  return out;
}

ElementSet intersection(const std::vector<ElementSet>& family) {
  ElementSet out = family.front();
  for (ElementSet x : family) out &= x;
  return out;
}

void enumerate_zero_families(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    const auto& subs = cm.lattice->submodules();
    if (subs.size() < 3) continue;
    const std::vector<ElementSet> pool(subs.begin() + 1, subs.end() - 1);
    std::vector<std::vector<ElementSet>> zero;
    for (auto& fam : families(pool, 3))
      if (fam.size() > 1 && intersection(fam) == cm.module->zero_set()) zero.push_back(std::move(fam));
    for (const auto& s : ring.mcs)
      for (const auto& fam : zero) {
        Instance inst;
        inst.modules.push_back(cm.module);
        inst.remember(cm.lattice);
        inst.mcs.emplace_back(ring.ring, s);
        inst.submodules = fam;
        visit(inst);
      }
  }
}

Outcome family_sandwich(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  if (inst.submodules.empty() || intersection(inst.submodules) != m.zero_set() || !comult(inst)) return out;
  out.qualifies = true;
  for (ElementSet n : inst.lattice(inst.modules[0]).submodules()) {
    ElementSet x = m.all();
    for (ElementSet mi : inst.submodules) x &= submodule_sum(m, n, mi);
    bool found = false;
    for (Elem s : inst.s().elements()) found = found || m.scale(s, x).subset_of(n);
    if (!found || !n.subset_of(x)) {
      out.holds = false;
      out.detail = "N=" + show(n) + " intersection " + show(x);
      return out;
    }
  }
  return out;
}

void enumerate_submodule_ideal(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    const auto& subs = cm.lattice->submodules();
    for (const auto& s : ring.mcs)
      for (std::size_t i = 1; i < subs.size(); ++i)
        for (const auto& ideal : ring.ideals) {
          Instance inst;
          inst.modules.push_back(cm.module);
          inst.remember(cm.lattice);
          inst.mcs.emplace_back(ring.ring, s);
          inst.submodules.push_back(subs[i]);
          inst.ideals.push_back(ideal.elements);
          visit(inst);
        }
  }
}

ElementSet ideal_plus(const Ring& r, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Elem x : a)
    for (Elem y : b) out.insert(r.add(x, y));
  return out;
}

Outcome extension(const Instance& inst, Mutant) {
  Outcome out;
  const auto& mp = inst.modules.at(0);
  const Module& m = *mp;
  const Ring& r = m.ring();
  const ElementSet n = inst.submodules.at(0);
  const ElementSet i = inst.ideals.at(0);
  if (!comult(inst)) return out;
  const auto& lattice = inst.lattice(mp);
  const ElementSet colon_i = colon_into_module(m, m.zero_set(), i);
  const ElementSet ann_n = lattice.ann_of(n);
  for (Elem s : inst.s().elements()) {
    if (!n.subset_of(m.scale(s, colon_i))) continue;
    out.qualifies = true;
    bool found = false;
    for (const auto& j : lattice.ideals())
      if (i.subset_of(j.elements) && m.scale(s, colon_into_module(m, m.zero_set(), j.elements)).subset_of(n)) {
        found = true;
        if (j.elements.size() < r.order()) out.tags.push_back("proper J found");
        break;
      }
    const ElementSet sum = ideal_plus(r, i, ann_n);
    out.tags.push_back(m.scale(s, colon_into_module(m, m.zero_set(), sum)).subset_of(n) ? "J = I + ann(N) works"
                                                                                      : "J = I + ann(N) misses");
    if (!found) {
      out.holds = false;
      out.detail = "s=" + std::to_string(s) + " N=" + show(n) + " I=" + show(i) + ": no J";
      return out;
    }
  }
  return out;
}

Outcome cyclic_or_torsion(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  if (!comult(inst)) return out;
  out.qualifies = true;
  const bool cyclic = is_s_cyclic(m, inst.s()).has_value();
  const bool torsion = is_torsion(m);
  out.holds = cyclic || torsion;
  out.tags.push_back(cyclic ? "S-cyclic" : "torsion, not S-cyclic");
  if (!out.holds) out.detail = "neither S-cyclic nor torsion";
  return out;
}

Outcome domain_cyclic(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  if (!is_integral_domain(m.ring()) || !comult(inst)) return out;
  for (Elem s : inst.s().elements())
    if (annihilator(m, m.scale(s, m.all())).elements != ElementSet{m.ring().zero()}) return out;
  out.qualifies = true;
  out.holds = is_s_cyclic(m, inst.s()).has_value();
  if (!is_cyclic(m)) out.tags.push_back("module not cyclic");
  if (!out.holds) out.detail = "hypotheses hold but M is not S-cyclic";
  return out;
}

Outcome torsion_free_cyclic(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  if (!comult(inst) || !is_s_torsion_free(m, inst.s())) return out;
  out.qualifies = true;
  out.holds = is_s_cyclic(m, inst.s()).has_value();
  if (!is_cyclic(m)) out.tags.push_back("module not cyclic");
  if (!out.holds) out.detail = "S-torsion free but not S-cyclic";
  return out;
}

Outcome prime_minimal(const Instance& inst, Mutant) {
  Outcome out;
  const auto& mp = inst.modules.at(0);
  const auto& lattice = inst.lattice(mp);
  if (!comult(inst) || !is_prime_module(lattice)) return out;
  out.qualifies = true;
  const auto nonzero = is_s_minimal(lattice, mp->all(), inst.s(), MinimalReading::nonzero_submodules);
  const auto literal = is_s_minimal(lattice, mp->all(), inst.s(), MinimalReading::all_submodules);
  out.holds = nonzero.has_value();
  out.tags.push_back(literal ? "literal reading holds" : "literal reading (L = 0 allowed) fails");
  if (!out.holds) out.detail = "prime S-comultiplication module that is not S-minimal over nonzero L";
  return out;
}

}  // namespace

void register_cyclic(std::vector<Statement>& out) {
  out.push_back({"P-CY1", "minimal ideal N with (0:_M N) = 0 gives S-cyclic", each_module_mcs_ideal,
                 minimal_ideal_cyclic});
  out.push_back({"P-FAM", "s (N + M_i) intersection lies in N", enumerate_zero_families, family_sandwich});
  out.push_back({"P-EXT", "N in s(0:_M I) extends to J containing I", enumerate_submodule_ideal, extension});
  out.push_back({"T-TOR", "S-comultiplication gives S-cyclic or torsion", each_module_mcs, cyclic_or_torsion});
  out.push_back({"T-CY2", "over a domain with every sM faithful, S-cyclic", each_module_mcs, domain_cyclic});
  out.push_back({"T-CY3", "S-torsion free S-comultiplication is S-cyclic", each_module_mcs, torsion_free_cyclic});
  out.push_back({"T-MIN", "prime S-comultiplication modules are S-minimal", each_module_mcs, prime_minimal});
}

}  // namespace scomult::detail
