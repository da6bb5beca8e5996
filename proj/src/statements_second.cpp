#include "scomult/errors.hpp"
#include "scomult/submodules.hpp"
#include "statements.hpp"

namespace scomult::detail {

namespace {

Outcome bridge(const Instance& inst, Mutant) {
  Outcome out;
  out.qualifies = true;
  const BridgeReport rep = monic_epic_bridge(*inst.hom, inst.s());
  out.holds = rep.all_hold();
  if (rep.monic_converse_applies) out.tags.push_back("monic converse applies");
  if (rep.epic_converse_applies) out.tags.push_back("epic converse applies");
  if (!out.holds)
    out.detail = "monic->S-monic " + show(rep.monic_gives_s_monic) + " epic->S-epic " + show(rep.epic_gives_s_epic) +
                 " monic converse " + show(rep.monic_converse_holds) + " epic converse " +
                 show(rep.epic_converse_holds);
  return out;
}

void enumerate_proper_submodules(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    const auto& subs = cm.lattice->submodules();
    for (const auto& s : ring.mcs)
      for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
        Instance inst;
        inst.modules.push_back(cm.module);
        inst.remember(cm.lattice);
        inst.mcs.emplace_back(ring.ring, s);
        inst.submodules.push_back(subs[i]);
        visit(inst);
      }
  }
}

Outcome s_prime_forms(const Instance& inst, Mutant mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  const ElementSet p = inst.submodules.at(0);
  if (colon_into_ring(*m, p, m->all()).elements.intersects(inst.s().elements())) return out;
  out.qualifies = true;
  const Triple t = s_prime_characterizations(m, p, inst.s(), mutant);
  out.holds = t.agree();
  out.tags.push_back(t.first ? "S-prime" : "not S-prime");
  out.detail = "definition=" + show(t.first) + " residual=" + show(t.second) + " homothety=" + show(t.third);
  return out;
}

Outcome s_second_forms(const Instance& inst, Mutant mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  const ElementSet n = inst.submodules.at(0);
  if (annihilator(*m, n).elements.intersects(inst.s().elements())) return out;
  out.qualifies = true;
  const Triple t = s_second_characterizations(m, n, inst.s(), mutant);
  out.holds = t.agree();
  out.tags.push_back(t.first ? "S-second" : "not S-second");
  out.detail = "definition=" + show(t.first) + " homothety=" + show(t.second) + " (iii)=" + show(t.third);
  return out;
}

Outcome second_vs_prime_annihilator(const Instance& inst, Mutant mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  const ElementSet n = inst.submodules.at(0);
  if (!comult(inst)) return out;
  out.qualifies = true;
  const bool second = is_s_second(*m, n, inst.s(), mutant).holds();
  const ElementSet ann = annihilator(*m, n).elements;
  const bool prime = s_prime_by_residuals(*self_module(m->ring_ptr()), ann, inst.s(), mutant).has_value();
  const bool multiple = common_multiple_witness(*m, n, inst.s()).has_value();
  out.holds = second == (prime && multiple);
  out.tags.push_back(second ? "S-second" : "not S-second");
  out.detail = "S-second=" + show(second) + " ann(N) S-prime=" + show(prime) + " common multiple=" + show(multiple);
  return out;
}

void enumerate_nonzero_trivial(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    const auto& subs = cm.lattice->submodules();
    for (std::size_t i = 1; i < subs.size(); ++i) {
      Instance inst;
      inst.modules.push_back(cm.module);
      inst.remember(cm.lattice);
      inst.mcs.emplace_back(ring.ring, trivial_mcs(*ring.ring));
      inst.submodules.push_back(subs[i]);
      visit(inst);
    }
  }
}

Outcome second_vs_prime(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  const ElementSet n = inst.submodules.at(0);
  if (!is_comultiplication(inst.lattice(m))) return out;
  out.qualifies = true;
  const bool second = is_second(*m, n);
  const bool prime = is_prime_ideal(m->ring(), annihilator(*m, n).elements);
  out.holds = second == prime;
  out.tags.push_back(second ? "second" : "not second");
  out.detail = "second=" + show(second) + " ann(N) prime=" + show(prime);
  return out;
}

Outcome sum_cover(const Instance& inst, Mutant) {
  Outcome out;
  const auto& mp = inst.modules.at(0);
  const Module& m = *mp;
  const ElementSet n = inst.submodules.at(0);
  if (!comult(inst) || !is_s_second(m, n, inst.s()).holds()) return out;
  out.qualifies = true;
  const auto& subs = inst.lattice(mp).submodules();
  const std::vector<ElementSet> pool(subs.begin() + 1, subs.end() - 1);
  std::size_t covering = 0;
  for (const auto& fam : families(pool, 3)) {
    ElementSet sum = m.zero_set();
    for (ElementSet x : fam) sum = submodule_sum(m, sum, x);
    if (!n.subset_of(sum)) continue;
    ++covering;
    bool found = false;
    for (Elem s : inst.s().elements())
      for (ElementSet x : fam) found = found || m.scale(s, n).subset_of(x);
    if (!found) {
      out.holds = false;
      out.detail = "N=" + show(n) + " covered by a family with no sN inside one member";
      return out;
    }
  }
  if (covering) out.tags.push_back("covered by proper families");
  return out;
}

}  // namespace

void register_second(std::vector<Statement>& out) {
  out.push_back({"P-HOMS", "monic/epic give S-monic/S-epic, converses under side conditions", each_hom_mcs, bridge});
  out.push_back({"P-SPR", "S-prime iff every homothety on M/P is S-zero or S-injective", enumerate_proper_submodules,
                 s_prime_forms});
  out.push_back({"T-SEC", "three forms of S-second agree", each_module_mcs_submodule, s_second_forms});
  out.push_back({"T-M3", "in an S-comultiplication module, S-second iff ann(N) S-prime plus common multiple",
                 each_module_mcs_submodule, second_vs_prime_annihilator});
  out.push_back({"C-M3", "in a comultiplication module, second iff ann(N) prime", enumerate_nonzero_trivial,
                 second_vs_prime});
  out.push_back({"T-SSUM", "S-second N inside a finite sum sits, up to s, inside one summand",
                 each_module_mcs_submodule, sum_cover});
}

}  // namespace scomult::detail
