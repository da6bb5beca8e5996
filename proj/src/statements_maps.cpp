#include "scomult/errors.hpp"
#include "statements.hpp"

namespace scomult::detail {

namespace {

Outcome transfer(const Instance& inst, Mutant) {
  Outcome out;
  const ModuleHom& f = *inst.hom;
  const auto& src = inst.lattice(f.source_ptr());
  const auto& dst = inst.lattice(f.target_ptr());
  TransferReport rep;
  try {
    rep = transfer_theorem_check(f, inst.s(), src, dst);
  } catch (const PreconditionUnmet&) {
    return out;
  }
  out.qualifies = true;
  out.holds = (!rep.part_i_applies || rep.part_i_holds) && (!rep.part_ii_applies || rep.part_ii_holds);
  if (rep.part_i_applies) out.tags.push_back("part (i) applies");
  if (rep.part_ii_applies) out.tags.push_back("part (ii) applies");
  if (!out.holds) {
    out.detail = "t=" + std::to_string(rep.t) + " part(i) " + show(rep.part_i_holds) + " part(ii) " +
                 show(rep.part_ii_holds);
    if (rep.counterexample) out.detail += " failing submodule " + show(*rep.counterexample);
  }
  // Probe only: does part (ii) survive with S-epic in place of onto?
  if (!f.surjective() && is_s_epic(f, inst.s()) && is_s_comultiplication(src, inst.s()).holds &&
      !is_s_comultiplication(dst, inst.s()).holds)
    out.tags.push_back("S-epic probe: target not S-comultiplication");
  return out;
}

Outcome submodules_and_quotients(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  const ElementSet n = inst.submodules.at(0);
  if (!comult(inst)) return out;
  out.qualifies = true;
  const bool sub_ok = comult(inst, submodule_as_module(*m, n), inst.s());
  bool quotient_ok = true;
  for (Elem t : inst.s().elements())
    if (m->scale(t, m->all()).subset_of(n)) {
      out.tags.push_back("quotient part applies");
      quotient_ok = comult(inst, quotient_module(*m, n), inst.s());
      break;
    }
  out.holds = sub_ok && quotient_ok;
  if (!out.holds)
    out.detail = "N=" + show(n) + " submodule " + show(sub_ok) + " quotient " + show(quotient_ok);
  return out;
}

struct Factor {
  ModulePtr module;
  RingPtr ring;
  Mcs s;
  LatticePtr lattice;
};

std::vector<Factor> small_factors(const Catalog& cat, unsigned max_ring, unsigned max_carrier) {
  std::vector<Factor> out;
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    if (ring.ring->order() > max_ring || cm.module->order() > max_carrier) continue;
    for (const auto& s : ring.mcs) out.push_back(Factor{cm.module, ring.ring, s, cm.lattice});
  }
  return out;
}

Instance factor_instance(std::initializer_list<const Factor*> parts) {
  Instance inst;
  for (const Factor* f : parts) {
    inst.modules.push_back(f->module);
    inst.mcs.emplace_back(f->ring, f->s);
    inst.remember(f->lattice);
  }
  return inst;
}

void enumerate_pairs(const Catalog& cat, const Visit& visit) {
  const auto pool = small_factors(cat, 4, 4);
  for (const auto& a : pool)
    for (const auto& b : pool) visit(factor_instance({&a, &b}));
}

void enumerate_triples(const Catalog& cat, const Visit& visit) {
  const auto pool = small_factors(cat, 4, 4);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (std::size_t k = j; k < pool.size(); ++k) {
        const std::size_t carrier = pool[i].module->order() * pool[j].module->order() * pool[k].module->order();
        if (carrier > 16) continue;
        visit(factor_instance({&pool[i], &pool[j], &pool[k]}));
      }
}

/// M1 x ... x Mn over R1 x ... x Rn with S1 x ... x Sn, nested from the left.
Outcome products(const Instance& inst, Mutant) {
  Outcome out;
  const std::size_t n = inst.modules.size();
  if (n < 2 || inst.mcs.size() != n) return out;
  out.qualifies = true;
  ModulePtr prod = inst.modules[0];
  RingPtr ring = inst.mcs[0].first;
  Mcs s = inst.mcs[0].second;
  bool factors_ok = comult(inst, inst.modules[0], inst.mcs[0].second);
  for (std::size_t i = 1; i < n; ++i) {
    s = product_mcs(*ring, s, *inst.mcs[i].first, inst.mcs[i].second);
    ring = product_ring(*ring, *inst.mcs[i].first);
    prod = product_module(*prod, *inst.modules[i]);
    factors_ok = comult(inst, inst.modules[i], inst.mcs[i].second) && factors_ok;
  }
  const bool product_ok = comult(inst, prod, s);
  out.holds = product_ok == factors_ok;
  out.tags.push_back(product_ok ? "product s-comultiplication" : "product not s-comultiplication");
  out.detail = "product " + show(product_ok) + " factors " + show(factors_ok);
  return out;
}

}  // namespace

void register_maps(std::vector<Statement>& out) {
  out.push_back({"T-HOM", "S-comultiplication transfers along f when t Ker f = 0", each_hom_mcs, transfer});
  out.push_back({"C-SUB", "submodules, and quotients with tM in N, inherit S-comultiplication",
                 each_module_mcs_submodule, submodules_and_quotients});
  out.push_back({"P-PROD", "M1 x M2 is S1 x S2-comultiplication iff both factors are", enumerate_pairs, products});
  out.push_back({"T-PRODN", "three-fold products, nested", enumerate_triples, products});
}

}  // namespace scomult::detail
