#include "scomult/errors.hpp"
#include "scomult/localization.hpp"
#include "statements.hpp"

namespace scomult::detail {

namespace {

Outcome lemma_equivalence(const Instance& inst, Mutant mutant) {
  Outcome out;
  out.qualifies = true;
  const Triple t = lemma_equivalence_bundle(inst.lattice(inst.modules.at(0)), inst.s(), mutant);
  out.holds = t.agree();
  out.detail = "definition=" + show(t.first) + " form(ii)=" + show(t.second) + " form(iii)=" + show(t.third);
  out.tags.push_back(t.second ? "s-comultiplication" : "not s-comultiplication");
  return out;
}

void enumerate_nested_mcs(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    for (const auto& small : ring.mcs)
      for (const auto& big : ring.mcs) {
        if (small == big || !small.elements().subset_of(big.elements())) continue;
        Instance inst;
        inst.modules.push_back(cm.module);
        inst.remember(cm.lattice);
        inst.mcs.emplace_back(ring.ring, small);
        inst.mcs.emplace_back(ring.ring, big);
        visit(inst);
      }
  }
}

Outcome monotone(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  if (!comult(inst, m, inst.mcs.at(0).second)) return out;
  out.qualifies = true;
  out.holds = comult(inst, m, inst.mcs.at(1).second);
  if (!out.holds) out.detail = "S1-comultiplication but not S2-comultiplication";
  return out;
}

Outcome saturated(const Instance& inst, Mutant) {
  Outcome out;
  out.qualifies = true;
  const Ring& r = inst.module().ring();
  const Mcs star = saturation(r, inst.s());
  const bool plain = comult(inst);
  const bool sat = comult(inst, inst.modules.at(0), star);
  out.holds = plain == sat;
  out.detail = "S=" + show(inst.s().elements()) + " S*=" + show(star.elements()) + " S-comult=" + show(plain) +
               " S*-comult=" + show(sat);
  if (!(star == inst.s())) out.tags.push_back("S not saturated");
  return out;
}

PairRelation relation_for(Mutant mutant) {
  return mutant == Mutant::localization_no_u_factor ? PairRelation::without_u_factor : PairRelation::standard;
}

Outcome localization(const Instance& inst, Mutant mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  if (!is_s_noetherian(m->ring(), inst.s()).value || !comult(inst)) return out;
  out.qualifies = true;
  try {
    const LocalizedModule lm = localize_module(m, inst.s(), relation_for(mutant));
    const bool local_comult = is_comultiplication(SubmoduleLattice(lm.module));
    bool colon = true;
    for (const auto& ideal : inst.lattice(m).ideals())
      if (!localized_colon_identity_check(lm, ideal.elements)) {
        colon = false;
        out.detail = "colon identity fails for I=" + show(ideal.elements) + "; ";
        break;
      }
    out.holds = local_comult && colon;
    out.detail += "S^-1 M comultiplication=" + show(local_comult);
    out.tags.push_back("localized order " + std::to_string(lm.module->order()));
  } catch (const LocalizationError& e) {
    out.holds = false;
    out.detail = e.what();
  }
  return out;
}

Outcome localization_iff(const Instance& inst, Mutant mutant) {
  Outcome out;
  const auto& m = inst.modules.at(0);
  if (!has_maximal_multiple(m->ring(), inst.s())) {
    out.tags.push_back("no maximal multiple");
    return out;
  }
  out.qualifies = true;
  const bool s_comult = comult(inst);
  out.tags.push_back(s_comult ? "s-comultiplication" : "not s-comultiplication");
  try {
    const LocalizedModule lm = localize_module(m, inst.s(), relation_for(mutant));
    const bool local_comult = is_comultiplication(SubmoduleLattice(lm.module));
    out.holds = s_comult == local_comult;
    out.detail = "S-comult=" + show(s_comult) + " S^-1 M comultiplication=" + show(local_comult);
  } catch (const LocalizationError& e) {
    out.holds = false;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

void register_lemma(std::vector<Statement>& out) {
  out.push_back({"L-EQ", "definition, form (ii) and form (iii) agree", each_module_mcs, lemma_equivalence});
  out.push_back({"P-MONO", "S1 in S2 and S1-comultiplication gives S2-comultiplication", enumerate_nested_mcs, monotone});
  out.push_back({"P-SAT", "S-comultiplication iff S*-comultiplication", each_module_mcs, saturated});
  out.push_back({"P-LOC", "S-comultiplication over an S-Noetherian ring localizes to comultiplication",
                 each_module_mcs, localization});
  out.push_back({"T-LOC", "with a maximal multiple, S-comultiplication iff S^-1 M is comultiplication",
                 each_module_mcs, localization_iff});
}

}  // namespace scomult::detail
