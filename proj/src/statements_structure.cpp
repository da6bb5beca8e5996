#include <algorithm>

#include "scomult/localization.hpp"
#include "scomult/submodules.hpp"
#include "statements.hpp"

namespace scomult::detail {

namespace {

bool same_ideals(std::vector<Ideal> a, std::vector<Ideal> b) {
  auto key = [](const Ideal& i) { return i.elements.bits(); };
  auto by_key = [&](const Ideal& x, const Ideal& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Ideal& x, const Ideal& y) { return x.elements == y.elements; });
}

Outcome local_characterization(const Instance& inst, Mutant) {
  Outcome out;
  out.qualifies = true;
  const auto& m = inst.modules.at(0);
  const Ring& r = m->ring();
  const auto& lattice = inst.lattice(m);
  const auto primes = prime_ideals(r);
  const auto maximals = maximal_ideals(r);
  const bool coincide = same_ideals(primes, maximals);

  const bool i = is_comultiplication(lattice);
  bool ii = true, iii = true, iv = true;
  for (const auto& p : primes) ii = ii && is_s_comultiplication(lattice, complement_mcs(r, p)).holds;
  for (const auto& mx : maximals) {
    const bool here = is_s_comultiplication(lattice, complement_mcs(r, mx)).holds;
    iii = iii && here;
    if (mm_locally_nonzero(m, mx)) iv = iv && here;
  }
  out.holds = coincide && i == ii && ii == iii && iii == iv;
  out.detail = "prime=maximal " + show(coincide) + " (i)=" + show(i) + " (ii)=" + show(ii) + " (iii)=" + show(iii) +
               " (iv)=" + show(iv);
  out.tags.push_back(i ? "comultiplication" : "not comultiplication");
  return out;
}

ElementSet scaled(const Ring& r, Elem t, ElementSet ideal) {
  ElementSet out;
  for (Elem a : ideal) out.insert(r.mul(t, a));
  return out;
}

bool faithful_colon(const Module& m, ElementSet ideal) {
  return colon_into_module(m, m.zero_set(), ideal) == m.zero_set();
}

Outcome pf(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  const ElementSet ideal = inst.ideals.at(0);
  if (!faithful_colon(m, ideal) || !comult(inst)) return out;
  out.qualifies = true;
  const Ring& r = m.ring();
  const auto& s = inst.s().elements();
  if (ideal.size() < r.order()) out.tags.push_back("proper ideal");

  const ElementSet im = ideal_times(m, ideal, m.all());
  bool part_i = false;
  for (Elem t : s) part_i = part_i || m.scale(t, m.all()).subset_of(im);

  bool part_ii = true;
  for (Elem x = 0; x < m.order() && part_ii; ++x) {
    bool found = false;
    for (Elem t : s)
      for (Elem a : ideal) found = found || m.act(t, x) == m.act(a, x);
    part_ii = found;
  }

  // (iii) also asks for M S-finite, which every finite module is.
  bool part_iii = false;
  for (Elem t : s)
    for (Elem a : ideal) part_iii = part_iii || m.scale(r.add(t, a), m.all()) == m.zero_set();

  out.holds = part_i && part_ii && part_iii;
  out.detail = "(i)=" + show(part_i) + " (ii)=" + show(part_ii) + " (iii)=" + show(part_iii);
  return out;
}

Outcome dual_nakayama_s(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  const Ring& r = m.ring();
  const ElementSet ideal = inst.ideals.at(0);
  const ElementSet jac = jacobson_radical(r).elements;
  std::optional<Elem> t;
  bool in_jac = false;
  for (Elem u : inst.s().elements()) {
    const ElementSet ti = scaled(r, u, ideal);
    if (!ti.subset_of(jac)) continue;
    in_jac = true;
    if (faithful_colon(m, ti)) {
      t = u;
      break;
    }
  }
  if (in_jac && !t) out.tags.push_back("tI in Jac(R) but (0:_M tI) nonzero");
  if (!t || !has_maximal_multiple(r, inst.s()) || !comult(inst)) return out;
  out.qualifies = true;
  out.holds = annihilated_by_s(m, inst.s());
  if (!out.holds) out.detail = "t=" + std::to_string(*t) + " yet no s in S kills M";
  return out;
}

void enumerate_modules_ideals(const Catalog& cat, const Visit& visit) {
  for (const auto& cm : cat.modules) {
    const auto& ring = cat.rings[cm.ring];
    for (const auto& ideal : ring.ideals) {
      Instance inst;
      inst.modules.push_back(cm.module);
      inst.remember(cm.lattice);
      inst.mcs.emplace_back(ring.ring, trivial_mcs(*ring.ring));
      inst.ideals.push_back(ideal.elements);
      visit(inst);
    }
  }
}

Outcome dual_nakayama(const Instance& inst, Mutant) {
  Outcome out;
  const auto& m = *inst.modules.at(0);
  const ElementSet ideal = inst.ideals.at(0);
  if (!ideal.subset_of(jacobson_radical(m.ring()).elements)) return out;
  if (!faithful_colon(m, ideal)) {
    out.tags.push_back("I in Jac(R) but (0:_M I) nonzero");
    return out;
  }
  if (!is_comultiplication(inst.lattice(inst.modules[0]))) return out;
  out.qualifies = true;
  out.holds = m.is_zero();
  if (!out.holds) out.detail = "M nonzero";
  return out;
}

}  // namespace

void register_structure(std::vector<Statement>& out) {
  out.push_back({"T-COM", "comultiplication iff P-comultiplication for all primes / maximals", each_module,
                 local_characterization});
  out.push_back({"P-PF", "(0:_M I) = 0 gives sM in IM, sm = am, (s+a)M = 0", each_module_mcs_ideal, pf});
  out.push_back({"T-DU", "S-dual Nakayama", each_module_mcs_ideal, dual_nakayama_s});
  out.push_back({"C-DU", "dual Nakayama", enumerate_modules_ideals, dual_nakayama});
}

}  // namespace scomult::detail
