#include "scomult/witness_check.hpp"

#include <set>

#include "scomult/s_theory.hpp"

namespace scomult {

namespace naive {

namespace {

using Set = std::set<Elem>;

Set to_set(ElementSet s) { return Set(s.begin(), s.end()); }

Set everything(std::size_t n) {
  Set out;
  for (Elem x = 0; x < n; ++x) out.insert(x);
  return out;
}

Set times(const Module& m, Elem r, const Set& xs) {
  Set out;
  for (Elem x : xs) out.insert(m.act(r, x));
  return out;
}

bool inside(const Set& a, const Set& b) {
  for (Elem x : a)
    if (!b.count(x)) return false;
  return true;
}

/// {m : am = 0 for every a in I}
Set killed_by(const Module& m, const Set& ideal) {
  Set out;
  for (Elem x = 0; x < m.order(); ++x) {
    bool all = true;
    for (Elem a : ideal) all = all && m.act(a, x) == m.zero();
    if (all) out.insert(x);
  }
  return out;
}

/// {r : rn = 0 for every n in N}
Set ann(const Module& m, const Set& n) {
  Set out;
  for (Elem r = 0; r < m.ring().order(); ++r) {
    bool all = true;
    for (Elem x : n) all = all && m.act(r, x) == m.zero();
    if (all) out.insert(r);
  }
  return out;
}

/// {r : rM in P}
Set colon(const Module& m, const Set& p) {
  Set out;
  for (Elem r = 0; r < m.ring().order(); ++r)
    if (inside(times(m, r, everything(m.order())), p)) out.insert(r);
  return out;
}

bool meets(const Set& a, const Set& b) {
  for (Elem x : a)
    if (b.count(x)) return true;
  return false;
}

}  // namespace

bool comultiplication_witness(const Module& m, ElementSet n, Elem s, ElementSet ideal) {
  const Set nn = to_set(n);
  const Set c = killed_by(m, to_set(ideal));
  return inside(times(m, s, c), nn) && inside(nn, c);
}

bool dual_witness(const Module& m, ElementSet n, Elem s) {
  const Set nn = to_set(n);
  const Set c = killed_by(m, ann(m, nn));
  return inside(times(m, s, c), nn) && inside(nn, c);
}

bool cyclic_witness(const Module& m, Elem s, Elem x) {
  Set rx;
  for (Elem r = 0; r < m.ring().order(); ++r) rx.insert(m.act(r, x));
  return inside(times(m, s, everything(m.order())), rx);
}

bool s_prime_witness(const Module& m, ElementSet p, ElementSet s_set, Elem s) {
  const Set pp = to_set(p);
  const Set all = everything(m.order());
  if (meets(colon(m, pp), to_set(s_set)) || !s_set.contains(s)) return false;
  for (Elem a = 0; a < m.ring().order(); ++a)
    for (Elem x = 0; x < m.order(); ++x) {
      if (!pp.count(m.act(a, x))) continue;
      const Elem sa = m.ring().mul(s, a);
      if (!inside(times(m, sa, all), pp) && !pp.count(m.act(s, x))) return false;
    }
  return true;
}

bool s_second_witness(const Module& m, ElementSet n, ElementSet s_set, Elem s) {
  const Set nn = to_set(n);
  if (nn.size() <= 1 || meets(ann(m, nn), to_set(s_set)) || !s_set.contains(s)) return false;
  const Set sn = times(m, s, nn);
  for (Elem a = 0; a < m.ring().order(); ++a) {
    const Set san = times(m, m.ring().mul(s, a), nn);
    if (san != Set{m.zero()} && san != sn) return false;
  }
  return true;
}

bool torsion_free_witness(const Module& m, Elem s) {
  for (Elem a = 0; a < m.ring().order(); ++a)
    for (Elem x = 0; x < m.order(); ++x)
      if (m.act(a, x) == m.zero() && m.ring().mul(s, a) != m.ring().zero() && m.act(s, x) != m.zero())
        return false;
  return true;
}

bool s_zero_witness(const ModuleHom& f, Elem s) {
  for (Elem x = 0; x < f.source().order(); ++x)
    if (f.target().act(s, f.table()[x]) != f.target().zero()) return false;
  return true;
}

bool s_monic_witness(const ModuleHom& f, Elem s) {
  for (Elem x = 0; x < f.source().order(); ++x)
    if (f.table()[x] == f.target().zero() && f.source().act(s, x) != f.source().zero()) return false;
  return true;
}

bool s_epic_witness(const ModuleHom& f, Elem s) {
  const Set image(f.table().begin(), f.table().end());
  return inside(times(f.target(), s, everything(f.target().order())), image);
}

}  // namespace naive

namespace {

void record(WitnessAudit& audit, bool ok, const std::string& what) {
  ++audit.checked;
  if (ok) return;
  ++audit.failed;
  if (audit.failures.size() < 10) audit.failures.push_back(what);
}

}  // namespace

WitnessAudit audit_witnesses(const Catalog& catalog) {
  WitnessAudit audit;
  for (const auto& cm : catalog.modules) {
    const Module& m = *cm.module;
    const auto& lattice = *cm.lattice;
    const auto& subs = lattice.submodules();
    for (const auto& s : catalog.rings[cm.ring].mcs) {
      const std::string where = m.name() + " S=" + std::to_string(s.elements().bits());
      const auto dual = is_s_comultiplication(lattice, s);
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (dual.witnesses[i]) record(audit, naive::dual_witness(m, subs[i], *dual.witnesses[i]), where + " dual");
      const auto def = s_comultiplication_by_definition(lattice, s);
      for (std::size_t i = 0; i < def.witnesses.size() && i < subs.size(); ++i)
        record(audit, naive::comultiplication_witness(m, subs[i], def.witnesses[i].s, def.witnesses[i].ideal),
               where + " definition");
      if (auto w = is_s_cyclic(m, s)) record(audit, naive::cyclic_witness(m, w->s, w->element), where + " cyclic");
      if (auto t = is_s_torsion_free(m, s)) record(audit, naive::torsion_free_witness(m, *t), where + " torsion free");
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const auto prime = is_s_prime_submodule(m, subs[i], s);
        if (prime.holds() && prime.witness)
          record(audit, naive::s_prime_witness(m, subs[i], s.elements(), prime.witness->s), where + " S-prime");
        const auto second = is_s_second(m, subs[i], s);
        if (second.holds() && second.witness)
          record(audit, naive::s_second_witness(m, subs[i], s.elements(), second.witness->s), where + " S-second");
      }
    }
  }
  for (const auto& h : catalog.homs)
    for (const auto& s : catalog.rings[h.ring].mcs) {
      if (auto t = is_s_zero(h.hom, s)) record(audit, naive::s_zero_witness(h.hom, *t), "hom S-zero");
      if (auto t = is_s_monic(h.hom, s)) record(audit, naive::s_monic_witness(h.hom, *t), "hom S-monic");
      if (auto t = is_s_epic(h.hom, s)) record(audit, naive::s_epic_witness(h.hom, *t), "hom S-epic");
    }
  return audit;
}

}  // namespace scomult
