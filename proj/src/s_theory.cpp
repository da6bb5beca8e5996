#include "scomult/s_theory.hpp"

#include <stdexcept>

#include "scomult/errors.hpp"
#include "scomult/morphisms.hpp"
#include "scomult/submodules.hpp"

namespace scomult {

namespace {

ElementSet colon_into_m(const Module& m, ElementSet p) { return colon_into_ring(m, p, m.all()).elements; }

Witness single(Elem s) { return Witness{WitnessKind::single_s, s, {}, 0}; }

bool s_prime_condition(const Module& m, ElementSet p, ElementSet colon, Elem s) {
  const Ring& r = m.ring();
  for (Elem a = 0; a < r.order(); ++a) {
    const bool sa_in = colon.contains(r.mul(s, a));
    for (Elem x = 0; x < m.order(); ++x)
      if (p.contains(m.act(a, x)) && !sa_in && !p.contains(m.act(s, x))) return false;
  }
  return true;
}

bool s_second_condition(const Module& m, ElementSet n, Elem s) {
  const ElementSet sn = m.scale(s, n);
  for (Elem a = 0; a < m.ring().order(); ++a) {
    const ElementSet san = m.scale(s, m.scale(a, n));
    if (san != m.zero_set() && san != sn) return false;
  }
  return true;
}

}  // namespace

ElementSet residual(const Module& m, ElementSet p, Elem s) {
  ElementSet out;
  for (Elem x = 0; x < m.order(); ++x)
    if (p.contains(m.act(s, x))) out.insert(x);
  return out;
}

PredicateResult is_s_prime_submodule(const Module& m, ElementSet p, const Mcs& s, Mutant mutant) {
  const ElementSet colon = colon_into_m(m, p);
  if (colon.intersects(s.elements())) return {Status::disjointness_failure, std::nullopt};
  if (mutant == Mutant::s_prime_universal_s) {
    for (Elem t : s.elements())
      if (!s_prime_condition(m, p, colon, t)) return {Status::fails, std::nullopt};
    return {Status::holds, single(s.elements().front())};
  }
  for (Elem t : s.elements())
    if (s_prime_condition(m, p, colon, t)) return {Status::holds, single(t)};
  return {Status::fails, std::nullopt};
}

PredicateResult is_s_prime_ideal(const RingPtr& ring, ElementSet ideal, const Mcs& s, Mutant mutant) {
  return is_s_prime_submodule(*self_module(ring), ideal, s, mutant);
}

bool is_prime_submodule(const Module& m, ElementSet p) {
  if (p == m.all()) return false;
  const ElementSet colon = colon_into_m(m, p);
  for (Elem a = 0; a < m.ring().order(); ++a) {
    if (colon.contains(a)) continue;
    for (Elem x = 0; x < m.order(); ++x)
      if (!p.contains(x) && p.contains(m.act(a, x))) return false;
  }
  return true;
}

std::optional<Elem> s_prime_by_residuals(const Module& m, ElementSet p, const Mcs& s, Mutant mutant) {
  std::vector<ElementSet> residuals;
  for (Elem t : s.elements()) residuals.push_back(residual(m, p, t));
  const auto elems = s.sorted();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!is_prime_submodule(m, residuals[i])) continue;
    if (mutant == Mutant::tm3_no_s_prime_clause) return elems[i];
    bool dominates = true;
    for (ElementSet other : residuals)
      if (!other.subset_of(residuals[i])) {
        dominates = false;
        break;
      }
    if (dominates) return elems[i];
  }
  return std::nullopt;
}

Triple s_prime_characterizations(const ModulePtr& m, ElementSet p, const Mcs& s, Mutant mutant) {
  if (colon_into_m(*m, p).intersects(s.elements())) throw DisjointnessFailure("(P:M) meets S");
  Triple out;
  out.first = is_s_prime_submodule(*m, p, s, mutant).holds();
  out.second = s_prime_by_residuals(*m, p, s, mutant).has_value();

  auto quotient = quotient_module(*m, p);
  std::vector<ModuleHom> homotheties;
  for (Elem a = 0; a < m->ring().order(); ++a) homotheties.push_back(multiplication_map(quotient, a));
  for (Elem t : s.elements()) {
    bool ok = true;
    for (const auto& h : homotheties)
      if (!is_s_zero_with(h, t) && !is_s_monic_with(h, t)) {
        ok = false;
        break;
      }
    if (ok) {
      out.third = true;
      break;
    }
  }
  return out;
}

PredicateResult is_s_second(const Module& m, ElementSet n, const Mcs& s, Mutant mutant) {
  if (n == m.zero_set()) return {Status::fails, std::nullopt};
  if (mutant != Mutant::s_second_no_disjointness && annihilator(m, n).elements.intersects(s.elements()))
    return {Status::disjointness_failure, std::nullopt};
  for (Elem t : s.elements())
    if (s_second_condition(m, n, t)) return {Status::holds, single(t)};
  return {Status::fails, std::nullopt};
}

bool is_second(const Module& m, ElementSet n) {
  if (n == m.zero_set()) return false;
  for (Elem a = 0; a < m.ring().order(); ++a) {
    const ElementSet an = m.scale(a, n);
    if (an != m.zero_set() && an != n) return false;
  }
  return true;
}

Triple s_second_characterizations(const ModulePtr& m, ElementSet n, const Mcs& s, Mutant mutant) {
  if (annihilator(*m, n).elements.intersects(s.elements())) throw DisjointnessFailure("ann(N) meets S");
  Triple out;
  out.first = is_s_second(*m, n, s, mutant).holds();

  auto sub = submodule_as_module(*m, n);
  std::vector<ModuleHom> homotheties;
  for (Elem a = 0; a < m->ring().order(); ++a) homotheties.push_back(multiplication_map(sub, a));
  for (Elem t : s.elements()) {
    bool ok = true;
    for (const auto& h : homotheties)
      if (!is_s_zero_with(h, t) && !is_s_epic_with(h, t)) {
        ok = false;
        break;
      }
    if (ok) {
      out.second = true;
      break;
    }
  }

  for (Elem t : s.elements()) {
    bool ok = true;
    for (Elem a = 0; a < m->ring().order() && ok; ++a) {
      const ElementSet an = m->scale(a, n);
      ok = m->scale(t, an) == m->zero_set() || m->scale(t, n).subset_of(an);
    }
    if (ok) {
      out.third = true;
      break;
    }
  }
  return out;
}

std::optional<Elem> common_multiple_witness(const Module& m, ElementSet n, const Mcs& s) {
  for (Elem t : s.elements()) {
    const ElementSet tn = m.scale(t, n);
    bool ok = true;
    for (Elem u : s.elements())
      if (!tn.subset_of(m.scale(u, n))) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

ComultiplicationResult is_s_comultiplication(const SubmoduleLattice& lattice, const Mcs& s) {
  const Module& m = lattice.module();
  ComultiplicationResult out;
  out.holds = true;
  const auto& subs = lattice.submodules();
  out.witnesses.resize(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const ElementSet dual = lattice.dual(i);
    if (!subs[i].subset_of(dual)) throw std::logic_error("N not contained in (0 :_M ann N)");
    for (Elem t : s.elements())
      if (m.scale(t, dual).subset_of(subs[i])) {
        out.witnesses[i] = t;
        break;
      }
    if (!out.witnesses[i] && out.holds) {
      out.holds = false;
      out.failing = subs[i];
    }
  }
  return out;
}

DefinitionResult s_comultiplication_by_definition(const SubmoduleLattice& lattice, const Mcs& s) {
  const Module& m = lattice.module();
  const auto& ideals = lattice.ideals();
  DefinitionResult out;
  out.holds = true;
  for (ElementSet n : lattice.submodules()) {
    std::optional<Witness> found;
    for (Elem t : s.elements()) {
      for (std::size_t j = 0; j < ideals.size() && !found; ++j) {
        const ElementSet c = lattice.colon_of_ideal(j);
        if (n.subset_of(c) && m.scale(t, c).subset_of(n))
          found = Witness{WitnessKind::s_and_ideal, t, ideals[j].elements, 0};
      }
      if (found) break;
    }
    if (!found) {
      out.holds = false;
      out.failing = n;
      return out;
    }
    out.witnesses.push_back(*found);
  }
  return out;
}

bool s_comultiplication_by_pairs(const SubmoduleLattice& lattice, const Mcs& s, Mutant mutant) {
  const Module& m = lattice.module();
  const auto& subs = lattice.submodules();
  const bool flipped = mutant == Mutant::lemma_iii_flipped;
  for (std::size_t k = 0; k < subs.size(); ++k)
    for (std::size_t n = 0; n < subs.size(); ++n) {
      if (!lattice.ann(k).subset_of(lattice.ann(n))) continue;
      bool found = false;
      for (Elem t : s.elements()) {
        const bool ok = flipped ? m.scale(t, subs[k]).subset_of(subs[n]) : m.scale(t, subs[n]).subset_of(subs[k]);
        if (ok) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

Triple lemma_equivalence_bundle(const SubmoduleLattice& lattice, const Mcs& s, Mutant mutant) {
  return Triple{s_comultiplication_by_definition(lattice, s).holds, is_s_comultiplication(lattice, s).holds,
                s_comultiplication_by_pairs(lattice, s, mutant)};
}

bool is_comultiplication(const SubmoduleLattice& lattice) {
  const auto& subs = lattice.submodules();
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i] != lattice.dual(i)) return false;
  return true;
}

bool is_multiplication(const SubmoduleLattice& lattice) {
  const Module& m = lattice.module();
  for (ElementSet n : lattice.submodules())
    if (ideal_times(m, colon_into_m(m, n), m.all()) != n) return false;
  return true;
}

SMultiplicationResult is_s_multiplication(const SubmoduleLattice& lattice, const Mcs& s) {
  const Module& m = lattice.module();
  std::vector<ElementSet> im;
  for (const auto& i : lattice.ideals()) im.push_back(ideal_times(m, i.elements, m.all()));
  SMultiplicationResult out{true, true};
  for (ElementSet n : lattice.submodules()) {
    const ElementSet nm = ideal_times(m, colon_into_m(m, n), m.all());
    bool reduced = false, general = false;
    for (Elem t : s.elements()) {
      const ElementSet tn = m.scale(t, n);
      if (tn.subset_of(nm)) reduced = true;
      for (ElementSet x : im)
        if (tn.subset_of(x) && x.subset_of(n)) general = true;
      if (reduced && general) break;
    }
    out.holds = out.holds && reduced;
    out.general_holds = out.general_holds && general;
  }
  return out;
}

std::optional<Witness> is_s_cyclic(const Module& m, const Mcs& s) {
  std::vector<ElementSet> cyclic(m.order());
  for (Elem x = 0; x < m.order(); ++x) cyclic[x] = cyclic_submodule(m, x);
  for (Elem t : s.elements()) {
    const ElementSet tm = m.scale(t, m.all());
    for (Elem x = 0; x < m.order(); ++x)
      if (tm.subset_of(cyclic[x])) return Witness{WitnessKind::s_and_element, t, {}, x};
  }
  return std::nullopt;
}

bool is_cyclic(const Module& m) {
  for (Elem x = 0; x < m.order(); ++x)
    if (cyclic_submodule(m, x) == m.all()) return true;
  return false;
}

FiniteWitness is_s_finite(const Module& m, ElementSet n, const Mcs& s) {
  const Elem one = m.ring().one();
  if (!s.contains(one)) throw std::logic_error("m.c.s. without 1");
  return FiniteWitness{one, greedy_generators(m, n)};
}

std::optional<Elem> is_s_torsion_free(const Module& m, const Mcs& s) {
  const Ring& r = m.ring();
  for (Elem t : s.elements()) {
    bool ok = true;
    for (Elem a = 0; a < r.order() && ok; ++a) {
      if (r.mul(t, a) == r.zero()) continue;
      for (Elem x = 0; x < m.order(); ++x)
        if (m.act(a, x) == m.zero() && m.act(t, x) != m.zero()) {
          ok = false;
          break;
        }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> is_s_minimal(const SubmoduleLattice& lattice, ElementSet k, const Mcs& s,
                                              MinimalReading reading) {
  const Module& m = lattice.module();
  if (k == m.zero_set()) throw std::invalid_argument("S-minimal needs a nonzero K");
  std::vector<Elem> witnesses;
  for (ElementSet l : lattice.submodules()) {
    if (!l.subset_of(k)) continue;
    if (reading == MinimalReading::nonzero_submodules && l == m.zero_set()) continue;
    std::optional<Elem> found;
    for (Elem t : s.elements())
      if (m.scale(t, k).subset_of(l)) {
        found = t;
        break;
      }
    if (!found) return std::nullopt;
    witnesses.push_back(*found);
  }
  return witnesses;
}

bool is_prime_module(const SubmoduleLattice& lattice) {
  const Module& m = lattice.module();
  if (m.is_zero()) return false;
  const auto& subs = lattice.submodules();
  const ElementSet ann_m = lattice.ann(subs.size() - 1);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i] != m.zero_set() && lattice.ann(i) != ann_m) return false;
  return true;
}

bool annihilated_by_s(const Module& m, const Mcs& s) {
  return annihilator(m, m.all()).elements.intersects(s.elements());
}

}  // namespace scomult
