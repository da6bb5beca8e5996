#include "scomult/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "scomult/errors.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"

namespace scomult {

ModuleHom ModuleHom::make(ModulePtr source, ModulePtr target, std::vector<Elem> table) {
  if (!source || !target) throw std::invalid_argument("homomorphism needs both modules");
  if (!(source->ring() == target->ring())) throw std::invalid_argument("homomorphism modules need a common ring");
  if (table.size() != source->order()) throw std::invalid_argument("homomorphism table must cover the source");
  for (Elem v : table)
    if (v >= target->order()) throw std::invalid_argument("homomorphism value out of range");
  const Module& m = *source;
  const Module& n = *target;
  for (Elem a = 0; a < m.order(); ++a) {
    for (Elem b = 0; b < m.order(); ++b)
      if (table[m.add(a, b)] != n.add(table[a], table[b])) throw AxiomViolation("f(m+m') = f(m)+f(m')", {a, b});
    for (Elem r = 0; r < m.ring().order(); ++r)
      if (table[m.act(r, a)] != n.act(r, table[a])) throw AxiomViolation("f(rm) = rf(m)", {r, a});
  }
  ModuleHom f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.table_ = std::move(table);
  return f;
}

ElementSet ModuleHom::kernel() const { return preimage(target_->zero_set()); }
ElementSet ModuleHom::image() const { return image_of(source_->all()); }

ElementSet ModuleHom::image_of(ElementSet xs) const {
  ElementSet out;
  for (Elem x : xs) out.insert(table_[x]);
  return out;
}

ElementSet ModuleHom::preimage(ElementSet ys) const {
  ElementSet out;
  for (Elem x = 0; x < source_->order(); ++x)
    if (ys.contains(table_[x])) out.insert(x);
  return out;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("composition needs matching modules");
  std::vector<Elem> table(f.source().order());
  for (Elem x = 0; x < table.size(); ++x) table[x] = g(f(x));
  return ModuleHom::make(f.source_ptr(), g.target_ptr(), std::move(table));
}

ModuleHom identity_hom(ModulePtr m) {
  std::vector<Elem> table(m->order());
  for (Elem x = 0; x < table.size(); ++x) table[x] = x;
  auto copy = m;
  return ModuleHom::make(std::move(m), std::move(copy), std::move(table));
}

ModuleHom inclusion(ModulePtr m, ElementSet n) {
  auto sub = submodule_as_module(*m, n);
  return ModuleHom::make(std::move(sub), std::move(m), n.elements());
}

ModuleHom projection(ModulePtr m, ElementSet n) {
  auto q = quotient_module(*m, n);
  // quotient_module numbers cosets by least representative, in order.
  std::vector<Elem> table(m->order(), 0);
  std::vector<bool> done(m->order(), false);
  Elem next = 0;
  for (Elem a = 0; a < m->order(); ++a) {
    if (done[a]) continue;
    for (Elem x : n) {
      const Elem b = m->add(a, x);
      done[b] = true;
      table[b] = next;
    }
    ++next;
  }
  return ModuleHom::make(std::move(m), std::move(q), std::move(table));
}

ModuleHom multiplication_map(ModulePtr m, Elem a) {
  std::vector<Elem> table(m->order());
  for (Elem x = 0; x < table.size(); ++x) table[x] = m->act(a, x);
  auto copy = m;
  return ModuleHom::make(std::move(m), std::move(copy), std::move(table));
}

ModuleHom homothety(const ModulePtr& m, ElementSet p, Elem a) { return multiplication_map(quotient_module(*m, p), a); }

ModuleHom homothety_on(const ModulePtr& m, ElementSet n, Elem a) {
  return multiplication_map(submodule_as_module(*m, n), a);
}

std::vector<ModuleHom> enumerate_homs(const ModulePtr& source, const ModulePtr& target) {
  const Module& m = *source;
  const Module& n = *target;
  const auto gens = greedy_generators(m, m.all());
  const std::size_t k = gens.size();
  std::vector<Elem> images(k, 0);
  std::vector<std::vector<Elem>> tables;
  constexpr Elem kUnset = ~Elem{0};
  for (;;) {
    std::vector<Elem> table(m.order(), kUnset);
    bool ok = true;
    auto assign = [&](Elem x, Elem v) {
      if (table[x] == kUnset) {
        table[x] = v;
        return true;
      }
      return table[x] == v;
    };
    ok = assign(m.zero(), n.zero());
    for (std::size_t i = 0; i < k && ok; ++i) ok = assign(gens[i], images[i]);
    bool changed = true;
    while (ok && changed) {
      changed = false;
      for (Elem x = 0; x < m.order() && ok; ++x) {
        if (table[x] == kUnset) continue;
        for (Elem r = 0; r < m.ring().order() && ok; ++r) {
          const Elem y = m.act(r, x);
          if (table[y] == kUnset) changed = true;
          ok = assign(y, n.act(r, table[x]));
        }
        for (Elem z = 0; z < m.order() && ok; ++z) {
          if (table[z] == kUnset) continue;
          const Elem y = m.add(x, z);
          if (table[y] == kUnset) changed = true;
          ok = assign(y, n.add(table[x], table[z]));
        }
      }
    }
    if (ok && std::find(table.begin(), table.end(), kUnset) == table.end()) tables.push_back(std::move(table));

    std::size_t i = 0;
    while (i < k && ++images[i] == n.order()) images[i++] = 0;
    if (i == k) break;
  }
  std::sort(tables.begin(), tables.end());
  std::vector<ModuleHom> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(ModuleHom::make(source, target, std::move(t)));
  return out;
}

bool is_s_zero_with(const ModuleHom& f, Elem s) {
  return f.target().scale(s, f.image()) == f.target().zero_set();
}

bool is_s_monic_with(const ModuleHom& f, Elem s) {
  const Module& m = f.source();
  for (Elem x = 0; x < m.order(); ++x)
    if (f(x) == f.target().zero() && m.act(s, x) != m.zero()) return false;
  return true;
}

bool kills_kernel(const ModuleHom& f, Elem s) {
  return f.source().scale(s, f.kernel()) == f.source().zero_set();
}

bool is_s_epic_with(const ModuleHom& f, Elem s) {
  return f.target().scale(s, f.target().all()).subset_of(f.image());
}

std::optional<Elem> is_s_zero(const ModuleHom& f, const Mcs& s) {
  for (Elem t : s.elements())
    if (is_s_zero_with(f, t)) return t;
  return std::nullopt;
}

std::optional<Elem> is_s_monic(const ModuleHom& f, const Mcs& s) {
  std::optional<Elem> found;
  for (Elem t : s.elements()) {
    const bool by_definition = is_s_monic_with(f, t);
    if (by_definition != kills_kernel(f, t)) throw std::logic_error("S-monic forms disagree");
    if (by_definition && !found) found = t;
  }
  return found;
}

std::optional<Elem> is_s_epic(const ModuleHom& f, const Mcs& s) {
  for (Elem t : s.elements())
    if (is_s_epic_with(f, t)) return t;
  return std::nullopt;
}

BridgeReport monic_epic_bridge(const ModuleHom& f, const Mcs& s) {
  BridgeReport out;
  const bool monic = f.injective();
  const bool epic = f.surjective();
  const bool s_monic = is_s_monic(f, s).has_value();
  const bool s_epic = is_s_epic(f, s).has_value();
  if (monic) out.monic_gives_s_monic = s_monic;
  if (epic) out.epic_gives_s_epic = s_epic;
  out.monic_converse_applies = !s.elements().intersects(zero_divisors_on(f.source()));
  if (out.monic_converse_applies && s_monic) out.monic_converse_holds = monic;
  out.epic_converse_applies = s.elements().subset_of(units(f.source().ring()));
  if (out.epic_converse_applies && s_epic) out.epic_converse_holds = epic;
  return out;
}

TransferReport transfer_theorem_check(const ModuleHom& f, const Mcs& s, const SubmoduleLattice& source,
                                      const SubmoduleLattice& target) {
  if (!(source.module() == f.source()) || !(target.module() == f.target()))
    throw std::invalid_argument("lattices do not match the homomorphism");
  TransferReport out;
  std::optional<Elem> t;
  for (Elem u : s.elements())
    if (kills_kernel(f, u)) {
      t = u;
      break;
    }
  if (!t) throw PreconditionUnmet("no t in S with t Ker(f) = 0");
  out.t = *t;
  const auto src = is_s_comultiplication(source, s);
  const auto dst = is_s_comultiplication(target, s);
  out.part_i_applies = dst.holds;
  if (out.part_i_applies) {
    out.part_i_holds = src.holds;
    if (!src.holds) out.counterexample = src.failing;
  }
  out.part_ii_applies = f.surjective() && src.holds;
  if (out.part_ii_applies) {
    out.part_ii_holds = dst.holds;
    if (!dst.holds) out.counterexample = dst.failing;
  }
  return out;
}

}  // namespace scomult
