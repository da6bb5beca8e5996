#include "scomult/catalog.hpp"

#include <algorithm>

#include "scomult/errors.hpp"
#include "scomult/submodules.hpp"

namespace scomult {

namespace {

struct RingSpec {
  std::string name;
  std::vector<unsigned> moduli;
};

std::vector<RingSpec> default_specs() {
  std::vector<RingSpec> out;
  for (unsigned n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), {n}});
  for (auto [a, b] : {std::pair{2U, 2U}, {2U, 3U}, {2U, 4U}, {3U, 3U}})
    out.push_back({"Z" + std::to_string(a) + "xZ" + std::to_string(b), {a, b}});
  std::stable_sort(out.begin(), out.end(), [](const RingSpec& x, const RingSpec& y) {
    auto order = [](const RingSpec& s) {
      unsigned n = 1;
      for (unsigned m : s.moduli) n *= m;
      return n;
    };
    return order(x) < order(y);
  });
  return out;
}

/// Cyclic building blocks: Z_d over Z_n, or R/I over a product ring.
std::vector<ModulePtr> base_modules(const RingPtr& ring, const std::vector<Ideal>& ideals) {
  std::vector<ModulePtr> out{self_module(ring)};
  if (ring->moduli().size() == 1) {
    const unsigned n = ring->moduli()[0];
    for (unsigned d = 2; d < n; ++d)
      if (n % d == 0) out.push_back(divisor_module(ring, d));
  } else {
    for (const auto& ideal : ideals)
      if (ideal.elements.size() > 1 && ideal.elements.size() < ring->order())
        out.push_back(cyclic_quotient(ring, ideal));
  }
  return out;
}

void add_unique(std::vector<ModulePtr>& modules, ModulePtr m, unsigned cap) {
  if (m->order() > cap || m->is_zero()) return;
  for (const auto& x : modules)
    if (*x == *m) return;
  modules.push_back(std::move(m));
}

std::vector<ModulePtr> ring_modules(const RingPtr& ring, const std::vector<Ideal>& ideals, unsigned cap) {
  const auto base = base_modules(ring, ideals);
  std::vector<ModulePtr> out;
  for (const auto& m : base) add_unique(out, m, cap);

  // Direct sums over multisets of base modules, index-nondecreasing.
  struct Partial {
    ModulePtr module;
    std::size_t last;
    std::size_t parts;
  };
  std::vector<Partial> frontier;
  for (std::size_t i = 0; i < base.size(); ++i) frontier.push_back({base[i], i, 1});
  std::vector<Partial> pairs;
  while (!frontier.empty()) {
    std::vector<Partial> next;
    for (const auto& p : frontier)
      for (std::size_t j = p.last; j < base.size(); ++j) {
        if (p.module->order() * base[j]->order() > cap) continue;
        Partial q{direct_sum(*p.module, *base[j]), j, p.parts + 1};
        add_unique(out, q.module, cap);
        if (q.parts == 2) pairs.push_back(q);
        next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }

  // Quotient samples: each two-term sum modulo the cyclic submodule of its
  // "diagonal" element (first generator of each summand).
  for (const auto& p : pairs) {
    const Module& d = *p.module;
    const auto gens = greedy_generators(d, d.all());
    if (gens.size() < 2) continue;
    const ElementSet diag = cyclic_submodule(d, d.add(gens[0], gens[1]));
    if (diag.size() <= 1 || diag.size() == d.order()) continue;
    add_unique(out, quotient_module(d, diag), cap);
  }
  return out;
}

void add_hom(std::vector<CatalogHom>& homs, std::size_t ring, ModuleHom f, LatticePtr source, LatticePtr target) {
  for (const auto& h : homs)
    if (h.hom == f) return;
  homs.push_back(CatalogHom{ring, std::move(f), std::move(source), std::move(target)});
}

}  // namespace

std::vector<std::string> default_ring_names() {
  std::vector<std::string> out;
  for (const auto& spec : default_specs()) out.push_back(spec.name);
  return out;
}

std::size_t Catalog::module_mcs_pairs() const {
  std::size_t n = 0;
  for (const auto& m : modules) n += rings[m.ring].mcs.size();
  return n;
}

Catalog generate_catalog(const CatalogParams& params) {
  if (params.max_ring > kMaxElements) throw SizeCapExceeded("ring", params.max_ring, kMaxElements);
  if (params.max_module > kMaxElements) throw SizeCapExceeded("module", params.max_module, kMaxElements);
  Catalog cat;
  cat.params = params;

  for (const auto& spec : default_specs()) {
    if (!params.ring_names.empty() &&
        std::find(params.ring_names.begin(), params.ring_names.end(), spec.name) == params.ring_names.end())
      continue;
    auto ring = make_zn_ring(spec.moduli);
    if (ring->order() > params.max_ring) continue;
    CatalogRing entry;
    entry.name = spec.name;
    entry.ring = ring;
    entry.mcs = ring->order() <= params.all_mcs_up_to ? enumerate_mcs(*ring) : cyclic_mcs(*ring);
    entry.ideals = enumerate_ideals(*ring);
    entry.maximal = maximal_ideals(*ring);
    entry.primes = prime_ideals(*ring);
    entry.jacobson = jacobson_radical(*ring);
    cat.rings.push_back(std::move(entry));
  }

  for (std::size_t r = 0; r < cat.rings.size(); ++r) {
    const auto& ring = cat.rings[r];
    const std::size_t first = cat.modules.size();
    for (auto& m : ring_modules(ring.ring, ring.ideals, params.max_module))
      cat.modules.push_back(CatalogModule{r, m, make_lattice(m)});

    // Every hom between small carriers.
    for (std::size_t a = first; a < cat.modules.size(); ++a)
      for (std::size_t b = first; b < cat.modules.size(); ++b) {
        const auto& ma = cat.modules[a];
        const auto& mb = cat.modules[b];
        if (ma.module->order() > params.all_homs_up_to || mb.module->order() > params.all_homs_up_to) continue;
        for (auto& f : enumerate_homs(ma.module, mb.module))
          cat.homs.push_back(CatalogHom{r, std::move(f), ma.lattice, mb.lattice});
      }

    // Canonical maps on everything: homotheties, inclusions, projections.
    for (std::size_t a = first; a < cat.modules.size(); ++a) {
      const auto& ma = cat.modules[a];
      const bool small = ma.module->order() <= params.all_homs_up_to;
      if (!small)
        for (Elem x = 0; x < ring.ring->order(); ++x)
          add_hom(cat.homs, r, multiplication_map(ma.module, x), ma.lattice, ma.lattice);
      const auto& subs = ma.lattice->submodules();
      std::size_t taken = 0;
      for (std::size_t i = 1; i + 1 < subs.size() && taken < params.canonical_submodules; ++i, ++taken) {
        auto inc = inclusion(ma.module, subs[i]);
        auto src = make_lattice(inc.source_ptr());
        cat.homs.push_back(CatalogHom{r, std::move(inc), std::move(src), ma.lattice});
        auto proj = projection(ma.module, subs[i]);
        auto dst = make_lattice(proj.target_ptr());
        cat.homs.push_back(CatalogHom{r, std::move(proj), ma.lattice, std::move(dst)});
      }
    }
  }
  return cat;
}

}  // namespace scomult
