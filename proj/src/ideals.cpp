#include "scomult/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace scomult {

namespace {

ElementSet translate_sum(const Ring& r, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Elem x : a)
    for (Elem y : b) out.insert(r.add(x, y));
  return out;
}

ElementSet principal(const Ring& r, Elem a) { return r.scale(a, r.all()); }

Ideal make(ElementSet e) { return Ideal{e, {}}; }

}  // namespace

bool is_ideal(const Ring& ring, ElementSet subset) {
  if (!subset.contains(ring.zero())) return false;
  for (Elem x : subset) {
    for (Elem y : subset)
      if (!subset.contains(ring.add(x, y))) return false;
    for (Elem r = 0; r < ring.order(); ++r)
      if (!subset.contains(ring.mul(r, x))) return false;
  }
  return true;
}

Ideal ideal_closure(const Ring& ring, std::span<const Elem> generators) {
  ElementSet current = ElementSet::single(ring.zero());
  for (Elem g : generators) current.insert(g);
  for (;;) {
    ElementSet next = current;
    for (Elem x : current) {
      for (Elem y : current) next.insert(ring.add(x, y));
      for (Elem r = 0; r < ring.order(); ++r) next.insert(ring.mul(r, x));
    }
    if (next == current) break;
    current = next;
  }
  return Ideal{current, std::vector<Elem>(generators.begin(), generators.end())};
}

Ideal principal_ideal(const Ring& ring, Elem a) { return Ideal{principal(ring, a), {a}}; }
Ideal zero_ideal(const Ring& ring) { return Ideal{ElementSet::single(ring.zero()), {}}; }
Ideal unit_ideal(const Ring& ring) { return Ideal{ring.all(), {ring.one()}}; }

std::vector<Ideal> enumerate_ideals(const Ring& ring) {
  std::vector<ElementSet> principals(ring.order());
  for (Elem a = 0; a < ring.order(); ++a) principals[a] = principal(ring, a);

  std::unordered_set<std::uint64_t> seen;
  std::deque<ElementSet> queue;
  const ElementSet zero = ElementSet::single(ring.zero());
  seen.insert(zero.bits());
  queue.push_back(zero);
  std::vector<ElementSet> found{zero};
  while (!queue.empty()) {
    const ElementSet cur = queue.front();
    queue.pop_front();
    for (Elem x : ring.all() - cur) {
      const ElementSet next = translate_sum(ring, cur, principals[x]);
      if (seen.insert(next.bits()).second) {
        queue.push_back(next);
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (ElementSet e : found) out.push_back(make(e));
  return out;
}

std::vector<Ideal> maximal_ideals(const Ring& ring) {
  const auto all = enumerate_ideals(ring);
  std::vector<Ideal> out;
  for (const auto& i : all) {
    if (i.elements == ring.all()) continue;
    bool maximal = true;
    for (const auto& j : all)
      if (j.elements != ring.all() && j.elements != i.elements && i.elements.subset_of(j.elements)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

bool is_prime_ideal(const Ring& ring, ElementSet ideal) {
  if (ideal == ring.all()) return false;
  for (Elem a = 0; a < ring.order(); ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < ring.order(); ++b)
      if (!ideal.contains(b) && ideal.contains(ring.mul(a, b))) return false;
  }
  return true;
}

std::vector<Ideal> prime_ideals(const Ring& ring) {
  std::vector<Ideal> out;
  for (auto& i : enumerate_ideals(ring))
    if (is_prime_ideal(ring, i.elements)) out.push_back(std::move(i));
  return out;
}

std::vector<Ideal> minimal_nonzero_ideals(const Ring& ring) {
  const auto all = enumerate_ideals(ring);
  const ElementSet zero = ElementSet::single(ring.zero());
  std::vector<Ideal> out;
  for (const auto& i : all) {
    if (i.elements == zero) continue;
    bool minimal = true;
    for (const auto& j : all)
      if (j.elements != zero && j.elements != i.elements && j.elements.subset_of(i.elements)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

Ideal jacobson_radical(const Ring& ring) {
  ElementSet acc = ring.all();
  for (const auto& m : maximal_ideals(ring)) acc &= m.elements;
  return make(acc);
}

Ideal ideal_sum(const Ring& ring, const Ideal& i, const Ideal& j) {
  return make(translate_sum(ring, i.elements, j.elements));
}

Ideal ideal_product(const Ring& ring, const Ideal& i, const Ideal& j) {
  std::vector<Elem> gens;
  for (Elem a : i.elements)
    for (Elem b : j.elements) gens.push_back(ring.mul(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return make(ideal_closure(ring, gens).elements);
}

Ideal ideal_intersection(const Ring&, const Ideal& i, const Ideal& j) { return make(i.elements & j.elements); }

Ideal ideal_colon(const Ring& ring, const Ideal& i, const Ideal& j) {
  ElementSet out;
  for (Elem x = 0; x < ring.order(); ++x)
    if (ring.scale(x, j.elements).subset_of(i.elements)) out.insert(x);
  return make(out);
}

Ideal ideal_annihilator(const Ring& ring, const Ideal& i) { return ideal_colon(ring, zero_ideal(ring), i); }

Ideal scaled_ideal(const Ring& ring, Elem t, const Ideal& i) { return make(ring.scale(t, i.elements)); }

IdealOps ideal_ops(const Ring& ring, const Ideal& i, const Ideal& j) {
  return IdealOps{ideal_sum(ring, i, j), ideal_product(ring, i, j), ideal_intersection(ring, i, j),
                  ideal_colon(ring, i, j), ideal_annihilator(ring, i)};
}

ElementSet units(const Ring& ring) {
  ElementSet out;
  for (Elem x = 0; x < ring.order(); ++x)
    for (Elem y = 0; y < ring.order(); ++y)
      if (ring.mul(x, y) == ring.one()) {
        out.insert(x);
        break;
      }
  return out;
}

bool is_integral_domain(const Ring& ring) {
  for (Elem a = 0; a < ring.order(); ++a)
    for (Elem b = 0; b < ring.order(); ++b)
      if (a != ring.zero() && b != ring.zero() && ring.mul(a, b) == ring.zero()) return false;
  return true;
}

}  // namespace scomult
