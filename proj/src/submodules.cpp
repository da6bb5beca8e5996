#include "scomult/submodules.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace scomult {

namespace {

ElementSet close(const Module& m, ElementSet start) {
  ElementSet current = start;
  current.insert(m.zero());
  const auto rn = static_cast<Elem>(m.ring().order());
  for (;;) {
    ElementSet next = current;
    for (Elem x : current) {
      for (Elem y : current) next.insert(m.add(x, y));
      for (Elem r = 0; r < rn; ++r) next.insert(m.act(r, x));
    }
    if (next == current) return current;
    current = next;
  }
}

ElementSet minkowski(const Module& m, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Elem x : a)
    for (Elem y : b) out.insert(m.add(x, y));
  return out;
}

}  // namespace

bool is_submodule(const Module& m, ElementSet subset) {
  if (!subset.contains(m.zero()) || !subset.subset_of(m.all())) return false;
  for (Elem x : subset) {
    for (Elem y : subset)
      if (!subset.contains(m.add(x, y))) return false;
    for (Elem r = 0; r < m.ring().order(); ++r)
      if (!subset.contains(m.act(r, x))) return false;
  }
  return true;
}

Submodule submodule_closure(const Module& m, std::span<const Elem> generators) {
  ElementSet start;
  for (Elem g : generators) start.insert(g);
  return Submodule{close(m, start), std::vector<Elem>(generators.begin(), generators.end())};
}

ElementSet cyclic_submodule(const Module& m, Elem x) {
  ElementSet out;
  for (Elem r = 0; r < m.ring().order(); ++r) out.insert(m.act(r, x));
  return out;
}

ElementSet submodule_sum(const Module& m, ElementSet a, ElementSet b) { return minkowski(m, a, b); }

std::vector<Elem> greedy_generators(const Module& m, ElementSet n) {
  std::vector<Elem> gens;
  ElementSet span = m.zero_set();
  for (Elem x : n) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = minkowski(m, span, cyclic_submodule(m, x));
  }
  return gens;
}

std::vector<ElementSet> enumerate_submodules(const Module& m) {
  std::vector<ElementSet> cyclic(m.order());
  for (Elem x = 0; x < m.order(); ++x) cyclic[x] = cyclic_submodule(m, x);
  const ElementSet zero = m.zero_set();
  std::unordered_set<std::uint64_t> seen{zero.bits()};
  std::deque<ElementSet> queue{zero};
  std::vector<ElementSet> found{zero};
  while (!queue.empty()) {
    const ElementSet cur = queue.front();
    queue.pop_front();
    for (Elem x : m.all() - cur) {
      const ElementSet next = minkowski(m, cur, cyclic[x]);
      if (seen.insert(next.bits()).second) {
        queue.push_back(next);
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  return found;
}

Ideal colon_into_ring(const Module& m, ElementSet n, ElementSet k) {
  ElementSet out;
  for (Elem x = 0; x < m.ring().order(); ++x)
    if (m.scale(x, k).subset_of(n)) out.insert(x);
  return Ideal{out, {}};
}

Ideal annihilator(const Module& m, ElementSet k) { return colon_into_ring(m, m.zero_set(), k); }

ElementSet colon_into_module(const Module& m, ElementSet n, ElementSet j) {
  ElementSet out;
  for (Elem x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (Elem r : j)
      if (!n.contains(m.act(r, x))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

ElementSet ideal_times(const Module& m, ElementSet ideal, ElementSet x) {
  ElementSet products;
  for (Elem r : ideal)
    for (Elem e : x) products.insert(m.act(r, e));
  return close(m, products);
}

ElementSet torsion_set(const Module& m) {
  const Elem zr = m.ring().zero();
  ElementSet out;
  for (Elem x = 0; x < m.order(); ++x)
    for (Elem r = 0; r < m.ring().order(); ++r)
      if (r != zr && m.act(r, x) == m.zero()) {
        out.insert(x);
        break;
      }
  return out;
}

bool is_torsion(const Module& m) { return torsion_set(m) == m.all(); }

ElementSet zero_divisors_on(const Module& m) {
  ElementSet out;
  for (Elem r = 0; r < m.ring().order(); ++r)
    for (Elem x = 0; x < m.order(); ++x)
      if (x != m.zero() && m.act(r, x) == m.zero()) {
        out.insert(r);
        break;
      }
  return out;
}

}  // namespace scomult
