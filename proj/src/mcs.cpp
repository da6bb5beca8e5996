#include "scomult/mcs.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "scomult/errors.hpp"

namespace scomult {

namespace {

ElementSet multiplicative_closure(const Ring& ring, ElementSet start) {
  ElementSet cur = start;
  for (;;) {
    ElementSet next = cur;
    for (Elem a : cur)
      for (Elem b : cur) next.insert(ring.mul(a, b));
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

Mcs validate_mcs(const Ring& ring, ElementSet subset) {
  if (!subset.subset_of(ring.all())) throw std::out_of_range("mcs element outside ring");
  if (subset.contains(ring.zero())) throw McsError(McsViolation::contains_zero);
  if (!subset.contains(ring.one())) throw McsError(McsViolation::missing_one);
  for (Elem s : subset)
    for (Elem t : subset)
      if (!subset.contains(ring.mul(s, t))) throw McsError(McsViolation::not_closed, s, t);
  return Mcs(subset);
}

Mcs trivial_mcs(const Ring& ring) { return validate_mcs(ring, ElementSet::single(ring.one())); }

Mcs saturation(const Ring& ring, const Mcs& s) {
  ElementSet out;
  for (Elem x = 0; x < ring.order(); ++x)
    for (Elem r = 0; r < ring.order(); ++r)
      if (s.contains(ring.mul(r, x))) {
        out.insert(x);
        break;
      }
  Mcs sat = validate_mcs(ring, out);
  if (!s.elements().subset_of(sat.elements())) throw std::logic_error("saturation does not contain S");
  return sat;
}

bool divides(const Ring& ring, Elem t, Elem s) {
  for (Elem r = 0; r < ring.order(); ++r)
    if (ring.mul(t, r) == s) return true;
  return false;
}

std::optional<Elem> has_maximal_multiple(const Ring& ring, const Mcs& s) {
  for (Elem candidate : s.elements()) {
    bool ok = true;
    for (Elem t : s.elements())
      if (!divides(ring, t, candidate)) {
        ok = false;
        break;
      }
    if (ok) return candidate;
  }
  return std::nullopt;
}

NoetherianVerdict is_s_noetherian(const Ring&, const Mcs&) {
  return {true, "trivially true at finite scale"};
}

std::vector<Mcs> enumerate_mcs(const Ring& ring) {
  const ElementSet one = ElementSet::single(ring.one());
  std::unordered_set<std::uint64_t> seen{one.bits()};
  std::deque<ElementSet> queue{one};
  std::vector<ElementSet> found{one};
  while (!queue.empty()) {
    const ElementSet cur = queue.front();
    queue.pop_front();
    for (Elem x : ring.all() - cur) {
      if (x == ring.zero()) continue;
      ElementSet start = cur;
      start.insert(x);
      const ElementSet next = multiplicative_closure(ring, start);
      if (next.contains(ring.zero())) continue;
      if (seen.insert(next.bits()).second) {
        queue.push_back(next);
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  std::vector<Mcs> out;
  for (ElementSet e : found) out.push_back(validate_mcs(ring, e));
  return out;
}

std::vector<Mcs> cyclic_mcs(const Ring& ring) {
  std::vector<ElementSet> found;
  for (Elem s = 0; s < ring.order(); ++s) {
    if (s == ring.zero()) continue;
    ElementSet set = ElementSet::single(ring.one());
    Elem power = s;
    while (!set.contains(power)) {
      set.insert(power);
      power = ring.mul(power, s);
    }
    if (set.contains(ring.zero())) continue;
    if (std::find(found.begin(), found.end(), set) == found.end()) found.push_back(set);
  }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  std::vector<Mcs> out;
  for (ElementSet e : found) out.push_back(validate_mcs(ring, e));
  return out;
}

Mcs product_mcs(const Ring& r1, const Mcs& s1, const Ring& r2, const Mcs& s2) {
  auto product = product_ring(r1, r2);
  ElementSet out;
  for (Elem a : s1.elements())
    for (Elem b : s2.elements()) out.insert(a * static_cast<Elem>(r2.order()) + b);
  return validate_mcs(*product, out);
}

Mcs complement_mcs(const Ring& ring, const Ideal& prime) {
  return validate_mcs(ring, ring.all() - prime.elements);
}

}  // namespace scomult
