#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ideals.hpp"
#include "scomult/ring.hpp"

namespace scomult {

/// A validated multiplicatively closed set: 0 not in S, 1 in S, st in S.
/// Only obtainable through validate_mcs and the constructors below.
class Mcs {
 public:
  ElementSet elements() const { return elements_; }
  /// Canonical (ascending index) order; every witness search uses it.
  std::vector<Elem> sorted() const { return elements_.elements(); }
  bool contains(Elem e) const { return elements_.contains(e); }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const Mcs&, const Mcs&) = default;

 private:
  friend Mcs validate_mcs(const Ring& ring, ElementSet subset);
  explicit Mcs(ElementSet e) : elements_(e) {}
  ElementSet elements_;
};

/// Throws McsError naming the violated condition.
Mcs validate_mcs(const Ring& ring, ElementSet subset);
Mcs trivial_mcs(const Ring& ring);

/// S* = {x : rx in S for some r}
Mcs saturation(const Ring& ring, const Mcs& s);
/// t | s  iff  s in tR.
bool divides(const Ring& ring, Elem t, Elem s);
/// First s in S divisible by every t in S.
std::optional<Elem> has_maximal_multiple(const Ring& ring, const Mcs& s);

struct NoetherianVerdict {
  bool value = true;
  std::string note;
};
NoetherianVerdict is_s_noetherian(const Ring& ring, const Mcs& s);

/// All multiplicatively closed sets, canonical order.
std::vector<Mcs> enumerate_mcs(const Ring& ring);
/// {1} together with the valid sets {1, s, s^2, ...}.
std::vector<Mcs> cyclic_mcs(const Ring& ring);
/// S1 x S2 inside R1 x R2 (index i1*|R2| + i2).
Mcs product_mcs(const Ring& r1, const Mcs& s1, const Ring& r2, const Mcs& s2);
/// R \ P for a prime ideal P; closure is checked.
Mcs complement_mcs(const Ring& ring, const Ideal& prime);

}  // namespace scomult
