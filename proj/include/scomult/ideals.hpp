#pragma once

#include <span>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ring.hpp"

namespace scomult {

/// Ideal of a ring in canonical form (full element set). Generators are
/// informational; equality compares element sets only.
struct Ideal {
  ElementSet elements;
  std::vector<Elem> generators;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements == b.elements; }
};

bool is_ideal(const Ring& ring, ElementSet subset);

/// Least ideal containing `generators`, by fixpoint under addition and
/// scalar multiples.
Ideal ideal_closure(const Ring& ring, std::span<const Elem> generators);
Ideal principal_ideal(const Ring& ring, Elem a);
Ideal zero_ideal(const Ring& ring);
Ideal unit_ideal(const Ring& ring);

/// Every ideal exactly once, sorted by cardinality then element list.
std::vector<Ideal> enumerate_ideals(const Ring& ring);
std::vector<Ideal> maximal_ideals(const Ring& ring);
bool is_prime_ideal(const Ring& ring, ElementSet ideal);
std::vector<Ideal> prime_ideals(const Ring& ring);
/// Nonzero ideals that contain no smaller nonzero ideal.
std::vector<Ideal> minimal_nonzero_ideals(const Ring& ring);
Ideal jacobson_radical(const Ring& ring);

Ideal ideal_sum(const Ring& ring, const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ring& ring, const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ring& ring, const Ideal& i, const Ideal& j);
/// (I : J) = {x : xJ in I}
Ideal ideal_colon(const Ring& ring, const Ideal& i, const Ideal& j);
Ideal ideal_annihilator(const Ring& ring, const Ideal& i);
/// tI, itself an ideal.
Ideal scaled_ideal(const Ring& ring, Elem t, const Ideal& i);

struct IdealOps {
  Ideal sum;
  Ideal product;
  Ideal intersection;
  Ideal colon;
  Ideal annihilator;
};
IdealOps ideal_ops(const Ring& ring, const Ideal& i, const Ideal& j);

/// u(R)
ElementSet units(const Ring& ring);
bool is_integral_domain(const Ring& ring);

}  // namespace scomult
