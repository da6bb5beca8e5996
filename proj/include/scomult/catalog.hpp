#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scomult/ideals.hpp"
#include "scomult/lattice.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"
#include "scomult/morphisms.hpp"

namespace scomult {

struct CatalogParams {
  unsigned max_ring = 12;            // largest ring order
  unsigned max_module = 16;          // largest module carrier
  unsigned all_mcs_up_to = 8;        // every m.c.s. up to this ring order, cyclic ones above
  unsigned all_homs_up_to = 8;       // every hom between carriers up to this size
  unsigned canonical_submodules = 8; // inclusions/projections per module
  std::vector<std::string> ring_names;  // restrict to these ("Z6", "Z2xZ2"); empty keeps all
};

struct CatalogRing {
  std::string name;
  RingPtr ring;
  std::vector<Mcs> mcs;
  std::vector<Ideal> ideals;
  std::vector<Ideal> maximal;
  std::vector<Ideal> primes;
  Ideal jacobson;
};

struct CatalogModule {
  std::size_t ring = 0;  // index into Catalog::rings
  ModulePtr module;
  LatticePtr lattice;
};

struct CatalogHom {
  std::size_t ring = 0;
  ModuleHom hom;
  LatticePtr source;
  LatticePtr target;
};

/// Immutable once generated; statements read it from several threads.
struct Catalog {
  CatalogParams params;
  std::vector<CatalogRing> rings;
  std::vector<CatalogModule> modules;
  std::vector<CatalogHom> homs;

  std::size_t module_mcs_pairs() const;
};

/// Names in the default list, smallest first.
std::vector<std::string> default_ring_names();

/// Throws SizeCapExceeded when a cap exceeds the element limit.
Catalog generate_catalog(const CatalogParams& params = {});

}  // namespace scomult
