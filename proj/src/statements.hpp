#pragma once

// Shared plumbing for the statement files. Not installed.

#include <string>
#include <vector>

#include "scomult/s_theory.hpp"
#include "scomult/verifier.hpp"

namespace scomult::detail {

/// Every catalog (M, S), lattice attached.
void each_module_mcs(const Catalog& cat, const Visit& visit);
/// Every catalog module with the trivial m.c.s.
void each_module(const Catalog& cat, const Visit& visit);
/// Every catalog (M, S, N) with N a nonzero submodule.
void each_module_mcs_submodule(const Catalog& cat, const Visit& visit);
/// Every catalog (M, S, I) with I an ideal of R.
void each_module_mcs_ideal(const Catalog& cat, const Visit& visit);

/// Every catalog hom with every m.c.s. of its ring.
void each_hom_mcs(const Catalog& cat, const Visit& visit);

bool comult(const Instance& inst, const ModulePtr& m, const Mcs& s);
bool comult(const Instance& inst);

std::string show(ElementSet set);
std::string show(bool b);

/// Families of at most `max_size` distinct submodules drawn from `pool`,
/// in lexicographic index order; larger pools get smaller families.
std::vector<std::vector<ElementSet>> families(const std::vector<ElementSet>& pool, std::size_t max_size);

void register_lemma(std::vector<Statement>& out);
void register_maps(std::vector<Statement>& out);
void register_structure(std::vector<Statement>& out);
void register_cyclic(std::vector<Statement>& out);
void register_second(std::vector<Statement>& out);

}  // namespace scomult::detail
