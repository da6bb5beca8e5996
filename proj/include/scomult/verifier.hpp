#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scomult/catalog.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/mutants.hpp"

namespace scomult {

/// One thing a statement is checked on. Which fields matter depends on the
/// statement; ideals live in the ring of modules[0], submodules in modules[0].
struct Instance {
  std::vector<ModulePtr> modules;
  std::vector<std::pair<RingPtr, Mcs>> mcs;
  std::vector<ElementSet> ideals;
  std::vector<ElementSet> submodules;
  std::optional<ModuleHom> hom;

  /// Lattice for a module of this instance, built on first use.
  const SubmoduleLattice& lattice(const ModulePtr& m) const;
  void remember(LatticePtr lattice) const;

  const Module& module() const { return *modules.at(0); }
  const Mcs& s() const { return mcs.at(0).second; }

 private:
  mutable std::vector<LatticePtr> lattices_;
};

/// Instance text in the shared file format; modules, then m.c.s., ideals,
/// submodules and the hom, each in order.
std::string serialize(const Instance& inst);
Instance deserialize(const InstanceBag& bag);

/// Result of checking one statement on one instance.
struct Outcome {
  bool qualifies = false;  // hypotheses hold
  bool holds = true;       // conclusion holds (meaningful when qualifying)
  std::string detail;
  std::vector<std::string> tags;  // counted into the report notes
};

using Visit = std::function<void(const Instance&)>;

struct Statement {
  std::string_view id;
  std::string_view title;
  void (*enumerate)(const Catalog&, const Visit&);
  Outcome (*check)(const Instance&, Mutant);
};

enum class Verdict { pass, fail, vacuous };
std::string_view verdict_name(Verdict v);

struct Counterexample {
  std::string instance;  // serialized instance text
  std::string detail;
  bool revalidated = false;
};

struct StatementReport {
  std::string id;
  Verdict verdict = Verdict::vacuous;
  std::size_t instances = 0;  // qualifying instances
  std::size_t candidates = 0; // instances inspected
  std::size_t failures = 0;
  std::optional<Counterexample> counterexample;
  double ms = 0;
  std::map<std::string, std::size_t> tags;
  std::string notes;
};

/// All statements in report order.
const std::vector<Statement>& statements();
/// Throws UnknownStatement.
const Statement& find_statement(std::string_view id);

StatementReport verify(std::string_view id, const Catalog& catalog, Mutant mutant = Mutant::none);

/// `ids` empty runs everything. Reports come back in statement order no
/// matter how the pool schedules them. threads = 0 picks the hardware count.
std::vector<StatementReport> verify_all(const Catalog& catalog, Mutant mutant = Mutant::none,
                                        const std::vector<std::string>& ids = {}, unsigned threads = 0);

/// The statement's hypothesis filter on its own: does `inst` satisfy the
/// preconditions? Mutants do not change hypotheses.
bool qualifies(std::string_view id, const Instance& inst);

/// Re-parses a counterexample and checks it again from scratch: true when
/// it still satisfies the hypotheses and violates the conclusion.
bool revalidate(std::string_view id, const std::string& instance_text, Mutant mutant = Mutant::none);

}  // namespace scomult
