#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/mcs.hpp"
#include "scomult/module.hpp"
#include "scomult/morphisms.hpp"

namespace scomult {

/// Everything declared in one instance file, by name and in file order.
/// The grammar is documented in docs/instance-format.md.
struct InstanceBag {
  template <class T>
  using Named = std::vector<std::pair<std::string, T>>;

  struct McsEntry {
    RingPtr ring;
    Mcs mcs;
  };
  struct SetEntry {
    std::string owner;  // ring or module name
    ElementSet elements;
  };

  Named<RingPtr> rings;
  Named<ModulePtr> modules;
  Named<McsEntry> mcs;
  Named<SetEntry> ideals;
  Named<SetEntry> submodules;
  Named<ModuleHom> homs;

  RingPtr ring(const std::string& name) const;
  ModulePtr module(const std::string& name) const;
  const McsEntry& mcs_entry(const std::string& name) const;
  const SetEntry& ideal(const std::string& name) const;
  const SetEntry& submodule(const std::string& name) const;
  const ModuleHom& hom(const std::string& name) const;

  /// First declared item of each kind; throws std::out_of_range if absent.
  ModulePtr first_module() const;
};

/// Throws ParseError carrying the 1-based line number.
InstanceBag parse_instance(std::istream& in);
InstanceBag parse_instance_text(const std::string& text);
InstanceBag parse_instance_file(const std::string& path);

/// Parses "{1,3}" / "1,3" / "1 3" / "(1,0) (0,1)" element lists against a
/// ring or module presentation.
ElementSet parse_ring_elements(const Ring& ring, const std::string& text);
ElementSet parse_module_elements(const Module& m, const std::string& text);

/// Builds instance text. Names must be unique per kind; rings and modules
/// referenced by later items are written once, on first use.
class InstanceWriter {
 public:
  std::string ring(const RingPtr& ring);
  /// reuse = false always writes a new declaration, even for a module
  /// already written.
  std::string module(const ModulePtr& m, bool reuse = true);
  std::string mcs(const RingPtr& ring, const Mcs& s);
  std::string ideal(const RingPtr& ring, ElementSet elements);
  std::string submodule(const ModulePtr& m, ElementSet elements);
  std::string hom(const ModuleHom& f);
  void comment(const std::string& text);

  const std::string& text() const { return text_; }

 private:
  std::string fresh(const char* prefix);
  std::string text_;
  std::vector<std::pair<RingPtr, std::string>> rings_;
  std::vector<std::pair<ModulePtr, std::string>> modules_;
  std::size_t counter_ = 0;
};

}  // namespace scomult
