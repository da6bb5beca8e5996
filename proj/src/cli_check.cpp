#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "scomult/cli.hpp"
#include "scomult/errors.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/morphisms.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"

namespace scomult::cli {

namespace {

struct Context {
  InstanceBag bag;
  ModulePtr module;  // null when the file declares only rings
  RingPtr ring;
  std::optional<Mcs> s_;
  ElementSet submodule;
  bool has_submodule = false;
  ElementSet ideal;
  bool has_ideal = false;
  const ModuleHom* hom = nullptr;
  LatticePtr lattice;

  const Mcs& s() const { return *s_; }

  const SubmoduleLattice& lat() {
    if (!lattice) lattice = make_lattice(module);
    return *lattice;
  }
};

/// Bad input from the user; reported with exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Unmet precondition; reported with exit code 2.
struct Precondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string module_set(const Module& m, ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (Elem x : set) {
    out += (first ? "" : ", ") + m.label(x);
    first = false;
  }
  return out + "}";
}

std::string ring_set(const Ring& r, ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (Elem x : set) {
    out += (first ? "" : ", ") + r.label(x);
    first = false;
  }
  return out + "}";
}

Mcs pick_mcs(const InstanceBag& bag, const Ring& ring, const std::string& literal) {
  if (!literal.empty()) {
    try {
      return validate_mcs(ring, parse_ring_elements(ring, literal));
    } catch (const std::exception& e) {
      throw InputError(std::string("--mcs: ") + e.what());
    }
  }
  for (const auto& [name, entry] : bag.mcs)
    if (*entry.ring == ring) return entry.mcs;
  return trivial_mcs(ring);
}

Context resolve(const CheckRequest& req) {
  Context ctx;
  ctx.bag = parse_instance_file(req.instance_path);
  const auto& bag = ctx.bag;
  try {
    if (!req.module.empty()) ctx.module = bag.module(req.module);
    else if (!bag.modules.empty()) ctx.module = bag.modules.front().second;
    if (ctx.module) ctx.ring = ctx.module->ring_ptr();
    else if (!bag.rings.empty()) ctx.ring = bag.rings.front().second;
    else throw InputError("instance declares no ring");

    ctx.s_ = pick_mcs(bag, *ctx.ring, req.mcs);

    if (!req.submodule.empty()) {
      if (!ctx.module) throw InputError("--submodule needs a module");
      bool named = false;
      for (const auto& [name, e] : bag.submodules)
        if (name == req.submodule) {
          ctx.submodule = e.elements;
          named = true;
        }
      if (!named) ctx.submodule = parse_module_elements(*ctx.module, req.submodule);
      if (!is_submodule(*ctx.module, ctx.submodule)) throw InputError("--submodule is not a submodule");
      ctx.has_submodule = true;
    } else if (!bag.submodules.empty() && ctx.module) {
      ctx.submodule = bag.submodules.front().second.elements;
      ctx.has_submodule = true;
    }

    if (!req.ideal.empty()) {
      bool named = false;
      for (const auto& [name, e] : bag.ideals)
        if (name == req.ideal) {
          ctx.ideal = e.elements;
          named = true;
        }
      if (!named) ctx.ideal = parse_ring_elements(*ctx.ring, req.ideal);
      if (!is_ideal(*ctx.ring, ctx.ideal)) throw InputError("--ideal is not an ideal");
      ctx.has_ideal = true;
    } else if (!bag.ideals.empty()) {
      ctx.ideal = bag.ideals.front().second.elements;
      ctx.has_ideal = true;
    }

    if (!req.hom.empty()) ctx.hom = &bag.hom(req.hom);
    else if (!bag.homs.empty()) ctx.hom = &bag.homs.front().second;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return ctx;
}

void need_module(const Context& ctx) {
  if (!ctx.module) throw InputError("this predicate needs a module");
}
ElementSet need_submodule(const Context& ctx) {
  need_module(ctx);
  if (!ctx.has_submodule) throw InputError("this predicate needs --submodule");
  return ctx.submodule;
}
ElementSet need_ideal(const Context& ctx) {
  if (!ctx.has_ideal) throw InputError("this predicate needs --ideal");
  return ctx.ideal;
}
const ModuleHom& need_hom(const Context& ctx) {
  if (!ctx.hom) throw InputError("this predicate needs a hom");
  return *ctx.hom;
}

int verdict(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << '\n';
  return value ? kTrue : kFalse;
}

int from_result(std::ostream& out, const PredicateResult& r, const std::string& what) {
  if (r.status == Status::disjointness_failure) throw Precondition(what + " meets S");
  const int code = verdict(out, r.holds());
  if (r.witness) out << "witness s = " << r.witness->s << '\n';
  return code;
}

int first_failing(std::ostream& out, Context& c, bool value, const std::function<bool(ElementSet)>& ok) {
  const int code = verdict(out, value);
  if (!value)
    for (ElementSet n : c.lat().submodules())
      if (!ok(n)) {
        out << "failing submodule " << module_set(*c.module, n) << '\n';
        break;
      }
  return code;
}

using Handler = std::function<int(Context&, std::ostream&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"s-comultiplication",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const auto r = is_s_comultiplication(c.lat(), c.s());
         const int code = verdict(out, r.holds);
         const auto& subs = c.lat().submodules();
         for (std::size_t i = 0; i < subs.size(); ++i) {
           out << "  " << module_set(*c.module, subs[i]) << ": ";
           if (r.witnesses[i]) out << "s = " << c.ring->label(*r.witnesses[i]) << '\n';
           else out << "no s\n";
         }
         if (r.failing) out << "failing submodule " << module_set(*c.module, *r.failing) << '\n';
         return code;
       }},
      {"comultiplication",
       [](Context& c, std::ostream& out) {
         need_module(c);
         return first_failing(out, c, is_comultiplication(c.lat()),
                              [&](ElementSet n) { return c.lat().dual_of(n) == n; });
       }},
      {"multiplication",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const Module& m = *c.module;
         return first_failing(out, c, is_multiplication(c.lat()),
                              [&](ElementSet n) {
                                return ideal_times(m, colon_into_ring(m, n, m.all()).elements, m.all()) == n;
                              });
       }},
      {"s-multiplication",
       [](Context& c, std::ostream& out) {
         need_module(c);
         return verdict(out, is_s_multiplication(c.lat(), c.s()).holds);
       }},
      {"lemma-forms",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const Triple t = lemma_equivalence_bundle(c.lat(), c.s());
         out << "definition " << t.first << ", form (ii) " << t.second << ", form (iii) " << t.third << '\n';
         return verdict(out, t.second);
       }},
      {"s-cyclic",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const auto w = is_s_cyclic(*c.module, c.s());
         const int code = verdict(out, w.has_value());
         if (w) out << "witness s = " << c.ring->label(w->s) << ", m = " << c.module->label(w->element) << '\n';
         return code;
       }},
      {"cyclic", [](Context& c, std::ostream& out) { need_module(c); return verdict(out, is_cyclic(*c.module)); }},
      {"s-torsion-free",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const auto t = is_s_torsion_free(*c.module, c.s());
         const int code = verdict(out, t.has_value());
         if (t) out << "witness s = " << c.ring->label(*t) << '\n';
         return code;
       }},
      {"torsion", [](Context& c, std::ostream& out) { need_module(c); return verdict(out, is_torsion(*c.module)); }},
      {"prime-module",
       [](Context& c, std::ostream& out) {
         need_module(c);
         return verdict(out, is_prime_module(c.lat()));
       }},
      {"s-prime",
       [](Context& c, std::ostream& out) {
         const ElementSet p = need_submodule(c);
         return from_result(out, is_s_prime_submodule(*c.module, p, c.s()), "(P:M)");
       }},
      {"prime",
       [](Context& c, std::ostream& out) {
         return verdict(out, is_prime_submodule(*c.module, need_submodule(c)));
       }},
      {"s-second",
       [](Context& c, std::ostream& out) {
         const ElementSet n = need_submodule(c);
         if (n.size() <= 1) throw Precondition("N must be nonzero");
         return from_result(out, is_s_second(*c.module, n, c.s()), "ann(N)");
       }},
      {"second",
       [](Context& c, std::ostream& out) { return verdict(out, is_second(*c.module, need_submodule(c))); }},
      {"s-prime-ideal",
       [](Context& c, std::ostream& out) {
         return from_result(out, is_s_prime_ideal(c.ring, need_ideal(c), c.s()), "I");
       }},
      {"s-minimal",
       [](Context& c, std::ostream& out) {
         need_module(c);
         const ElementSet k = c.has_submodule ? c.submodule : c.module->all();
         if (k.size() <= 1) throw Precondition("K must be nonzero");
         const auto nonzero = is_s_minimal(c.lat(), k, c.s(), MinimalReading::nonzero_submodules);
         const auto literal = is_s_minimal(c.lat(), k, c.s(), MinimalReading::all_submodules);
         out << "reading with L = 0 allowed: " << (literal ? "true" : "false") << '\n';
         return verdict(out, nonzero.has_value());
       }},
      {"s-zero",
       [](Context& c, std::ostream& out) {
         const auto t = is_s_zero(need_hom(c), c.s());
         const int code = verdict(out, t.has_value());
         if (t) out << "witness s = " << c.ring->label(*t) << '\n';
         return code;
       }},
      {"s-monic",
       [](Context& c, std::ostream& out) {
         const auto t = is_s_monic(need_hom(c), c.s());
         const int code = verdict(out, t.has_value());
         if (t) out << "witness s = " << c.ring->label(*t) << '\n';
         return code;
       }},
      {"s-epic",
       [](Context& c, std::ostream& out) {
         const auto t = is_s_epic(need_hom(c), c.s());
         const int code = verdict(out, t.has_value());
         if (t) out << "witness s = " << c.ring->label(*t) << '\n';
         return code;
       }},
      {"maximal-multiple",
       [](Context& c, std::ostream& out) {
         const auto s = has_maximal_multiple(*c.ring, c.s());
         const int code = verdict(out, s.has_value());
         if (s) out << "witness s = " << c.ring->label(*s) << '\n';
         return code;
       }},
      {"s-noetherian",
       [](Context& c, std::ostream& out) {
         const auto v = is_s_noetherian(*c.ring, c.s());
         out << v.note << '\n';
         return verdict(out, v.value);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

int cmd_check(const CheckRequest& req, std::ostream& out, std::ostream& err) {
  const auto& table = handlers();
  const auto it = table.find(req.predicate);
  if (it == table.end()) {
    err << "unknown predicate '" << req.predicate << "'; expected one of:";
    for (const auto& name : predicate_names()) err << ' ' << name;
    err << '\n';
    return kInputError;
  }
  try {
    Context ctx = resolve(req);
    out << "S = " << ring_set(*ctx.ring, ctx.s().elements()) << '\n';
    return it->second(ctx, out);
  } catch (const ParseError& e) {
    err << req.instance_path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Precondition& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DisjointnessFailure& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace scomult::cli
