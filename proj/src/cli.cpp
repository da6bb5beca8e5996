#include "scomult/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "scomult/errors.hpp"
#include "scomult/ideals.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/lattice.hpp"
#include "scomult/mcs.hpp"
#include "scomult/verifier.hpp"

namespace scomult::cli {

namespace {

using nlohmann::json;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json report_entry(const StatementReport& r) {
  json j{{"id", r.id},
         {"verdict", std::string(verdict_name(r.verdict))},
         {"instances", r.instances},
         {"candidates", r.candidates},
         {"failures", r.failures},
         {"ms", r.ms},
         {"notes", r.notes}};
  if (!r.tags.empty()) j["tags"] = r.tags;
  if (r.counterexample)
    j["counterexample"] = {{"instance", r.counterexample->instance},
                           {"detail", r.counterexample->detail},
                           {"revalidated", r.counterexample->revalidated}};
  return j;
}

struct VerifyRequest {
  std::string statements;
  unsigned max_ring = 12;
  unsigned max_module = 16;
  std::string rings;
  std::string report;
  bool mutation = false;
  std::string mutant;
  unsigned threads = 0;
};

void print_line(std::ostream& out, const StatementReport& r, std::string_view mutant) {
  out << std::left << std::setw(7) << r.id << ' ' << std::setw(7) << verdict_name(r.verdict) << ' '
      << std::right << std::setw(7) << r.instances << " instances " << std::fixed << std::setprecision(1)
      << std::setw(8) << r.ms << " ms";
  if (!mutant.empty()) out << "  [" << mutant << ']';
  if (r.counterexample) out << "  counterexample" << (r.counterexample->revalidated ? " (revalidated)" : "");
  out << '\n';
}

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
  std::vector<Mutant> mutants{Mutant::none};
  if (req.mutation) mutants.assign(kAllMutants.begin(), kAllMutants.end());
  if (!req.mutant.empty()) {
    const auto m = mutant_from_name(req.mutant);
    if (!m) {
      err << "unknown mutant '" << req.mutant << "'\n";
      return kInputError;
    }
    mutants = {*m};
  }
  const auto ids = split_csv(req.statements);
  for (const auto& id : ids) {
    try {
      find_statement(id);
    } catch (const UnknownStatement&) {
      err << "unknown statement '" << id << "'\n";
      return kInputError;
    }
  }

  CatalogParams params;
  params.max_ring = req.max_ring;
  params.max_module = req.max_module;
  params.ring_names = split_csv(req.rings);
  Catalog catalog;
  try {
    catalog = generate_catalog(params);
  } catch (const std::exception& e) {
    err << "bad catalog parameters: " << e.what() << '\n';
    return kInputError;
  }
  out << "catalog: " << catalog.rings.size() << " rings, " << catalog.modules.size() << " modules, "
      << catalog.homs.size() << " homs\n";

  json doc;
  doc["run"] = {{"params",
                 {{"max_ring", req.max_ring},
                  {"max_module", req.max_module},
                  {"rings", params.ring_names},
                  {"statements", ids},
                  {"mutation", req.mutation || !req.mutant.empty()}}},
                {"timestamp", utc_now()}};
  doc["statements"] = json::array();

  bool any_fail = false, any_live = false;
  for (Mutant m : mutants) {
    const std::string_view name = m == Mutant::none ? std::string_view{} : mutant_name(m);
    for (const auto& r : verify_all(catalog, m, ids, req.threads)) {
      print_line(out, r, name);
      any_fail = any_fail || r.verdict == Verdict::fail;
      any_live = any_live || r.verdict != Verdict::vacuous;
      json entry = report_entry(r);
      if (m != Mutant::none) entry["mutant"] = std::string(name);
      doc["statements"].push_back(std::move(entry));
    }
  }

  if (!req.report.empty()) {
    std::ofstream file(req.report);
    if (!file) {
      err << "cannot write report to " << req.report << '\n';
      return kInputError;
    }
    file << doc.dump(2) << '\n';
  }
  if (any_fail) return kFalse;
  return any_live ? kTrue : kFalse;
}

}  // namespace

int cmd_enumerate(const std::string& instance_path, const std::string& what, const std::string& owner,
                  std::ostream& out, std::ostream& err) {
  try {
    const InstanceBag bag = parse_instance_file(instance_path);
    if (what == "submodules") {
      const ModulePtr m = owner.empty() ? bag.first_module() : bag.module(owner);
      const auto lattice = make_lattice(m);
      for (ElementSet n : lattice->submodules()) {
        out << '{';
        bool first = true;
        for (Elem x : n) {
          out << (first ? "" : ", ") << m->label(x);
          first = false;
        }
        out << "}\n";
      }
      return kTrue;
    }
    RingPtr ring;
    if (!owner.empty()) {
      bool found = false;
      for (const auto& [name, r] : bag.rings)
        if (name == owner) ring = r, found = true;
      if (!found) ring = bag.module(owner)->ring_ptr();
    } else if (!bag.rings.empty()) {
      ring = bag.rings.front().second;
    } else {
      ring = bag.first_module()->ring_ptr();
    }
    auto print = [&](ElementSet set) {
      out << '{';
      bool first = true;
      for (Elem x : set) {
        out << (first ? "" : ", ") << ring->label(x);
        first = false;
      }
      out << "}\n";
    };
    if (what == "ideals") {
      for (const auto& i : enumerate_ideals(*ring)) print(i.elements);
      return kTrue;
    }
    if (what == "mcs") {
      for (const auto& s : enumerate_mcs(*ring)) print(s.elements());
      return kTrue;
    }
    err << "enumerate: expected ideals, submodules or mcs, got '" << what << "'\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << instance_path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite S-comultiplication modules: predicates, enumeration and exhaustive verification"};
  app.require_subcommand(1);

  CheckRequest check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate one predicate on an instance file");
  check_cmd->add_option("instance", check.instance_path, "Instance file")->required();
  std::string predicates_help = "One of:";
  for (const auto& p : predicate_names()) predicates_help += " " + p;
  check_cmd->add_option("predicate", check.predicate, predicates_help)->required();
  check_cmd->add_option("--mcs", check.mcs, "Multiplicatively closed set literal, e.g. \"{1,3}\"");
  check_cmd->add_option("--module", check.module, "Module name");
  check_cmd->add_option("--submodule", check.submodule, "Submodule name or element list");
  check_cmd->add_option("--ideal", check.ideal, "Ideal name or element list");
  check_cmd->add_option("--hom", check.hom, "Hom name");

  VerifyRequest verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every statement over the generated catalog");
  verify_cmd->add_option("--statements", verify.statements, "Comma-separated statement ids");
  verify_cmd->add_option("--max-ring", verify.max_ring, "Largest ring order")->check(CLI::Range(2u, 64u));
  verify_cmd->add_option("--max-module", verify.max_module, "Largest module carrier")->check(CLI::Range(1u, 64u));
  verify_cmd->add_option("--rings", verify.rings, "Comma-separated ring names, e.g. Z6,Z2xZ2");
  verify_cmd->add_option("--report", verify.report, "Write the JSON report here");
  verify_cmd->add_flag("--mutation", verify.mutation, "Run under every shipped mutant");
  verify_cmd->add_option("--mutant", verify.mutant, "Run under one mutant");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");

  std::string enum_path, enum_what, enum_owner;
  auto* enum_cmd = app.add_subcommand("enumerate", "List ideals, submodules or m.c.s. in canonical order");
  enum_cmd->add_option("instance", enum_path, "Instance file")->required();
  enum_cmd->add_option("what", enum_what, "ideals | submodules | mcs")->required();
  enum_cmd->add_option("--of", enum_owner, "Ring or module name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kTrue : kInputError;
  }

  if (*check_cmd) return cmd_check(check, out, err);
  if (*verify_cmd) return cmd_verify(verify, out, err);
  return cmd_enumerate(enum_path, enum_what, enum_owner, out, err);
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace scomult::cli
