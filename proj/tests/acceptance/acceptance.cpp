// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 when
// every selected criterion passes.
#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "scomult/catalog.hpp"
#include "scomult/errors.hpp"
#include "scomult/ideals.hpp"
#include "scomult/localization.hpp"
#include "scomult/mcs.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"
#include "scomult/verifier.hpp"
#include "scomult/witness_check.hpp"

using namespace scomult;

namespace {

constexpr double kFullSuiteBudgetSeconds = 300.0;
constexpr std::size_t kMinNonVacuous = 20;
constexpr std::size_t kStatementCount = 26;

struct Result {
  bool pass = false;
  std::string detail;
};

const Catalog& catalog() {
  static const Catalog c = generate_catalog();
  return c;
}

const std::vector<StatementReport>& default_reports() {
  static const std::vector<StatementReport> r = verify_all(catalog());
  return r;
}

const StatementReport& report(const std::string& id) {
  for (const auto& r : default_reports())
    if (r.id == id) return r;
  throw UnknownStatement(id);
}

Result full_suite() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_all(catalog(), Mutant::none, {}, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t fails = 0, live = 0;
  for (const auto& r : reports) {
    fails += r.verdict == Verdict::fail;
    live += r.verdict == Verdict::pass;
  }
  std::ostringstream os;
  os << reports.size() << " reports, " << fails << " fail, " << live << " non-vacuous, " << seconds
     << " s on one thread";
  return {reports.size() == kStatementCount && fails == 0 && live >= kMinNonVacuous &&
              seconds <= kFullSuiteBudgetSeconds,
          os.str()};
}

Result lemma_equivalence() {
  std::size_t pairs = 0, disagree = 0;
  for (const auto& cm : catalog().modules)
    for (const auto& s : catalog().rings[cm.ring].mcs) {
      ++pairs;
      disagree += !lemma_equivalence_bundle(*cm.lattice, s).agree();
    }
  const auto& r = report("L-EQ");
  std::ostringstream os;
  os << pairs << " (module, S) pairs, " << disagree << " disagreements; L-EQ " << verdict_name(r.verdict);
  return {disagree == 0 && pairs > 0 && r.verdict == Verdict::pass && r.instances == pairs, os.str()};
}

using Bits = std::uint64_t;

std::set<Bits> scan(std::size_t n, const std::function<bool(Bits)>& keep) {
  std::set<Bits> out;
  for (Bits s = 0; s < (Bits{1} << n); ++s)
    if (keep(s)) out.insert(s);
  return out;
}

bool has(Bits s, Elem x) { return (s >> x) & 1u; }

Result oracle_equivalence() {
  std::size_t rings = 0, modules = 0, mismatches = 0;
  for (const auto& cr : catalog().rings) {
    const Ring& r = *cr.ring;
    if (r.order() > 8) continue;
    ++rings;
    const auto expected = scan(r.order(), [&](Bits s) {
      if (!has(s, r.zero())) return false;
      for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = 0; b < r.order(); ++b)
          if (has(s, a) && ((has(s, b) && !has(s, r.sub(a, b))) || !has(s, r.mul(b, a)))) return false;
      return true;
    });
    std::set<Bits> got;
    for (const auto& i : enumerate_ideals(r)) got.insert(i.elements.bits());
    mismatches += got != expected;
  }
  for (const auto& cm : catalog().modules) {
    const Module& m = *cm.module;
    if (m.order() > 16) continue;
    ++modules;
    const auto expected = scan(m.order(), [&](Bits s) {
      if (!has(s, m.zero())) return false;
      for (Elem a = 0; a < m.order(); ++a) {
        if (!has(s, a)) continue;
        for (Elem b = 0; b < m.order(); ++b)
          if (has(s, b) && !has(s, m.sub(a, b))) return false;
        for (Elem x = 0; x < m.ring().order(); ++x)
          if (!has(s, m.act(x, a))) return false;
      }
      return true;
    });
    std::set<Bits> got;
    for (auto n : enumerate_submodules(m)) got.insert(n.bits());
    mismatches += got != expected;
  }
  std::ostringstream os;
  os << rings << " rings, " << modules << " modules, " << mismatches << " mismatches";
  return {mismatches == 0 && rings > 0 && modules > 0, os.str()};
}

Result known_instances() {
  std::vector<std::string> misses;
  for (unsigned n = 2; n <= 30; ++n)
    if (!is_comultiplication(*make_lattice(self_module(make_zn_ring({n})))))
      misses.push_back("Z" + std::to_string(n) + " not comultiplication");

  const auto f2 = make_zn_ring({2});
  const auto v = make_lattice(direct_sum(*self_module(f2), *self_module(f2)));
  if (is_comultiplication(*v)) misses.push_back("Z2xZ2 over Z2 comultiplication: expected false, got true");
  // The pinned value is true; the lines {0,(1,0)} are not IM for either
  // ideal of Z2, so the computed value is false.
  if (!is_multiplication(*v)) misses.push_back("Z2xZ2 over Z2 multiplication: expected true, got false");

  const auto z6 = make_zn_ring({6});
  const Mcs s = validate_mcs(*z6, ElementSet{1, 3});
  if (saturation(*z6, s).elements() != ElementSet{1, 3, 5}) misses.push_back("saturation of {1,3} in Z6");
  const auto order = localize_ring(z6, s).ring->order();
  if (order != 2) misses.push_back("|S^-1 Z6| = " + std::to_string(order));

  std::string detail = misses.empty() ? "all pins match" : "";
  for (const auto& m : misses) detail += (detail.empty() ? "" : "; ") + m;
  return {misses.empty(), detail};
}

Result reduction_laws() {
  std::size_t checked = 0, differ = 0;
  for (const auto& cm : catalog().modules) {
    const Module& m = *cm.module;
    const Mcs one = trivial_mcs(m.ring());
    differ += is_s_comultiplication(*cm.lattice, one).holds != is_comultiplication(*cm.lattice);
    differ += is_s_cyclic(m, one).has_value() != is_cyclic(m);
    checked += 2;
    for (ElementSet n : cm.lattice->submodules()) {
      const auto prime = is_s_prime_submodule(m, n, one);
      if (prime.status != Status::disjointness_failure) {
        differ += prime.holds() != is_prime_submodule(m, n);
        ++checked;
      }
      if (n.size() > 1) {
        const auto second = is_s_second(m, n, one);
        if (second.status != Status::disjointness_failure) {
          differ += second.holds() != is_second(m, n);
          ++checked;
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " comparisons, " << differ << " differ";
  return {differ == 0 && checked > 0, os.str()};
}

Result dual_nakayama() {
  const auto& tdu = report("T-DU");
  const auto& cdu = report("C-DU");
  std::ostringstream os;
  os << "T-DU " << verdict_name(tdu.verdict) << " (" << tdu.instances << " of " << tdu.candidates
     << " qualify), C-DU " << verdict_name(cdu.verdict) << " (" << cdu.instances << " of " << cdu.candidates
     << "); Jac(R) is nilpotent for finite R, so (0:_M I) = 0 with I in Jac(R) forces M = 0";
  return {tdu.failures == 0 && cdu.failures == 0 && tdu.instances >= 1, os.str()};
}

Result mutation_sensitivity() {
  std::string detail;
  bool all = true;
  for (Mutant m : kAllMutants) {
    std::string killers;
    bool revalidated = true;
    for (const auto& r : verify_all(catalog(), m)) {
      if (r.verdict != Verdict::fail) continue;
      killers += (killers.empty() ? "" : ",") + r.id;
      revalidated = revalidated && r.counterexample && r.counterexample->revalidated;
    }
    all = all && !killers.empty() && revalidated;
    detail += (detail.empty() ? "" : "; ") + std::string(mutant_name(m)) + " -> " +
              (killers.empty() ? std::string("survived") : killers);
  }
  return {all, detail};
}

Result witness_revalidation() {
  const WitnessAudit audit = audit_witnesses(catalog());
  std::ostringstream os;
  os << audit.checked - audit.failed << "/" << audit.checked << " witnesses re-validate";
  if (!audit.failures.empty()) os << "; first: " << audit.failures.front();
  return {audit.failed == 0 && audit.checked > 0, os.str()};
}

struct Criterion {
  int number;
  const char* title;
  Result (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "full suite", full_suite},
    {2, "lemma equivalence", lemma_equivalence},
    {3, "oracle equivalence", oracle_equivalence},
    {4, "known-instance pins", known_instances},
    {5, "reduction laws", reduction_laws},
    {6, "dual Nakayama", dual_nakayama},
    {7, "mutation sensitivity", mutation_sensitivity},
    {8, "witness re-validation", witness_revalidation},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c.number << " " << (r.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
              << r.detail << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
