#include "scomult/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "scomult/errors.hpp"
#include "statements.hpp"

namespace scomult {

const SubmoduleLattice& Instance::lattice(const ModulePtr& m) const {
  for (const auto& l : lattices_)
    if (l->module_ptr() == m) return *l;
  lattices_.push_back(make_lattice(m));
  return *lattices_.back();
}

void Instance::remember(LatticePtr lattice) const {
  for (const auto& l : lattices_)
    if (l->module_ptr() == lattice->module_ptr()) return;
  lattices_.push_back(std::move(lattice));
}

std::string serialize(const Instance& inst) {
  InstanceWriter w;
  for (const auto& m : inst.modules) w.module(m, false);
  for (const auto& [ring, s] : inst.mcs) w.mcs(ring, s);
  for (ElementSet i : inst.ideals) w.ideal(inst.modules.empty() ? inst.mcs.at(0).first : inst.modules[0]->ring_ptr(), i);
  for (ElementSet n : inst.submodules) w.submodule(inst.modules.at(0), n);
  if (inst.hom) w.hom(*inst.hom);
  return w.text();
}

Instance deserialize(const InstanceBag& bag) {
  Instance inst;
  for (const auto& [name, m] : bag.modules) inst.modules.push_back(m);
  for (const auto& [name, e] : bag.mcs) inst.mcs.emplace_back(e.ring, e.mcs);
  for (const auto& [name, e] : bag.ideals) inst.ideals.push_back(e.elements);
  for (const auto& [name, e] : bag.submodules) inst.submodules.push_back(e.elements);
  if (!bag.homs.empty()) inst.hom = bag.homs.front().second;
  return inst;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

const std::vector<Statement>& statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> out;
    detail::register_lemma(out);
    detail::register_maps(out);
    detail::register_structure(out);
    detail::register_cyclic(out);
    detail::register_second(out);
    return out;
  }();
  return all;
}

const Statement& find_statement(std::string_view id) {
  for (const auto& s : statements())
    if (s.id == id) return s;
  throw UnknownStatement(std::string(id));
}

namespace {

Outcome guarded_check(const Statement& st, const Instance& inst, Mutant mutant) {
  try {
    return st.check(inst, mutant);
  } catch (const std::exception& e) {
    // A predicate that cannot even be evaluated on a qualifying instance
    // is a failure of the statement under test, not a skip.
    Outcome out;
    out.qualifies = true;
    out.holds = false;
    out.detail = std::string("evaluation threw: ") + e.what();
    return out;
  }
}

}  // namespace

StatementReport verify(std::string_view id, const Catalog& catalog, Mutant mutant) {
  const Statement& st = find_statement(id);
  const auto start = std::chrono::steady_clock::now();
  StatementReport report;
  report.id = std::string(st.id);
  st.enumerate(catalog, [&](const Instance& inst) {
    ++report.candidates;
    Outcome out = guarded_check(st, inst, mutant);
    if (!out.qualifies) return;
    ++report.instances;
    for (auto& t : out.tags) ++report.tags[t];
    if (out.holds) return;
    ++report.failures;
    if (!report.counterexample) {
      Counterexample ce;
      ce.instance = serialize(inst);
      ce.detail = out.detail;
      ce.revalidated = revalidate(st.id, ce.instance, mutant);
      report.counterexample = std::move(ce);
    }
  });
  report.verdict = report.failures ? Verdict::fail : report.instances ? Verdict::pass : Verdict::vacuous;
  std::string notes;
  for (const auto& [tag, n] : report.tags) {
    if (!notes.empty()) notes += "; ";
    notes += tag + ": " + std::to_string(n);
  }
  if (report.failures) notes += std::string(notes.empty() ? "" : "; ") + "failures: " + std::to_string(report.failures);
  report.notes = std::move(notes);
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<StatementReport> verify_all(const Catalog& catalog, Mutant mutant, const std::vector<std::string>& ids,
                                        unsigned threads) {
  std::vector<std::string> chosen;
  for (const auto& st : statements())
    if (ids.empty() || std::find(ids.begin(), ids.end(), st.id) != ids.end()) chosen.emplace_back(st.id);
  for (const auto& id : ids) find_statement(id);  // reject unknown ids up front

  std::vector<StatementReport> reports(chosen.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, chosen.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      try {
        reports[i] = verify(chosen[i], catalog, mutant);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return reports;
}

bool qualifies(std::string_view id, const Instance& inst) {
  return find_statement(id).check(inst, Mutant::none).qualifies;
}

bool revalidate(std::string_view id, const std::string& instance_text, Mutant mutant) {
  const Statement& st = find_statement(id);
  try {
    const Instance inst = deserialize(parse_instance_text(instance_text));
    const Outcome out = guarded_check(st, inst, mutant);
    return out.qualifies && !out.holds;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace scomult
