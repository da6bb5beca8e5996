#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scomult/catalog.hpp"
#include "scomult/errors.hpp"
#include "scomult/ideals.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/localization.hpp"
#include "scomult/mcs.hpp"
#include "scomult/s_theory.hpp"
#include "scomult/submodules.hpp"
#include "scomult/verifier.hpp"

namespace py = pybind11;
using namespace scomult;

namespace {

using Elems = std::vector<Elem>;

// pybind11 holders cannot point at const, so Python sees these handles.
struct PyRing {
  RingPtr ptr;
  const Ring& operator*() const { return *ptr; }
};
struct PyModule {
  ModulePtr ptr;
  const Module& operator*() const { return *ptr; }
};

ElementSet to_set(const Elems& xs) { return ElementSet::from(xs); }

Mcs mcs_of(const Ring& r, const Elems& s) { return validate_mcs(r, to_set(s)); }

std::vector<Elems> listing(const std::vector<ElementSet>& sets) {
  std::vector<Elems> out;
  for (auto s : sets) out.push_back(s.elements());
  return out;
}

py::object status_of(const PredicateResult& r) {
  py::dict d;
  d["status"] = r.status == Status::holds ? "holds" : r.status == Status::fails ? "fails" : "disjointness_failure";
  d["witness"] = r.witness ? py::cast(r.witness->s) : py::none();
  return std::move(d);
}

py::list reports(const std::vector<StatementReport>& rs) {
  py::list out;
  for (const auto& r : rs) {
    py::dict d;
    d["id"] = r.id;
    d["verdict"] = std::string(verdict_name(r.verdict));
    d["instances"] = r.instances;
    d["candidates"] = r.candidates;
    d["ms"] = r.ms;
    d["notes"] = r.notes;
    d["counterexample"] = r.counterexample ? py::cast(r.counterexample->instance) : py::none();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_scomult, m) {
  m.doc() = "Finite rings, modules and multiplicatively closed sets";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DisjointnessFailure>(m, "DisjointnessFailure", PyExc_ValueError);

  py::class_<PyRing>(m, "Ring")
      .def_property_readonly("order", [](const PyRing& r) { return r.ptr->order(); })
      .def_property_readonly("name", [](const PyRing& r) { return r.ptr->name(); })
      .def("add", [](const PyRing& r, Elem a, Elem b) { return r.ptr->add(a, b); })
      .def("mul", [](const PyRing& r, Elem a, Elem b) { return r.ptr->mul(a, b); })
      .def("label", [](const PyRing& r, Elem a) { return r.ptr->label(a); })
      .def("__eq__", [](const PyRing& a, const PyRing& b) { return *a.ptr == *b.ptr; })
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ptr->name() + ">"; });

  py::class_<PyModule>(m, "Module")
      .def_property_readonly("order", [](const PyModule& x) { return x.ptr->order(); })
      .def_property_readonly("name", [](const PyModule& x) { return x.ptr->name(); })
      .def_property_readonly("ring", [](const PyModule& x) { return PyRing{x.ptr->ring_ptr()}; })
      .def("add", [](const PyModule& x, Elem a, Elem b) { return x.ptr->add(a, b); })
      .def("act", [](const PyModule& x, Elem r, Elem a) { return x.ptr->act(r, a); })
      .def("label", [](const PyModule& x, Elem a) { return x.ptr->label(a); })
      .def("__eq__", [](const PyModule& a, const PyModule& b) { return *a.ptr == *b.ptr; })
      .def("__repr__", [](const PyModule& x) { return "<Module " + x.ptr->name() + ">"; });

  m.def("zn", [](unsigned n) { return PyRing{make_zn_ring({n})}; }, py::arg("n"));
  m.def("zn_product", [](std::vector<unsigned> moduli) { return PyRing{make_zn_ring(std::move(moduli))}; });
  m.def("self_module", [](const PyRing& r) { return PyModule{self_module(r.ptr)}; });
  m.def(
      "divisor_module", [](const PyRing& r, unsigned d) { return PyModule{divisor_module(r.ptr, d)}; },
      py::arg("ring"), py::arg("d"));
  m.def("direct_sum", [](const PyModule& a, const PyModule& b) { return PyModule{direct_sum(*a, *b)}; });

  m.def("ideals", [](const PyRing& r) {
    std::vector<ElementSet> out;
    for (const auto& i : enumerate_ideals(*r)) out.push_back(i.elements);
    return listing(out);
  });
  m.def("submodules", [](const PyModule& x) { return listing(enumerate_submodules(*x)); });
  m.def("mcs", [](const PyRing& r) {
    std::vector<ElementSet> out;
    for (const auto& s : enumerate_mcs(*r)) out.push_back(s.elements());
    return listing(out);
  });
  m.def("saturation", [](const PyRing& r, const Elems& s) { return saturation(*r, mcs_of(*r, s)).sorted(); });
  m.def("localized_order",
        [](const PyRing& r, const Elems& s) { return localize_ring(r.ptr, mcs_of(*r, s)).ring->order(); });

  m.def("is_comultiplication", [](const PyModule& x) { return is_comultiplication(*make_lattice(x.ptr)); });
  m.def("is_multiplication", [](const PyModule& x) { return is_multiplication(*make_lattice(x.ptr)); });
  m.def(
      "is_s_comultiplication",
      [](const PyModule& x, const Elems& s) {
        const auto r = is_s_comultiplication(*make_lattice(x.ptr), mcs_of(x.ptr->ring(), s));
        return py::make_tuple(r.holds, r.witnesses);
      },
      py::arg("module"), py::arg("s"), "(holds, per-submodule witness or None)");
  m.def("lemma_forms", [](const PyModule& x, const Elems& s) {
    const Triple t = lemma_equivalence_bundle(*make_lattice(x.ptr), mcs_of(x.ptr->ring(), s));
    return py::make_tuple(t.first, t.second, t.third);
  });
  m.def("is_s_prime", [](const PyModule& x, const Elems& p, const Elems& s) {
    return status_of(is_s_prime_submodule(*x, to_set(p), mcs_of(x.ptr->ring(), s)));
  });
  m.def("is_s_second", [](const PyModule& x, const Elems& n, const Elems& s) {
    return status_of(is_s_second(*x, to_set(n), mcs_of(x.ptr->ring(), s)));
  });
  m.def("is_s_cyclic", [](const PyModule& x, const Elems& s) -> py::object {
    const auto w = is_s_cyclic(*x, mcs_of(x.ptr->ring(), s));
    if (!w) return py::none();
    return py::make_tuple(w->s, w->element);
  });

  m.def("parse_instance", [](const std::string& text) {
    const InstanceBag bag = parse_instance_text(text);
    py::dict rings, modules;
    for (const auto& [name, r] : bag.rings) rings[py::str(name)] = PyRing{r};
    for (const auto& [name, x] : bag.modules) modules[py::str(name)] = PyModule{x};
    py::dict out;
    out["rings"] = rings;
    out["modules"] = modules;
    return out;
  });

  m.def("statement_ids", [] {
    std::vector<std::string> out;
    for (const auto& s : statements()) out.emplace_back(s.id);
    return out;
  });
  m.def(
      "verify",
      [](std::vector<std::string> ids, unsigned max_ring, unsigned max_module, const std::string& mutant,
         unsigned threads) {
        Mutant mu = Mutant::none;
        if (!mutant.empty()) {
          const auto found = mutant_from_name(mutant);
          if (!found) throw py::value_error("unknown mutant " + mutant);
          mu = *found;
        }
        CatalogParams params;
        params.max_ring = max_ring;
        params.max_module = max_module;
        const Catalog cat = generate_catalog(params);
        std::vector<StatementReport> rs;
        {
          py::gil_scoped_release release;
          rs = verify_all(cat, mu, ids, threads);
        }
        return reports(rs);
      },
      py::arg("statements") = std::vector<std::string>{}, py::arg("max_ring") = 12u, py::arg("max_module") = 16u,
      py::arg("mutant") = "", py::arg("threads") = 0u);
}
