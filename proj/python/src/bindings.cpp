#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "starwalk/io.hpp"
#include "starwalk/ordering.hpp"
#include "starwalk/partition.hpp"
#include "starwalk/spectra.hpp"
#include "starwalk/trees.hpp"
#include "starwalk/verify.hpp"
#include "starwalk/walks.hpp"

namespace py = pybind11;
using namespace starwalk;

namespace {

py::int_ to_python(const BigInt& x) {
  PyObject* obj = PyLong_FromString(x.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_python(const MomentSequence& m) {
  py::list out;
  for (const BigInt& x : m.values) out.append(to_python(x));
  return out;
}

py::list to_python(const IntPolynomial& p) {
  py::list out;
  for (const BigInt& c : p.coefficients()) out.append(to_python(c));
  return out;
}

Partition partition_of(const std::vector<int>& parts) { return Partition::from_unsorted(parts); }

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["instance"] = r.instance;
  d["K"] = r.horizon;
  d["holds"] = r.holds;
  d["first_strict_witness"] = r.first_strict_witness;
  d["vacuous"] = r.vacuous;
  d["strict_required"] = r.strict_required;
  if (r.violation) {
    py::dict v;
    v["k"] = r.violation->k;
    v["lhs"] = to_python(r.violation->lhs);
    v["rhs"] = to_python(r.violation->rhs);
    v["reason"] = r.violation->reason;
    d["violation"] = v;
  } else {
    d["violation"] = py::none();
  }
  py::list details;
  for (const auto& sub : r.details) details.append(report_dict(sub));
  d["details"] = details;
  return d;
}

Suite suite_of(const std::string& name) {
  if (name == "quick") return Suite::Quick;
  if (name == "identities") return Suite::Identities;
  if (name == "inequalities") return Suite::Inequalities;
  if (name == "theorem") return Suite::Theorem;
  if (name == "all-walks") return Suite::AllWalks;
  if (name == "full") return Suite::Full;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact closed-walk counts, spectra and shortlex ordering of starlike trees";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("is_tree", &Graph::is_tree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("path", [](std::size_t n) { return make_path(n); }, py::arg("n"));
  m.def("starlike", [](const std::vector<int>& parts) { return make_starlike(partition_of(parts)).graph; },
        py::arg("parts"), "Starlike tree with center 0 and the given branch lengths");
  m.def("parse_tree", [](const std::string& text) {
    return make_starlike(parse_starlike_descriptor(text).partition).graph;
  }, py::arg("descriptor"));
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); },
        py::arg("text"));
  m.def("coalescence", &coalescence, py::arg("g"), py::arg("u"), py::arg("h"), py::arg("v"));
  m.def("trees_isomorphic", &trees_isomorphic);
  m.def("free_trees", &enumerate_free_trees, py::arg("n"));

  m.def("closed_walks", [](const Graph& g, int max_k, unsigned jobs) {
    MomentSequence s;
    {
      py::gil_scoped_release release;
      s = closed_walk_counts(g, max_k, jobs);
    }
    return to_python(s);
  }, py::arg("g"), py::arg("max_k"), py::arg("jobs") = 1, "M_0..M_K as Python ints");
  m.def("closed_walks_at", [](const Graph& g, Vertex v, int max_k) {
    return to_python(closed_walk_counts_at(g, v, max_k));
  }, py::arg("g"), py::arg("v"), py::arg("max_k"));
  m.def("all_walks", [](const Graph& g, int max_k) { return to_python(all_walk_counts(g, max_k)); },
        py::arg("g"), py::arg("max_k"));

  py::enum_<Relation>(m, "Relation")
      .value("StrictlyLess", Relation::StrictlyLess)
      .value("Equal", Relation::Equal)
      .value("StrictlyGreater", Relation::StrictlyGreater)
      .value("Incomparable", Relation::Incomparable)
      .value("WeaklyLessUndecided", Relation::WeaklyLessUndecided)
      .value("WeaklyGreaterUndecided", Relation::WeaklyGreaterUndecided);

  py::class_<DominanceVerdict>(m, "Verdict")
      .def_readonly("relation", &DominanceVerdict::relation)
      .def_readonly("K", &DominanceVerdict::horizon)
      .def_readonly("witness_strict", &DominanceVerdict::witness_strict)
      .def_readonly("witness_up", &DominanceVerdict::witness_up)
      .def_readonly("witness_down", &DominanceVerdict::witness_down)
      .def_readonly("certified", &DominanceVerdict::certified)
      .def("__repr__", [](const DominanceVerdict& v) {
        return "Verdict(" + std::string(to_string(v.relation)) + ", K=" + std::to_string(v.horizon) + ")";
      });

  m.def("compare", &moment_dominance, py::arg("g"), py::arg("h"), py::arg("max_k") = 50,
        py::call_guard<py::gil_scoped_release>());
  m.def("compare_starlike", [](const std::vector<int>& a, const std::vector<int>& b, bool certify, int max_k) {
    py::gil_scoped_release release;
    return compare_starlike(partition_of(a), partition_of(b), certify, max_k);
  }, py::arg("alpha"), py::arg("beta"), py::arg("certify") = false, py::arg("max_k") = 50);

  m.def("successor", [](const std::vector<int>& parts, int min_parts) -> py::object {
    const auto next = shortlex_successor(partition_of(parts), min_parts);
    if (!next) return py::none();
    return py::make_tuple(parts_of(next->first), std::string(to_string(next->second.tag)));
  }, py::arg("parts"), py::arg("min_parts") = 3, "(next partition, case name) or None at the maximum");
  m.def("shortlex_partitions", [](int n, int min_parts) {
    std::vector<std::vector<int>> out;
    for (const Partition& p : enumerate_shortlex(n, min_parts)) out.push_back(parts_of(p));
    return out;
  }, py::arg("n"), py::arg("min_parts") = 3);

  m.def("charpoly", [](const Graph& g) { return to_python(charpoly(g)); }, py::arg("g"),
        "Coefficients of det(xI - A), lowest degree first");
  m.def("spectral_radius", &spectral_radius, py::arg("g"), py::arg("tol") = 1e-10);
  m.def("eigenvalues", [](const Graph& g, double tol) { return eigenvalues(g, tol).eigenvalues; },
        py::arg("g"), py::arg("tol") = 1e-10);
  m.def("estrada_index", [](const Graph& g, double tol) {
    const EstradaIndex e = estrada_index(g, tol);
    return py::make_tuple(e.value, e.error_bound);
  }, py::arg("g"), py::arg("tol") = 1e-10, "(value, error bound)");
  m.def("compare_spectral_radii", [](const std::vector<int>& a, const std::vector<int>& b) {
    const auto c = compare_spectral_radii_exact(partition_of(a), partition_of(b));
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }, py::arg("alpha"), py::arg("beta"), "Exact sign of lambda_1(S(alpha)) - lambda_1(S(beta))");

  m.def("verify", [](const std::string& suite, int n_max, int max_k, unsigned jobs) {
    std::vector<CheckReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite(suite_of(suite), n_max, max_k, jobs);
    }
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
  }, py::arg("suite") = "quick", py::arg("n_max") = 14, py::arg("max_k") = 40, py::arg("jobs") = 1);

  m.def("incomparable_pairs", [](int n, int max_k, bool starlike_only, unsigned jobs) {
    std::vector<IncomparablePair> pairs;
    {
      py::gil_scoped_release release;
      pairs = starlike_only ? find_incomparable_starlike_pairs(n, max_k, jobs)
                            : find_incomparable_pairs(n, max_k, jobs);
    }
    py::list out;
    for (const auto& p : pairs) out.append(py::make_tuple(p.first, p.second, p.k_up, p.k_down));
    return out;
  }, py::arg("n"), py::arg("max_k") = 50, py::arg("starlike_only") = false, py::arg("jobs") = 1,
     "(first, second, k_up, k_down) for every crossing pair");
}
