#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primewit/bounds.hpp"
#include "primewit/chains.hpp"
#include "primewit/extraction.hpp"
#include "primewit/families.hpp"
#include "primewit/graph6.hpp"
#include "primewit/homogeneous.hpp"
#include "primewit/isomorphism.hpp"
#include "primewit/serialize.hpp"

namespace py = pybind11;
using namespace primewit;

namespace {

FamilyId spec_or_throw(const std::string& spec) {
  const auto id = parse_family_spec(spec);
  if (!id) throw py::value_error("not a family spec: '" + spec + "'");
  return *id;
}

std::optional<std::vector<int>> set_or_none(const std::optional<VertexSet>& s) {
  if (!s) return std::nullopt;
  return s->to_vector();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prime graphs: primality, chains, family generators and witness extraction";

  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("order"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return emit_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("is_prime", [](const Graph& g) { return is_prime(g); });
  m.def("find_homogeneous_set",
        [](const Graph& g) { return set_or_none(find_homogeneous_set(g)); });
  m.def("is_homogeneous_set", [](const Graph& g, const std::vector<int>& s) {
    return is_homogeneous_set(g, VertexSet(g.order(), std::span<const int>(s)));
  });
  m.def("are_isomorphic", &are_isomorphic);

  m.def("generate", [](const std::string& spec) { return generate(spec_or_throw(spec)).graph; },
        py::arg("spec"));
  m.def("find_induced_copy", [](const Graph& host, const std::string& spec) {
    return find_induced_copy(host, spec_or_throw(spec));
  });

  m.def(
      "find_chain",
      [](const Graph& g, std::pair<int, int> source, int v) -> std::optional<std::vector<int>> {
        const auto c = find_chain(g, VertexSet(g.order(), {source.first, source.second}), v);
        if (!c) return std::nullopt;
        return c->seq;
      },
      py::arg("graph"), py::arg("source"), py::arg("target"));
  m.def("is_chain", [](const Graph& g, const std::vector<int>& seq) {
    return validate_chain(g, seq).ok;
  });
  m.def("chain_induces_prime", [](const Graph& g, const std::vector<int>& seq) {
    return chain_induces_prime(g, seq);
  });
  m.def("trim_chain_to_prime", [](const Graph& g, const std::vector<int>& seq) {
    return trim_chain_to_prime(g, Chain{seq, std::nullopt}).seq;
  });

  m.def("bounds", [](int n) {
    const BoundSpec b = bounds(n);
    py::dict d;
    d["n"] = b.n;
    d["half_split"] = b.half_split.to_string();
    std::vector<std::string> h;
    for (const auto& x : b.matching) h.push_back(x.to_string());
    d["matching"] = h;
    d["stable_size"] = b.stable_size.to_string();
    d["order"] = b.order.to_string();
    return d;
  });

  m.def(
      "_unavoidable_witness_json",
      [](const Graph& g, int n, bool fast_path) {
        DriverOptions opts;
        opts.fast_path = fast_path;
        DriverResult r;
        {
          py::gil_scoped_release release;
          r = unavoidable_witness(g, n, opts);
        }
        return to_json(r).dump();
      },
      py::arg("graph"), py::arg("n"), py::arg("fast_path") = true);
  m.def("_validate_witness_json", [](const Graph& g, const std::string& text) {
    return validate_witness(g, witness_from_json(nlohmann::ordered_json::parse(text)));
  });
}
