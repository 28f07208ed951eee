#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "persista/datasets.hpp"
#include "persista/io.hpp"
#include "persista/persistence.hpp"
#include "persista/vr.hpp"
#include "persista/wrcf.hpp"

namespace py = pybind11;
using namespace persista;

namespace {

py::list bars_as_tuples(const Barcode& b, int d) {
    py::list out;
    for (const Bar& bar : b.dim(d))
        out.append(py::make_tuple(bar.birth, bar.finite() ? py::object(py::float_(bar.death))
                                                          : py::object(py::none())));
    return out;
}

}  // namespace

PYBIND11_MODULE(_persista, m) {
    m.doc() = "Persistent homology of weighted networks and point clouds";

    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<WeightOrder>(m, "WeightOrder")
        .value("Ascending", WeightOrder::Ascending)
        .value("Descending", WeightOrder::Descending);

    py::enum_<Metric>(m, "Metric")
        .value("Euclidean", Metric::Euclidean)
        .value("HaversineKm", Metric::HaversineKm);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init<>())
        .def("add_node", &WeightedGraph::add_node)
        .def("add_edge",
             py::overload_cast<const std::string&, const std::string&, double>(
                 &WeightedGraph::add_edge))
        .def("node_count", &WeightedGraph::node_count)
        .def("labels", &WeightedGraph::labels)
        .def("remove_edges",
             [](const WeightedGraph& g,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
                 return g.remove_edges(pairs);
             });

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init([](bool geographic) {
                 return PointCloud(geographic ? CoordinateKind::Geographic
                                              : CoordinateKind::Planar);
             }),
             py::arg("geographic") = false)
        .def("add_point", &PointCloud::add_point, py::arg("c0"), py::arg("c1"),
             py::arg("label") = "")
        .def("__len__", &PointCloud::size);

    py::class_<FilteredComplex>(m, "FilteredComplex")
        .def("__len__", &FilteredComplex::size)
        .def("max_cell_dim", &FilteredComplex::max_cell_dim)
        .def("cells", [](const FilteredComplex& K) {
            py::list out;
            for (const auto& c : K.cells())
                out.append(py::make_tuple(c.simplex.vertices, c.value));
            return out;
        });

    py::class_<Barcode>(m, "Barcode")
        .def("bars", &bars_as_tuples, py::arg("dim"))
        .def("betti_at", [](const Barcode& b, double t, int dim) { return betti_at(b, t, dim); });

    m.def("parse_graph", [](const std::string& text) { return io::parse_graph(text); });
    m.def(
        "build_wrcf",
        [](const WeightedGraph& g, WeightOrder order, int max_dim) {
            return build_wrcf(g, order, max_dim);
        },
        py::arg("graph"), py::arg("order") = WeightOrder::Ascending, py::arg("max_dim") = 1);
    m.def(
        "build_vr",
        [](const PointCloud& pc, Metric metric, double eps_max, int max_dim) {
            if (eps_max <= 0) eps_max = enclosing_radius(pairwise_distances(pc, metric));
            return build_vr(pc, metric, eps_max, max_dim);
        },
        py::arg("cloud"), py::arg("metric") = Metric::Euclidean, py::arg("eps_max") = 0.0,
        py::arg("max_dim") = 1);
    m.def(
        "barcode",
        [](const FilteredComplex& K, int max_dim, bool include_zero_length) {
            return barcode(K, max_dim, include_zero_length);
        },
        py::arg("complex"), py::arg("max_dim") = 1, py::arg("include_zero_length") = false);
    m.def(
        "barcode_json",
        [](const FilteredComplex& K, int max_dim, const std::string& value_kind, bool reps) {
            auto R = reduce(boundary_matrix(K));
            Barcode b = barcode_from_reduction(R, max_dim);
            return io::write_barcode(
                io::make_document(b, value_kind, reps ? &R : nullptr, reps ? &K : nullptr));
        },
        py::arg("complex"), py::arg("max_dim") = 1, py::arg("value_kind") = "euclidean",
        py::arg("reps") = false);
    m.def("eu_graph", &datasets::eu_graph);
    m.def("synthetic_annulus", &datasets::synthetic_annulus, py::arg("n"), py::arg("r_inner"),
          py::arg("r_outer"), py::arg("seed"));
}
