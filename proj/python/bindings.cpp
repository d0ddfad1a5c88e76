#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "levelanc/baselines.hpp"
#include "levelanc/bench.hpp"
#include "levelanc/generate.hpp"
#include "levelanc/index.hpp"
#include "levelanc/query.hpp"
#include "levelanc/tree.hpp"

namespace py = pybind11;
using namespace levelanc;

namespace {

template <typename T>
std::vector<T> to_vector(std::span<const T> s) {
    return std::vector<T>(s.begin(), s.end());
}

TreeGenSpec make_spec(const std::string& family, std::size_t n, std::uint64_t seed) {
    TreeGenSpec spec = parse_family(family);
    spec.n = n;
    spec.seed = seed;
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Level ancestor queries via pre-order labels and per-depth predecessor search";

    static py::exception<Error> exc(m, "LevelAncestorError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::object err = exc;
            py::object instance = err(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(exc.ptr(), instance.ptr());
        }
    });

    py::class_<Tree>(m, "Tree")
        .def_static("from_parent_array", [](const std::vector<NodeId>& parents) {
            return Tree::from_parent_array(parents);
        }, py::arg("parents"))
        .def_static("from_edge_list", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
            std::vector<Edge> es;
            es.reserve(edges.size());
            for (const auto& [p, c] : edges) {
                es.push_back({p, c});
            }
            return Tree::from_edge_list(n, es);
        }, py::arg("n"), py::arg("edges"))
        .def("__len__", &Tree::size)
        .def_property_readonly("root", &Tree::root)
        .def_property_readonly("max_depth", &Tree::max_depth)
        .def_property_readonly("parents", [](const Tree& t) { return to_vector(t.parents()); })
        .def_property_readonly("depths", [](const Tree& t) { return to_vector(t.depths()); })
        .def("parent", &Tree::parent, py::arg("v"))
        .def("depth", &Tree::depth, py::arg("v"))
        .def("children", [](const Tree& t, NodeId v) { return to_vector(t.children(v)); }, py::arg("v"));

    m.def("generate_parents", [](const std::string& family, std::size_t n, std::uint64_t seed) {
        return generate_parents(make_spec(family, n, seed));
    }, py::arg("family"), py::arg("n"), py::arg("seed") = 0);
    m.def("generate", [](const std::string& family, std::size_t n, std::uint64_t seed) {
        return generate(make_spec(family, n, seed));
    }, py::arg("family"), py::arg("n"), py::arg("seed") = 0);

    py::enum_<SearchLayout>(m, "SearchLayout")
        .value("SORTED", SearchLayout::Sorted)
        .value("EYTZINGER", SearchLayout::Eytzinger);

    py::class_<QueryStats>(m, "QueryStats")
        .def_readonly("comparisons", &QueryStats::comparisons)
        .def_readonly("array_len", &QueryStats::array_len)
        .def("__repr__", [](const QueryStats& s) {
            return "QueryStats(comparisons=" + std::to_string(s.comparisons) +
                   ", array_len=" + std::to_string(s.array_len) + ")";
        });

    py::class_<LevelAncestorIndex>(m, "LevelAncestorIndex")
        .def(py::init([](const Tree& t, SearchLayout layout) { return LevelAncestorIndex::build(t, layout); }),
             py::arg("tree"), py::arg("layout") = SearchLayout::Sorted)
        .def("__len__", &LevelAncestorIndex::size)
        .def_property_readonly("max_depth", &LevelAncestorIndex::max_depth)
        .def_property_readonly("layout", &LevelAncestorIndex::layout)
        .def_property_readonly("build_visits", &LevelAncestorIndex::build_visits)
        .def("label_of", &LevelAncestorIndex::label_of, py::arg("v"))
        .def("node_of", &LevelAncestorIndex::node_of, py::arg("label"))
        .def("depth_of", &LevelAncestorIndex::depth_of, py::arg("v"))
        .def("depth_array", [](const LevelAncestorIndex& idx, Depth d) { return to_vector(idx.depth_array(d)); },
             py::arg("d"))
        .def("level_ancestor", [](const LevelAncestorIndex& idx, NodeId v, Depth d) {
            return level_ancestor(idx, v, d);
        }, py::arg("v"), py::arg("d"))
        .def("kth_ancestor", [](const LevelAncestorIndex& idx, NodeId v, Depth k) {
            return kth_ancestor(idx, v, k);
        }, py::arg("v"), py::arg("k"))
        .def("level_ancestor_with_stats", [](const LevelAncestorIndex& idx, NodeId v, Depth d) {
            return level_ancestor_with_stats(idx, v, d);
        }, py::arg("v"), py::arg("d"))
        // Vectorized form: -1 marks a query with no answer.
        .def("level_ancestor_many", [](const LevelAncestorIndex& idx, py::array_t<NodeId, py::array::forcecast> nodes,
                                       py::array_t<Depth, py::array::forcecast> depths) {
            if (nodes.ndim() != 1 || depths.ndim() != 1 || nodes.shape(0) != depths.shape(0)) {
                throw py::value_error("nodes and depths must be 1-d arrays of equal length");
            }
            const auto count = nodes.shape(0);
            py::array_t<NodeId> out(std::vector<py::ssize_t>{count});
            auto vs = nodes.unchecked<1>();
            auto ds = depths.unchecked<1>();
            NodeId* res = out.mutable_data();
            {
                py::gil_scoped_release release;
                for (py::ssize_t i = 0; i < count; ++i) {
                    res[i] = try_level_ancestor(idx, vs(i), ds(i)).node;
                }
            }
            return out;
        }, py::arg("nodes"), py::arg("depths"))
        .def("to_bytes", [](const LevelAncestorIndex& idx) {
            std::ostringstream out(std::ios::binary);
            idx.write_snapshot(out);
            return py::bytes(out.str());
        })
        .def_static("from_bytes", [](const py::bytes& data) {
            std::istringstream in(std::string(data), std::ios::binary);
            return LevelAncestorIndex::read_snapshot(in);
        }, py::arg("data"));

    m.def("predecessor_search", [](const std::vector<Label>& arr, Label key) {
        return predecessor_search(arr, key);
    }, py::arg("arr"), py::arg("key"),
       "Position of the largest element <= key in a strictly increasing list, or None.");

    m.def("naive_la", &naive_la, py::arg("tree"), py::arg("v"), py::arg("d"));

    py::class_<JumpTable>(m, "JumpTable")
        .def(py::init([](const Tree& t) { return JumpTable::build(t); }), py::arg("tree"))
        .def_property_readonly("levels", &JumpTable::levels)
        .def("row", [](const JumpTable& jt, std::size_t j) { return to_vector(jt.row(j)); }, py::arg("j"));
    m.def("jump_la", [](const JumpTable& jt, const Tree& t, NodeId v, Depth d) {
        return jump_la(jt, t.depths(), v, d);
    }, py::arg("table"), py::arg("tree"), py::arg("v"), py::arg("d"));

    py::class_<BenchRecord>(m, "BenchRecord")
        .def_readonly("method", &BenchRecord::method)
        .def_readonly("family", &BenchRecord::family)
        .def_readonly("n", &BenchRecord::n)
        .def_readonly("build_ns", &BenchRecord::build_ns)
        .def_readonly("query_ns_mean", &BenchRecord::query_ns_mean)
        .def_readonly("comparisons_mean", &BenchRecord::comparisons_mean)
        .def_readonly("queries", &BenchRecord::queries)
        .def_readonly("seed", &BenchRecord::seed);

    m.def("run_bench", [](const std::vector<std::string>& families, const std::vector<std::size_t>& sizes,
                          std::size_t queries, std::uint64_t seed, const std::vector<std::string>& methods) {
        BenchConfig config;
        for (const auto& f : families) {
            config.families.push_back(parse_family(f));
        }
        config.sizes = sizes;
        config.queries = queries;
        config.seed = seed;
        config.methods.clear();
        for (const auto& name : methods) {
            config.methods.push_back(parse_method(name));
        }
        py::gil_scoped_release release;
        return run_bench(config);
    }, py::arg("families"), py::arg("sizes"), py::arg("queries") = 1000, py::arg("seed") = 0,
       py::arg("methods") = std::vector<std::string>{"paper_index", "jump_pointer", "naive"});
}
