#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simpd/complex.hpp"
#include "simpd/distance.hpp"
#include "simpd/io.hpp"
#include "simpd/maps.hpp"
#include "simpd/oracle.hpp"
#include "simpd/subdivision.hpp"

namespace py = pybind11;
using namespace simpd;

namespace {

SearchOptions make_options(std::int64_t max_simplices, std::int64_t max_frontier,
                           std::int64_t max_cover_nodes) {
    SearchOptions opts;
    opts.max_simplices = max_simplices;
    opts.max_frontier = max_frontier;
    opts.max_cover_nodes = max_cover_nodes;
    return opts;
}

py::dict result_to_dict(const SimpDistQuery& q, const SimpDistResult& r) {
    py::dict out;
    out["value"] = r.value.to_string();
    out["finite"] = r.value.is_finite();
    if (r.value.is_finite()) out["k"] = r.value.value;
    if (r.certificate) {
        py::list pieces;
        for (const OrderedComplex& piece : r.certificate->pieces)
            pieces.append(piece.maximal_simplices());
        out["pieces"] = pieces;
        py::list lengths;
        for (const ContiguityChain& chain : r.certificate->chains)
            lengths.append(chain.length());
        out["chain_lengths"] = lengths;
        out["certificate"] = certificate_to_text(make_certificate(q, r));
    }
    if (r.infeasible_witness) out["witness"] = *r.infeasible_witness;
    return out;
}

} // namespace

PYBIND11_MODULE(_simpd, m) {
    m.doc() = "Exact contiguity and cover distances between simplicial maps";

    py::register_exception<Error>(m, "SimpdError");

    py::class_<OrderedComplex>(m, "OrderedComplex")
        .def(py::init([](const std::vector<Simplex>& maximal) {
                 return OrderedComplex::create(maximal);
             }),
             py::arg("maximal_simplices"))
        .def_property_readonly("vertices", &OrderedComplex::vertices)
        .def_property_readonly("maximal_simplices", &OrderedComplex::maximal_simplices)
        .def_property_readonly("dim", &OrderedComplex::dim)
        .def("all_simplices", &OrderedComplex::all_simplices)
        .def("__eq__", [](const OrderedComplex& a, const OrderedComplex& b) { return a == b; })
        .def("__repr__", [](const OrderedComplex& k) {
            return "OrderedComplex(" + std::to_string(k.vertex_count()) + " vertices, " +
                   std::to_string(k.maximal_count()) + " maximal)";
        });

    m.def("has_simplex", &has_simplex, py::arg("complex"), py::arg("simplex"));
    m.def("full_subcomplex", &full_subcomplex, py::arg("complex"), py::arg("generators"));

    py::class_<ProductComplex>(m, "ProductComplex")
        .def_readonly("complex", &ProductComplex::complex)
        .def_readonly("pairs", &ProductComplex::pairs)
        .def("pr1", [](const ProductComplex& p) { return projection(p, 1); })
        .def("pr2", [](const ProductComplex& p) { return projection(p, 2); });

    m.def("ordered_product", &ordered_product, py::arg("k"), py::arg("l"));

    py::class_<SubdividedComplex>(m, "SubdividedComplex")
        .def_readonly("complex", &SubdividedComplex::complex)
        .def_readonly("previous", &SubdividedComplex::previous)
        .def_readonly("level", &SubdividedComplex::level)
        .def_readonly("barycenters", &SubdividedComplex::barycenters);

    m.def(
        "subdivide",
        [](const OrderedComplex& k) { return subdivide(k); },
        py::arg("complex"));
    m.def(
        "subdivide_iter",
        [](const OrderedComplex& k, int b) { return subdivide_iter(k, b); },
        py::arg("complex"), py::arg("b"));
    m.def("last_vertex_approximation", &last_vertex_approximation, py::arg("sd"));
    m.def("first_vertex_approximation", &first_vertex_approximation, py::arg("sd"));
    m.def(
        "iterate_approximation",
        [](const OrderedComplex& k, int from_b, int to_b) {
            return iterate_approximation(k, from_b, to_b);
        },
        py::arg("complex"), py::arg("from_b"), py::arg("to_b"));
    m.def("is_approximation_of_identity", &is_approximation_of_identity,
          py::arg("candidate"), py::arg("sd"));

    py::class_<SimplicialMap>(m, "SimplicialMap")
        .def_property_readonly("domain", &SimplicialMap::domain)
        .def_property_readonly("codomain", &SimplicialMap::codomain)
        .def("apply", &SimplicialMap::apply, py::arg("vertex"))
        .def("assignment",
             [](const SimplicialMap& f) {
                 py::dict out;
                 for (int d = 0; d < f.domain().vertex_count(); ++d)
                     out[py::int_(f.domain().vertex_at(d))] = f.images()[d];
                 return out;
             })
        .def("__eq__", [](const SimplicialMap& a, const SimplicialMap& b) { return a == b; })
        .def("__repr__", [](const SimplicialMap& f) {
            return "SimplicialMap(" + std::to_string(f.domain().vertex_count()) +
                   " -> " + std::to_string(f.codomain().vertex_count()) + " vertices)";
        });

    m.def(
        "check_simplicial",
        [](const OrderedComplex& dom, const OrderedComplex& cod,
           const std::map<Vertex, Vertex>& assignment) {
            std::vector<std::pair<Vertex, Vertex>> pairs(assignment.begin(),
                                                         assignment.end());
            return check_simplicial(dom, cod, pairs);
        },
        py::arg("domain"), py::arg("codomain"), py::arg("assignment"));
    m.def("identity_map", &identity_map, py::arg("complex"));
    m.def("constant_map", &constant_map, py::arg("domain"), py::arg("codomain"),
          py::arg("value"));
    m.def("contiguous_pair", &contiguous_pair, py::arg("f"), py::arg("g"));
    m.def("compose", &compose, py::arg("g"), py::arg("f"));
    m.def("restrict", &restrict_map, py::arg("f"), py::arg("subcomplex"));

    m.def(
        "contiguity_distance",
        [](const SimplicialMap& f, const SimplicialMap& g, int max_c,
           std::int64_t max_frontier) {
            SearchOptions opts;
            opts.max_frontier = max_frontier;
            ContiguityResult r = contiguity_distance(f, g, max_c, opts);
            py::dict out;
            out["value"] = r.value.to_string();
            out["finite"] = r.value.is_finite();
            if (r.value.is_finite()) out["c"] = r.value.value;
            if (r.chain) {
                py::list steps;
                for (const SimplicialMap& step : r.chain->steps) {
                    py::dict a;
                    for (int d = 0; d < step.domain().vertex_count(); ++d)
                        a[py::int_(step.domain().vertex_at(d))] = step.images()[d];
                    steps.append(a);
                }
                out["chain"] = steps;
            }
            return out;
        },
        py::arg("f"), py::arg("g"), py::arg("max_c") = 16,
        py::arg("max_frontier") = 1000000);

    m.def(
        "simpdist",
        [](const SimplicialMap& phi, const SimplicialMap& psi, int b, int c,
           std::int64_t max_simplices, std::int64_t max_frontier,
           std::int64_t max_cover_nodes) {
            SimpDistQuery q{phi, psi, b, c, ApproximationRule::LastVertex};
            auto opts = make_options(max_simplices, max_frontier, max_cover_nodes);
            return result_to_dict(q, simpdist_bc(q, opts));
        },
        py::arg("phi"), py::arg("psi"), py::arg("b") = 0, py::arg("c") = 0,
        py::arg("max_simplices") = 1000000, py::arg("max_frontier") = 1000000,
        py::arg("max_cover_nodes") = 10000000);

    m.def(
        "sc",
        [](const OrderedComplex& k, int b, int c, std::int64_t max_simplices,
           std::int64_t max_frontier, std::int64_t max_cover_nodes) {
            SimpDistQuery q = make_sc_query(k, b, c);
            auto opts = make_options(max_simplices, max_frontier, max_cover_nodes);
            return result_to_dict(q, simpdist_bc(q, opts));
        },
        py::arg("k"), py::arg("b") = 0, py::arg("c") = 0,
        py::arg("max_simplices") = 1000000, py::arg("max_frontier") = 1000000,
        py::arg("max_cover_nodes") = 10000000);

    m.def(
        "scat",
        [](const OrderedComplex& k, Vertex base, int b, int c,
           std::int64_t max_simplices, std::int64_t max_frontier,
           std::int64_t max_cover_nodes) {
            SimpDistQuery q = make_scat_query(k, base, b, c);
            auto opts = make_options(max_simplices, max_frontier, max_cover_nodes);
            return result_to_dict(q, simpdist_bc(q, opts));
        },
        py::arg("k"), py::arg("base") = 0, py::arg("b") = 0, py::arg("c") = 0,
        py::arg("max_simplices") = 1000000, py::arg("max_frontier") = 1000000,
        py::arg("max_cover_nodes") = 10000000);

    m.def(
        "probe",
        [](const SimplicialMap& phi, const SimplicialMap& psi, int b_max, int c_max) {
            ProbeTable t = stabilization_probe(phi, psi, b_max, c_max);
            py::list rows;
            for (const auto& row : t.cell) {
                py::list cells;
                for (const DistanceValue& v : row) cells.append(v.to_string());
                rows.append(cells);
            }
            py::dict out;
            out["cells"] = rows;
            out["monotone_violations"] = t.monotone_violations;
            out["descent_violations"] = t.descent_violations;
            return out;
        },
        py::arg("phi"), py::arg("psi"), py::arg("b_max"), py::arg("c_max"));

    m.def(
        "oracle_contiguity_distance",
        [](const SimplicialMap& f, const SimplicialMap& g) {
            return oracle_contiguity_distance(f, g).to_string();
        },
        py::arg("f"), py::arg("g"));
    m.def(
        "oracle_simpdist",
        [](const SimplicialMap& phi, const SimplicialMap& psi, int b, int c) {
            SimpDistQuery q{phi, psi, b, c, ApproximationRule::LastVertex};
            return oracle_simpdist(q).to_string();
        },
        py::arg("phi"), py::arg("psi"), py::arg("b") = 0, py::arg("c") = 0);

    m.def(
        "verify_certificate",
        [](const std::string& text) {
            VerifyOutcome v = verify_certificate(parse_certificate(text));
            return py::make_tuple(v.ok, v.reason);
        },
        py::arg("certificate_text"));

    m.def(
        "run_job",
        [](const std::string& text, bool with_oracle, const std::string& cert_out,
           std::int64_t max_simplices, std::int64_t max_frontier) {
            RunConfig config;
            config.with_oracle = with_oracle;
            config.cert_out = cert_out;
            config.search.max_simplices = max_simplices;
            config.search.max_frontier = max_frontier;
            RunResult r = run_job_text(text, config);
            return py::make_tuple(r.report, r.exit_code);
        },
        py::arg("job_text"), py::arg("with_oracle") = false, py::arg("cert_out") = "",
        py::arg("max_simplices") = 1000000, py::arg("max_frontier") = 1000000);
}
