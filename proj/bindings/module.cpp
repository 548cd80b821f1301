#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drgforge/bilform.hpp"
#include "drgforge/drg_params.hpp"
#include "drgforge/incidence_geometry.hpp"
#include "drgforge/isomorphism.hpp"
#include "drgforge/local_spectra.hpp"
#include "drgforge/spectrum.hpp"
#include "drgforge/verify_suite.hpp"

namespace py = pybind11;
using namespace drgforge;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edge_list(n, edges);
}

py::dict array_to_dict(const IntersectionArray& arr) {
    py::dict d;
    d["array"] = arr.to_string();
    d["b"] = arr.b;
    d["c"] = arr.c;
    d["diameter"] = arr.diameter();
    return d;
}

py::dict verdict_to_dict(const Verdict& verdict) {
    py::dict d;
    d["array"] = verdict.array.to_string();
    d["status"] = to_string(verdict.status);
    d["reasons"] = verdict.reasons;
    if (verdict.classical) {
        py::dict c;
        c["D"] = verdict.classical->diameter;
        c["b"] = verdict.classical->b;
        c["alpha"] = rat_to_string(verdict.classical->alpha);
        c["beta"] = rat_to_string(verdict.classical->beta);
        d["classical_params"] = c;
    } else {
        d["classical_params"] = py::none();
    }
    if (verdict.constraint) {
        py::list roots;
        for (const auto& r : verdict.constraint->roots) roots.append(rat_to_string(r));
        d["roots"] = roots;
        d["leading_sign"] = verdict.constraint->leading_sign;
    }
    d["clique_bound"] = verdict.bound ? py::object(py::str(rat_to_string(*verdict.bound)))
                                      : py::object(py::none());
    d["candidates"] = verdict.candidates;
    py::list spectra;
    for (const auto& check : verdict.spectra) {
        py::dict s;
        py::list entries;
        for (const auto& [eta, f] : check.spectrum.entries)
            entries.append(py::make_tuple(rat_to_string(eta), f));
        s["spectrum"] = entries;
        py::list walks;
        for (const auto& [l, value] : check.walk_values)
            walks.append(py::make_tuple(l, rat_to_string(value), rat_is_integer(value)));
        s["walk_checks"] = walks;
        s["triangle_total"] = rat_to_string(check.triangle_total);
        s["survives"] = check.survives;
        s["all_ell_certified"] = check.certificate.certified_all_ell;
        spectra.append(s);
    }
    d["spectra"] = spectra;
    d["witness"] = verdict.witness ? py::object(py::str(*verdict.witness))
                                   : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bilinear forms graphs and distance-regular feasibility checks";

    py::register_exception<Error>(m, "DrgforgeError");

    m.def("gaussian_binomial",
          [](int n, int k, long long q) { return gaussian_binomial(n, k, Int(q)).str(); },
          py::arg("n"), py::arg("m"), py::arg("q"));

    m.def("make_field", [](long long q) {
        const auto ctx = make_field(q);
        py::dict d;
        d["q"] = ctx.q();
        d["p"] = ctx.characteristic();
        d["f"] = ctx.degree();
        d["modulus"] = ctx.modulus();
        return d;
    });

    m.def("matrix_rank", [](long long q, const std::vector<std::vector<int>>& rows) {
        const auto ctx = make_field(q);
        if (rows.empty()) throw BadParameters("matrix must be nonempty");
        FqMatrix mat(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size())
                throw BadParameters("ragged matrix");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                mat.at(static_cast<int>(i), static_cast<int>(j)) =
                    static_cast<std::uint8_t>(rows[i][j]);
        }
        return rank(ctx, mat);
    });

    m.def("expected_intersection_array",
          [](long long q, int e, int d) { return array_to_dict(expected_intersection_array(q, e, d)); });

    m.def("family_array", [](long long m_) { return array_to_dict(family_array(m_)); });

    m.def("construct", [](long long q, int e, int d) {
        const auto bil = construct_bilinear_forms_graph(q, e, d);
        py::dict out;
        out["vertices"] = bil.graph.vertex_count();
        out["edges"] = bil.graph.edges();
        out["expected_array"] = bil.expected_array.to_string();
        return out;
    });

    m.def("construct_to_file", [](long long q, int e, int d, const std::string& path) {
        const auto bil = construct_bilinear_forms_graph(q, e, d);
        write_edge_list_file(bil.graph, path);
        return bil.graph.vertex_count();
    });

    m.def("check_distance_regular",
          [](int n, const std::vector<std::pair<int, int>>& edges, std::optional<int> depth) {
              const auto check = check_distance_regular(graph_from_edges(n, edges), depth);
              py::dict d;
              d["distance_regular"] = check.ok;
              if (check.array) d["array"] = check.array->to_string();
              if (!check.partial_b.empty()) {
                  d["partial_b"] = check.partial_b;
                  d["partial_c"] = check.partial_c;
              }
              if (check.witness) d["witness"] = check.witness->to_string();
              return d;
          },
          py::arg("n"), py::arg("edges"), py::arg("depth") = py::none());

    m.def("spectrum", [](int n, const std::vector<std::pair<int, int>>& edges) {
        const auto spec = spectrum_small(graph_from_edges(n, edges));
        py::list out;
        for (const auto& entry : spec.entries) {
            py::dict e;
            if (entry.exact)
                e["eigenvalue"] = *entry.exact;
            else
                e["bracket"] = py::make_tuple(entry.lo, entry.hi);
            e["multiplicity"] = entry.multiplicity;
            out.append(e);
        }
        return out;
    });

    m.def("grid_recognize", [](int n, const std::vector<std::pair<int, int>>& edges) {
        const auto grid = grid_recognize(graph_from_edges(n, edges));
        return grid ? py::object(py::make_tuple(grid->first, grid->second))
                    : py::object(py::none());
    });

    m.def("is_isomorphic",
          [](int n1, const std::vector<std::pair<int, int>>& e1, int n2,
             const std::vector<std::pair<int, int>>& e2) {
              const auto mapping = is_isomorphic(graph_from_edges(n1, e1), graph_from_edges(n2, e2));
              return mapping ? py::object(py::cast(*mapping)) : py::object(py::none());
          });

    m.def("drg_eigenvalues", [](const std::string& array_text) {
        const auto arr = IntersectionArray::parse(array_text);
        py::list out;
        for (const auto& box : drg_eigenvalues(arr)) {
            py::dict e;
            if (box.exact) e["exact"] = rat_to_string(*box.exact);
            e["approx"] = box.mid();
            out.append(e);
        }
        return out;
    });

    m.def("feasibility_verdict",
          [](const std::string& array_text, int walk_lmax) {
              return verdict_to_dict(feasibility_verdict(IntersectionArray::parse(array_text),
                                                         walk_lmax));
          },
          py::arg("array"), py::arg("walk_lmax") = 12);

    m.def("solve_local_multiplicities",
          [](long long v, long long k_loc, const std::vector<long long>& candidates) {
              const auto sols = solve_local_multiplicities(v, k_loc, candidates);
              py::list out;
              for (const auto& s : sols.spectra) {
                  py::list entries;
                  for (const auto& [eta, f] : s.entries)
                      entries.append(py::make_tuple(rat_to_string(eta), f));
                  out.append(entries);
              }
              return py::make_tuple(out, sols.complete);
          });

    m.def("verify_suite", [](long long q, int e, int d, std::uint64_t seed) {
        VerifySuiteOptions opts;
        opts.seed = seed;
        const auto report = run_verification_suite(q, e, d, opts);
        py::list out;
        for (const auto& item : report.items) {
            py::dict check;
            check["id"] = item.id;
            check["pass"] = item.pass;
            check["details"] = item.details;
            out.append(check);
        }
        return out;
    }, py::arg("q"), py::arg("e"), py::arg("d"), py::arg("seed") = 0);
}
