#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hoffman/analysis.hpp"
#include "hoffman/canonical.hpp"
#include "hoffman/characterization.hpp"
#include "hoffman/enumerate.hpp"
#include "hoffman/lemmas.hpp"
#include "hoffman/matrix.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json parse(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw hoffman::InputError(std::string("JSON parse error: ") + e.what());
    }
}

hoffman::HoffmanGraph graph_of(const std::string& s) {
    auto h = hoffman::HoffmanGraph::from_json(parse(s));
    h.validate();
    return h;
}

hoffman::EnumerationBounds bounds_of(int max_slim, int max_fat, int max_fat_degree,
                                     bool fat, bool indecomposable, bool contains_k12) {
    hoffman::EnumerationBounds b;
    b.max_slim = max_slim;
    b.max_fat = max_fat;
    b.max_fat_degree = max_fat_degree;
    b.filter_fat = fat;
    b.filter_indecomposable = indecomposable;
    b.filter_contains_k12 = contains_k12;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification toolkit for fat Hoffman graphs with smallest "
              "eigenvalue greater than -3. All functions exchange JSON strings.";

    py::register_exception<hoffman::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<hoffman::InternalError>(m, "InternalError",
                                                   PyExc_RuntimeError);

    m.def("b_matrix",
          [](const std::string& h) { return hoffman::b_matrix(graph_of(h)).to_json().dump(); },
          py::arg("hoffman_graph"),
          "B(h) = A^s - C C^T as matrix JSON, rows in sorted slim-vertex order.");

    m.def("slim_order",
          [](const std::string& h) { return hoffman::slim_order(graph_of(h)); },
          py::arg("hoffman_graph"), "Row order used by b_matrix.");

    m.def("special_graph",
          [](const std::string& h) {
              return hoffman::special_graph(graph_of(h)).to_json().dump();
          },
          py::arg("hoffman_graph"), "Edge-signed special graph as JSON.");

    m.def("is_indecomposable",
          [](const std::string& h) { return hoffman::is_indecomposable(graph_of(h)); },
          py::arg("hoffman_graph"));

    m.def("decompose",
          [](const std::string& h) {
              return hoffman::decompose_by_special_components(graph_of(h)).to_json().dump();
          },
          py::arg("hoffman_graph"),
          "Decomposition into special-graph components, validated.");

    m.def("canonical_form",
          [](const std::string& h) { return py::bytes(hoffman::canonical_form(graph_of(h))); },
          py::arg("hoffman_graph"),
          "Canonical byte-string; equal iff role-preserving isomorphic.");

    m.def("classify_lambda_min",
          [](const std::string& matrix, const std::string& threshold) {
              auto mt = hoffman::RatMatrix::from_json(parse(matrix));
              mt.validate();
              return hoffman::classify_lambda_min(mt, hoffman::parse_rational(threshold))
                  .to_json()
                  .dump();
          },
          py::arg("matrix"), py::arg("threshold") = "3",
          "Exact verdict for lambda_min vs -threshold, with certificate.");

    m.def("lambda_min_approx",
          [](const std::string& matrix) {
              auto mt = hoffman::RatMatrix::from_json(parse(matrix));
              mt.validate();
              auto a = hoffman::lambda_min_approx(mt);
              return std::make_pair(a.value, a.error_bound);
          },
          py::arg("matrix"), "(value, error_bound) from the cyclic Jacobi solver.");

    m.def("check_theorem",
          [](const std::string& h, const std::string& v_star) {
              return hoffman::check_theorem_conditions(graph_of(h), v_star).to_json().dump();
          },
          py::arg("hoffman_graph"), py::arg("v_star"),
          "Conditions (i)-(v), exact verdict at -3, and their equivalence.");

    m.def("build_psi",
          [](const std::string& h, const std::string& v_star) {
              return hoffman::build_psi(graph_of(h), v_star).to_json().dump();
          },
          py::arg("hoffman_graph"), py::arg("v_star"),
          "Verified norm-3 reduced representation from the proof construction.");

    m.def("signed_admissibility",
          [](const std::string& s, const std::string& v_star) {
              auto sg = hoffman::EdgeSignedGraph::from_json(parse(s));
              return hoffman::signed_admissibility(sg, v_star).to_json().dump();
          },
          py::arg("signed_graph"), py::arg("v_star"));

    m.def("construct_from_signed",
          [](const std::string& s, const std::string& v_star) {
              auto sg = hoffman::EdgeSignedGraph::from_json(parse(s));
              auto res = hoffman::construct_hoffman_from_signed(sg, v_star);
              json out = res.graph.to_json();
              out["degenerate_single_vertex"] = res.degenerate_single_vertex;
              return out.dump();
          },
          py::arg("signed_graph"), py::arg("v_star"),
          "Fat Hoffman graph realizing the given special graph.");

    m.def("check_theorem5",
          [](const std::string& g, const std::string& v_star) {
              auto pg = hoffman::PlainGraph::from_json(parse(g));
              return hoffman::check_theorem5(pg, v_star).to_json().dump();
          },
          py::arg("graph"), py::arg("v_star"),
          "Modified-adjacency / line-graph-of-tree equivalence at threshold 2.");

    m.def("verify_lemmas",
          [](int size_cap) {
              hoffman::LemmaSweepBounds b;
              if (size_cap >= 4) {
                  b.dn_max = std::min(b.dn_max, size_cap);
                  b.cycle_max = std::min(b.cycle_max, size_cap);
                  b.path_cycle_max = std::min(b.path_cycle_max, size_cap);
                  b.path_clique_max = std::min(b.path_clique_max, size_cap);
              }
              return hoffman::lemma_report_json(hoffman::run_lemma_suite(b)).dump();
          },
          py::arg("size_cap") = 0,
          "Exhaustive matrix-lemma sweep; size_cap >= 4 shrinks the family sizes.");

    m.def("enumerate_hoffman",
          [](int max_slim, int max_fat, int max_fat_degree, bool fat,
             bool indecomposable, bool contains_k12) {
              std::vector<std::string> out;
              for (const auto& h : hoffman::enumerate_hoffman(bounds_of(
                       max_slim, max_fat, max_fat_degree, fat, indecomposable,
                       contains_k12)))
                  out.push_back(h.to_json().dump());
              return out;
          },
          py::arg("max_slim") = 3, py::arg("max_fat") = 4, py::arg("max_fat_degree") = 3,
          py::arg("fat") = false, py::arg("indecomposable") = false,
          py::arg("contains_k12") = false,
          "One JSON string per isomorphism class within the bounds.");

    m.def("oracle_theorem_equivalence",
          [](int max_slim, int max_fat) {
              json out = json::array();
              for (const auto& c : hoffman::oracle_theorem_equivalence(
                       bounds_of(max_slim, max_fat, 3, true, true, true)))
                  out.push_back({{"graph", c.graph.to_json()},
                                 {"v_star", c.v_star},
                                 {"report", c.report.to_json()}});
              return out.dump();
          },
          py::arg("max_slim") = 3, py::arg("max_fat") = 4,
          "Counterexample list for the main equivalence; expected empty.");

    m.def("roundtrip_signed",
          [](int max_vertices) {
              json out = json::array();
              for (const auto& c : hoffman::roundtrip_signed(max_vertices))
                  out.push_back({{"signed_graph", c.s.to_json()},
                                 {"v_star", c.v_star},
                                 {"reason", c.reason}});
              return out.dump();
          },
          py::arg("max_vertices") = 4,
          "Construction round-trip counterexamples; expected empty.");

    m.def("nonuniqueness_demo",
          []() { return hoffman::nonuniqueness_demo().to_json().dump(); },
          "Two non-isomorphic realizations of the same special graph.");
}
