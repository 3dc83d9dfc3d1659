#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hoffman/analysis.hpp"
#include "hoffman/blocks.hpp"
#include "hoffman/canonical.hpp"
#include "hoffman/characterization.hpp"
#include "hoffman/enumerate.hpp"
#include "hoffman/lemmas.hpp"
#include "hoffman/matrix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hoffman::InputError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw hoffman::InputError("parse error in '" + path + "': " + e.what());
    }
}

void emit(const nlohmann::json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

std::string relation_line(const hoffman::SpectralVerdict& v) {
    using hoffman::Relation;
    std::string cmp = v.relation == Relation::Greater ? ">"
                      : v.relation == Relation::Equal ? "="
                                                      : "<";
    return "lambda_min " + cmp + " -" + hoffman::format_rational(v.threshold);
}

std::vector<hoffman::VertexId> star_candidates(const hoffman::HoffmanGraph& h) {
    std::vector<hoffman::VertexId> out;
    for (const auto& v : h.slim_vertices)
        if (h.fat_neighbors(v).size() == 2) out.push_back(v);
    return out;
}

int cmd_analyze(const std::string& path, const std::string& vstar, bool as_json) {
    auto h = hoffman::HoffmanGraph::from_json(load_json(path));
    h.validate();
    nlohmann::json out;
    out["b_matrix"] = hoffman::b_matrix(h).to_json();
    out["slim_order"] = hoffman::slim_order(h);
    auto s = hoffman::special_graph(h);
    out["special_graph"] = s.to_json();
    out["indecomposable"] = hoffman::is_indecomposable(h);
    auto partition = hoffman::special_component_partition(h);
    auto check = hoffman::validate_decomposition(h, partition);
    out["special_component_partition"] = partition.to_json();
    out["partition_is_decomposition"] = check.ok;
    if (!check.ok) out["partition_violation"] = check.violation;
    out["block_structure"] = hoffman::blocks_and_cut_vertices(s.underlying()).to_json();
    auto verdict = hoffman::classify_lambda_min(hoffman::b_matrix(h), hoffman::Rational(3));
    out["verdict_at_minus_3"] = verdict.to_json();

    std::vector<hoffman::VertexId> candidates =
        vstar.empty() ? star_candidates(h) : std::vector<hoffman::VertexId>{vstar};
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& v : candidates) {
        try {
            reports.push_back(hoffman::check_theorem_conditions(h, v).to_json());
        } catch (const hoffman::InputError& e) {
            reports.push_back({{"marked_vertex", v}, {"error", e.what()}});
        }
    }
    out["theorem_reports"] = reports;
    if (!as_json) {
        std::cout << relation_line(verdict) << "\n";
        std::cout << (out["indecomposable"].get<bool>() ? "indecomposable"
                                                        : "decomposable")
                  << ", " << reports.size() << " candidate v* report(s)\n";
    }
    emit(out, true);
    return kExitOk;
}

int cmd_lambda_min(const std::string& path, const std::string& threshold, bool approx,
                   bool as_json) {
    auto m = hoffman::RatMatrix::from_json(load_json(path));
    hoffman::Rational t = hoffman::parse_rational(threshold);
    auto v = hoffman::classify_lambda_min(m, t);
    nlohmann::json out = v.to_json();
    if (approx) {
        auto a = hoffman::lambda_min_approx(m);
        out["approx"] = {{"value", a.value}, {"error_bound", a.error_bound}};
    }
    if (!as_json) std::cout << relation_line(v) << "\n";
    emit(out, true);
    return kExitOk;
}

int cmd_special_graph(const std::string& path, bool as_json) {
    auto h = hoffman::HoffmanGraph::from_json(load_json(path));
    h.validate();
    emit(hoffman::special_graph(h).to_json(), as_json);
    return kExitOk;
}

int cmd_check_theorem(const std::string& path, const std::string& vstar, bool as_json) {
    auto h = hoffman::HoffmanGraph::from_json(load_json(path));
    h.validate();
    std::vector<hoffman::VertexId> candidates =
        vstar.empty() ? star_candidates(h) : std::vector<hoffman::VertexId>{vstar};
    if (candidates.empty())
        throw hoffman::InputError("no slim vertex with exactly two fat neighbors");
    nlohmann::json out = nlohmann::json::array();
    bool all_equiv = true;
    for (const auto& v : candidates) {
        auto rep = hoffman::check_theorem_conditions(h, v);
        all_equiv = all_equiv && rep.equivalence_holds;
        out.push_back(rep.to_json());
        if (!as_json)
            std::cout << "v* = " << v << ": conditions "
                      << (rep.all_conditions() ? "hold" : "fail") << ", verdict "
                      << hoffman::relation_name(rep.spectral_verdict.relation)
                      << ", equivalence "
                      << (rep.equivalence_holds ? "holds" : "FAILS") << "\n";
    }
    emit(out, true);
    return all_equiv ? kExitOk : kExitVerificationFailure;
}

int cmd_construct(const std::string& path, const std::string& vstar,
                  const std::string& out_path, bool as_json) {
    auto s = hoffman::EdgeSignedGraph::from_json(load_json(path));
    auto res = hoffman::construct_hoffman_from_signed(s, vstar);
    nlohmann::json out = res.graph.to_json();
    out["degenerate_single_vertex"] = res.degenerate_single_vertex;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw hoffman::InputError("cannot write '" + out_path + "'");
        f << out.dump(2) << "\n";
    }
    emit(out, as_json);
    return kExitOk;
}

int cmd_check_theorem5(const std::string& path, const std::string& vstar, bool as_json) {
    auto g = hoffman::PlainGraph::from_json(load_json(path));
    auto rep = hoffman::check_theorem5(g, vstar);
    if (!as_json)
        std::cout << "spectral side (> -2): " << (rep.spectral_side ? "true" : "false")
                  << "; line-graph-of-tree side: "
                  << (rep.line_tree_side ? "true" : "false") << "; equivalence "
                  << (rep.agree ? "holds" : "FAILS") << "\n";
    emit(rep.to_json(), true);
    return rep.agree ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_lemmas(bool as_json) {
    hoffman::LemmaSweepBounds bounds;
    if (const char* cap = std::getenv("HOFFMAN_LEMMA_MAX")) {
        int c = std::atoi(cap);
        if (c >= 4) {
            bounds.dn_max = std::min(bounds.dn_max, c);
            bounds.cycle_max = std::min(bounds.cycle_max, c);
            bounds.path_cycle_max = std::min(bounds.path_cycle_max, c);
            bounds.path_clique_max = std::min(bounds.path_clique_max, c);
        }
    }
    auto entries = hoffman::run_lemma_suite(bounds);
    int failures = 0;
    for (const auto& e : entries)
        if (!e.pass) ++failures;
    if (!as_json)
        std::cout << entries.size() << " lemma checks, " << failures << " failure(s)\n";
    emit(hoffman::lemma_report_json(entries), true);
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_enumerate(const hoffman::EnumerationBounds& b, bool as_json) {
    auto graphs = hoffman::enumerate_hoffman(b);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& h : graphs) out.push_back(h.to_json());
    if (!as_json) std::cout << graphs.size() << " graph(s)\n";
    emit(out, true);
    return kExitOk;
}

int cmd_oracle(const hoffman::EnumerationBounds& b, int roundtrip_max, bool as_json) {
    auto bad = hoffman::oracle_theorem_equivalence(b);
    auto rt = hoffman::roundtrip_signed(roundtrip_max);
    auto nu = hoffman::nonuniqueness_demo();
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : bad)
        cex.push_back({{"graph", c.graph.to_json()},
                       {"v_star", c.v_star},
                       {"report", c.report.to_json()}});
    nlohmann::json rtj = nlohmann::json::array();
    for (const auto& c : rt)
        rtj.push_back({{"signed_graph", c.s.to_json()},
                       {"v_star", c.v_star},
                       {"reason", c.reason}});
    nlohmann::json out{{"theorem_counterexamples", cex},
                       {"roundtrip_counterexamples", rtj},
                       {"nonuniqueness", nu.to_json()}};
    bool ok = bad.empty() && rt.empty() && nu.ok();
    if (!as_json)
        std::cout << "theorem counterexamples: " << bad.size()
                  << ", roundtrip counterexamples: " << rt.size()
                  << ", non-uniqueness demo: " << (nu.ok() ? "ok" : "FAILED") << "\n";
    emit(out, true);
    return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for fat Hoffman graphs with smallest "
                 "eigenvalue greater than -3"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON only");

    std::string path, vstar, threshold = "3", out_path;
    bool approx = false;
    hoffman::EnumerationBounds bounds;
    int roundtrip_max = 4;

    auto* analyze = app.add_subcommand("analyze", "full report for a Hoffman graph");
    analyze->add_option("input", path, "Hoffman graph JSON")->required();
    analyze->add_option("--vstar", vstar, "marked slim vertex");

    auto* lm = app.add_subcommand("lambda-min", "exact spectral classification");
    lm->add_option("input", path, "matrix JSON")->required();
    lm->add_option("--threshold", threshold, "rational t, verdict vs -t");
    lm->add_flag("--approx", approx, "include floating-point estimate");

    auto* sg = app.add_subcommand("special-graph", "special graph of a Hoffman graph");
    sg->add_option("input", path, "Hoffman graph JSON")->required();

    auto* ct = app.add_subcommand("check-theorem", "main-theorem equivalence check");
    ct->add_option("input", path, "Hoffman graph JSON")->required();
    ct->add_option("--vstar", vstar, "marked slim vertex (default: all candidates)");

    auto* cons = app.add_subcommand("construct", "Hoffman graph from a signed graph");
    cons->add_option("input", path, "edge-signed graph JSON")->required();
    cons->add_option("--vstar", vstar, "marked vertex")->required();
    cons->add_option("-o,--output", out_path, "write the result to a file");

    auto* t5 = app.add_subcommand("check-theorem5",
                                  "modified-adjacency / line-graph-of-tree equivalence");
    t5->add_option("input", path, "plain graph JSON")->required();
    t5->add_option("--vstar", vstar, "marked vertex")->required();

    auto* vl = app.add_subcommand("verify-lemmas", "exhaustive lemma suite");

    auto* en = app.add_subcommand("enumerate", "enumerate small Hoffman graphs");
    en->add_option("--max-slim", bounds.max_slim, "slim vertex bound");
    en->add_option("--max-fat", bounds.max_fat, "fat vertex bound");
    en->add_option("--max-fat-degree", bounds.max_fat_degree, "fat degree cap");
    en->add_flag("--fat", bounds.filter_fat, "only fat graphs");
    en->add_flag("--indecomposable", bounds.filter_indecomposable,
                 "only indecomposable graphs");
    en->add_flag("--contains-k12", bounds.filter_contains_k12,
                 "only graphs containing K_{1,2}");

    auto* orc = app.add_subcommand("oracle", "exhaustive theorem cross-check");
    orc->add_option("--max-slim", bounds.max_slim, "slim vertex bound");
    orc->add_option("--max-fat", bounds.max_fat, "fat vertex bound");
    orc->add_option("--roundtrip-max", roundtrip_max,
                    "signed-graph size for the construction round-trip");

    // let the global --json flag appear after the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(path, vstar, as_json);
        if (lm->parsed()) return cmd_lambda_min(path, threshold, approx, as_json);
        if (sg->parsed()) return cmd_special_graph(path, as_json);
        if (ct->parsed()) return cmd_check_theorem(path, vstar, as_json);
        if (cons->parsed()) return cmd_construct(path, vstar, out_path, as_json);
        if (t5->parsed()) return cmd_check_theorem5(path, vstar, as_json);
        if (vl->parsed()) return cmd_verify_lemmas(as_json);
        if (en->parsed()) return cmd_enumerate(bounds, as_json);
        if (orc->parsed()) return cmd_oracle(bounds, roundtrip_max, as_json);
    } catch (const hoffman::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hoffman::InternalError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitInputError;
}
