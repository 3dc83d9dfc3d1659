#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoffman/characterization.hpp"
#include "hoffman/graph.hpp"

namespace hoffman {

struct EnumerationBounds {
    int max_slim = 3;
    int max_fat = 4;
    int max_fat_degree = 3;  // >= 3 fats at one slim force lambda_min <= -3
    bool filter_fat = false;
    bool filter_indecomposable = false;
    bool filter_contains_k12 = false;
};

// One representative per isomorphism class, in canonical-form order. Fat
// vertices are determined by their slim neighborhoods (multiplicity <= 2).
// Throws InputError when the bounds exceed the cost ceiling (max_slim <= 4,
// max_fat <= 6).
std::vector<HoffmanGraph> enumerate_hoffman(const EnumerationBounds& b);

// Independent cross-check: labeled generation plus pairwise permutation
// isomorphism tests, no canonical forms. Only for max_slim <= 2.
std::vector<HoffmanGraph> enumerate_hoffman_naive(const EnumerationBounds& b);

struct OracleCounterexample {
    HoffmanGraph graph;
    VertexId v_star;
    TheoremReport report;
};

// Runs the main-theorem checker on every enumerated fat indecomposable graph
// containing K_{1,2} and every candidate v*; expected empty. The
// break_condition_ii hook deliberately negates condition (ii) so tests can
// confirm the harness reports failures.
std::vector<OracleCounterexample> oracle_theorem_equivalence(
    const EnumerationBounds& b, bool break_condition_ii = false);

struct RoundtripCounterexample {
    EdgeSignedGraph s;
    VertexId v_star;
    std::string reason;
};

// Enumerates admissible marked signed graphs up to isomorphism and checks
// special_graph(construct(s, v*)) = s, the fat-degree postconditions, and the
// Greater verdict at -3; expected empty.
std::vector<RoundtripCounterexample> roundtrip_signed(int max_vertices);

struct NonuniquenessReport {
    HoffmanGraph h1, h2;
    bool same_special = false;
    bool distinct = false;
    bool both_greater = false;

    bool ok() const { return same_special && distinct && both_greater; }
    nlohmann::json to_json() const;
};

// Two non-isomorphic fat Hoffman graphs realizing the same (+)(+)-path
// special graph, both with lambda_min > -3.
NonuniquenessReport nonuniqueness_demo();

struct AuditCounterexample {
    HoffmanGraph graph;
    std::string detail;
};

// Decomposable graphs: the verdict of the whole equals the minimum of the
// part verdicts at each threshold in {2, 3, 4}; expected empty.
std::vector<AuditCounterexample> min_rule_audit(const EnumerationBounds& b);

// Slim-induced subgraphs never have a smaller lambda_min than the whole, at
// each threshold in {2, 3, 4}; expected empty.
std::vector<AuditCounterexample> monotonicity_audit(const EnumerationBounds& b);

// All graphs (respectively connected graphs) on at most max_vertices
// vertices, one per isomorphism class.
std::vector<PlainGraph> graph_census(int max_vertices);
std::vector<PlainGraph> connected_graph_census(int max_vertices);

// All trees with at most max_edges edges (and at least one edge).
std::vector<PlainGraph> tree_census(int max_edges);

// Line graph; vertices are the edge names "a|b" of g.
PlainGraph line_graph(const PlainGraph& g);

}  // namespace hoffman
