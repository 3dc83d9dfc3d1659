#pragma once

#include <optional>
#include <string>

#include "hoffman/analysis.hpp"
#include "hoffman/blocks.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/matrix.hpp"

namespace hoffman {

// Characterization of fat indecomposable Hoffman graphs with a slim vertex
// v* having two fat neighbors: lambda_min > -3 iff
//   (i)   U(S(h)) is a claw-free block graph,
//   (ii)  h contains exactly one induced K_{1,2} subgraph,
//   (iii) v* is not a cut vertex of U(S(h)),
//   (iv)  the block B* containing v* is K+_n (n>=2), K-_2, or T*_1,
//   (v)   every other block is K+_n (n>=2) or K-_2.
struct TheoremReport {
    VertexId marked_vertex;
    bool cond_i = false, cond_ii = false, cond_iii = false, cond_iv = false,
         cond_v = false;
    std::optional<ForbiddenWitness> cond_i_witness;        // forbidden induced subgraph
    long long k12_count = 0;                               // induced K_{1,2} count
    std::optional<std::set<VertexId>> offending_block;     // cond_iv / cond_v failure
    bool degenerate_single_slim = false;  // one slim vertex: no blocks, (iv)/(v) vacuous
    SpectralVerdict spectral_verdict;                      // B(h) vs -3
    bool equivalence_holds = false;

    bool all_conditions() const {
        return cond_i && cond_ii && cond_iii && cond_iv && cond_v;
    }
    nlohmann::json to_json() const;
};

// Pre: h fat, indecomposable, v_star slim with exactly two fat neighbors;
// each violation throws InputError with its own message.
TheoremReport check_theorem_conditions(const HoffmanGraph& h, const VertexId& v_star);

// Proof-side construction: reduced representation of norm 3 in dimension
// N = 1+p+q (coordinate 0: the block at v*; 1..p: the other blocks with
// sigma+/- signs on K-_2; p+1..p+q: indicators of non-cut vertices != v*).
// Pre: conditions (i)-(v) hold (InputError naming the violated condition).
// Post: verifies as a norm-3 reduced representation with full rank.
ReducedRepresentation build_psi(const HoffmanGraph& h, const VertexId& v_star);

// Admissibility of a connected edge-signed graph for the constructor:
//   (i)   U(s) is a claw-free block graph,
//   (ii)  no vertex other than v* meets more than one (-)-edge,
//   (iii) v* is not a cut vertex of U(s),
//   (iv)  the block at v* is K+_n, K-_2, or T*_1,
//   (v)   every other block is K+_n or K-_2.
struct SignedAdmissibilityReport {
    VertexId marked_vertex;
    bool cond_i = false, cond_ii = false, cond_iii = false, cond_iv = false,
         cond_v = false;
    std::optional<ForbiddenWitness> cond_i_witness;
    std::optional<VertexId> cond_ii_witness;            // vertex on >1 (-)-edges
    std::optional<std::set<VertexId>> offending_block;  // cond_iv / cond_v
    bool degenerate_single_vertex = false;

    bool all_conditions() const {
        return cond_i && cond_ii && cond_iii && cond_iv && cond_v;
    }
    nlohmann::json to_json() const;
};

// Pre: s connected with v_star a vertex (InputError otherwise).
SignedAdmissibilityReport signed_admissibility(const EdgeSignedGraph& s,
                                               const VertexId& v_star);

struct ConstructionResult {
    HoffmanGraph graph;
    // Single-vertex input has no blocks; by convention it maps to K_{1,2}.
    bool degenerate_single_vertex = false;
};

// Builds a fat Hoffman graph with special graph s:
//   (a) a common fat neighbor per (-)-edge,
//   (b) two pendant fats at v* when the block at v* is all-(+), one when it
//       is a (-)-edge, none when it is T*_1,
//   (c) a pendant fat for each other vertex on no (-)-edge,
//   (d) (+)-edges become edges, (-)-edges are removed.
// Pre: signed_admissibility all-true (InputError naming the failed condition).
// Post (asserted): special_graph(result) = s, v* has exactly two fat
// neighbors and every other slim vertex exactly one, result fat and
// indecomposable.
ConstructionResult construct_hoffman_from_signed(const EdgeSignedGraph& s,
                                                 const VertexId& v_star);

// Adjacency matrix with -1 at the diagonal position of v_star, rows/columns
// in sorted vertex-id order.
RatMatrix hat_adjacency(const PlainGraph& g, const VertexId& v_star);

struct Theorem5Report {
    bool spectral_side = false;   // lambda_min(hat_adjacency) > -2
    SpectralVerdict verdict;      // exact verdict at threshold 2
    bool line_tree_side = false;  // g = L(T) with v* an end edge of T
    std::string line_tree_failure;  // reason when line_tree_side is false
    bool agree = false;

    nlohmann::json to_json() const;
};

// Equivalence: lambda_min(hat_adjacency(g,v*)) > -2 iff g is the line graph
// of a tree with v* corresponding to an end edge. Also rebuilds the
// pendant-fat Hoffman graph and asserts B(h) = hat_adjacency - I.
// Pre: g connected (InputError otherwise).
Theorem5Report check_theorem5(const PlainGraph& g, const VertexId& v_star);

}  // namespace hoffman
