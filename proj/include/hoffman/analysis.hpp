#pragma once

#include <map>
#include <optional>
#include <string>

#include "hoffman/graph.hpp"
#include "hoffman/matrix.hpp"

namespace hoffman {

// B(h) = A^s - C C^T, rows/columns indexed by slim vertices in sorted-id order.
RatMatrix b_matrix(const HoffmanGraph& h);

// The sorted slim-vertex order used by b_matrix.
std::vector<VertexId> slim_order(const HoffmanGraph& h);

// S(h): (+)-edge = adjacent slim pair without common fat neighbor,
// (-)-edge = non-adjacent slim pair with a common fat neighbor.
EdgeSignedGraph special_graph(const HoffmanGraph& h);

// True iff U(S(h)) is connected (requires at least one slim vertex).
bool is_indecomposable(const HoffmanGraph& h);

struct Decomposition {
    std::vector<std::set<VertexId>> parts;

    static Decomposition from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct DecompositionCheck {
    bool ok;
    std::string violation;  // empty when ok; names the first violated condition
};

DecompositionCheck validate_decomposition(const HoffmanGraph& h, const Decomposition& d);

// Parts = connected components of U(S(h)) extended by all fat neighbors,
// without validation. The partition can fail to be a decomposition, e.g. when
// adjacent slims in different components share two fat neighbors.
Decomposition special_component_partition(const HoffmanGraph& h);

// Validated variant; aborts with InternalError if the partition fails
// validation.
Decomposition decompose_by_special_components(const HoffmanGraph& h);

struct ReducedRepresentation {
    int norm = 0;       // m
    int dimension = 0;  // N
    std::map<VertexId, std::vector<Rational>> vectors;  // slim vertex -> R^N

    static ReducedRepresentation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct RepresentationCheck {
    bool ok;
    std::string first_failure;  // empty when ok
};

// Checks the three Gram cases exactly and Gram(psi) = B(h) + m I.
RepresentationCheck verify_reduced_representation(const HoffmanGraph& h,
                                                  const ReducedRepresentation& r);

}  // namespace hoffman
