#include "hoffman/analysis.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace hoffman {

std::vector<VertexId> slim_order(const HoffmanGraph& h) {
    std::vector<VertexId> order = h.slim_vertices;
    std::sort(order.begin(), order.end());
    return order;
}

RatMatrix b_matrix(const HoffmanGraph& h) {
    auto order = slim_order(h);
    int n = static_cast<int>(order.size());
    RatMatrix b(n);
    for (int i = 0; i < n; ++i) {
        b.set(i, i, Rational(-static_cast<long long>(h.fat_neighbors(order[i]).size())));
        for (int j = i + 1; j < n; ++j) {
            long long adj = h.adjacent(order[i], order[j]) ? 1 : 0;
            long long common =
                static_cast<long long>(h.common_fat_neighbors(order[i], order[j]).size());
            b.set(i, j, Rational(adj - common));
        }
    }
    return b;
}

EdgeSignedGraph special_graph(const HoffmanGraph& h) {
    EdgeSignedGraph s;
    s.vertices = h.slim_vertices;
    for (size_t i = 0; i < h.slim_vertices.size(); ++i)
        for (size_t j = i + 1; j < h.slim_vertices.size(); ++j) {
            const auto& u = h.slim_vertices[i];
            const auto& v = h.slim_vertices[j];
            bool adj = h.adjacent(u, v);
            bool common = !h.common_fat_neighbors(u, v).empty();
            if (adj && !common) s.plus_edges.insert(make_pair_sorted(u, v));
            else if (!adj && common) s.minus_edges.insert(make_pair_sorted(u, v));
        }
    return s;
}

bool is_indecomposable(const HoffmanGraph& h) {
    if (h.slim_vertices.empty())
        throw InputError("is_indecomposable: Hoffman graph has no slim vertices");
    return special_graph(h).underlying().connected();
}

Decomposition Decomposition::from_json(const nlohmann::json& j) {
    if (!j.contains("parts") || !j["parts"].is_array())
        throw InputError("decomposition: missing 'parts' array");
    Decomposition d;
    for (const auto& p : j["parts"]) {
        if (!p.is_array()) throw InputError("decomposition: each part must be an array");
        std::set<VertexId> part;
        for (const auto& v : p) {
            if (!v.is_string()) throw InputError("decomposition: vertex ids must be strings");
            part.insert(v.get<VertexId>());
        }
        d.parts.push_back(std::move(part));
    }
    return d;
}

nlohmann::json Decomposition::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : parts)
        arr.push_back(std::vector<VertexId>(p.begin(), p.end()));
    return {{"parts", arr}};
}

DecompositionCheck validate_decomposition(const HoffmanGraph& h, const Decomposition& d) {
    for (const auto& part : d.parts)
        for (const auto& v : part)
            if (!h.has_vertex(v))
                throw InputError("decomposition: unknown vertex '" + v + "'");
    for (size_t i = 0; i < d.parts.size(); ++i)
        if (d.parts[i].empty()) return {false, "part " + std::to_string(i) + " is empty"};

    // (i) vertex cover
    std::set<VertexId> covered;
    for (const auto& part : d.parts) covered.insert(part.begin(), part.end());
    for (const auto& v : h.slim_vertices)
        if (!covered.count(v)) return {false, "(i): vertex '" + v + "' not covered"};
    for (const auto& v : h.fat_vertices)
        if (!covered.count(v)) return {false, "(i): vertex '" + v + "' not covered"};

    auto slims_of = [&](const std::set<VertexId>& part) {
        std::vector<VertexId> out;
        for (const auto& v : part)
            if (h.is_slim_vertex(v)) out.push_back(v);
        return out;
    };

    // (ii) slim-disjointness
    std::map<VertexId, size_t> owner;
    for (size_t i = 0; i < d.parts.size(); ++i)
        for (const auto& v : slims_of(d.parts[i])) {
            auto [it, fresh] = owner.emplace(v, i);
            if (!fresh)
                return {false, "(ii): slim vertex '" + v + "' in parts " +
                                   std::to_string(it->second) + " and " + std::to_string(i)};
        }

    // (iii) fat-closure
    for (size_t i = 0; i < d.parts.size(); ++i)
        for (const auto& x : slims_of(d.parts[i]))
            for (const auto& f : h.fat_neighbors(x))
                if (!d.parts[i].count(f))
                    return {false, "(iii): fat neighbor '" + f + "' of '" + x +
                                       "' missing from part " + std::to_string(i)};

    // (iv) cross-part common-fat condition
    for (size_t i = 0; i < d.parts.size(); ++i)
        for (size_t j = i + 1; j < d.parts.size(); ++j)
            for (const auto& x : slims_of(d.parts[i]))
                for (const auto& y : slims_of(d.parts[j])) {
                    size_t c = h.common_fat_neighbors(x, y).size();
                    bool edge = h.adjacent(x, y);
                    if (c > 1)
                        return {false, "(iv): slim vertices '" + x + "', '" + y +
                                           "' share " + std::to_string(c) + " fat neighbors"};
                    if ((c == 1) != edge)
                        return {false, "(iv): slim vertices '" + x + "', '" + y +
                                           "' violate the common-fat/edge equivalence"};
                }
    return {true, ""};
}

Decomposition special_component_partition(const HoffmanGraph& h) {
    Decomposition d;
    if (h.slim_vertices.empty()) return d;
    PlainGraph u = special_graph(h).underlying();
    std::set<VertexId> unseen(u.vertices.begin(), u.vertices.end());
    while (!unseen.empty()) {
        std::set<VertexId> comp;
        std::vector<VertexId> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        comp.insert(stack.front());
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const auto& w : u.neighbors(v))
                if (unseen.erase(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
        }
        std::set<VertexId> part = comp;
        for (const auto& v : comp)
            for (const auto& f : h.fat_neighbors(v)) part.insert(f);
        d.parts.push_back(std::move(part));
    }
    return d;
}

Decomposition decompose_by_special_components(const HoffmanGraph& h) {
    Decomposition d = special_component_partition(h);
    auto check = validate_decomposition(h, d);
    if (!check.ok)
        throw InternalError("special-component decomposition failed validation: " +
                            check.violation);
    return d;
}

ReducedRepresentation ReducedRepresentation::from_json(const nlohmann::json& j) {
    ReducedRepresentation r;
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw InputError("representation: missing integer 'm'");
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw InputError("representation: missing integer 'N'");
    r.norm = j["m"].get<int>();
    r.dimension = j["N"].get<int>();
    if (!j.contains("vectors") || !j["vectors"].is_object())
        throw InputError("representation: missing 'vectors' object");
    for (const auto& [key, val] : j["vectors"].items()) {
        if (!val.is_array())
            throw InputError("representation: vector of '" + key + "' must be an array");
        std::vector<Rational> vec;
        for (const auto& e : val) {
            if (e.is_string()) vec.push_back(parse_rational(e.get<std::string>()));
            else if (e.is_number_integer()) vec.push_back(Rational(e.get<long long>()));
            else throw InputError("representation: entries must be strings or integers");
        }
        r.vectors[key] = std::move(vec);
    }
    return r;
}

nlohmann::json ReducedRepresentation::to_json() const {
    nlohmann::json vecs = nlohmann::json::object();
    for (const auto& [v, vec] : vectors) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : vec) arr.push_back(format_rational(r));
        vecs[v] = arr;
    }
    return {{"m", norm}, {"N", dimension}, {"vectors", vecs}};
}

RepresentationCheck verify_reduced_representation(const HoffmanGraph& h,
                                                  const ReducedRepresentation& r) {
    std::set<VertexId> slims(h.slim_vertices.begin(), h.slim_vertices.end());
    std::set<VertexId> keys;
    for (const auto& [v, vec] : r.vectors) {
        keys.insert(v);
        if (static_cast<int>(vec.size()) != r.dimension)
            throw InputError("representation: vector of '" + v + "' has length " +
                             std::to_string(vec.size()) + ", expected " +
                             std::to_string(r.dimension));
    }
    if (keys != slims)
        throw InputError("representation: vectors must cover exactly the slim vertices");

    auto inner = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s(0);
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    auto order = slim_order(h);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i; j < order.size(); ++j) {
            const auto& x = order[i];
            const auto& y = order[j];
            Rational got = inner(r.vectors.at(x), r.vectors.at(y));
            Rational want;
            if (i == j)
                want = Rational(r.norm - static_cast<long long>(h.fat_neighbors(x).size()));
            else {
                long long common =
                    static_cast<long long>(h.common_fat_neighbors(x, y).size());
                want = h.adjacent(x, y) ? Rational(1 - common) : Rational(-common);
            }
            if (got != want)
                return {false, "Gram mismatch at (" + x + "," + y + "): got " +
                                   format_rational(got) + ", expected " +
                                   format_rational(want)};
        }

    // Derived identity Gram(psi) = B(h) + m I.
    RatMatrix b = b_matrix(h);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i; j < order.size(); ++j) {
            Rational want = b.at(static_cast<int>(i), static_cast<int>(j));
            if (i == j) want += r.norm;
            if (inner(r.vectors.at(order[i]), r.vectors.at(order[j])) != want)
                return {false, "Gram(psi) != B + mI at (" + order[i] + "," + order[j] + ")"};
        }
    return {true, ""};
}

}  // namespace hoffman
