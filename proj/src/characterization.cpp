#include "hoffman/characterization.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace hoffman {

namespace {

// Blocks of U(s) with >= 2 vertices, i.e. excluding isolated singletons.
std::vector<std::set<VertexId>> proper_blocks(const BlockStructure& bs) {
    std::vector<std::set<VertexId>> out;
    for (size_t i = 0; i < bs.blocks.size(); ++i)
        if (std::find(bs.isolated_blocks.begin(), bs.isolated_blocks.end(), i) ==
            bs.isolated_blocks.end())
            out.push_back(bs.blocks[i]);
    return out;
}

VertexId fresh_name(const std::string& base, std::set<VertexId>& used) {
    VertexId name = base;
    while (used.count(name)) name += "'";
    used.insert(name);
    return name;
}

nlohmann::json witness_json(const std::optional<ForbiddenWitness>& w) {
    if (!w) return nullptr;
    return {{"pattern", w->pattern}, {"vertices", w->vertices}};
}

nlohmann::json block_json(const std::optional<std::set<VertexId>>& b) {
    if (!b) return nullptr;
    return std::vector<VertexId>(b->begin(), b->end());
}

}  // namespace

nlohmann::json TheoremReport::to_json() const {
    return {{"marked_vertex", marked_vertex},
            {"cond_i", cond_i},
            {"cond_i_witness", witness_json(cond_i_witness)},
            {"cond_ii", cond_ii},
            {"k12_count", k12_count},
            {"cond_iii", cond_iii},
            {"cond_iv", cond_iv},
            {"cond_v", cond_v},
            {"offending_block", block_json(offending_block)},
            {"degenerate_single_slim", degenerate_single_slim},
            {"spectral_verdict", spectral_verdict.to_json()},
            {"all_conditions", all_conditions()},
            {"equivalence_holds", equivalence_holds}};
}

TheoremReport check_theorem_conditions(const HoffmanGraph& h, const VertexId& v_star) {
    h.validate();
    if (!is_fat(h))
        throw InputError("check_theorem_conditions: graph is not fat");
    if (!is_indecomposable(h))
        throw InputError("check_theorem_conditions: graph is decomposable");
    if (!h.is_slim_vertex(v_star))
        throw InputError("check_theorem_conditions: '" + v_star + "' is not slim");
    if (h.fat_neighbors(v_star).size() != 2)
        throw InputError("check_theorem_conditions: '" + v_star +
                         "' does not have exactly two fat neighbors");

    TheoremReport rep;
    rep.marked_vertex = v_star;
    EdgeSignedGraph s = special_graph(h);
    PlainGraph u = s.underlying();
    auto bs = blocks_and_cut_vertices(u);

    auto cf = is_claw_free_block_graph(u);
    rep.cond_i = cf.ok;
    rep.cond_i_witness = cf.witness;

    rep.k12_count = fat_pair_count(h);
    rep.cond_ii = rep.k12_count == 1;

    rep.cond_iii = !bs.cut_vertices.count(v_star);

    auto blocks = proper_blocks(bs);
    if (blocks.empty()) {
        rep.degenerate_single_slim = true;
        rep.cond_iv = rep.cond_v = true;
    } else {
        rep.cond_iv = rep.cond_v = true;
        for (const auto& b : blocks) {
            BlockKind k = classify_block(s, b, v_star);
            if (b.count(v_star)) {
                if (k.kind == BlockKind::Kind::Other) {
                    rep.cond_iv = false;
                    if (!rep.offending_block) rep.offending_block = b;
                }
            } else if (k.kind != BlockKind::Kind::PlusClique &&
                       k.kind != BlockKind::Kind::MinusEdge) {
                rep.cond_v = false;
                if (!rep.offending_block) rep.offending_block = b;
            }
        }
    }

    rep.spectral_verdict = classify_lambda_min(b_matrix(h), Rational(3));
    rep.equivalence_holds =
        (rep.spectral_verdict.relation == Relation::Greater) == rep.all_conditions();
    return rep;
}

ReducedRepresentation build_psi(const HoffmanGraph& h, const VertexId& v_star) {
    TheoremReport rep = check_theorem_conditions(h, v_star);
    if (!rep.cond_i) throw InputError("build_psi: condition (i) fails");
    if (!rep.cond_ii) throw InputError("build_psi: condition (ii) fails");
    if (!rep.cond_iii) throw InputError("build_psi: condition (iii) fails");
    if (!rep.cond_iv) throw InputError("build_psi: condition (iv) fails");
    if (!rep.cond_v) throw InputError("build_psi: condition (v) fails");

    EdgeSignedGraph s = special_graph(h);
    PlainGraph u = s.underlying();
    auto bs = blocks_and_cut_vertices(u);
    auto blocks = proper_blocks(bs);

    std::optional<std::set<VertexId>> b0;
    std::vector<std::set<VertexId>> others;
    for (const auto& b : blocks) {
        if (b.count(v_star)) {
            if (b0) throw InternalError("build_psi: v* lies in two blocks");
            b0 = b;
        } else {
            others.push_back(b);
        }
    }
    std::sort(others.begin(), others.end());

    std::vector<VertexId> w;  // non-cut slim vertices other than v*, sorted
    for (const auto& v : slim_order(h))
        if (v != v_star && !bs.cut_vertices.count(v)) w.push_back(v);

    int p = static_cast<int>(others.size());
    int q = static_cast<int>(w.size());
    ReducedRepresentation r;
    r.norm = 3;
    r.dimension = 1 + p + q;
    for (const auto& v : h.slim_vertices)
        r.vectors[v] = std::vector<Rational>(r.dimension, Rational(0));

    r.vectors[v_star][0] = 1;
    if (b0) {
        BlockKind k0 = classify_block(s, *b0, v_star);
        Rational sign = k0.kind == BlockKind::Kind::PlusClique ? 1 : -1;
        for (const auto& v : *b0)
            if (v != v_star) r.vectors[v][0] = sign;
    }
    for (int i = 0; i < p; ++i) {
        BlockKind k = classify_block(s, others[i], v_star);
        if (k.kind == BlockKind::Kind::PlusClique) {
            for (const auto& v : others[i]) r.vectors[v][1 + i] = 1;
        } else if (k.kind == BlockKind::Kind::MinusEdge) {
            r.vectors[k.sigma_plus][1 + i] = 1;
            r.vectors[k.sigma_minus][1 + i] = -1;
        } else {
            throw InternalError("build_psi: non-marked block of unexpected kind");
        }
    }
    for (int j = 0; j < q; ++j) r.vectors[w[j]][1 + p + j] = 1;

    auto check = verify_reduced_representation(h, r);
    if (!check.ok)
        throw InternalError("build_psi: representation check failed: " +
                            check.first_failure);
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : slim_order(h)) rows.push_back(r.vectors.at(v));
    if (rational_rank(rows, r.dimension) != static_cast<int>(rows.size()))
        throw InternalError("build_psi: vectors are not linearly independent");
    return r;
}

nlohmann::json SignedAdmissibilityReport::to_json() const {
    return {{"marked_vertex", marked_vertex},
            {"cond_i", cond_i},
            {"cond_i_witness", witness_json(cond_i_witness)},
            {"cond_ii", cond_ii},
            {"cond_ii_witness", cond_ii_witness ? nlohmann::json(*cond_ii_witness)
                                                : nlohmann::json(nullptr)},
            {"cond_iii", cond_iii},
            {"cond_iv", cond_iv},
            {"cond_v", cond_v},
            {"offending_block", block_json(offending_block)},
            {"degenerate_single_vertex", degenerate_single_vertex},
            {"all_conditions", all_conditions()}};
}

SignedAdmissibilityReport signed_admissibility(const EdgeSignedGraph& s,
                                               const VertexId& v_star) {
    s.validate();
    if (!s.has_vertex(v_star))
        throw InputError("signed_admissibility: unknown vertex '" + v_star + "'");
    PlainGraph u = s.underlying();
    if (!u.connected())
        throw InputError("signed_admissibility: graph is disconnected");

    SignedAdmissibilityReport rep;
    rep.marked_vertex = v_star;

    auto cf = is_claw_free_block_graph(u);
    rep.cond_i = cf.ok;
    rep.cond_i_witness = cf.witness;

    rep.cond_ii = true;
    std::map<VertexId, int> minus_deg;
    for (const auto& [a, b] : s.minus_edges) {
        ++minus_deg[a];
        ++minus_deg[b];
    }
    for (const auto& v : s.vertices)
        if (v != v_star && minus_deg[v] > 1) {
            rep.cond_ii = false;
            rep.cond_ii_witness = v;
            break;
        }

    auto bs = blocks_and_cut_vertices(u);
    rep.cond_iii = !bs.cut_vertices.count(v_star);

    auto blocks = proper_blocks(bs);
    if (blocks.empty()) {
        rep.degenerate_single_vertex = true;
        rep.cond_iv = rep.cond_v = true;
        return rep;
    }
    rep.cond_iv = rep.cond_v = true;
    for (const auto& b : blocks) {
        BlockKind k = classify_block(s, b, v_star);
        if (b.count(v_star)) {
            if (k.kind == BlockKind::Kind::Other) {
                rep.cond_iv = false;
                if (!rep.offending_block) rep.offending_block = b;
            }
        } else if (k.kind != BlockKind::Kind::PlusClique &&
                   k.kind != BlockKind::Kind::MinusEdge) {
            rep.cond_v = false;
            if (!rep.offending_block) rep.offending_block = b;
        }
    }
    return rep;
}

ConstructionResult construct_hoffman_from_signed(const EdgeSignedGraph& s,
                                                 const VertexId& v_star) {
    SignedAdmissibilityReport rep = signed_admissibility(s, v_star);
    if (!rep.cond_i) throw InputError("construct: condition (i) fails");
    if (!rep.cond_ii) throw InputError("construct: condition (ii) fails");
    if (!rep.cond_iii) throw InputError("construct: condition (iii) fails");
    if (!rep.cond_iv) throw InputError("construct: condition (iv) fails");
    if (!rep.cond_v) throw InputError("construct: condition (v) fails");

    ConstructionResult res;
    res.degenerate_single_vertex = rep.degenerate_single_vertex;
    HoffmanGraph& h = res.graph;
    h.slim_vertices = s.vertices;
    std::set<VertexId> used(s.vertices.begin(), s.vertices.end());
    int counter = 0;
    auto new_fat = [&] {
        VertexId f = fresh_name("f" + std::to_string(counter++), used);
        h.fat_vertices.push_back(f);
        return f;
    };

    // (a) one shared fat neighbor per (-)-edge
    std::set<VertexId> on_minus_edge;
    for (const auto& [a, b] : s.minus_edges) {
        VertexId f = new_fat();
        h.add_edge(a, f);
        h.add_edge(b, f);
        on_minus_edge.insert(a);
        on_minus_edge.insert(b);
    }

    // (b) pendant fats at v*, depending on the kind of the block at v*
    int pendant_at_star = 2;
    if (!rep.degenerate_single_vertex) {
        auto bs = blocks_and_cut_vertices(s.underlying());
        for (const auto& b : proper_blocks(bs))
            if (b.count(v_star)) {
                BlockKind k = classify_block(s, b, v_star);
                if (k.kind == BlockKind::Kind::PlusClique) pendant_at_star = 2;
                else if (k.kind == BlockKind::Kind::MinusEdge) pendant_at_star = 1;
                else pendant_at_star = 0;  // T*_1: both fats come from rule (a)
            }
    }
    for (int i = 0; i < pendant_at_star; ++i) h.add_edge(v_star, new_fat());

    // (c) pendant fat for every other vertex on no (-)-edge
    for (const auto& v : s.vertices)
        if (v != v_star && !on_minus_edge.count(v)) h.add_edge(v, new_fat());

    // (d) (+)-edges become edges; (-)-edges are dropped
    for (const auto& [a, b] : s.plus_edges) h.add_edge(a, b);

    h.validate();
    if (!(special_graph(h) == s))
        throw InternalError("construct: special graph round-trip failed");
    if (h.fat_neighbors(v_star).size() != 2)
        throw InternalError("construct: v* does not have two fat neighbors");
    for (const auto& v : h.slim_vertices)
        if (v != v_star && h.fat_neighbors(v).size() != 1)
            throw InternalError("construct: '" + v + "' does not have one fat neighbor");
    if (!is_fat(h) || !is_indecomposable(h))
        throw InternalError("construct: result is not fat indecomposable");
    return res;
}

RatMatrix hat_adjacency(const PlainGraph& g, const VertexId& v_star) {
    g.validate();
    if (!g.has_vertex(v_star))
        throw InputError("hat_adjacency: unknown vertex '" + v_star + "'");
    std::vector<VertexId> order = g.vertices;
    std::sort(order.begin(), order.end());
    int n = static_cast<int>(order.size());
    RatMatrix a(n);
    for (int i = 0; i < n; ++i) {
        if (order[i] == v_star) a.set(i, i, Rational(-1));
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(order[i], order[j])) a.set(i, j, Rational(1));
    }
    return a;
}

nlohmann::json Theorem5Report::to_json() const {
    return {{"spectral_side", spectral_side},
            {"verdict", verdict.to_json()},
            {"line_tree_side", line_tree_side},
            {"line_tree_failure", line_tree_failure},
            {"agree", agree}};
}

Theorem5Report check_theorem5(const PlainGraph& g, const VertexId& v_star) {
    g.validate();
    if (!g.has_vertex(v_star))
        throw InputError("check_theorem5: unknown vertex '" + v_star + "'");
    if (!g.connected()) throw InputError("check_theorem5: graph is disconnected");

    Theorem5Report rep;
    rep.verdict = classify_lambda_min(hat_adjacency(g, v_star), Rational(2));
    rep.spectral_side = rep.verdict.relation == Relation::Greater;

    auto cf = is_claw_free_block_graph(g);
    if (!cf.ok) {
        rep.line_tree_failure = "forbidden induced " + cf.witness->pattern;
    } else {
        LineTreeResult ltr = line_tree_reconstruct(g);
        std::optional<VertexPair> star_edge;
        for (const auto& [e, v] : ltr.edge_map)
            if (v == v_star) star_edge = e;
        if (!star_edge) throw InternalError("check_theorem5: edge map misses v*");
        auto degree = [&](const VertexId& t) {
            return ltr.tree.neighbors(t).size();
        };
        bool end_edge = degree(star_edge->first) == 1 || degree(star_edge->second) == 1;
        bool star_cut = blocks_and_cut_vertices(g).cut_vertices.count(v_star) > 0;
        if (!end_edge)
            rep.line_tree_failure = "v* does not correspond to an end edge";
        else if (star_cut)
            rep.line_tree_failure = "v* is a cut vertex";
        else
            rep.line_tree_side = true;
    }
    rep.agree = rep.spectral_side == rep.line_tree_side;

    // Pendant-fat companion graph: B(h) must equal hat_adjacency - I.
    HoffmanGraph h;
    h.slim_vertices = g.vertices;
    std::set<VertexId> used(g.vertices.begin(), g.vertices.end());
    int counter = 0;
    for (const auto& v : g.vertices) {
        int fats = v == v_star ? 2 : 1;
        for (int i = 0; i < fats; ++i) {
            VertexId f = fresh_name("f" + std::to_string(counter++), used);
            h.fat_vertices.push_back(f);
            h.add_edge(v, f);
        }
    }
    for (const auto& [a, b] : g.edges) h.add_edge(a, b);
    h.validate();
    RatMatrix want = hat_adjacency(g, v_star);
    for (int i = 0; i < want.order(); ++i) want.set(i, i, want.at(i, i) - 1);
    if (!(b_matrix(h) == want))
        throw InternalError("check_theorem5: B(h) != hat_adjacency - I");
    return rep;
}

}  // namespace hoffman
