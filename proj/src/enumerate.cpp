#include "hoffman/enumerate.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "hoffman/analysis.hpp"
#include "hoffman/canonical.hpp"

namespace hoffman {

namespace {

void check_bounds(const EnumerationBounds& b) {
    if (b.max_slim < 0 || b.max_fat < 0 || b.max_fat_degree < 1)
        throw InputError("enumeration: bounds must be positive");
    if (b.max_slim > 4 || b.max_fat > 6)
        throw InputError("enumeration: bounds exceed the cost ceiling (max_slim <= 4, "
                         "max_fat <= 6)");
}

bool passes_filters(const HoffmanGraph& h, const EnumerationBounds& b) {
    if (b.filter_fat && !is_fat(h)) return false;
    if (b.filter_indecomposable && !is_indecomposable(h)) return false;
    if (b.filter_contains_k12) {
        bool some = false;
        for (const auto& v : h.slim_vertices)
            if (h.fat_neighbors(v).size() >= 2) some = true;
        if (!some) return false;
    }
    return true;
}

HoffmanGraph assemble(int k, unsigned edge_mask,
                      const std::vector<int>& fat_subsets) {
    HoffmanGraph h;
    for (int i = 0; i < k; ++i) h.slim_vertices.push_back("s" + std::to_string(i));
    int bit = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++bit)
            if (edge_mask & (1u << bit)) h.add_edge(h.slim_vertices[i], h.slim_vertices[j]);
    for (size_t f = 0; f < fat_subsets.size(); ++f) {
        VertexId fat = "f" + std::to_string(f);
        h.fat_vertices.push_back(fat);
        for (int i = 0; i < k; ++i)
            if (fat_subsets[f] & (1 << i)) h.add_edge(h.slim_vertices[i], fat);
    }
    return h;
}

}  // namespace

std::vector<HoffmanGraph> enumerate_hoffman(const EnumerationBounds& b) {
    check_bounds(b);
    std::map<std::string, HoffmanGraph> reps;
    for (int k = 1; k <= b.max_slim; ++k) {
        int pairs = k * (k - 1) / 2;
        int subsets = (1 << k) - 1;
        // Non-decreasing sequences of nonempty slim subsets; the multiplicity
        // of a subset is capped by the per-slim fat-degree bound.
        std::vector<std::vector<int>> fat_configs;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int next) -> void {
            fat_configs.push_back(cur);
            if (static_cast<int>(cur.size()) == b.max_fat) return;
            for (int s = next; s <= subsets; ++s) {
                int run = 0;
                for (auto it = cur.rbegin(); it != cur.rend() && *it == s; ++it) ++run;
                if (run >= b.max_fat_degree) continue;
                cur.push_back(s);
                self(self, s);
                cur.pop_back();
            }
        };
        rec(rec, 1);

        for (unsigned mask = 0; mask < (1u << pairs); ++mask)
            for (const auto& cfg : fat_configs) {
                std::vector<int> deg(k, 0);
                bool ok = true;
                for (int s : cfg)
                    for (int i = 0; i < k; ++i)
                        if (s & (1 << i))
                            if (++deg[i] > b.max_fat_degree) ok = false;
                if (!ok) continue;
                HoffmanGraph h = assemble(k, mask, cfg);
                if (!passes_filters(h, b)) continue;
                reps.emplace(canonical_form(h), std::move(h));
            }
    }
    std::vector<HoffmanGraph> out;
    for (auto& [key, h] : reps) out.push_back(std::move(h));
    return out;
}

namespace {

// Role-preserving isomorphism by brute-force permutation search.
bool isomorphic_brute(const HoffmanGraph& a, const HoffmanGraph& b) {
    if (a.slim_vertices.size() != b.slim_vertices.size() ||
        a.fat_vertices.size() != b.fat_vertices.size() ||
        a.edges.size() != b.edges.size())
        return false;
    std::vector<int> sp(a.slim_vertices.size()), fp(a.fat_vertices.size());
    for (size_t i = 0; i < sp.size(); ++i) sp[i] = static_cast<int>(i);
    for (size_t i = 0; i < fp.size(); ++i) fp[i] = static_cast<int>(i);
    do {
        std::vector<int> fq = fp;
        do {
            std::map<VertexId, VertexId> m;
            for (size_t i = 0; i < sp.size(); ++i)
                m[a.slim_vertices[i]] = b.slim_vertices[sp[i]];
            for (size_t i = 0; i < fq.size(); ++i)
                m[a.fat_vertices[i]] = b.fat_vertices[fq[i]];
            EdgeSet mapped;
            for (const auto& [x, y] : a.edges)
                mapped.insert(make_pair_sorted(m[x], m[y]));
            if (mapped == b.edges) return true;
        } while (std::next_permutation(fq.begin(), fq.end()));
    } while (std::next_permutation(sp.begin(), sp.end()));
    return false;
}

}  // namespace

std::vector<HoffmanGraph> enumerate_hoffman_naive(const EnumerationBounds& b) {
    check_bounds(b);
    if (b.max_slim > 2)
        throw InputError("enumerate_hoffman_naive: supported only for max_slim <= 2");
    std::vector<HoffmanGraph> reps;
    for (int k = 1; k <= b.max_slim; ++k) {
        int pairs = k * (k - 1) / 2;
        for (int m = 0; m <= b.max_fat; ++m)
            for (unsigned emask = 0; emask < (1u << pairs); ++emask)
                for (unsigned fmask = 0; fmask < (1u << (k * m)); ++fmask) {
                    HoffmanGraph h;
                    for (int i = 0; i < k; ++i)
                        h.slim_vertices.push_back("s" + std::to_string(i));
                    if (pairs && (emask & 1))
                        h.add_edge(h.slim_vertices[0], h.slim_vertices[1]);
                    bool ok = true;
                    std::vector<int> deg(k, 0);
                    for (int f = 0; f < m; ++f) {
                        VertexId fat = "f" + std::to_string(f);
                        h.fat_vertices.push_back(fat);
                        bool attached = false;
                        for (int i = 0; i < k; ++i)
                            if (fmask & (1u << (f * k + i))) {
                                h.add_edge(h.slim_vertices[i], fat);
                                attached = true;
                                if (++deg[i] > b.max_fat_degree) ok = false;
                            }
                        if (!attached) ok = false;  // isolated fat vertex
                    }
                    if (!ok || !passes_filters(h, b)) continue;
                    bool fresh = true;
                    for (const auto& r : reps)
                        if (isomorphic_brute(h, r)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) reps.push_back(std::move(h));
                }
    }
    return reps;
}

std::vector<OracleCounterexample> oracle_theorem_equivalence(
    const EnumerationBounds& bounds, bool break_condition_ii) {
    EnumerationBounds b = bounds;
    b.filter_fat = b.filter_indecomposable = b.filter_contains_k12 = true;
    std::vector<OracleCounterexample> bad;
    for (const auto& h : enumerate_hoffman(b))
        for (const auto& v : h.slim_vertices) {
            if (h.fat_neighbors(v).size() != 2) continue;
            TheoremReport rep = check_theorem_conditions(h, v);
            bool cond_ii = break_condition_ii ? !rep.cond_ii : rep.cond_ii;
            bool conds = rep.cond_i && cond_ii && rep.cond_iii && rep.cond_iv &&
                         rep.cond_v;
            bool eq = (rep.spectral_verdict.relation == Relation::Greater) == conds;
            if (!eq) bad.push_back({h, v, rep});
        }
    return bad;
}

std::vector<RoundtripCounterexample> roundtrip_signed(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 6)
        throw InputError("roundtrip_signed: max_vertices must be between 1 and 6");
    std::vector<RoundtripCounterexample> bad;
    std::map<std::string, bool> seen;
    for (int n = 1; n <= max_vertices; ++n) {
        int pairs = n * (n - 1) / 2;
        long long total = 1;
        for (int i = 0; i < pairs; ++i) total *= 3;
        for (long long code = 0; code < total; ++code) {
            EdgeSignedGraph s;
            for (int i = 0; i < n; ++i) s.vertices.push_back("v" + std::to_string(i));
            long long c = code;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int d = static_cast<int>(c % 3);
                    c /= 3;
                    if (d == 1)
                        s.plus_edges.insert(make_pair_sorted(s.vertices[i], s.vertices[j]));
                    else if (d == 2)
                        s.minus_edges.insert(make_pair_sorted(s.vertices[i], s.vertices[j]));
                }
            if (!s.underlying().connected()) continue;
            if (!seen.emplace(canonical_form(s, "v0"), true).second) continue;
            SignedAdmissibilityReport rep = signed_admissibility(s, "v0");
            if (!rep.all_conditions()) continue;
            try {
                ConstructionResult res = construct_hoffman_from_signed(s, "v0");
                SpectralVerdict v = classify_lambda_min(b_matrix(res.graph), Rational(3));
                if (v.relation != Relation::Greater)
                    bad.push_back({s, "v0", "constructed graph not Greater at -3"});
            } catch (const std::exception& e) {
                bad.push_back({s, "v0", e.what()});
            }
        }
    }
    return bad;
}

nlohmann::json NonuniquenessReport::to_json() const {
    return {{"h1", h1.to_json()},
            {"h2", h2.to_json()},
            {"same_special_graph", same_special},
            {"non_isomorphic", distinct},
            {"both_greater_than_minus_3", both_greater},
            {"ok", ok()}};
}

NonuniquenessReport nonuniqueness_demo() {
    NonuniquenessReport rep;
    HoffmanGraph& h1 = rep.h1;
    h1.slim_vertices = {"v*", "v1", "v2"};
    h1.fat_vertices = {"f+", "f-", "f1", "f2"};
    h1.add_edge("v*", "v1");
    h1.add_edge("v1", "v2");
    h1.add_edge("v*", "f+");
    h1.add_edge("v*", "f-");
    h1.add_edge("v1", "f1");
    h1.add_edge("v2", "f2");
    h1.validate();

    HoffmanGraph& h2 = rep.h2;
    h2.slim_vertices = {"v*", "v1", "v2"};
    h2.fat_vertices = {"f0", "f1", "f2"};
    h2.add_edge("v*", "v1");
    h2.add_edge("v*", "v2");
    h2.add_edge("v1", "v2");
    h2.add_edge("v*", "f0");
    h2.add_edge("v*", "f2");
    h2.add_edge("v1", "f1");
    h2.add_edge("v2", "f2");
    h2.validate();

    rep.same_special = special_graph(h1) == special_graph(h2);
    rep.distinct = canonical_form(h1) != canonical_form(h2);
    rep.both_greater =
        classify_lambda_min(b_matrix(h1), Rational(3)).relation == Relation::Greater &&
        classify_lambda_min(b_matrix(h2), Rational(3)).relation == Relation::Greater;
    return rep;
}

namespace {

int verdict_rank(Relation r) {
    switch (r) {
        case Relation::Less: return 0;
        case Relation::Equal: return 1;
        case Relation::Greater: return 2;
    }
    return -1;
}

const Rational kAuditThresholds[] = {Rational(2), Rational(3), Rational(4)};

}  // namespace

std::vector<AuditCounterexample> min_rule_audit(const EnumerationBounds& bounds) {
    EnumerationBounds b = bounds;
    b.filter_fat = true;
    b.filter_indecomposable = false;
    b.filter_contains_k12 = false;
    std::vector<AuditCounterexample> bad;
    for (const auto& h : enumerate_hoffman(b)) {
        if (is_indecomposable(h)) continue;
        Decomposition d = special_component_partition(h);
        if (!validate_decomposition(h, d).ok) continue;  // not decomposable this way
        std::vector<HoffmanGraph> parts;
        for (const auto& p : d.parts)
            parts.push_back(induced_hoffman_subgraph(h, p).graph);
        for (const auto& t : kAuditThresholds) {
            int whole = verdict_rank(classify_lambda_min(b_matrix(h), t).relation);
            int min_part = 2;
            for (const auto& p : parts)
                min_part = std::min(
                    min_part, verdict_rank(classify_lambda_min(b_matrix(p), t).relation));
            if (whole != min_part)
                bad.push_back({h, "min-rule mismatch at threshold " + format_rational(t)});
        }
    }
    return bad;
}

std::vector<AuditCounterexample> monotonicity_audit(const EnumerationBounds& bounds) {
    EnumerationBounds b = bounds;
    b.filter_fat = true;
    std::vector<AuditCounterexample> bad;
    for (const auto& h : enumerate_hoffman(b)) {
        int k = static_cast<int>(h.slim_vertices.size());
        std::vector<int> whole(3);
        for (int t = 0; t < 3; ++t)
            whole[t] = verdict_rank(
                classify_lambda_min(b_matrix(h), kAuditThresholds[t]).relation);
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::set<VertexId> keep;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) {
                    keep.insert(h.slim_vertices[i]);
                    for (const auto& f : h.fat_neighbors(h.slim_vertices[i]))
                        keep.insert(f);
                }
            HoffmanGraph sub = induced_hoffman_subgraph(h, keep).graph;
            for (int t = 0; t < 3; ++t) {
                int r = verdict_rank(
                    classify_lambda_min(b_matrix(sub), kAuditThresholds[t]).relation);
                if (r < whole[t])
                    bad.push_back({h, "interlacing violated at threshold " +
                                          format_rational(kAuditThresholds[t])});
            }
        }
    }
    return bad;
}

std::vector<PlainGraph> graph_census(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 8)
        throw InputError("graph_census: max_vertices must be between 1 and 8");
    std::vector<PlainGraph> all;
    std::vector<PlainGraph> level;
    PlainGraph one;
    one.vertices = {"0"};
    level.push_back(one);
    all.push_back(one);
    for (int n = 2; n <= max_vertices; ++n) {
        std::map<std::string, PlainGraph> next;
        VertexId fresh = std::to_string(n - 1);
        for (const auto& g : level)
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                PlainGraph g2 = g;
                g2.vertices.push_back(fresh);
                for (int i = 0; i < n - 1; ++i)
                    if (mask & (1u << i)) g2.add_edge(g2.vertices[i], fresh);
                next.emplace(canonical_form(g2), std::move(g2));
            }
        level.clear();
        for (auto& [key, g] : next) {
            all.push_back(g);
            level.push_back(std::move(g));
        }
    }
    return all;
}

std::vector<PlainGraph> connected_graph_census(int max_vertices) {
    std::vector<PlainGraph> out;
    for (auto& g : graph_census(max_vertices))
        if (g.connected()) out.push_back(std::move(g));
    return out;
}

std::vector<PlainGraph> tree_census(int max_edges) {
    if (max_edges < 1 || max_edges > 9)
        throw InputError("tree_census: max_edges must be between 1 and 9");
    std::vector<PlainGraph> all;
    std::vector<PlainGraph> level;
    PlainGraph edge;
    edge.vertices = {"0", "1"};
    edge.add_edge("0", "1");
    level.push_back(edge);
    all.push_back(edge);
    for (int e = 2; e <= max_edges; ++e) {
        std::map<std::string, PlainGraph> next;
        VertexId fresh = std::to_string(e + 1);
        for (const auto& t : level)
            for (const auto& v : t.vertices) {
                PlainGraph t2 = t;
                t2.vertices.push_back(fresh);
                t2.add_edge(v, fresh);
                next.emplace(canonical_form(t2), std::move(t2));
            }
        level.clear();
        for (auto& [key, t] : next) {
            all.push_back(t);
            level.push_back(std::move(t));
        }
    }
    return all;
}

PlainGraph line_graph(const PlainGraph& g) {
    g.validate();
    PlainGraph l;
    std::vector<VertexPair> es(g.edges.begin(), g.edges.end());
    for (const auto& [a, b] : es) l.vertices.push_back(a + "|" + b);
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            const auto& e1 = es[i];
            const auto& e2 = es[j];
            if (e1.first == e2.first || e1.first == e2.second ||
                e1.second == e2.first || e1.second == e2.second)
                l.add_edge(l.vertices[i], l.vertices[j]);
        }
    return l;
}

}  // namespace hoffman
