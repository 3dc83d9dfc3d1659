#include "hoffman/canonical.hpp"

#include <algorithm>
#include <map>

namespace hoffman {

namespace {

struct Search {
    const ColoredGraph& g;
    std::vector<int> best;       // flattened records of the best complete labeling
    bool have_best = false;
    std::vector<int> cur;
    std::vector<int> prefix;
    std::vector<char> used;

    explicit Search(const ColoredGraph& gg) : g(gg), used(gg.n, 0) {}

    bool twins(int u, int v) const {
        if (g.colors[u] != g.colors[v]) return false;
        for (int x = 0; x < g.n; ++x) {
            if (x == u || x == v) continue;
            if (g.adj[u][x] != g.adj[v][x]) return false;
        }
        return true;
    }

    void run() {
        // Compare cur against the prefix of the current best; prune if larger.
        bool tied = have_best;
        if (have_best) {
            for (size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] > best[i]) return;
                if (cur[i] < best[i]) { tied = false; break; }
            }
        }
        int depth = static_cast<int>(prefix.size());
        if (depth == g.n) {
            if (!have_best || !tied) {
                best = cur;
                have_best = true;
            }
            return;
        }
        // Candidate records (color, row to prefix); only minimal records survive.
        std::vector<int> minimal_rec;
        std::vector<int> cands;
        std::vector<int> rec;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            rec.clear();
            rec.push_back(g.colors[v]);
            for (int p : prefix) rec.push_back(g.adj[v][p]);
            if (cands.empty() || rec < minimal_rec) {
                minimal_rec = rec;
                cands.assign(1, v);
            } else if (rec == minimal_rec) {
                cands.push_back(v);
            }
        }
        // Collapse twin candidates; swapping twins is an automorphism.
        std::vector<int> reps;
        for (int v : cands) {
            bool dup = false;
            for (int r : reps)
                if (twins(r, v)) { dup = true; break; }
            if (!dup) reps.push_back(v);
        }
        size_t save = cur.size();
        cur.insert(cur.end(), minimal_rec.begin(), minimal_rec.end());
        for (int v : reps) {
            used[v] = 1;
            prefix.push_back(v);
            run();
            prefix.pop_back();
            used[v] = 0;
        }
        cur.resize(save);
    }
};

}  // namespace

std::string canonical_string(const ColoredGraph& g) {
    if (g.n == 0) return std::string("0;");
    Search s(g);
    s.run();
    std::string out = std::to_string(g.n) + ";";
    for (int v : s.best) out.push_back(static_cast<char>('0' + v));
    return out;
}

namespace {

std::map<VertexId, int> index_map(const std::vector<VertexId>& vs, int base,
                                  std::map<VertexId, int> m = {}) {
    for (const auto& v : vs) m[v] = base++;
    return m;
}

void check_bound(size_t n, int max_vertices) {
    if (static_cast<int>(n) > max_vertices)
        throw InputError("canonical form: graph has " + std::to_string(n) +
                         " vertices, exceeding the bound " + std::to_string(max_vertices));
}

}  // namespace

std::string canonical_form(const HoffmanGraph& h, int max_vertices) {
    size_t n = h.slim_vertices.size() + h.fat_vertices.size();
    check_bound(n, max_vertices);
    ColoredGraph g;
    g.n = static_cast<int>(n);
    g.colors.assign(g.n, 0);
    g.adj.assign(g.n, std::vector<int>(g.n, 0));
    auto idx = index_map(h.fat_vertices, static_cast<int>(h.slim_vertices.size()),
                         index_map(h.slim_vertices, 0));
    for (size_t i = h.slim_vertices.size(); i < n; ++i) g.colors[i] = 1;
    for (const auto& [a, b] : h.edges) {
        int i = idx.at(a), j = idx.at(b);
        g.adj[i][j] = g.adj[j][i] = 1;
    }
    return "H" + canonical_string(g);
}

std::string canonical_form(const PlainGraph& p, int max_vertices) {
    check_bound(p.vertices.size(), max_vertices);
    ColoredGraph g;
    g.n = static_cast<int>(p.vertices.size());
    g.colors.assign(g.n, 0);
    g.adj.assign(g.n, std::vector<int>(g.n, 0));
    auto idx = index_map(p.vertices, 0);
    for (const auto& [a, b] : p.edges) {
        int i = idx.at(a), j = idx.at(b);
        g.adj[i][j] = g.adj[j][i] = 1;
    }
    return "G" + canonical_string(g);
}

std::string canonical_form(const EdgeSignedGraph& s, const VertexId& marked,
                           int max_vertices) {
    check_bound(s.vertices.size(), max_vertices);
    ColoredGraph g;
    g.n = static_cast<int>(s.vertices.size());
    g.colors.assign(g.n, 0);
    g.adj.assign(g.n, std::vector<int>(g.n, 0));
    auto idx = index_map(s.vertices, 0);
    if (!marked.empty()) {
        if (!s.has_vertex(marked))
            throw InputError("canonical form: unknown marked vertex '" + marked + "'");
        g.colors[idx.at(marked)] = 1;
    }
    for (const auto& [a, b] : s.plus_edges) {
        int i = idx.at(a), j = idx.at(b);
        g.adj[i][j] = g.adj[j][i] = 1;
    }
    for (const auto& [a, b] : s.minus_edges) {
        int i = idx.at(a), j = idx.at(b);
        g.adj[i][j] = g.adj[j][i] = 2;
    }
    return "S" + canonical_string(g);
}

}  // namespace hoffman
