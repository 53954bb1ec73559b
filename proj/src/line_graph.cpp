#include "lgcm/line_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgcm/errors.hpp"

namespace lgcm {

LineGraphMap::LineGraphMap(Graph root, Graph line, std::vector<std::pair<int, int>> edge_of_vertex)
    : root_(std::move(root)), line_(std::move(line)), edge_of_vertex_(std::move(edge_of_vertex)) {
    for (int v = 0; v < static_cast<int>(edge_of_vertex_.size()); ++v) {
        auto [a, b] = edge_of_vertex_[v];
        vertex_of_edge_[{a, b}] = v;
        vertex_of_edge_[{b, a}] = v;
    }
}

int LineGraphMap::vertex_of_edge(int u, int v) const {
    auto it = vertex_of_edge_.find({u, v});
    if (it == vertex_of_edge_.end())
        throw input_error("vertex_of_edge: not an edge of the root graph");
    return it->second;
}

LineGraphMap line_graph(const Graph& h) {
    auto es = h.edges();
    if (es.empty()) throw input_error("line_graph: root graph has no edges");
    Graph g(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return LineGraphMap(h, std::move(g), std::move(es));
}

namespace {

// Backtracking search for a Krausz partition of one connected component:
// cliques partitioning the edge set with every vertex in at most two cliques.
//
// Vertices are processed in a fixed order. When vertex v is processed, every
// still-uncovered edge at v must go into a clique through v (no later step
// adds cliques at v), so branching over the ways to distribute those edges
// among v's at-most-two cliques is exhaustive.
class KrauszSearch {
public:
    explicit KrauszSearch(const Graph& g) : g_(g), cliques_of_(g.num_vertices()) {
        for (auto e : g.edges()) edge_index_[e] = static_cast<int>(edge_index_.size());
        covered_.assign(edge_index_.size(), 0);
    }

    bool solve() { return place_vertex(0); }

    const std::vector<std::vector<int>>& cliques() const { return cliques_; }
    const std::vector<int>& cliques_of(int v) const { return cliques_of_[v]; }

private:
    bool place_vertex(int v) {
        if (v == g_.num_vertices()) return true;
        std::vector<int> pending;
        for (int w : g_.neighbors(v))
            if (!covered_[edge_index_.at(key(v, w))]) pending.push_back(w);
        return assign(v, pending, 0);
    }

    // Distribute pending[i..] among the cliques at v, opening new ones while
    // v sits in fewer than two.
    bool assign(int v, const std::vector<int>& pending, std::size_t i) {
        if (i == pending.size()) return place_vertex(v + 1);
        int w = pending[i];
        if (cliques_of_[w].size() >= 2) return false; // w cannot take another clique
        for (int k : cliques_of_[v]) {
            if (!fits(w, k)) continue;
            auto marked = add_member(k, w);
            if (assign(v, pending, i + 1)) return true;
            remove_member(k, w, marked);
        }
        if (cliques_of_[v].size() < 2) {
            int k = static_cast<int>(cliques_.size());
            cliques_.push_back({v});
            cliques_of_[v].push_back(k);
            auto marked = add_member(k, w);
            if (assign(v, pending, i + 1)) return true;
            remove_member(k, w, marked);
            cliques_of_[v].pop_back();
            cliques_.pop_back();
        }
        return false;
    }

    // w adjacent to every member, along uncovered edges only
    bool fits(int w, int k) const {
        for (int z : cliques_[k])
            if (!g_.has_edge(w, z) || covered_[edge_index_.at(key(w, z))]) return false;
        return true;
    }

    std::vector<int> add_member(int k, int w) {
        std::vector<int> marked;
        for (int z : cliques_[k]) {
            int idx = edge_index_.at(key(w, z));
            covered_[idx] = 1;
            marked.push_back(idx);
        }
        cliques_[k].push_back(w);
        cliques_of_[w].push_back(k);
        return marked;
    }

    void remove_member(int k, int w, const std::vector<int>& marked) {
        for (int idx : marked) covered_[idx] = 0;
        cliques_[k].pop_back();
        cliques_of_[w].pop_back();
    }

    static std::pair<int, int> key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

    const Graph& g_;
    std::vector<std::vector<int>> cliques_;
    std::vector<std::vector<int>> cliques_of_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::vector<char> covered_;
};

} // namespace

std::optional<Recognition> recognize_root(const Graph& g) {
    Graph root;
    // root edge assigned to each vertex of g
    std::vector<std::pair<int, int>> root_edge_of(g.num_vertices(), {-1, -1});

    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            int a = root.add_vertex(), b = root.add_vertex();
            root.add_edge(a, b);
            root_edge_of[comp[0]] = {a, b};
            continue;
        }
        if (comp.size() == 3 && g.has_edge(comp[0], comp[1]) && g.has_edge(comp[0], comp[2]) &&
            g.has_edge(comp[1], comp[2])) {
            // Whitney ambiguity: K3 gets the canonical root K1,3.
            int c = root.add_vertex();
            for (int v : comp) {
                int leaf = root.add_vertex();
                root.add_edge(c, leaf);
                root_edge_of[v] = {c, leaf};
            }
            continue;
        }
        // induced subgraph on the component
        Graph sub(static_cast<int>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (g.has_edge(comp[i], comp[j]))
                    sub.add_edge(static_cast<int>(i), static_cast<int>(j));

        KrauszSearch search(sub);
        if (!search.solve()) return std::nullopt;

        std::vector<int> clique_vertex(search.cliques().size());
        for (std::size_t k = 0; k < search.cliques().size(); ++k)
            clique_vertex[k] = root.add_vertex();
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& ks = search.cliques_of(static_cast<int>(i));
            int a, b;
            if (ks.size() == 2) {
                a = clique_vertex[ks[0]];
                b = clique_vertex[ks[1]];
            } else {
                a = clique_vertex[ks[0]];
                b = root.add_vertex(); // pendant endpoint
            }
            root.add_edge(a, b);
            root_edge_of[comp[i]] = {std::min(a, b), std::max(a, b)};
        }
    }

    if (root.num_edges() == 0) return std::nullopt; // g had no vertices
    LineGraphMap lm = line_graph(root);
    std::vector<int> line_vertex_of(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto [a, b] = root_edge_of[v];
        line_vertex_of[v] = lm.vertex_of_edge(a, b);
    }

    // Internal isomorphism check: never hand back a wrong root.
    if (lm.line().num_vertices() != g.num_vertices())
        throw std::logic_error("recognize_root: vertex count mismatch");
    std::vector<char> hit(g.num_vertices(), 0);
    for (int v : line_vertex_of) {
        if (hit[v]) throw std::logic_error("recognize_root: mapping not injective");
        hit[v] = 1;
    }
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (g.has_edge(u, v) != lm.line().has_edge(line_vertex_of[u], line_vertex_of[v]))
                throw std::logic_error("recognize_root: adjacency mismatch");

    return Recognition{std::move(lm), std::move(line_vertex_of)};
}

} // namespace lgcm
