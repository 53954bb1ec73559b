#include "lgcm/classify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lgcm/errors.hpp"
#include "lgcm/harness.hpp"

namespace lgcm {

namespace {

bool in_triangle(const Graph& h, int v) {
    const auto& nb = h.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (h.has_edge(nb[i], nb[j])) return true;
    return false;
}

void require_connected(const Graph& h) {
    if (connected_components(h).size() != 1)
        throw input_error("graph must be connected");
}

void require_edge(const Graph& h) {
    if (h.num_edges() == 0) throw input_error("graph has no edges");
}

// Induced subgraph on `verts` (sorted); vertex i of the result is verts[i].
Graph induced(const Graph& h, const std::vector<int>& verts) {
    Graph g((int)verts.size());
    for (int i = 0; i < (int)verts.size(); ++i)
        for (int j = i + 1; j < (int)verts.size(); ++j)
            if (h.has_edge(verts[i], verts[j])) g.add_edge(i, j);
    return g;
}

// Non-isolated components, partitioned into single edges and the rest.
struct ComponentSplit {
    int edge_components = 0;
    std::vector<Graph> non_edge;
};

ComponentSplit split_components(const Graph& h) {
    ComponentSplit out;
    for (const auto& comp : connected_components(h)) {
        if (comp.size() == 1) continue; // isolated vertex, no edges in L(h)
        if (comp.size() == 2) {
            ++out.edge_components;
            continue;
        }
        out.non_edge.push_back(induced(h, comp));
    }
    return out;
}

std::uint64_t keyed(const Graph& g) { return harness::canonical_key(g); }

const std::set<std::uint64_t>& cm_catalog_keys() {
    static const std::set<std::uint64_t> keys = [] {
        std::set<std::uint64_t> k;
        for (const auto& g : harness::derive_catalog_cm().graphs) k.insert(keyed(g));
        return k;
    }();
    return keys;
}

const std::set<std::uint64_t>& gorenstein_catalog_keys() {
    static const std::set<std::uint64_t> keys = [] {
        std::set<std::uint64_t> k;
        for (const auto& g : harness::derive_catalog_gorenstein().graphs)
            k.insert(keyed(g));
        return k;
    }();
    return keys;
}

bool in_catalog(const Graph& h, const std::set<std::uint64_t>& keys) {
    if (h.num_vertices() > 8) return false; // members have at most 6 vertices
    return keys.count(keyed(h)) != 0;
}

} // namespace

PureClass classify_pure(const Graph& h) {
    require_connected(h);
    require_edge(h);
    if (is_path_graph(h) || is_cycle_graph(h)) return {PureKind::PathOrCycle, 0};
    int r = h.max_degree();
    if (r > 3 && triangles(h).empty()) {
        bool degrees_ok = true;
        for (int v = 0; v < h.num_vertices(); ++v)
            if (h.degree(v) != 1 && h.degree(v) != r) degrees_ok = false;
        if (degrees_ok) return {PureKind::StarRegular, r};
    }
    if (r == 3) {
        bool ok = true;
        for (int v = 0; v < h.num_vertices(); ++v)
            if (h.degree(v) == 2 && !in_triangle(h, v)) ok = false;
        if (ok) return {PureKind::Degree3Triangle, 0};
    }
    return {PureKind::NotPure, 0};
}

Verdict decide_cm(const Graph& h) {
    require_edge(h);
    ComponentSplit comps = split_components(h);
    if (comps.non_edge.empty())
        return {true, "every component is a single edge; the complex is a set of points"};
    if (comps.non_edge.size() >= 2)
        return {false, "pure 1-skeleton disconnected: two components with more than one edge"};
    if (comps.edge_components > 0)
        return {false, "disconnected complex of dimension >= 1: a single-edge component "
                       "next to a larger one"};
    const Graph& c = comps.non_edge.front();
    if (is_star_graph(c)) return {true, "star"};
    if (is_path_graph(c)) return {true, "path"};
    if (is_cycle_graph(c)) return {true, "cycle"};
    if (in_catalog(c, cm_catalog_keys())) return {true, "exceptional catalog member"};
    return {false, "not a star, path, cycle or exceptional catalog member"};
}

Verdict decide_gorenstein(const Graph& h) {
    require_edge(h);
    ComponentSplit comps = split_components(h);
    if (comps.non_edge.empty()) {
        if (comps.edge_components <= 2)
            return {true, comps.edge_components == 1
                              ? "single edge: the complex is a point"
                              : "two disjoint edges: the complex is a 0-sphere"};
        return {false, "three or more disjoint edges: more than two points"};
    }
    if (comps.non_edge.size() >= 2 || comps.edge_components > 0)
        return {false, "disconnected complex that is not a 0-sphere"};
    const Graph& c = comps.non_edge.front();
    if (is_star_graph(c)) return {true, "star: the complex is a simplex"};
    if (is_cycle_graph(c)) return {true, "cycle"};
    if (is_path_graph(c)) {
        if (c.num_edges() <= 3) return {true, "path of length at most 3"};
        return {false, "path of length at least 4"};
    }
    if (in_catalog(c, gorenstein_catalog_keys()))
        return {true, "Gorenstein catalog member"};
    return {false, "not a star, cycle, short path or Gorenstein catalog member"};
}

namespace {

// Shared body of is_r_graph and decide_seq_cm. `require_leaf_neighbors` adds
// the sequential-CM condition that every level-2 degree-3 vertex has a leaf
// neighbor.
Verdict r_graph_check(const Graph& h, int v, bool require_leaf_neighbors) {
    int r = h.degree(v);
    if (r == 0) return {false, "root is isolated"};
    int cap = std::min(r, 3);
    for (int u = 0; u < h.num_vertices(); ++u)
        if (u != v && h.degree(u) > cap)
            return {false, "vertex " + std::to_string(u) + " has degree above min(r,3)"};
    for (int u = 0; u < h.num_vertices(); ++u)
        if (h.degree(u) == 2 && !in_triangle(h, u))
            return {false, "degree-2 vertex " + std::to_string(u) + " is in no triangle"};

    LevelMap lv = bfs_levels(h, v);
    for (int u = 0; u < h.num_vertices(); ++u)
        if (lv.level[u] > 3)
            return {false, "vertex " + std::to_string(u) + " has level above 3"};

    Level1Structure l1 = level1_structures(h, v);
    std::set<int> endpoints;
    std::set<std::pair<int, int>> length1;
    for (const auto& p : l1.paths) {
        endpoints.insert(p.front());
        endpoints.insert(p.back());
        if (p.size() == 2) length1.insert({p.front(), p.back()});
    }
    auto is_length1_pair = [&](int a, int b) {
        return length1.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    for (int x = 0; x < h.num_vertices(); ++x) {
        if (lv.level[x] == 3 && h.degree(x) != 1)
            return {false, "level-3 vertex " + std::to_string(x) + " is not a leaf"};
        if (lv.level[x] != 2) continue;
        const auto& nb = h.neighbors(x);
        switch (h.degree(x)) {
        case 1:
            if (!endpoints.count(nb[0]))
                return {false, "level-2 leaf " + std::to_string(x) +
                               " not attached to a level-1 path endpoint"};
            break;
        case 2:
            if (!is_length1_pair(nb[0], nb[1]))
                return {false, "level-2 degree-2 vertex " + std::to_string(x) +
                               " not on a length-1 level-1 path"};
            break;
        case 3: {
            bool ok = false;
            for (int skip = 0; skip < 3 && !ok; ++skip) {
                int a = nb[(skip + 1) % 3], b = nb[(skip + 2) % 3], y = nb[skip];
                if (!is_length1_pair(a, b)) continue;
                ok = lv.level[y] == 3 || (lv.level[y] == 2 && h.degree(y) == 3) ||
                     (lv.level[y] == 1 && endpoints.count(y));
            }
            if (!ok)
                return {false, "level-2 degree-3 vertex " + std::to_string(x) +
                               " fails the third-neighbor condition"};
            if (require_leaf_neighbors) {
                bool leaf = std::any_of(nb.begin(), nb.end(),
                                        [&](int u) { return h.degree(u) == 1; });
                if (!leaf)
                    return {false, "level-2 degree-3 vertex " + std::to_string(x) +
                                   " has no leaf neighbor"};
            }
            break;
        }
        default:
            return {false, "level-2 vertex " + std::to_string(x) + " has bad degree"};
        }
    }
    return {true, "r-graph rooted at " + std::to_string(v) +
                  " with r = " + std::to_string(r)};
}

} // namespace

Verdict is_r_graph(const Graph& h, int v) {
    require_connected(h);
    return r_graph_check(h, v, false);
}

Verdict decide_seq_cm(const Graph& h) {
    require_edge(h);
    SplitResult split = split_open_degree2(h);
    ComponentSplit comps = split_components(split.graph);
    if (comps.non_edge.empty())
        return {true, "after splitting, every component is an edge"};
    if (comps.non_edge.size() >= 2)
        return {false, "after splitting, more than one component is not an edge"};
    const Graph& c = comps.non_edge.front();
    int root = 0;
    for (int u = 1; u < c.num_vertices(); ++u)
        if (c.degree(u) > c.degree(root)) root = u;
    return r_graph_check(c, root, true);
}

// ---- streaming implementation --------------------------------------------

CompactGraph CompactGraph::path(std::int64_t n) {
    CompactGraph g;
    g.off_.resize(n + 1);
    for (std::int64_t v = 0; v <= n; ++v)
        g.off_[v] = v == 0 ? 0 : g.off_[v - 1] + (v == 1 || v == n ? 1 : 2);
    g.nbr_.resize(g.off_[n]);
    for (std::int64_t v = 0; v < n; ++v) {
        std::int64_t* p = g.nbr_.data() + g.off_[v];
        if (v > 0) *p++ = v - 1;
        if (v < n - 1) *p = v + 1;
    }
    return g;
}

CompactGraph CompactGraph::cycle(std::int64_t n) {
    CompactGraph g;
    g.off_.resize(n + 1);
    for (std::int64_t v = 0; v <= n; ++v) g.off_[v] = 2 * v;
    g.nbr_.resize(2 * n);
    for (std::int64_t v = 0; v < n; ++v) {
        g.nbr_[2 * v] = (v + n - 1) % n;
        g.nbr_[2 * v + 1] = (v + 1) % n;
    }
    return g;
}

CompactGraph CompactGraph::spider(int arms, std::int64_t leg_length) {
    // Vertex 0 is the centre; arm j occupies 1 + j*leg .. 1 + (j+1)*leg - 1.
    std::int64_t n = 1 + (std::int64_t)arms * leg_length;
    CompactGraph g;
    g.off_.resize(n + 1);
    g.off_[0] = 0;
    g.off_[1] = arms;
    for (std::int64_t v = 1; v < n; ++v) {
        bool tip = (v - 1) % leg_length == leg_length - 1;
        g.off_[v + 1] = g.off_[v] + (tip ? 1 : 2);
    }
    g.nbr_.resize(g.off_[n]);
    for (int j = 0; j < arms; ++j) g.nbr_[j] = 1 + (std::int64_t)j * leg_length;
    for (std::int64_t v = 1; v < n; ++v) {
        std::int64_t* p = g.nbr_.data() + g.off_[v];
        *p++ = (v - 1) % leg_length == 0 ? 0 : v - 1;
        if ((v - 1) % leg_length != leg_length - 1) *p = v + 1;
    }
    return g;
}

CompactGraph CompactGraph::from(const Graph& g) {
    CompactGraph c;
    int n = g.num_vertices();
    c.off_.resize(n + 1);
    c.off_[0] = 0;
    for (int v = 0; v < n; ++v) c.off_[v + 1] = c.off_[v] + g.degree(v);
    c.nbr_.reserve(c.off_[n]);
    for (int v = 0; v < n; ++v)
        c.nbr_.insert(c.nbr_.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return c;
}

Verdict linear_algorithm(CompactGraph g) {
    using i64 = std::int64_t;
    const i64 n = g.num_vertices();
    std::vector<i64>& off = g.off_;
    std::vector<i64>& nbr = g.nbr_;

    // Degrees are maintained separately: splitting shrinks a vertex's live
    // slot range [off[v], off[v] + deg[v]) without moving storage.
    std::vector<int> deg(n);
    bool any_edge = false;
    i64 big = -1;
    for (i64 v = 0; v < n; ++v) {
        deg[v] = (int)(off[v + 1] - off[v]);
        if (deg[v] > 0) any_edge = true;
        if (deg[v] > 3) {
            if (big != -1)
                return {false, "step 1: two vertices of degree more than 3 (" +
                               std::to_string(big) + ", " + std::to_string(v) + ")"};
            big = v;
        }
    }
    if (!any_edge) throw input_error("graph has no edges");

    // Added leaves get ids n, n+1, ...; leaf_nbr holds their single neighbor.
    std::vector<i64> leaf_nbr;
    auto degree_of = [&](i64 v) { return v < n ? deg[v] : 1; };
    auto nbr_slot = [&](i64 v, int i) -> i64& {
        return v < n ? nbr[off[v] + i] : leaf_nbr[v - n];
    };

    // Step 1 splitting: a degree-2 vertex x with non-adjacent neighbors a, b
    // loses the edge xb; a fresh leaf takes x's place next to b. Added leaves
    // never need splitting themselves.
    for (i64 x = 0; x < n; ++x) {
        if (deg[x] != 2) continue;
        i64 a = nbr_slot(x, 0), b = nbr_slot(x, 1);
        if (b == big) std::swap(a, b); // keep the scanned list short
        bool adjacent = false;
        int pos_x = -1;
        for (int i = 0; i < degree_of(b); ++i) {
            i64 u = nbr_slot(b, i);
            if (u == a) adjacent = true;
            if (u == x) pos_x = i;
        }
        if (adjacent) continue;
        nbr_slot(x, 0) = a;
        deg[x] = 1;
        i64 w = n + (i64)leaf_nbr.size();
        leaf_nbr.push_back(b);
        nbr_slot(b, pos_x) = w;
    }

    // Step 2: scan components; at most one may be bigger than an edge.
    const i64 total = n + (i64)leaf_nbr.size();
    std::vector<signed char> seen(total, 0);
    std::vector<i64> queue;
    i64 root = -1;
    for (i64 s = 0; s < total; ++s) {
        if (seen[s] || degree_of(s) == 0) continue;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        i64 size = 0, best = s;
        for (size_t head = 0; head < queue.size(); ++head) {
            i64 u = queue[head];
            ++size;
            if (degree_of(u) > degree_of(best)) best = u;
            for (int i = 0; i < degree_of(u); ++i) {
                i64 w = nbr_slot(u, i);
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        if (size <= 2) continue;
        if (root != -1)
            return {false, "step 2: more than one connected component is not an edge"};
        root = best;
    }
    if (root == -1) return {true, "step 2: every component is an edge"};

    // Step 3: BFS from a maximum-degree vertex of the non-edge component,
    // checking the level-2 and level-3 cases as vertices are popped.
    std::vector<signed char> popped(total, 0);
    std::vector<signed char> level(total, -1);
    queue.clear();
    queue.push_back(root);
    level[root] = 0;
    auto adjacent_pair = [&](i64 a, i64 b) {
        for (int i = 0; i < degree_of(a); ++i)
            if (nbr_slot(a, i) == b) return true;
        return false;
    };
    for (size_t head = 0; head < queue.size(); ++head) {
        i64 y = queue[head];
        popped[y] = 1;
        int ly = level[y];
        if (ly >= 4) return {false, "step 3: vertex at level 4 or beyond"};
        if (ly == 3 && degree_of(y) != 1)
            return {false, "step 3: level-3 vertex " + std::to_string(y) +
                           " is not a leaf"};
        if (ly == 2) {
            int d = degree_of(y);
            if (d == 1) {
                i64 a = nbr_slot(y, 0);
                bool has_l1 = false;
                for (int i = 0; i < degree_of(a); ++i)
                    if (level[nbr_slot(a, i)] == 1) has_l1 = true;
                if (!has_l1)
                    return {false, "step 3: level-2 leaf " + std::to_string(y) +
                                   " not on a level-1 path endpoint"};
            } else if (d == 2) {
                i64 a = nbr_slot(y, 0), b = nbr_slot(y, 1);
                if (level[a] != 1 || level[b] != 1 || !adjacent_pair(a, b))
                    return {false, "step 3: level-2 degree-2 vertex " +
                                   std::to_string(y) + " not in a level-1 triangle"};
            } else if (d == 3) {
                i64 l1[3];
                int cnt = 0;
                i64 third = -1;
                for (int i = 0; i < 3; ++i) {
                    i64 u = nbr_slot(y, i);
                    if (level[u] == 1 && cnt < 3) l1[cnt++] = u;
                    else third = u;
                }
                if (cnt != 2 || !adjacent_pair(l1[0], l1[1]) || popped[third])
                    return {false, "step 3: level-2 degree-3 vertex " +
                                   std::to_string(y) + " fails the case analysis"};
            } else {
                return {false, "step 3: level-2 vertex " + std::to_string(y) +
                               " with unexpected degree"};
            }
        }
        for (int i = 0; i < degree_of(y); ++i) {
            i64 w = nbr_slot(y, i);
            if (level[w] == -1) {
                level[w] = (signed char)(ly + 1 > 5 ? 5 : ly + 1);
                queue.push_back(w);
            }
        }
    }
    return {true, "step 4"};
}

Verdict linear_algorithm(const Graph& h) { return linear_algorithm(CompactGraph::from(h)); }

} // namespace lgcm
