#include "lgcm/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lgcm/errors.hpp"

namespace lgcm {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw input_error("unknown vertex id " + std::to_string(v));
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return num_vertices() - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop rejected at vertex " + std::to_string(u));
    auto insert_sorted = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& small = degree(u) <= degree(v) ? adj_[u] : adj_[v];
    int target = degree(u) <= degree(v) ? v : u;
    return std::binary_search(small.begin(), small.end(), target);
}

int Graph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return static_cast<int>(twice / 2);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

LevelMap bfs_levels(const Graph& g, int root) {
    if (root < 0 || root >= g.num_vertices())
        throw input_error("bfs_levels: unknown root " + std::to_string(root));
    LevelMap lm;
    lm.root = root;
    lm.level.assign(g.num_vertices(), -1);
    lm.level[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (lm.level[w] < 0) {
                lm.level[w] = lm.level[u] + 1;
                queue.push_back(w);
            }
    }
    return lm;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.has_edge(v, w)) out.push_back({u, v, w});
    return out;
}

SplitResult split_open_degree2(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> split(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        if (!g.has_edge(a, b)) split[v] = 1;
    }

    SplitResult res;
    // Unsplit vertices keep their relative order; halves are appended in
    // (split vertex, incident edge) order.
    std::vector<int> id_of(n, -1);
    for (int v = 0; v < n; ++v)
        if (!split[v]) {
            id_of[v] = res.graph.add_vertex();
            res.origin.push_back(v);
        }
    // half_of[{v, u}] = half of split v on the edge {v, u}
    std::map<std::pair<int, int>, int> half_of;
    for (int v = 0; v < n; ++v)
        if (split[v])
            for (int u : g.neighbors(v)) {
                half_of[{v, u}] = res.graph.add_vertex();
                res.origin.push_back(v);
            }
    auto endpoint = [&](int v, int other) {
        return split[v] ? half_of.at({v, other}) : id_of[v];
    };
    for (auto [u, v] : g.edges()) res.graph.add_edge(endpoint(u, v), endpoint(v, u));
    return res;
}

Level1Structure level1_structures(const Graph& g, int root) {
    LevelMap lm = bfs_levels(g, root);
    Level1Structure out;
    int n = g.num_vertices();
    std::vector<char> in_l1(n, 0);
    for (int v = 0; v < n; ++v) in_l1[v] = lm.level[v] == 1;

    auto l1_neighbors = [&](int v) {
        std::vector<int> r;
        for (int w : g.neighbors(v))
            if (in_l1[w]) r.push_back(w);
        return r;
    };

    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!in_l1[v] || done[v]) continue;
        // collect the component of v in the induced subgraph on L1
        std::vector<int> comp{v};
        done[v] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : l1_neighbors(comp[i]))
                if (!done[w]) {
                    done[w] = 1;
                    comp.push_back(w);
                }
        if (comp.size() == 1) {
            out.isolated.push_back(v);
            continue;
        }
        std::sort(comp.begin(), comp.end());
        bool cycle = true;
        for (int x : comp)
            if (l1_neighbors(x).size() != 2) cycle = false;
        if (cycle) {
            // walk from the smallest vertex toward its smaller neighbor
            std::vector<int> order{comp[0]};
            int prev = -1, cur = comp[0];
            do {
                auto nb = l1_neighbors(cur);
                int next = (nb[0] != prev) ? nb[0] : nb[1];
                if (prev < 0) next = std::min(nb[0], nb[1]);
                prev = cur;
                cur = next;
                if (cur != order[0]) order.push_back(cur);
            } while (cur != order[0]);
            out.cycles.push_back(std::move(order));
        } else {
            int start = -1;
            for (int x : comp)
                if (l1_neighbors(x).size() == 1) {
                    start = x;
                    break;
                }
            std::vector<int> order{start};
            int prev = -1, cur = start;
            while (true) {
                auto nb = l1_neighbors(cur);
                int next = -1;
                for (int w : nb)
                    if (w != prev) next = w;
                if (next < 0) break;
                prev = cur;
                cur = next;
                order.push_back(cur);
            }
            if (order.back() < order.front()) std::reverse(order.begin(), order.end());
            out.paths.push_back(std::move(order));
        }
    }
    std::sort(out.paths.begin(), out.paths.end());
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

NamedGraph read_edge_list(std::istream& in) {
    NamedGraph ng;
    std::map<std::string, int> id_of;
    auto vertex = [&](const std::string& token) {
        auto [it, fresh] = id_of.try_emplace(token, ng.graph.num_vertices());
        if (fresh) {
            ng.graph.add_vertex();
            ng.names.push_back(token);
        }
        return it->second;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b) || (ls >> extra))
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": expected exactly two tokens");
        if (a == b)
            throw input_error("edge list line " + std::to_string(lineno) + ": self-loop '" +
                              a + "'");
        int ia = vertex(a); // sequenced: ids must follow first-seen order
        int ib = vertex(b);
        ng.graph.add_edge(ia, ib);
    }
    return ng;
}

bool is_path_graph(const Graph& g) {
    int n = g.num_vertices();
    if (n < 2 || g.num_edges() != n - 1) return false;
    int leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++leaves;
    }
    return leaves == 2;
}

bool is_cycle_graph(const Graph& g) {
    int n = g.num_vertices();
    if (n < 3 || g.num_edges() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_star_graph(const Graph& g) {
    int n = g.num_vertices();
    return n >= 2 && g.num_edges() == n - 1 && g.max_degree() == n - 1;
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* names) {
    auto name = [&](int v) {
        return names ? (*names)[v] : std::to_string(v);
    };
    for (auto [u, v] : g.edges()) out << name(u) << ' ' << name(v) << '\n';
}

} // namespace lgcm
