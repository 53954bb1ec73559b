#ifndef LGCM_GRAPH_HPP
#define LGCM_GRAPH_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lgcm {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int add_vertex();
    void add_edge(int u, int v); // no-op if the edge already exists
    bool has_edge(int u, int v) const;

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;
    int degree(int v) const;
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
};

/// BFS distances from a root; level[v] == -1 for vertices in other components.
struct LevelMap {
    int root = -1;
    std::vector<int> level;
};

/// The components of the subgraph induced on the level-1 vertices.
struct Level1Structure {
    std::vector<int> isolated;
    std::vector<std::vector<int>> paths;  // each in path order, smaller endpoint first
    std::vector<std::vector<int>> cycles; // each starting at its smallest vertex
};

/// Result of splitting open degree-2 vertices. origin[v'] is the input vertex
/// a vertex of the output came from, which makes the edge bijection explicit:
/// the output edge {u', v'} corresponds to the input edge {origin[u'], origin[v']}.
struct SplitResult {
    Graph graph;
    std::vector<int> origin;
};

std::vector<std::vector<int>> connected_components(const Graph& g);

/// Shape tests for connected graphs (connectivity is the caller's business).
bool is_path_graph(const Graph& g);  // includes K2
bool is_cycle_graph(const Graph& g); // n >= 3
bool is_star_graph(const Graph& g);  // K_{1,n-1}, includes K2

LevelMap bfs_levels(const Graph& g, int root);
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// Replaces every degree-2 vertex whose neighbors are non-adjacent (i.e. not in
/// a triangle) by two degree-1 halves, one per incident edge. Idempotent,
/// edge-count preserving.
SplitResult split_open_degree2(const Graph& g);

Level1Structure level1_structures(const Graph& g, int root);

/// Edge-list text format: one edge per line, two whitespace-separated tokens;
/// '#' starts a comment line; tokens get internal ids in first-seen order.
struct NamedGraph {
    Graph graph;
    std::vector<std::string> names;
};

NamedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* names = nullptr);

} // namespace lgcm

#endif
