#ifndef LGCM_LINE_GRAPH_HPP
#define LGCM_LINE_GRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lgcm/graph.hpp"

namespace lgcm {

/// A root graph H together with its line graph G and the explicit bijection
/// between edges of H and vertices of G.
class LineGraphMap {
public:
    LineGraphMap(Graph root, Graph line, std::vector<std::pair<int, int>> edge_of_vertex);

    const Graph& root() const { return root_; }
    const Graph& line() const { return line_; }

    /// Root edge corresponding to a line-graph vertex.
    std::pair<int, int> edge_of_vertex(int v) const { return edge_of_vertex_[v]; }
    /// Line-graph vertex corresponding to a root edge.
    int vertex_of_edge(int u, int v) const;

private:
    Graph root_;
    Graph line_;
    std::vector<std::pair<int, int>> edge_of_vertex_;
    std::map<std::pair<int, int>, int> vertex_of_edge_;
};

/// Builds L(h). Vertices of the line graph are the edges of h in sorted order.
/// Throws input_error if h has no edges.
LineGraphMap line_graph(const Graph& h);

/// A successful recognition: a root whose line graph is isomorphic to the
/// input, with the isomorphism spelled out (line_vertex_of[v] is the vertex of
/// map.line() that input vertex v corresponds to).
struct Recognition {
    LineGraphMap map;
    std::vector<int> line_vertex_of;
};

/// Krausz-style recognition. Returns nullopt when g is not a line graph.
/// K3 gets the canonical root K1,3; isolated vertices of g are recognized as
/// single-edge components of the root.
std::optional<Recognition> recognize_root(const Graph& g);

} // namespace lgcm

#endif
