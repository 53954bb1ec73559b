#ifndef LGCM_SIMPLICIAL_HPP
#define LGCM_SIMPLICIAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lgcm/graph.hpp"

namespace lgcm {

class LineGraphMap; // line_graph.hpp

/// Facet-list simplicial complex over integer vertex ids.
///
/// The void complex (no faces at all) and the complex {∅} (one empty facet,
/// dimension -1) are distinct values; {∅} counts as a simplex.
class SimplicialComplex {
public:
    /// The void complex.
    SimplicialComplex() = default;

    static SimplicialComplex void_complex() { return SimplicialComplex(); }
    static SimplicialComplex empty_facet_complex(); // {∅}

    /// Builds the antichain of maximal members of `faces` (duplicates and
    /// dominated sets dropped).
    static SimplicialComplex from_facets(std::vector<std::vector<int>> faces);

    bool is_void() const { return facets_.empty(); }
    bool is_simplex() const { return facets_.size() == 1; }

    /// Sorted, each facet sorted; an antichain.
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// Sorted union of facet vertices.
    std::vector<int> vertices() const;
    int num_vertices() const;

    int dim() const;      // throws input_error on the void complex
    bool is_pure() const; // likewise

    bool contains_face(const std::vector<int>& face) const;

    /// All faces grouped by dimension; index 0 holds the empty face.
    std::vector<std::vector<std::vector<int>>> faces_by_dim() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::vector<int>> facets_;
};

SimplicialComplex clique_complex(const Graph& g);
/// Facets built directly as maximal stars plus triangles of the root graph.
SimplicialComplex clique_complex(const LineGraphMap& lg);

SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face);
SimplicialComplex delete_vertex(const SimplicialComplex& c, int v);
SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i);

/// Connected in codimension 1. Requires a pure non-void complex.
bool is_strongly_connected(const SimplicialComplex& c);

/// Vertices contained in exactly one facet.
std::vector<int> free_vertices(const SimplicialComplex& c);

/// Facet-list text format: one facet per line, whitespace-separated tokens;
/// '#' starts a comment line.
struct NamedComplex {
    SimplicialComplex complex;
    std::vector<std::string> names;
};

NamedComplex read_facet_list(std::istream& in);

} // namespace lgcm

#endif
