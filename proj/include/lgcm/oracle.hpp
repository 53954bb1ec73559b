#ifndef LGCM_ORACLE_HPP
#define LGCM_ORACLE_HPP

#include "lgcm/homology.hpp"
#include "lgcm/simplicial.hpp"

namespace lgcm {
namespace oracle {

/// Shellability search gives up beyond this many facets (capacity_error).
inline constexpr int kShellabilityFacetLimit = 20;

/// Reisner criterion: CM over K iff every link (including the link of the
/// empty face) has vanishing reduced homology below its dimension.
bool is_cm(const SimplicialComplex& c, FieldId field);

/// All pure skeletons are CM.
bool is_seq_cm(const SimplicialComplex& c, FieldId field);

/// No face of link(v) is a facet of the deletion.
bool is_shedding_vertex(const SimplicialComplex& c, int v);

/// Recursive definition with memoization. {∅} and all simplices qualify.
bool is_vertex_decomposable(const SimplicialComplex& c);

/// Backtracking search over facet orders (non-pure shellability).
/// Throws capacity_error beyond kShellabilityFacetLimit facets.
bool is_shellable(const SimplicialComplex& c);

/// Restriction to the vertices not contained in every facet, iterated until
/// stable.
SimplicialComplex core(const SimplicialComplex& c);

/// Stanley criterion: the core is CM and every link of the core has the
/// reduced homology of a sphere of its dimension.
bool is_gorenstein(const SimplicialComplex& c, FieldId field);

} // namespace oracle
} // namespace lgcm

#endif
