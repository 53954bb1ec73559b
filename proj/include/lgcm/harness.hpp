#ifndef LGCM_HARNESS_HPP
#define LGCM_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lgcm/graph.hpp"
#include "lgcm/homology.hpp"

namespace lgcm {
namespace harness {

/// Canonical form: the lexicographically minimal upper-triangle adjacency bit
/// string over all vertex orders (branch and bound), tagged with the vertex
/// count. Equal keys ⇔ isomorphic. Throws capacity_error beyond 11 vertices.
std::uint64_t canonical_key(const Graph& g);

/// A second complete invariant by a structurally different route (colour
/// refinement with individualization). The values differ from canonical_key
/// but the induced equivalence is the same; guards canonical_key in tests.
std::uint64_t canonical_key_by_refinement(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 ≤ n ≤ 8. Deterministic order; cached. capacity_error outside
/// the range.
const std::vector<Graph>& enumerate_connected_graphs(int n);

/// Connected graphs on n ≤ 9 vertices with max degree ≤ 3 in which every
/// degree-2 vertex lies in a triangle; the catalog stability sweep.
std::vector<Graph> enumerate_bounded_graphs(int n);

struct ExceptionalCatalog {
    std::vector<Graph> graphs; // deterministic order (by canonical key)
    std::string provenance;
};

/// Connected graphs on up to 8 vertices, not stars/paths/cycles, whose
/// line-graph clique complex is pure and strongly connected. Cached.
const ExceptionalCatalog& derive_catalog_cm();

/// The members of the CM catalog whose complex passes the Gorenstein oracle
/// over GF(2), GF(32003) and the rationals. Cached.
const ExceptionalCatalog& derive_catalog_gorenstein();

void write_catalog(std::ostream& out, const ExceptionalCatalog& c);

struct GraphRecord {
    std::uint64_t key = 0;
    int n = 0;
    bool pure = false;
    bool cm = false;
    bool seq_cm = false;
    bool gorenstein = false;
    bool shellability_skipped = false;
    std::vector<std::string> mismatches;
};

struct CrossCheckReport {
    std::vector<GraphRecord> records;
    long long total_mismatches = 0;
    long long shellability_skips = 0;
    double seconds = 0;
};

/// Classifier-vs-oracle sweep over all connected graphs on 2..max_n vertices.
/// `inject_fault` flips decide_cm on the first graph (self-test).
CrossCheckReport cross_check(int max_n, const std::vector<FieldId>& fields,
                             int jobs = 1, bool inject_fault = false);

struct PreservationReport {
    int trials = 0;
    std::vector<std::string> violations;
};

/// Randomized checks of the three preservation lemmas (isolated vertex,
/// pendant edge at a vertex of a connected complex, free-vertex edge) plus
/// the fixed <av,bu> counterexample.
PreservationReport preservation_suite(int trials, unsigned seed);

/// Brute-force line-graph test: g (connected, ≤ 7 vertices) is a line graph
/// iff some connected root with |E| = |V(g)| has an isomorphic line graph.
bool line_graph_by_search(const Graph& g);

} // namespace harness
} // namespace lgcm

#endif
