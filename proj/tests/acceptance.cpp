// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is recomputed from scratch; nothing is read from disk.

#include <malloc.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lgcm/classify.hpp"
#include "lgcm/harness.hpp"
#include "lgcm/homology.hpp"
#include "lgcm/line_graph.hpp"
#include "lgcm/oracle.hpp"
#include "lgcm/simplicial.hpp"

using namespace lgcm;
using namespace lgcm::harness;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool has_mismatch_prefix(const CrossCheckReport& r, const std::string& prefix) {
    for (const auto& rec : r.records)
        for (const auto& m : rec.mismatches)
            if (m.compare(0, prefix.size(), prefix) == 0) return true;
    return false;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

double time_linear(std::int64_t n, bool use_cycle) {
    CompactGraph g = use_cycle ? CompactGraph::cycle(n) : CompactGraph::path(n);
    double best = 1e30;
    for (int r = 0; r < 6; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = linear_algorithm(g); // copies: the algorithm splits in place
        auto t1 = std::chrono::steady_clock::now();
        if (!v.value) return -1; // paths and cycles must pass
        if (r > 0) // first run warms the allocator's page pool
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_facets({{1, 2, 3},
                                           {1, 3, 4},
                                           {1, 2, 6},
                                           {1, 4, 5},
                                           {1, 5, 6},
                                           {2, 3, 5},
                                           {2, 4, 5},
                                           {2, 4, 6},
                                           {3, 4, 6},
                                           {3, 5, 6}});
}

SimplicialComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 7), nf(1, 6), sz(1, 4);
    std::vector<std::vector<int>> facets;
    int n = nv(rng);
    int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<int> f;
        int k = sz(rng);
        for (int j = 0; j < k; ++j)
            f.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace

int main() {
    // The scaling check times allocation-heavy runs at three sizes; keep freed
    // pages in the heap so large runs are not charged mmap/zero-fill costs the
    // small ones never pay.
    mallopt(M_MMAP_MAX, 0);
    mallopt(M_TRIM_THRESHOLD, INT_MAX);

    const std::vector<FieldId> kFields{FieldId::gf(2), FieldId::gf(32003),
                                       FieldId::rationals()};
    const FieldId kGF2 = FieldId::gf(2);

    // One exhaustive sweep backs criteria 1-3.
    auto t0 = std::chrono::steady_clock::now();
    CrossCheckReport sweep = cross_check(7, kFields);
    double sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // ---- criterion 1: CM equivalence over all connected graphs on 2-7 vertices
    {
        const int expected[] = {1, 2, 6, 21, 112, 853};
        bool counts_ok = true;
        for (int n = 2; n <= 7; ++n)
            counts_ok &= static_cast<int>(enumerate_connected_graphs(n).size()) ==
                         expected[n - 2];
        // dual-method enumeration check: both canonical keys are injective on
        // the representatives, so each independently certifies the class count
        for (int n = 2; n <= 7 && counts_ok; ++n) {
            std::set<std::uint64_t> a, b;
            for (const Graph& g : enumerate_connected_graphs(n)) {
                a.insert(canonical_key(g));
                b.insert(canonical_key_by_refinement(g));
            }
            counts_ok &= a.size() == enumerate_connected_graphs(n).size() &&
                         b.size() == enumerate_connected_graphs(n).size();
        }
        bool clean = counts_ok && sweep.records.size() == 995 &&
                     !has_mismatch_prefix(sweep, "classify_pure") &&
                     !has_mismatch_prefix(sweep, "decide_cm");
        report(1, "Cohen-Macaulay equivalences, exhaustive n = 2..7", clean,
               std::to_string(sweep.records.size()) + " graphs, " +
                   std::to_string(sweep.total_mismatches) + " mismatches, " +
                   std::to_string(sweep.shellability_skips) + " shellability skips, " +
                   std::to_string(sweep_seconds).substr(0, 5) + " s");
    }

    // ---- criterion 2: sequential CM equivalence
    {
        bool clean = sweep.records.size() == 995 &&
                     !has_mismatch_prefix(sweep, "decide_seq_cm");
        report(2, "sequential CM equivalences, exhaustive n = 2..7", clean);
    }

    // ---- criterion 3: Gorenstein classification
    {
        bool clean = sweep.records.size() == 995 &&
                     !has_mismatch_prefix(sweep, "decide_gorenstein") &&
                     !has_mismatch_prefix(sweep, "Gorenstein");
        // the expected family pattern
        for (int len = 1; len <= 3; ++len) clean &= decide_gorenstein(path(len + 1)).value;
        for (int len = 4; len <= 6; ++len) clean &= !decide_gorenstein(path(len + 1)).value;
        for (int n = 3; n <= 8; ++n) clean &= decide_gorenstein(cycle(n)).value;
        for (int k = 1; k <= 7; ++k) clean &= decide_gorenstein(star(k)).value;
        report(3, "Gorenstein classification vs Stanley oracle", clean);
    }

    // ---- criterion 4: catalog reproduction and stability
    {
        const auto& cm = derive_catalog_cm();
        bool ok = cm.graphs.size() == 7;
        std::set<std::uint64_t> keys;
        for (const Graph& g : cm.graphs) {
            keys.insert(canonical_key(g));
            ok &= g.max_degree() == 3;
        }
        ok &= keys.size() == 7;

        // stability: no 9-vertex graph qualifies
        int new_members = 0;
        for (const Graph& g : enumerate_bounded_graphs(9)) {
            if (is_path_graph(g) || is_cycle_graph(g) || is_star_graph(g)) continue;
            auto delta = clique_complex(line_graph(g));
            if (delta.is_pure() && is_strongly_connected(delta)) ++new_members;
        }
        ok &= new_members == 0;

        const auto& gor = derive_catalog_gorenstein();
        ok &= !gor.graphs.empty() && gor.graphs.size() <= cm.graphs.size();
        for (const Graph& h : gor.graphs) {
            ok &= keys.count(canonical_key(h)) == 1;
            // structural check: complement of L(h) splits into K1 and K2 pieces
            LineGraphMap lg = line_graph(h);
            const Graph& l = lg.line();
            Graph comp(l.num_vertices());
            for (int i = 0; i < l.num_vertices(); ++i)
                for (int j = i + 1; j < l.num_vertices(); ++j)
                    if (!l.has_edge(i, j)) comp.add_edge(i, j);
            for (const auto& piece : connected_components(comp))
                ok &= piece.size() <= 2;
            // and the oracle agrees, over every sampled field
            for (FieldId f : kFields)
                ok &= oracle::is_gorenstein(clique_complex(line_graph(h)), f);
        }
        report(4, "exceptional catalog: 7 members, stable at 9 vertices", ok,
               std::to_string(cm.graphs.size()) + " CM members, " +
                   std::to_string(gor.graphs.size()) + " Gorenstein members");
    }

    // ---- criterion 5: high skeletons are CM iff at most one vertex of degree >= 4
    {
        bool clean = true;
        for (int n = 2; n <= 7 && clean; ++n)
            for (const Graph& h : enumerate_connected_graphs(n)) {
                int big = 0;
                for (int v = 0; v < h.num_vertices(); ++v)
                    if (h.degree(v) >= 4) ++big;
                auto delta = clique_complex(line_graph(h));
                bool all_cm = true;
                for (int i = 3; i <= delta.dim(); ++i)
                    all_cm &= oracle::is_cm(pure_skeleton(delta, i), kGF2);
                if (all_cm != (big <= 1)) {
                    clean = false;
                    break;
                }
            }
        report(5, "skeletons of dimension >= 3 CM iff at most one degree >= 4 vertex",
               clean);
    }

    // ---- criterion 6: preservation lemmas
    {
        auto pres = preservation_suite(200, 42);
        report(6, "preservation suite, 200 seeded trials", pres.violations.empty(),
               std::to_string(pres.violations.size()) + " violations");
    }

    // ---- criterion 7: homology sanity
    {
        auto mod2 = reduced_homology(rp2(), kGF2);
        auto rat = reduced_homology(rp2(), FieldId::rationals());
        bool ok = mod2(1) == 1 && rat(1) == 0 && rat.all_zero();

        std::mt19937 rng(7);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            auto c = random_complex(rng);
            // boundary of boundary vanishes
            for (int d = 1; d <= c.dim() && ok; ++d) {
                auto outer = boundary_matrix(c, d - 1);
                auto inner = boundary_matrix(c, d);
                if (inner.empty() || inner[0].empty()) continue;
                std::vector<std::vector<int>> prod(
                    outer.size(), std::vector<int>(inner[0].size(), 0));
                for (std::size_t i = 0; i < outer.size(); ++i)
                    for (std::size_t k = 0; k < inner.size(); ++k)
                        if (outer[i][k] != 0)
                            for (std::size_t j = 0; j < inner[0].size(); ++j)
                                prod[i][j] += outer[i][k] * inner[k][j];
                ok &= matrix_rank(prod, FieldId::rationals()) == 0;
            }
            // Euler identity: alternating face count = alternating Betti sum
            auto faces = c.faces_by_dim();
            long long chi = 0;
            for (std::size_t d = 0; d < faces.size(); ++d)
                chi += (d % 2 == 0 ? -1 : 1) * static_cast<long long>(faces[d].size());
            for (FieldId f : kFields) {
                auto hom = reduced_homology(c, f);
                long long alt = 0;
                for (int i = -1; i <= c.dim(); ++i)
                    alt += (i % 2 == 0 ? 1 : -1) * hom(i);
                ok &= alt == chi;
            }
        }
        report(7, "homology sanity: projective plane, boundary^2 = 0, Euler identity",
               ok);
    }

    // ---- criterion 8: linear scaling of the streaming algorithm
    {
        bool ok = true;
        std::string detail;
        for (bool use_cycle : {false, true}) {
            double t5 = time_linear(100000, use_cycle);
            double t6 = time_linear(1000000, use_cycle);
            double t7 = time_linear(10000000, use_cycle);
            ok &= t5 > 0 && t6 > 0 && t7 > 0;
            // guard against sub-microsecond noise on the small size
            double r1 = t6 / std::max(t5, 1e-5);
            double r2 = t7 / std::max(t6, 1e-4);
            ok &= r1 <= 13.0 && r2 <= 13.0 && t6 <= 2.0;
            char buf[128];
            std::snprintf(buf, sizeof buf, "%s 1e6: %.3fs ratios %.1f/%.1f  ",
                          use_cycle ? "cycle" : "path", t6, r1, r2);
            detail += buf;
        }
        report(8, "linear algorithm scales linearly to 10^7 vertices", ok, detail);
    }

    // ---- criterion 9: line graph recognition round trip
    {
        bool ok = true;
        for (int n = 2; n <= 7 && ok; ++n)
            for (const Graph& h : enumerate_connected_graphs(n)) {
                LineGraphMap expected = line_graph(h);
                auto rec = recognize_root(expected.line());
                if (!rec) {
                    ok = false;
                    break;
                }
                // the recovered root's line graph is isomorphic to the input's
                const Graph& g = expected.line();
                if (g.num_vertices() <= 11)
                    ok &= canonical_key(rec->map.line()) == canonical_key(g);
                else {
                    // too large for canonical keys; the recorded isomorphism
                    // must be a genuine edge bijection
                    const Graph& lg = rec->map.line();
                    std::vector<int> image = rec->line_vertex_of;
                    std::sort(image.begin(), image.end());
                    ok &= std::unique(image.begin(), image.end()) == image.end();
                    ok &= lg.num_vertices() == g.num_vertices();
                    ok &= lg.num_edges() == g.num_edges();
                    for (auto [u, v] : g.edges())
                        ok &= lg.has_edge(rec->line_vertex_of[u], rec->line_vertex_of[v]);
                }
                if (!ok) break;
            }
        // rejection side: the claw plus every other small non-line graph found
        // by the brute-force oracle
        int rejected = 0;
        ok &= !recognize_root(star(3)).has_value();
        for (int n = 4; n <= 5 && rejected < 8; ++n)
            for (const Graph& g : enumerate_connected_graphs(n)) {
                if (line_graph_by_search(g)) continue;
                if (recognize_root(g).has_value()) ok = false;
                ++rejected;
            }
        ok &= rejected >= 5;
        report(9, "line graph recognition round trip and rejection", ok,
               std::to_string(rejected) + " non-line graphs rejected");
    }

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
