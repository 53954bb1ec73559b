#include "lgcm/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <unordered_set>

#include "lgcm/classify.hpp"
#include "lgcm/errors.hpp"
#include "lgcm/line_graph.hpp"
#include "lgcm/oracle.hpp"
#include "lgcm/simplicial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgcm {
namespace harness {

namespace {

constexpr int kMaxCanonicalVertices = 11; // C(11,2) = 55 bits + vertex count

// Bit string of the upper triangle under a vertex order: for each position k,
// the bits (perm[0],k), ..., (perm[k-1],k) are appended most significant
// first, so placed prefixes of the order fix prefixes of the string.
std::uint64_t bits_under_order(const std::array<std::uint16_t, 12>& adj,
                               const std::vector<int>& perm) {
    std::uint64_t bits = 0;
    for (size_t k = 1; k < perm.size(); ++k)
        for (size_t i = 0; i < k; ++i)
            bits = bits << 1 | (adj[perm[k]] >> perm[i] & 1);
    return bits;
}

std::array<std::uint16_t, 12> adjacency_masks(const Graph& g) {
    std::array<std::uint16_t, 12> adj{};
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= (std::uint16_t)(1u << u);
    return adj;
}

} // namespace

std::uint64_t canonical_key(const Graph& g) {
    int n = g.num_vertices();
    if (n > kMaxCanonicalVertices)
        throw capacity_error("canonical form limited to " +
                             std::to_string(kMaxCanonicalVertices) + " vertices");
    std::uint64_t tag = (std::uint64_t)n << 56;
    if (n <= 1) return tag;

    auto adj = adjacency_masks(g);
    const int m = n * (n - 1) / 2;
    std::uint64_t best = m == 64 ? ~0ull : (1ull << m) - 1;
    std::vector<int> perm(n);
    std::uint32_t used = 0;

    std::function<void(int, std::uint64_t)> place = [&](int k, std::uint64_t bits) {
        if (k == n) {
            if (bits < best) best = bits;
            return;
        }
        int placed_bits = k * (k - 1) / 2;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint64_t seg = 0;
            for (int i = 0; i < k; ++i) seg = seg << 1 | (adj[v] >> perm[i] & 1);
            std::uint64_t prefix = bits << k | seg;
            if (prefix > (best >> (m - placed_bits - k))) continue;
            perm[k] = v;
            used |= 1u << v;
            place(k + 1, prefix);
            used &= ~(1u << v);
        }
    };
    place(0, 0);
    return tag | best;
}

namespace {

// One round of colour refinement; colours are renumbered by the sorted order
// of (old colour, sorted neighbor colours), which is label-invariant.
bool refine_once(const Graph& g, std::vector<int>& color) {
    int n = g.num_vertices();
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(color[v]);
        for (int u : g.neighbors(v)) s.push_back(color[u]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    bool changed = false;
    for (const auto& [s, v] : sig) {
        int c = rank[s];
        if (c != color[v]) changed = true;
        color[v] = c;
    }
    return changed;
}

std::uint64_t refinement_search(const Graph& g, std::vector<int> color) {
    int n = g.num_vertices();
    while (refine_once(g, color)) {
    }
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : classes)
        if (members.size() > 1 && (!target || members.size() < target->size()))
            target = &members;
    if (!target) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[color[v]] = v;
        return bits_under_order(adjacency_masks(g), perm);
    }
    std::uint64_t best = ~0ull;
    for (int v : *target) {
        std::vector<int> c2 = color;
        c2[v] = n; // a colour no refined class uses
        best = std::min(best, refinement_search(g, c2));
    }
    return best;
}

} // namespace

std::uint64_t canonical_key_by_refinement(const Graph& g) {
    int n = g.num_vertices();
    if (n > kMaxCanonicalVertices)
        throw capacity_error("canonical form limited to " +
                             std::to_string(kMaxCanonicalVertices) + " vertices");
    std::uint64_t tag = (std::uint64_t)n << 56;
    if (n <= 1) return tag;
    return tag | refinement_search(g, std::vector<int>(n, 0));
}

namespace {

// Every connected graph on n vertices arises from a connected graph on n-1
// vertices (delete a non-cut vertex) by attaching a new vertex to a nonempty
// neighbor set.
std::vector<Graph> augment_all(const std::vector<Graph>& smaller) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& h : smaller) {
        int n = h.num_vertices();
        for (unsigned subset = 1; subset < (1u << n); ++subset) {
            Graph g = h;
            int w = g.add_vertex();
            for (int v = 0; v < n; ++v)
                if (subset >> v & 1) g.add_edge(v, w);
            if (seen.insert(canonical_key(g)).second) out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

} // namespace

const std::vector<Graph>& enumerate_connected_graphs(int n) {
    if (n < 1 || n > 8)
        throw capacity_error("enumeration limited to 1..8 vertices");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int k = 1; k <= n; ++k) {
        if (cache.count(k)) continue;
        if (k == 1)
            cache[1] = {Graph(1)};
        else
            cache[k] = augment_all(cache[k - 1]);
    }
    return cache[n];
}

std::vector<Graph> enumerate_bounded_graphs(int n) {
    if (n < 1 || n > 9)
        throw capacity_error("bounded enumeration limited to 1..9 vertices");
    // Max degree <= 3 is hereditary under vertex deletion, so the same
    // augmentation works with capped degrees.
    std::vector<Graph> cur = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& h : cur) {
            for (unsigned subset = 1; subset < (1u << (k - 1)); ++subset) {
                if (__builtin_popcount(subset) > 3) continue;
                bool ok = true;
                for (int v = 0; v < k - 1 && ok; ++v)
                    if ((subset >> v & 1) && h.degree(v) >= 3) ok = false;
                if (!ok) continue;
                Graph g = h;
                int w = g.add_vertex();
                for (int v = 0; v < k - 1; ++v)
                    if (subset >> v & 1) g.add_edge(v, w);
                if (seen.insert(canonical_key(g)).second) next.push_back(g);
            }
        }
        cur = std::move(next);
    }
    std::vector<Graph> out;
    for (const Graph& g : cur) {
        bool ok = true;
        for (int v = 0; v < g.num_vertices() && ok; ++v) {
            if (g.degree(v) != 2) continue;
            ok = g.has_edge(g.neighbors(v)[0], g.neighbors(v)[1]);
        }
        if (ok) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

namespace {

bool catalog_candidate(const Graph& h) {
    if (is_star_graph(h) || is_path_graph(h) || is_cycle_graph(h)) return false;
    SimplicialComplex d = clique_complex(line_graph(h));
    return d.is_pure() && is_strongly_connected(d);
}

} // namespace

const ExceptionalCatalog& derive_catalog_cm() {
    static const ExceptionalCatalog cat = [] {
        ExceptionalCatalog c;
        for (int n = 3; n <= 8; ++n)
            for (const Graph& h : enumerate_connected_graphs(n))
                if (catalog_candidate(h)) c.graphs.push_back(h);
        std::sort(c.graphs.begin(), c.graphs.end(), [](const Graph& a, const Graph& b) {
            return canonical_key(a) < canonical_key(b);
        });
        c.provenance =
            "connected graphs on 3..8 vertices, excluding stars, paths and cycles, "
            "whose line-graph clique complex is pure and strongly connected; "
            "bound justified by max degree 3 plus degree-2-in-triangle membership, "
            "re-checked for stability on 9 vertices under those constraints";
        return c;
    }();
    return cat;
}

const ExceptionalCatalog& derive_catalog_gorenstein() {
    static const ExceptionalCatalog cat = [] {
        const std::vector<FieldId> fields = {FieldId::gf(2), FieldId::gf(32003),
                                             FieldId::rationals()};
        ExceptionalCatalog c;
        for (const Graph& h : derive_catalog_cm().graphs) {
            SimplicialComplex d = clique_complex(line_graph(h));
            bool ok = true;
            for (const FieldId& f : fields)
                if (!oracle::is_gorenstein(d, f)) ok = false;
            if (ok) c.graphs.push_back(h);
        }
        c.provenance = "members of the CM catalog passing the Gorenstein oracle over "
                       "GF(2), GF(32003) and the rationals";
        return c;
    }();
    return cat;
}

void write_catalog(std::ostream& out, const ExceptionalCatalog& c) {
    out << "# derived exceptional catalog\n";
    out << "# " << c.provenance << "\n";
    out << "# members: " << c.graphs.size() << "\n";
    for (size_t i = 0; i < c.graphs.size(); ++i) {
        const Graph& g = c.graphs[i];
        out << "# graph " << i << ": " << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges, key " << canonical_key(g) << "\n";
        write_edge_list(out, g);
    }
}

namespace {

GraphRecord check_one(const Graph& h, const std::vector<FieldId>& fields,
                      bool flip_cm) {
    GraphRecord rec;
    rec.key = canonical_key(h);
    rec.n = h.num_vertices();
    auto bad = [&](const std::string& what) { rec.mismatches.push_back(what); };

    LineGraphMap lgm = line_graph(h);
    SimplicialComplex delta = clique_complex(lgm);

    bool pure = delta.is_pure();
    rec.pure = pure;
    bool pure_fast = classify_pure(h).kind != PureKind::NotPure;
    if (pure_fast != pure) bad("classify_pure disagrees with simplicial purity");

    Verdict cm = decide_cm(h);
    if (flip_cm) cm.value = !cm.value;
    rec.cm = cm.value;
    for (const FieldId& f : fields)
        if (cm.value != oracle::is_cm(delta, f))
            bad("decide_cm vs oracle is_cm over " + f.name());
    bool vdec = oracle::is_vertex_decomposable(delta);
    if (cm.value != (pure && vdec)) bad("decide_cm vs pure vertex decomposability");
    if (cm.value != (pure && is_strongly_connected(pure_skeleton(delta, delta.dim()))))
        bad("decide_cm vs pure + strongly connected");

    bool have_shelling = false, shellable = false;
    if ((int)delta.facets().size() <= oracle::kShellabilityFacetLimit) {
        have_shelling = true;
        shellable = oracle::is_shellable(delta);
        if (cm.value != (pure && shellable)) bad("decide_cm vs pure shellability");
    } else {
        rec.shellability_skipped = true;
    }

    Verdict seq = decide_seq_cm(h);
    rec.seq_cm = seq.value;
    Verdict lin = linear_algorithm(h);
    if (seq.value != lin.value) bad("decide_seq_cm vs linear_algorithm");
    for (const FieldId& f : fields)
        if (seq.value != oracle::is_seq_cm(delta, f))
            bad("decide_seq_cm vs oracle is_seq_cm over " + f.name());
    if (seq.value != vdec) bad("decide_seq_cm vs vertex decomposability");
    if (have_shelling && seq.value != shellable) bad("decide_seq_cm vs shellability");

    Verdict gor = decide_gorenstein(h);
    rec.gorenstein = gor.value;
    for (const FieldId& f : fields)
        if (gor.value != oracle::is_gorenstein(delta, f))
            bad("decide_gorenstein vs oracle is_gorenstein over " + f.name());
    if (gor.value && !cm.value) bad("Gorenstein without CM");

    return rec;
}

} // namespace

CrossCheckReport cross_check(int max_n, const std::vector<FieldId>& fields, int jobs,
                             bool inject_fault) {
    if (max_n < 2 || max_n > 7)
        throw capacity_error("cross_check covers 2..7 vertices");
    auto start = std::chrono::steady_clock::now();

    std::vector<Graph> graphs;
    for (int n = 2; n <= max_n; ++n)
        for (const Graph& h : enumerate_connected_graphs(n)) graphs.push_back(h);

    derive_catalog_cm();         // prime the caches outside the parallel region
    derive_catalog_gorenstein();

    CrossCheckReport report;
    report.records.resize(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
#endif
    for (long long i = 0; i < (long long)graphs.size(); ++i)
        report.records[i] = check_one(graphs[i], fields, inject_fault && i == 0);

    for (const GraphRecord& r : report.records) {
        report.total_mismatches += (long long)r.mismatches.size();
        if (r.shellability_skipped) ++report.shellability_skips;
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

bool complex_connected(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    if (fs.empty()) return false;
    std::vector<char> seen(fs.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    auto share = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> x;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(x));
        return !x.empty();
    };
    while (!stack.empty()) {
        size_t f = stack.back();
        stack.pop_back();
        for (size_t g = 0; g < fs.size(); ++g)
            if (!seen[g] && share(fs[f], fs[g])) {
                seen[g] = 1;
                stack.push_back(g);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s; });
}

struct Properties {
    bool vdec;
    bool seq_cm;
    bool shellable;
    bool have_shelling;
};

Properties properties_of(const SimplicialComplex& c) {
    Properties p{};
    p.vdec = oracle::is_vertex_decomposable(c);
    p.seq_cm = oracle::is_seq_cm(c, FieldId::gf(2));
    if ((int)c.facets().size() <= oracle::kShellabilityFacetLimit) {
        p.have_shelling = true;
        p.shellable = oracle::is_shellable(c);
    }
    return p;
}

SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, int max_facets) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, max_facets);
    std::uniform_int_distribution<int> fsize(1, std::min(4, n));
    std::vector<std::vector<int>> faces;
    int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<int> verts(n);
        for (int v = 0; v < n; ++v) verts[v] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(fsize(rng));
        faces.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(std::move(faces));
}

} // namespace

PreservationReport preservation_suite(int trials, unsigned seed) {
    PreservationReport report;
    report.trials = trials;
    std::mt19937 rng(seed);
    auto violate = [&](int t, const std::string& what) {
        report.violations.push_back("trial " + std::to_string(t) + ": " + what);
    };

    // Fixed counterexample: <av, bu> is not sequentially CM, yet adding the
    // facet {a, b} gives a vertex decomposable complex.
    SimplicialComplex fixture =
        SimplicialComplex::from_facets({{0, 1}, {2, 3}}); // a=0 v=1 b=2 u=3
    if (oracle::is_seq_cm(fixture, FieldId::gf(2)))
        violate(-1, "<av,bu> reported sequentially CM");
    SimplicialComplex fixture_plus =
        SimplicialComplex::from_facets({{0, 1}, {2, 3}, {0, 2}});
    if (!oracle::is_vertex_decomposable(fixture_plus))
        violate(-1, "<av,bu> + <ab> reported not vertex decomposable");

    for (int t = 0; t < trials; ++t) {
        // Isolated vertex: adding one changes nothing.
        SimplicialComplex base = random_complex(rng, 6, 5);
        int fresh = base.vertices().empty() ? 0 : base.vertices().back() + 1;
        std::vector<std::vector<int>> faces = base.facets();
        faces.push_back({fresh});
        SimplicialComplex with_isolated = SimplicialComplex::from_facets(faces);
        Properties p0 = properties_of(base), p1 = properties_of(with_isolated);
        if (p0.vdec != p1.vdec || p0.seq_cm != p1.seq_cm ||
            (p0.have_shelling && p1.have_shelling && p0.shellable != p1.shellable))
            violate(t, "isolated-vertex lemma");

        // Pendant edge at a vertex of a connected complex: an equivalence.
        SimplicialComplex conn = base;
        while (!complex_connected(conn)) conn = random_complex(rng, 6, 5);
        int a = conn.vertices().front();
        int b = conn.vertices().back() + 1;
        faces = conn.facets();
        faces.push_back({a, b});
        SimplicialComplex pendant = SimplicialComplex::from_facets(faces);
        p0 = properties_of(conn);
        p1 = properties_of(pendant);
        if (p0.vdec != p1.vdec || p0.seq_cm != p1.seq_cm ||
            (p0.have_shelling && p1.have_shelling && p0.shellable != p1.shellable))
            violate(t, "pendant-edge lemma");

        // Free-vertex edge: attach fresh free vertices a, b to two distinct
        // facets, then join them; forward always, converse when |E|,|F| >= 3.
        SimplicialComplex seedc = random_complex(rng, 6, 5);
        while (seedc.facets().size() < 2) seedc = random_complex(rng, 6, 5);
        faces = seedc.facets();
        int fa = seedc.vertices().back() + 1, fb = fa + 1;
        size_t e0 = faces.size() - 2, f0 = faces.size() - 1;
        bool converse = faces[e0].size() >= 2 && faces[f0].size() >= 2;
        faces[e0].push_back(fa);
        faces[f0].push_back(fb);
        std::sort(faces[e0].begin(), faces[e0].end());
        std::sort(faces[f0].begin(), faces[f0].end());
        SimplicialComplex gamma = SimplicialComplex::from_facets(faces);
        faces.push_back({fa, fb});
        SimplicialComplex gamma_plus = SimplicialComplex::from_facets(faces);
        p0 = properties_of(gamma);
        p1 = properties_of(gamma_plus);
        bool fwd_ok = (!p0.vdec || p1.vdec) && (!p0.seq_cm || p1.seq_cm) &&
                      (!(p0.have_shelling && p1.have_shelling) ||
                       !p0.shellable || p1.shellable);
        if (!fwd_ok) violate(t, "free-vertex lemma (forward)");
        if (converse) {
            bool back_ok = (!p1.vdec || p0.vdec) && (!p1.seq_cm || p0.seq_cm) &&
                           (!(p0.have_shelling && p1.have_shelling) ||
                            !p1.shellable || p0.shellable);
            if (!back_ok) violate(t, "free-vertex lemma (converse)");
        }
    }
    return report;
}

bool line_graph_by_search(const Graph& g) {
    if (connected_components(g).size() != 1)
        throw input_error("line-graph search expects a connected graph");
    if (g.num_vertices() > 7)
        throw capacity_error("line-graph search limited to 7 vertices");
    std::uint64_t key = canonical_key(g);
    int m = g.num_vertices(); // the root must have exactly this many edges
    for (int n = 2; n <= std::min(8, m + 1); ++n)
        for (const Graph& h : enumerate_connected_graphs(n)) {
            if (h.num_edges() != m) continue;
            if (canonical_key(line_graph(h).line()) == key) return true;
        }
    return false;
}

} // namespace harness
} // namespace lgcm
