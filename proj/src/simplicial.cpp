#include "lgcm/simplicial.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "lgcm/errors.hpp"
#include "lgcm/line_graph.hpp"

namespace lgcm {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

SimplicialComplex SimplicialComplex::empty_facet_complex() {
    SimplicialComplex c;
    c.facets_.push_back({});
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex c;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (faces[i].size() < faces[j].size() && subset_of(faces[i], faces[j]))
                dominated = true;
        if (!dominated) c.facets_.push_back(faces[i]);
    }
    return c;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

int SimplicialComplex::num_vertices() const { return static_cast<int>(vertices().size()); }

int SimplicialComplex::dim() const {
    if (is_void()) throw input_error("dim: void complex");
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) throw input_error("is_pure: void complex");
    for (const auto& f : facets_)
        if (f.size() != facets_[0].size()) return false;
    return true;
}

bool SimplicialComplex::contains_face(const std::vector<int>& face) const {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    for (const auto& g : facets_)
        if (subset_of(f, g)) return true;
    return false;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::set<std::vector<int>>> by_dim;
    if (is_void()) return {};
    by_dim.resize(dim() + 2);
    by_dim[0].insert(std::vector<int>{});
    for (const auto& facet : facets_) {
        // all subsets of the facet
        int k = static_cast<int>(facet.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(facet[i]);
            by_dim[face.size()].insert(std::move(face));
        }
    }
    std::vector<std::vector<std::vector<int>>> out(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        out[d].assign(by_dim[d].begin(), by_dim[d].end());
    return out;
}

SimplicialComplex clique_complex(const Graph& g) {
    // Bron-Kerbosch with pivoting over the vertex set.
    std::vector<std::vector<int>> maximal;
    int n = g.num_vertices();
    if (n == 0) return SimplicialComplex::empty_facet_complex();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    std::vector<int> r;
    auto expand = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty() && x.empty()) {
            maximal.push_back(r);
            return;
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        int pivot = -1, best = -1;
        for (int u : p)
            if (g.degree(u) > best) best = g.degree(u), pivot = u;
        for (int u : x)
            if (g.degree(u) > best) best = g.degree(u), pivot = u;
        std::vector<int> cands;
        for (int u : p)
            if (pivot < 0 || !g.has_edge(pivot, u)) cands.push_back(u);
        for (int u : cands) {
            std::vector<int> np, nx;
            for (int w : p)
                if (g.has_edge(u, w)) np.push_back(w);
            for (int w : x)
                if (g.has_edge(u, w)) nx.push_back(w);
            r.push_back(u);
            self(self, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), u));
            x.push_back(u);
        }
    };
    expand(expand, all, {});
    return SimplicialComplex::from_facets(std::move(maximal));
}

SimplicialComplex clique_complex(const LineGraphMap& lg) {
    // Facets of Δ(L(H)) are the maximal stars and the triangles of H.
    std::vector<std::vector<int>> facets;
    const Graph& h = lg.root();
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (h.degree(v) == 0) continue;
        std::vector<int> star;
        for (int w : h.neighbors(v)) star.push_back(lg.vertex_of_edge(v, w));
        facets.push_back(std::move(star));
    }
    for (const auto& t : triangles(h))
        facets.push_back({lg.vertex_of_edge(t[0], t[1]), lg.vertex_of_edge(t[0], t[2]),
                          lg.vertex_of_edge(t[1], t[2])});
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face) {
    if (!c.contains_face(face))
        throw input_error("link: the given set is not a face of the complex");
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    std::vector<std::vector<int>> out;
    for (const auto& g : c.facets())
        if (subset_of(f, g)) {
            std::vector<int> rest;
            std::set_difference(g.begin(), g.end(), f.begin(), f.end(),
                                std::back_inserter(rest));
            out.push_back(std::move(rest));
        }
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, int v) {
    auto vs = c.vertices();
    if (!std::binary_search(vs.begin(), vs.end(), v))
        throw input_error("delete_vertex: unknown vertex " + std::to_string(v));
    std::vector<std::vector<int>> out;
    for (const auto& f : c.facets()) {
        std::vector<int> g;
        for (int x : f)
            if (x != v) g.push_back(x);
        out.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw input_error("pure_skeleton: void complex");
    if (i < -1 || i > c.dim())
        throw input_error("pure_skeleton: dimension " + std::to_string(i) + " out of range");
    if (i == -1) return SimplicialComplex::empty_facet_complex();
    std::set<std::vector<int>> faces;
    std::size_t k = static_cast<std::size_t>(i) + 1;
    for (const auto& facet : c.facets()) {
        if (facet.size() < k) continue;
        // all k-subsets
        std::vector<int> idx(k);
        for (std::size_t j = 0; j < k; ++j) idx[j] = static_cast<int>(j);
        while (true) {
            std::vector<int> face(k);
            for (std::size_t j = 0; j < k; ++j) face[j] = facet[idx[j]];
            faces.insert(std::move(face));
            int j = static_cast<int>(k) - 1;
            while (j >= 0 && idx[j] == static_cast<int>(facet.size() - k + j)) --j;
            if (j < 0) break;
            ++idx[j];
            for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
    if (faces.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets({faces.begin(), faces.end()});
}

bool is_strongly_connected(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("is_strongly_connected: void complex");
    if (!c.is_pure()) throw input_error("is_strongly_connected: complex is not pure");
    const auto& fs = c.facets();
    std::size_t t = fs.size();
    if (t <= 1) return true;
    std::size_t facet_size = fs[0].size();
    std::vector<char> seen(t, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (std::size_t j = 0; j < t; ++j) {
            if (seen[j]) continue;
            std::vector<int> inter;
            std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() + 1 == facet_size) {
                seen[j] = 1;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    return reached == t;
}

std::vector<int> free_vertices(const SimplicialComplex& c) {
    std::map<int, int> count;
    for (const auto& f : c.facets())
        for (int v : f) ++count[v];
    std::vector<int> out;
    for (auto [v, k] : count)
        if (k == 1) out.push_back(v);
    return out;
}

NamedComplex read_facet_list(std::istream& in) {
    NamedComplex nc;
    std::map<std::string, int> id_of;
    std::vector<std::vector<int>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> facet;
        std::string token;
        while (ls >> token) {
            auto [it, fresh] = id_of.try_emplace(token, static_cast<int>(nc.names.size()));
            if (fresh) nc.names.push_back(token);
            facet.push_back(it->second);
        }
        if (facet.empty()) continue;
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw input_error("facet list line " + std::to_string(lineno) +
                              ": repeated vertex");
        facets.push_back(std::move(facet));
    }
    nc.complex = SimplicialComplex::from_facets(std::move(facets));
    return nc;
}

} // namespace lgcm
