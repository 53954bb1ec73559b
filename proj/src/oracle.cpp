#include "lgcm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>

#include "lgcm/errors.hpp"

namespace lgcm {
namespace oracle {

namespace {

// Number of connected components of the facet graph under shared vertices.
// Cheap H~_0 check before any matrix work.
int vertex_components(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    std::vector<int> comp(fs.size(), -1);
    std::map<int, std::vector<int>> by_vertex;
    for (int i = 0; i < (int)fs.size(); ++i)
        for (int v : fs[i]) by_vertex[v].push_back(i);
    int ncomp = 0;
    for (int s = 0; s < (int)fs.size(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int v : fs[f])
                for (int g : by_vertex[v])
                    if (comp[g] == -1) {
                        comp[g] = ncomp;
                        stack.push_back(g);
                    }
        }
        ++ncomp;
    }
    return ncomp;
}

bool link_is_cm_below_dim(const SimplicialComplex& lk, FieldId field) {
    int d = lk.dim();
    if (d <= 0) return true; // H~_{-1} vanishes once a vertex exists
    if (vertex_components(lk) > 1) return false;
    HomologyProfile h = reduced_homology(lk, field);
    for (int i = -1; i < d; ++i)
        if (h(i) != 0) return false;
    return true;
}

} // namespace

bool is_cm(const SimplicialComplex& c, FieldId field) {
    if (c.is_void()) return true;
    auto by_dim = c.faces_by_dim();
    // Larger faces first: their links are smaller, so refutations are cheap.
    for (int d = (int)by_dim.size() - 1; d >= 0; --d)
        for (const auto& face : by_dim[d])
            if (!link_is_cm_below_dim(link(c, face), field)) return false;
    return true;
}

bool is_seq_cm(const SimplicialComplex& c, FieldId field) {
    if (c.is_void()) return true;
    for (int i = 0; i <= c.dim(); ++i)
        if (!is_cm(pure_skeleton(c, i), field)) return false;
    return true;
}

bool is_shedding_vertex(const SimplicialComplex& c, int v) {
    SimplicialComplex del = delete_vertex(c, v);
    SimplicialComplex lk = link(c, {v});
    if (del.is_void()) return false; // v in every facet: deletion sheds nothing
    for (const auto& f : del.facets())
        if (lk.contains_face(f)) return false;
    return true;
}

namespace {

// Relabel vertices by first appearance and serialize; complexes that agree up
// to this relabeling recurse identically, which is enough sharing in practice.
std::string memo_key(const SimplicialComplex& c) {
    std::map<int, int> relabel;
    std::string key;
    for (const auto& f : c.facets()) {
        for (int v : f) {
            auto [it, fresh] = relabel.try_emplace(v, (int)relabel.size());
            key += (char)('a' + it->second % 26);
            key += std::to_string(it->second / 26);
        }
        key += '|';
    }
    return key;
}

bool vdec_rec(const SimplicialComplex& c, std::map<std::string, bool>& memo) {
    if (c.is_void() || c.is_simplex()) return true;
    if (c.dim() <= 0) return true; // any set of points is vertex decomposable
    std::string key = memo_key(c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int v : c.vertices()) {
        if (!is_shedding_vertex(c, v)) continue;
        if (vdec_rec(delete_vertex(c, v), memo) && vdec_rec(link(c, {v}), memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

} // namespace

bool is_vertex_decomposable(const SimplicialComplex& c) {
    std::map<std::string, bool> memo;
    return vdec_rec(c, memo);
}

bool is_shellable(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    int n = (int)fs.size();
    if (n <= 1) return true;
    if (n > kShellabilityFacetLimit)
        throw capacity_error("shellability search limited to " +
                             std::to_string(kShellabilityFacetLimit) + " facets");

    // Whether facet j may follow the set `used`: every intersection with a
    // used facet must extend to one of size |F_j| - 1 (Bjorner-Wachs).
    auto can_add = [&](uint32_t used, int j) {
        const auto& f = fs[j];
        std::vector<std::vector<int>> inters;
        for (int i = 0; i < n; ++i) {
            if (!(used >> i & 1)) continue;
            std::vector<int> x;
            std::set_intersection(f.begin(), f.end(), fs[i].begin(), fs[i].end(),
                                  std::back_inserter(x));
            inters.push_back(std::move(x));
        }
        for (const auto& x : inters) {
            if ((int)x.size() == (int)f.size() - 1) continue;
            bool covered = false;
            for (const auto& y : inters) {
                if ((int)y.size() != (int)f.size() - 1) continue;
                if (std::includes(y.begin(), y.end(), x.begin(), x.end())) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        // With no codim-1 overlap at all, the union of intersections is {∅},
        // which only works for a vertex facet.
        bool any_codim1 = std::any_of(inters.begin(), inters.end(), [&](auto& x) {
            return (int)x.size() == (int)f.size() - 1;
        });
        return any_codim1 || f.size() == 1;
    };

    std::unordered_set<uint32_t> dead;
    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    auto dfs = [&](auto&& self, uint32_t used) -> bool {
        if (used == full) return true;
        if (dead.count(used)) return false;
        for (int j = 0; j < n; ++j) {
            if (used >> j & 1) continue;
            if (!can_add(used, j)) continue;
            if (self(self, used | (1u << j))) return true;
        }
        dead.insert(used);
        return false;
    };
    for (int j = 0; j < n; ++j)
        if (dfs(dfs, 1u << j)) return true;
    return false;
}

SimplicialComplex core(const SimplicialComplex& c) {
    if (c.is_void()) return c;
    SimplicialComplex cur = c;
    for (;;) {
        std::vector<int> verts = cur.vertices();
        std::vector<int> cone;
        for (int v : verts) {
            bool everywhere = true;
            for (const auto& f : cur.facets())
                if (!std::binary_search(f.begin(), f.end(), v)) {
                    everywhere = false;
                    break;
                }
            if (everywhere) cone.push_back(v);
        }
        if (cone.empty()) return cur;
        std::vector<std::vector<int>> stripped;
        for (const auto& f : cur.facets()) {
            std::vector<int> g;
            std::set_difference(f.begin(), f.end(), cone.begin(), cone.end(),
                                std::back_inserter(g));
            stripped.push_back(std::move(g));
        }
        cur = SimplicialComplex::from_facets(std::move(stripped));
    }
}

bool is_gorenstein(const SimplicialComplex& c, FieldId field) {
    if (c.is_void()) return true;
    SimplicialComplex g = core(c);
    // Every link in the core must look like a sphere of its dimension.
    auto by_dim = g.faces_by_dim();
    for (int d = (int)by_dim.size() - 1; d >= 0; --d)
        for (const auto& face : by_dim[d]) {
            SimplicialComplex lk = link(g, face);
            int ld = lk.dim();
            HomologyProfile h = reduced_homology(lk, field);
            for (int i = -1; i < ld; ++i)
                if (h(i) != 0) return false;
            if (h(ld) != 1) return false;
        }
    return true;
}

} // namespace oracle
} // namespace lgcm
