#pragma once

#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/numeric.hpp"
#include "dimerlab/planegraph.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace dimerlab {

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RewriteResult {
    PlaneGraph graph;
    Rat factor;  // weightedSum(old) = factor * weightedSum(new)
};

namespace detail {

inline Rat edge_weight_or_fail(const PlaneGraph& g, int u, int v, const char* what) {
    auto ei = g.find_edge(u, v);
    if (!ei) throw RewriteError(std::string("pattern mismatch: missing edge ") + what);
    return g.edge(*ei).weight;
}

// rebuild without a vertex set, with weight overrides and removals on surviving edges
inline PlaneGraph rebuild(const PlaneGraph& g, const std::set<int>& drop_vertices,
                          const std::map<std::pair<int, int>, Rat>& override_weights,
                          const std::set<std::pair<int, int>>& drop_edges,
                          const std::vector<std::tuple<std::string, std::string, Rat>>& new_edges) {
    PlaneGraph out;
    std::map<int, int> remap;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (drop_vertices.count((int)v)) continue;
        const auto& vx = g.vertex((int)v);
        remap[(int)v] = vx.has_pos ? out.add_vertex(vx.label, vx.color, vx.x, vx.y)
                                   : out.add_vertex(vx.label, vx.color);
    }
    auto key = [](int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge((int)ei);
        if (drop_vertices.count(e.u) || drop_vertices.count(e.v)) continue;
        if (drop_edges.count(key(e.u, e.v))) continue;
        Rat w = e.weight;
        auto it = override_weights.find(key(e.u, e.v));
        if (it != override_weights.end()) w = it->second;
        out.add_edge(remap[e.u], remap[e.v], w);
    }
    for (auto& [la, lb, w] : new_edges) {
        auto a = out.find_vertex(la), b = out.find_vertex(lb);
        if (!a || !b) throw RewriteError("rebuild: lost endpoint " + la + "/" + lb);
        out.add_edge(*a, *b, w);
    }
    return out;
}

}  // namespace detail

// The four-cycle city t(u,v,w) with pendants p,q,r,s collapses to direct edges
// between the pendants; each new edge carries the opposite old weight divided
// by ac+bd, and the weighted matching sum drops by exactly that factor.
struct UrbanCity {
    int t, u, v, w;  // cycle order: t-u (a), u-v (b), v-w (c), w-t (d)
};

inline RewriteResult urban_renewal(const PlaneGraph& g, const UrbanCity& city) {
    int cyc[4] = {city.t, city.u, city.v, city.w};
    Rat a = detail::edge_weight_or_fail(g, city.t, city.u, "t-u");
    Rat b = detail::edge_weight_or_fail(g, city.u, city.v, "u-v");
    Rat c = detail::edge_weight_or_fail(g, city.v, city.w, "v-w");
    Rat d = detail::edge_weight_or_fail(g, city.w, city.t, "w-t");
    int pend[4];
    for (int k = 0; k < 4; ++k) {
        int x = cyc[k];
        if (g.incident(x).size() != 3)
            throw RewriteError("pattern mismatch: city vertex must have the two cycle edges and one pendant");
        int other = -1;
        for (int ei : g.incident(x)) {
            int y = g.other_end(ei, x);
            if (y != cyc[(k + 1) % 4] && y != cyc[(k + 3) % 4]) {
                other = y;
                if (g.edge(ei).weight != 1)
                    throw RewriteError("pattern mismatch: pendant edge must have weight 1");
            }
        }
        if (other < 0) throw RewriteError("pattern mismatch: city vertex lacks a pendant");
        pend[k] = other;
    }
    int p = pend[0], q = pend[1], r = pend[2], s = pend[3];
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (pend[k] == pend[l]) throw RewriteError("pattern mismatch: pendants must be distinct");
    Rat F = a * c + b * d;
    RewriteResult out;
    out.factor = F;
    out.graph = detail::rebuild(
        g, {city.t, city.u, city.v, city.w}, {}, {},
        {{g.vertex(p).label, g.vertex(q).label, c / F},
         {g.vertex(q).label, g.vertex(r).label, d / F},
         {g.vertex(r).label, g.vertex(s).label, a / F},
         {g.vertex(s).label, g.vertex(p).label, b / F}});
    out.graph.mark_nonplanar();  // the embedding is stale after surgery
    return out;
}

// Ladder p-q / r-s / t-u. The middle vertices r,s must be internal to the
// pattern. The move deletes the t-u rung and reweights p-q to 3/2, q-s to 1/2
// and r-t to 2. Measured on the brute-force oracle, the weighted matching sum
// is preserved exactly.
inline constexpr int kKenyonFactorNumerator = 1;
inline constexpr int kKenyonFactorDenominator = 1;

struct KenyonSite {
    int p, q, r, s, t, u;
};

inline RewriteResult kenyon_move(const PlaneGraph& g, const KenyonSite& site) {
    const char* names[7] = {"p-q", "r-s", "t-u", "p-r", "q-s", "r-t", "s-u"};
    std::pair<int, int> pat[7] = {{site.p, site.q}, {site.r, site.s}, {site.t, site.u},
                                  {site.p, site.r}, {site.q, site.s}, {site.r, site.t},
                                  {site.s, site.u}};
    for (int k = 0; k < 7; ++k)
        if (detail::edge_weight_or_fail(g, pat[k].first, pat[k].second, names[k]) != 1)
            throw RewriteError(std::string("pattern mismatch: edge ") + names[k] +
                               " must have weight 1");
    if (g.incident(site.r).size() != 3 || g.incident(site.s).size() != 3)
        throw RewriteError("pattern mismatch: r and s may not be attached elsewhere");
    RewriteResult out;
    out.factor = Rat(kKenyonFactorNumerator, kKenyonFactorDenominator);
    auto key = [](int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
    std::map<std::pair<int, int>, Rat> reweight{{key(site.p, site.q), Rat(3, 2)},
                                                {key(site.q, site.s), Rat(1, 2)},
                                                {key(site.r, site.t), Rat(2)}};
    out.graph = detail::rebuild(g, {}, reweight, {key(site.t, site.u)}, {});
    out.graph.mark_nonplanar();
    return out;
}

}  // namespace dimerlab
