#pragma once

#include "dimerlab/matrix.hpp"
#include "dimerlab/numeric.hpp"
#include "dimerlab/planegraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dimerlab {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed black x white biadjacency of a planar bipartite graph. Entries are
// sign * weight; |det| is the weighted matching count.
struct KasteleynMatrix {
    const PlaneGraph* g = nullptr;
    std::vector<int> blacks, whites;       // vertex ids, ascending
    std::vector<int> sign;                 // per edge index of g, +-1 (0 if absent)
    std::map<std::pair<int, int>, int> entry_edge;  // (black row, white col) -> edge index

    std::size_t rows() const { return blacks.size(); }
    std::size_t cols() const { return whites.size(); }

    Rat entry(std::size_t i, std::size_t j) const {
        auto it = entry_edge.find({(int)i, (int)j});
        if (it == entry_edge.end()) return 0;
        return Rat(sign[it->second]) * g->edge(it->second).weight;
    }

    IntMatrix int_matrix(Int& denominator_out) const {
        Int den_all = 1;
        for (const auto& [rc, ei] : entry_edge) {
            Int d = den(g->edge(ei).weight);
            den_all = boost::multiprecision::lcm(den_all, d);
        }
        IntMatrix m(rows(), cols());
        for (const auto& [rc, ei] : entry_edge) {
            Rat e = Rat(sign[ei]) * g->edge(ei).weight * Rat(den_all);
            m.at(rc.first, rc.second) = num(e);
        }
        denominator_out = den_all;
        return m;
    }
};

namespace detail {

// Per-component dual spanning tree walk. Each bounded face receives exactly one
// adjustable edge (the one crossing to its dual parent); everything else keeps
// its default. `fix(face, edge)` must set that edge so the face constraint holds.
template <typename FixFn>
void dual_tree_sweep(const PlaneGraph& g, FixFn fix) {
    const auto& faces = g.faces();
    std::vector<std::vector<int>> edge_faces(g.edge_count());
    auto face_edges = [&](const std::vector<int>& f) {
        std::vector<int> out;
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto ei = g.find_edge(f[i], f[(i + 1) % f.size()]);
            if (!ei) throw EngineError("embedding face references a missing edge");
            out.push_back(*ei);
        }
        return out;
    };
    std::vector<std::vector<int>> fedges(faces.size());
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        fedges[fi] = face_edges(faces[fi]);
        for (int ei : fedges[fi]) edge_faces[ei].push_back((int)fi);
    }
    // BFS over bounded faces from the outer boundary; faces are discovered in
    // index order (faces are generated sorted by their least cell), so the
    // sweep is deterministic.
    std::vector<int> parent_edge(faces.size(), -1);
    std::vector<char> seen(faces.size(), 0);
    std::vector<int> order;
    std::deque<int> frontier;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        if (edge_faces[ei].size() < 2) {
            // edge on the outer boundary: its bounded face (if any) roots a tree
            for (int fi : edge_faces[ei])
                if (!seen[fi]) {
                    seen[fi] = 1;
                    parent_edge[fi] = (int)ei;
                    frontier.push_back(fi);
                    order.push_back(fi);
                }
        }
    }
    while (!frontier.empty()) {
        int fi = frontier.front();
        frontier.pop_front();
        for (int ei : fedges[fi])
            for (int f2 : edge_faces[ei])
                if (!seen[f2]) {
                    seen[f2] = 1;
                    parent_edge[f2] = ei;
                    frontier.push_back(f2);
                    order.push_back(f2);
                }
    }
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
        if (!seen[fi]) throw EngineError("bounded face not reachable from the outer face");
    for (auto it = order.rbegin(); it != order.rend(); ++it) fix(faces[*it], parent_edge[*it]);
}

}  // namespace detail

// Percus condition: around a bounded face of length 2k the sign product is
// (-1)^(k+1), i.e. the number of negative edges is odd iff the length is 0 mod 4.
inline KasteleynMatrix sign_assignment(const PlaneGraph& g) {
    if (!g.planar()) throw EngineError("sign_assignment: graph has no planar embedding");
    if (!g.bipartite()) throw EngineError("sign_assignment: graph is not bipartite");
    KasteleynMatrix k;
    k.g = &g;
    k.blacks = g.black_vertices();
    k.whites = g.white_vertices();
    k.sign.assign(g.edge_count(), 1);
    detail::dual_tree_sweep(g, [&](const std::vector<int>& face, int adjustable) {
        if (face.size() % 2 != 0) throw EngineError("odd face in a bipartite embedding");
        int prod = 1;
        std::vector<int> eis;
        for (std::size_t i = 0; i < face.size(); ++i)
            eis.push_back(*g.find_edge(face[i], face[(i + 1) % face.size()]));
        for (int ei : eis)
            if (ei != adjustable) prod *= k.sign[ei];
        int want = (face.size() / 2) % 2 == 0 ? -1 : 1;
        // the adjustable edge may be traversed twice by the walk (bridge); then
        // its sign cancels and the face must already be satisfied
        int mult = (int)std::count(eis.begin(), eis.end(), adjustable);
        if (mult % 2 == 0) {
            if (prod != want) throw EngineError("sign_assignment: unsatisfiable face");
        } else {
            k.sign[adjustable] = want * prod;
        }
    });
    // post-hoc face scan, as contracted
    for (const auto& face : g.faces()) {
        int prod = 1;
        for (std::size_t i = 0; i < face.size(); ++i)
            prod *= k.sign[*g.find_edge(face[i], face[(i + 1) % face.size()])];
        if (prod != ((face.size() / 2) % 2 == 0 ? -1 : 1))
            throw EngineError("sign_assignment: face condition violated");
    }
    std::map<int, int> brow, wcol;
    for (std::size_t i = 0; i < k.blacks.size(); ++i) brow[k.blacks[i]] = (int)i;
    for (std::size_t j = 0; j < k.whites.size(); ++j) wcol[k.whites[j]] = (int)j;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        int b = g.vertex(e.u).color == 0 ? e.u : e.v;
        int w = e.u + e.v - b;
        k.entry_edge[{brow[b], wcol[w]}] = (int)ei;
    }
    return k;
}

inline Rat count_det_weighted(const KasteleynMatrix& k) {
    if (k.rows() != k.cols()) return 0;  // unbalanced colors: no perfect matching
    if (k.rows() == 0) return 1;
    Int den_all;
    IntMatrix m = k.int_matrix(den_all);
    Int d = det_bareiss(m);
    if (d < 0) d = -d;
    return Rat(d) / Rat(pow_int(den_all, (unsigned long)k.rows()));
}

inline Int count_det(const KasteleynMatrix& k) {
    Rat r = count_det_weighted(k);
    if (den(r) != 1) throw EngineError("count_det: non-integer weighted count");
    return num(r);
}

namespace detail {

inline Rat count_det_component(const PlaneGraph& comp) {
    return count_det_weighted(sign_assignment(comp));
}

// FKT orientation: every bounded (ccw) face has an odd number of edges oriented
// against the traversal. dir[e] = true means oriented u -> v as stored.
inline Rat pfaffian_component(const PlaneGraph& g) {
    if (g.vertex_count() % 2) return 0;
    if (!g.planar()) throw EngineError("pfaffian_count: graph has no planar embedding");
    if (g.vertex_count() == 0) return 1;
    std::vector<char> dir(g.edge_count(), 1);
    detail::dual_tree_sweep(g, [&](const std::vector<int>& face, int adjustable) {
        int anti = 0, adj_mult = 0;
        char adj_forward_if_with_walk = 1;
        for (std::size_t i = 0; i < face.size(); ++i) {
            int a = face[i], b = face[(i + 1) % face.size()];
            int ei = *g.find_edge(a, b);
            bool along = (g.edge(ei).u == a);  // walk direction matches stored direction
            if (ei == adjustable) {
                ++adj_mult;
                adj_forward_if_with_walk = along ? 1 : 0;
                continue;
            }
            bool oriented_with_walk = (dir[ei] != 0) == along;
            if (!oriented_with_walk) ++anti;
        }
        if (adj_mult % 2 == 0) {
            // a doubly-traversed (bridge) edge contributes one anti-traversal whatever
            // its orientation
            if ((anti + adj_mult / 2) % 2 == 0)
                throw EngineError("pfaffian orientation: unsatisfiable face");
        } else {
            // make total anti odd
            bool want_with_walk = (anti % 2 == 1);
            dir[adjustable] = want_with_walk == (adj_forward_if_with_walk != 0) ? 1 : 0;
        }
    });
    std::vector<int> vs(g.vertex_count());
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = (int)i;
    Int den_all = 1;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei)
        den_all = boost::multiprecision::lcm(den_all, den(g.edge(ei).weight));
    IntMatrix m(vs.size(), vs.size());
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        int u = dir[ei] ? e.u : e.v;
        int v = e.u + e.v - u;
        Int w = num(e.weight * Rat(den_all));
        m.at(u, v) = w;
        m.at(v, u) = -w;
    }
    Int d = det_bareiss(m);
    if (d < 0) throw EngineError("pfaffian_count: negative determinant of skew matrix");
    auto s = integer_sqrt(d);
    if (!s.exact) throw EngineError("pfaffian_count: determinant is not a perfect square");
    return Rat(s.root) / Rat(pow_int(den_all, (unsigned long)(vs.size() / 2)));
}

}  // namespace detail

inline Rat count_planar_weighted(const PlaneGraph& g) {
    if (g.vertex_count() == 0) return 1;
    Rat total = 1;
    for (const auto& comp : g.components()) {
        if (comp.size() % 2) return 0;
        PlaneGraph sub = g.induced(comp);
        Rat c = detail::count_det_component(sub);
        if (c == 0) return 0;
        total *= c;
    }
    return total;
}

inline Rat pfaffian_count_weighted(const PlaneGraph& g) {
    if (g.vertex_count() == 0) return 1;
    Rat total = 1;
    for (const auto& comp : g.components()) {
        if (comp.size() % 2) return 0;
        Rat c = detail::pfaffian_component(g.induced(comp));
        if (c == 0) return 0;
        total *= c;
    }
    return total;
}

inline Int pfaffian_count(const PlaneGraph& g) {
    Rat r = pfaffian_count_weighted(g);
    if (den(r) != 1) throw EngineError("pfaffian_count: non-integer weighted count");
    return num(r);
}

// Inclusion-exclusion permanent with Gray-code subset updates.
inline Int permanent_ryser(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("permanent_ryser: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n > 16) throw EngineError("permanent_ryser: side exceeds the 16-column desk-scale cap");
    std::vector<Int> rowsum(n, 0);
    Int total = 0;
    unsigned long gray_prev = 0;
    for (unsigned long s = 1; s < (1ul << n); ++s) {
        unsigned long gray = s ^ (s >> 1);
        unsigned long changed = gray ^ gray_prev;
        int bit = 0;
        while (!((changed >> bit) & 1)) ++bit;
        bool added = (gray >> bit) & 1;
        for (std::size_t i = 0; i < n; ++i) {
            const Int& aij = a.at(i, (std::size_t)bit);
            if (aij == 0) continue;
            if (added) rowsum[i] += aij;
            else rowsum[i] -= aij;
        }
        gray_prev = gray;
        Int prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        int k = __builtin_popcountl(gray);
        if (((long)n - k) % 2 == 0) total += prod;
        else total -= prod;
    }
    return total < 0 ? -total : total;
}

inline Int permanent_ryser(const PlaneGraph& g) {
    if (!g.bipartite()) throw EngineError("permanent_ryser: graph is not bipartite");
    auto blacks = g.black_vertices(), whites = g.white_vertices();
    if (blacks.size() != whites.size()) return 0;
    if (blacks.size() > 16) throw EngineError("permanent_ryser: side exceeds the 16-vertex desk-scale cap");
    IntMatrix a(blacks.size(), whites.size());
    std::map<int, std::size_t> wcol;
    for (std::size_t j = 0; j < whites.size(); ++j) wcol[whites[j]] = j;
    for (std::size_t i = 0; i < blacks.size(); ++i)
        for (int ei : g.incident(blacks[i])) {
            if (den(g.edge(ei).weight) != 1)
                throw EngineError("permanent_ryser: integer weights required");
            a.at(i, wcol[g.other_end(ei, blacks[i])]) = num(g.edge(ei).weight);
        }
    return permanent_ryser(a);
}

// Recursive enumeration oracle: branch over the edges of a lowest-degree vertex.
inline Rat brute_force_count_weighted(const PlaneGraph& g, bool weighted = true) {
    std::size_t cap = weighted ? 24 : 40;
    if (g.vertex_count() > cap)
        throw EngineError("brute_force_count: vertex count exceeds the desk-scale cap");
    if (g.vertex_count() % 2) return 0;
    std::vector<char> covered(g.vertex_count(), 0);
    std::size_t left = g.vertex_count();
    std::function<Rat()> rec = [&]() -> Rat {
        if (left == 0) return 1;
        int best = -1;
        std::size_t bd = (std::size_t)-1;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (covered[v]) continue;
            std::size_t d = 0;
            for (int ei : g.incident((int)v)) d += !covered[g.other_end(ei, (int)v)];
            if (d == 0) return 0;
            if (d < bd) { bd = d; best = (int)v; }
        }
        Rat total = 0;
        covered[best] = 1;
        left -= 2;
        for (int ei : g.incident(best)) {
            int u = g.other_end(ei, best);
            if (covered[u]) continue;
            covered[u] = 1;
            Rat sub = rec();
            if (sub != 0) total += (weighted ? g.edge(ei).weight : Rat(1)) * sub;
            covered[u] = 0;
        }
        covered[best] = 0;
        left += 2;
        return total;
    };
    return rec();
}

inline Int brute_force_count(const PlaneGraph& g) {
    Rat r = brute_force_count_weighted(g, false);
    return num(r);
}

enum class Method { AUTO, DET, PFAFFIAN, PERMANENT, BRUTE };

inline Method pick_method(const PlaneGraph& g) {
    bool bip = g.bipartite();
    if (g.planar() && bip) return Method::DET;
    if (g.planar()) return Method::PFAFFIAN;
    if (bip && g.black_vertices().size() == g.white_vertices().size() &&
        g.black_vertices().size() <= 16)
        return Method::PERMANENT;
    if (bip && g.black_vertices().size() != g.white_vertices().size()) return Method::PERMANENT;
    return Method::BRUTE;
}

// Weighted matching sum with automatic engine choice (or a forced one).
inline Rat matching_sum(const PlaneGraph& g, Method method = Method::AUTO) {
    if (method == Method::AUTO) method = pick_method(g);
    switch (method) {
        case Method::DET: return count_planar_weighted(g);
        case Method::PFAFFIAN: return pfaffian_count_weighted(g);
        case Method::PERMANENT: {
            if (!g.bipartite()) throw EngineError("permanent engine requires a bipartite graph");
            if (g.black_vertices().size() != g.white_vertices().size()) return 0;
            return Rat(permanent_ryser(g));
        }
        case Method::BRUTE: {
            bool unit = true;
            for (std::size_t ei = 0; ei < g.edge_count(); ++ei) unit &= g.edge(ei).weight == 1;
            return brute_force_count_weighted(g, !unit);
        }
        default: throw EngineError("unknown method");
    }
}

inline Int matching_count(const PlaneGraph& g, Method method = Method::AUTO) {
    Rat r = matching_sum(g, method);
    if (den(r) != 1) throw EngineError("matching_count: weighted sum is not an integer");
    return num(r);
}

}  // namespace dimerlab
