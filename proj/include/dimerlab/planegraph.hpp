#pragma once

#include "dimerlab/cellcomplex.hpp"
#include "dimerlab/numeric.hpp"
#include "dimerlab/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dimerlab {

// Graph with optional exact planar embedding data. Immutable once built by a
// generator or dual-graph constructor; counting engines only read it.
//
// Faces are stored as cyclic vertex sequences, bounded faces only, each
// traversed counterclockwise in the embedding.
class PlaneGraph {
public:
    struct Vertex {
        std::string label;
        int color = -1;              // 0 black, 1 white, -1 unknown
        Rat x = 0, y = 0;
        bool has_pos = false;
    };
    struct Edge {
        int u, v;
        Rat weight = 1;
    };

    int add_vertex(std::string label, int color = -1) {
        vs_.push_back({std::move(label), color});
        adj_.emplace_back();
        return (int)vs_.size() - 1;
    }
    int add_vertex(std::string label, int color, Rat x, Rat y) {
        vs_.push_back({std::move(label), color, std::move(x), std::move(y), true});
        adj_.emplace_back();
        return (int)vs_.size() - 1;
    }

    // Parallel edges merge; for matching generating functions the weights add.
    void add_edge(int u, int v, Rat w = 1) {
        if (u == v) throw std::invalid_argument("add_edge: loop");
        for (int ei : adj_[u])
            if (es_[ei].u + es_[ei].v - u == v) {
                es_[ei].weight += w;
                return;
            }
        es_.push_back({u, v, std::move(w)});
        adj_[u].push_back((int)es_.size() - 1);
        adj_[v].push_back((int)es_.size() - 1);
    }

    std::size_t vertex_count() const { return vs_.size(); }
    std::size_t edge_count() const { return es_.size(); }
    const Vertex& vertex(int i) const { return vs_[i]; }
    const Edge& edge(int i) const { return es_[i]; }
    const std::vector<int>& incident(int v) const { return adj_[v]; }
    int other_end(int ei, int v) const { return es_[ei].u + es_[ei].v - v; }

    std::optional<int> find_vertex(const std::string& label) const {
        for (std::size_t i = 0; i < vs_.size(); ++i)
            if (vs_[i].label == label) return (int)i;
        return std::nullopt;
    }
    std::optional<int> find_edge(int u, int v) const {
        for (int ei : adj_[u])
            if (other_end(ei, u) == v) return ei;
        return std::nullopt;
    }

    bool planar() const { return planar_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    // Colors: returns true and fills any missing colors if the graph is
    // bipartite; false otherwise. Declared colors are verified, not inferred over.
    bool bipartite() const {
        if (bip_checked_) return bip_;
        bip_checked_ = true;
        std::vector<int> col(vs_.size(), -1);
        for (std::size_t i = 0; i < vs_.size(); ++i) col[i] = vs_[i].color;
        for (std::size_t s = 0; s < vs_.size(); ++s) {
            if (col[s] >= 0) continue;
            col[s] = 0;
            std::deque<int> dq{(int)s};
            while (!dq.empty()) {
                int u = dq.front();
                dq.pop_front();
                for (int ei : adj_[u]) {
                    int v = other_end(ei, u);
                    if (col[v] < 0) { col[v] = 1 - col[u]; dq.push_back(v); }
                }
            }
        }
        bip_ = true;
        for (const auto& e : es_)
            if (col[e.u] == col[e.v]) { bip_ = false; break; }
        if (bip_)
            for (std::size_t i = 0; i < vs_.size(); ++i) vs_[i].color = col[i];
        return bip_;
    }

    std::vector<int> black_vertices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < vs_.size(); ++i)
            if (vs_[i].color == 0) out.push_back((int)i);
        return out;
    }
    std::vector<int> white_vertices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < vs_.size(); ++i)
            if (vs_[i].color == 1) out.push_back((int)i);
        return out;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(vs_.size(), 0);
        for (std::size_t s = 0; s < vs_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<int> comp;
            std::deque<int> dq{(int)s};
            seen[s] = 1;
            while (!dq.empty()) {
                int u = dq.front();
                dq.pop_front();
                comp.push_back(u);
                for (int ei : adj_[u]) {
                    int v = other_end(ei, u);
                    if (!seen[v]) { seen[v] = 1; dq.push_back(v); }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    PlaneGraph induced(const std::vector<int>& verts) const {
        PlaneGraph g;
        std::map<int, int> remap;
        for (int v : verts) {
            int nv = vs_[v].has_pos
                         ? g.add_vertex(vs_[v].label, vs_[v].color, vs_[v].x, vs_[v].y)
                         : g.add_vertex(vs_[v].label, vs_[v].color);
            remap[v] = nv;
        }
        for (const auto& e : es_) {
            auto iu = remap.find(e.u), iv = remap.find(e.v);
            if (iu != remap.end() && iv != remap.end()) g.add_edge(iu->second, iv->second, e.weight);
        }
        if (planar_) {
            // faces touching removed vertices vanish; geometry-based graphs rebuild,
            // declared-face graphs keep only intact faces
            if (g.all_positioned()) g.build_embedding();
            else {
                for (const auto& f : faces_) {
                    bool ok = true;
                    std::vector<int> nf;
                    for (int v : f) {
                        auto it = remap.find(v);
                        if (it == remap.end()) { ok = false; break; }
                        nf.push_back(it->second);
                    }
                    if (ok) g.faces_.push_back(std::move(nf));
                }
                g.planar_ = true;
            }
        }
        return g;
    }

    PlaneGraph without_vertices(const std::vector<int>& removed) const {
        std::vector<int> keep;
        for (std::size_t i = 0; i < vs_.size(); ++i)
            if (std::find(removed.begin(), removed.end(), (int)i) == removed.end())
                keep.push_back((int)i);
        return induced(keep);
    }

    bool all_positioned() const {
        for (const auto& v : vs_)
            if (!v.has_pos) return false;
        return !vs_.empty();
    }

    // Rotation system from exact coordinates, faces by standard face tracing.
    // Bounded faces come out counterclockwise. Requires positions on every vertex.
    void build_embedding() {
        if (!all_positioned()) throw std::logic_error("build_embedding: vertices lack coordinates");
        faces_.clear();
        std::vector<std::vector<int>> rot(vs_.size());  // neighbor vertex ids, ccw order
        for (std::size_t v = 0; v < vs_.size(); ++v) {
            std::vector<int> nb;
            for (int ei : adj_[v]) nb.push_back(other_end(ei, (int)v));
            std::sort(nb.begin(), nb.end(), [&](int a, int b) {
                Rat ax = vs_[a].x - vs_[v].x, ay = vs_[a].y - vs_[v].y;
                Rat bx = vs_[b].x - vs_[v].x, by = vs_[b].y - vs_[v].y;
                int ha = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;  // half-plane: upper first
                int hb = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
                if (ha != hb) return ha < hb;
                Rat cross = ax * by - ay * bx;
                if (cross != 0) return cross > 0;
                return a < b;  // collinear duplicates cannot occur in simple dissection duals
            });
            rot[v] = std::move(nb);
        }
        std::map<std::pair<int, int>, int> pos_in_rot;
        for (std::size_t v = 0; v < vs_.size(); ++v)
            for (std::size_t i = 0; i < rot[v].size(); ++i) pos_in_rot[{(int)v, rot[v][i]}] = (int)i;
        std::map<std::pair<int, int>, bool> used;
        for (std::size_t v = 0; v < vs_.size(); ++v)
            for (int u : rot[v]) used[{(int)v, u}] = false;
        for (auto& [start, flag] : used) {
            if (flag) continue;
            std::vector<int> face;
            int a = start.first, b = start.second;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                face.push_back(a);
                // next directed edge: at b, neighbor preceding a in ccw order
                const auto& r = rot[b];
                int i = pos_in_rot[{b, a}];
                int c = r[(i + r.size() - 1) % r.size()];
                a = b;
                b = c;
            }
            // orientation via shoelace; the clockwise cycle of a component is its outer face
            Rat area = 0;
            for (std::size_t i = 0; i < face.size(); ++i) {
                const auto& p = vs_[face[i]];
                const auto& q = vs_[face[(i + 1) % face.size()]];
                area += p.x * q.y - q.x * p.y;
            }
            if (area > 0) faces_.push_back(std::move(face));
        }
        planar_ = true;
    }

    void set_faces(std::vector<std::vector<int>> faces) {
        faces_ = std::move(faces);
        planar_ = true;
    }
    void mark_nonplanar() { planar_ = false; }

    // V - E + F = 2 per connected component, counting one outer face each.
    bool euler_ok() const {
        if (!planar_) return false;
        auto comps = components();
        std::vector<int> comp_of(vs_.size(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[v] = (int)c;
        std::vector<long> V(comps.size(), 0), E(comps.size(), 0), F(comps.size(), 1);
        for (std::size_t c = 0; c < comps.size(); ++c) V[c] = (long)comps[c].size();
        for (const auto& e : es_) E[comp_of[e.u]]++;
        for (const auto& f : faces_) F[comp_of[f[0]]]++;
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (V[c] - E[c] + F[c] != 2) return false;
        return true;
    }

private:
    mutable std::vector<Vertex> vs_;
    std::vector<Edge> es_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> faces_;
    bool planar_ = false;
    mutable bool bip_checked_ = false, bip_ = false;
};

// ---- dual graph builders ------------------------------------------------

inline std::string tri_label(int r, int c) { return std::to_string(r) + "," + std::to_string(c); }

// Vertices are the triangles; UP cells are black. True centroid coordinates
// (char width 1/2) so the rotation system is geometric.
inline PlaneGraph dual_graph(const TriRegion& region) {
    PlaneGraph g;
    std::map<std::pair<int, int>, int> id;
    for (const auto& c : region.cells()) {
        Rat x = Rat(c.col, 2);
        Rat y = -Rat(c.row) - (c.orient == Orient::UP ? Rat(1, 3) : Rat(2, 3));
        id[{c.row, c.col}] = g.add_vertex(tri_label(c.row, c.col),
                                          c.orient == Orient::UP ? 0 : 1, x, y);
    }
    for (const auto& c : region.cells()) {
        if (c.orient != Orient::UP) continue;
        for (auto [dr, dc] : {std::pair{0, -1}, {0, 1}, {1, 0}}) {
            if (region.contains(c.row + dr, c.col + dc, Orient::DOWN))
                g.add_edge(id[{c.row, c.col}], id[{c.row + dr, c.col + dc}]);
        }
    }
    if (!g.vertex_count()) return g;
    g.build_embedding();
    return g;
}

inline PlaneGraph dual_graph(const SquareRegion& region) {
    PlaneGraph g;
    std::map<std::pair<int, int>, int> id;
    for (const auto& c : region.cells())
        id[{c.row, c.col}] = g.add_vertex(tri_label(c.row, c.col), SquareRegion::color(c),
                                          Rat(c.col), -Rat(c.row));
    for (const auto& c : region.cells()) {
        if (region.contains(c.row, c.col + 1)) g.add_edge(id[{c.row, c.col}], id[{c.row, c.col + 1}]);
        if (region.contains(c.row + 1, c.col)) g.add_edge(id[{c.row, c.col}], id[{c.row + 1, c.col}]);
    }
    if (!g.vertex_count()) return g;
    g.build_embedding();
    return g;
}

// Edges and faces exactly as declared. Planar sign assignment is possible only
// when faces were supplied; otherwise the graph is usable by the permanent and
// brute-force engines only.
inline PlaneGraph dual_graph(const CellComplex& cx) {
    PlaneGraph g;
    std::map<std::string, int> id;
    for (const auto& c : cx.cells) id[c.id] = g.add_vertex(c.id, c.color);
    for (const auto& e : cx.edges) g.add_edge(id.at(e.a), id.at(e.b), e.weight);
    if (!cx.faces.empty()) {
        std::vector<std::vector<int>> faces;
        for (const auto& f : cx.faces) {
            std::vector<int> face;
            for (const auto& s : f) face.push_back(id.at(s));
            faces.push_back(std::move(face));
        }
        g.set_faces(std::move(faces));
    }
    return g;
}

}  // namespace dimerlab
