#pragma once

#include "dimerlab/cellcomplex.hpp"
#include "dimerlab/numeric.hpp"
#include "dimerlab/planegraph.hpp"
#include "dimerlab/region.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace dimerlab {

struct HexagonSpec {
    long a, b, c;
};

// Hexagon with the given six side lengths in lattice steps, in the order
// bottom, lower-right, upper-right, top, upper-left, lower-left. Cells are the
// unit triangles strictly inside; char column = 2i + j (+1 for DOWN) so the
// rendering matches the usual A/V pictures.
inline TriRegion hexagon_sides(const std::array<long, 6>& s) {
    for (long v : s)
        if (v < 0) throw std::invalid_argument("hexagon_sides: negative side");
    if (s[1] + s[2] != s[4] + s[5] || 2 * (s[0] - s[3]) + (s[1] - s[2] - s[4] + s[5]) != 0)
        throw std::invalid_argument("hexagon_sides: sides do not close up");
    // lattice point (i,j) sits at (i + j/2, j); doubled coordinates keep it exact
    std::vector<std::pair<long, long>> poly;  // (2x, y)
    long x2 = 0, y = 0;
    const long dir[6][2] = {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};
    for (int k = 0; k < 6; ++k) {
        poly.push_back({x2, y});
        x2 += dir[k][0] * s[k];
        y += dir[k][1] * s[k];
    }
    auto inside = [&](long x6, long y3) {
        // point (x6/6, y3/3), polygon vertices (x2/2, y); strictly inside, ccw
        for (int k = 0; k < 6; ++k) {
            auto [px, py] = poly[k];
            auto [qx, qy] = poly[(k + 1) % 6];
            long long ax = (long long)(qx - px) * 3;  // edge vector and point offset,
            long long ay = (long long)(qy - py) * 6;  // both scaled by 6
            long long bx = (long long)x6 - 3 * px;
            long long by = (long long)2 * y3 - 6 * py;
            if (ax * by - ay * bx <= 0) return false;
        }
        return true;
    };
    long ymax = s[1] + s[2];
    std::set<TriCell> cells;
    long ilo = -(s[4] + s[5]) - 1, ihi = s[0] + s[1] + 1;
    for (long j = 0; j < ymax; ++j) {
        for (long i = ilo; i <= ihi; ++i) {
            // UP centroid: corners (i,j),(i+1,j),(i,j+1) -> ((6i+3j+3)/6, j+1/3)
            if (inside(6 * i + 3 * j + 3, 3 * j + 1)) {
                long r = (ymax - 1) - j, c = 2 * i + j;
                cells.insert({(int)r, (int)c, Orient::UP});
            }
            // DOWN centroid: corners (i+1,j),(i,j+1),(i+1,j+1) -> ((6i+3j+6)/6, j+2/3)
            if (inside(6 * i + 3 * j + 6, 3 * j + 2)) {
                long r = (ymax - 1) - j, c = 2 * i + j + 1;
                cells.insert({(int)r, (int)c, Orient::DOWN});
            }
        }
    }
    return TriRegion(std::move(cells)).normalized();
}

inline TriRegion hexagon(const HexagonSpec& sp) {
    if (sp.a < 1 || sp.b < 1 || sp.c < 1) throw std::invalid_argument("hexagon: sides must be >= 1");
    return hexagon_sides({sp.a, sp.b, sp.c, sp.a, sp.b, sp.c});
}

namespace detail {

// squared distance (x6) from a cell centroid to the region centroid, for
// deterministic "innermost cell" selection
struct TriCentroid {
    Rat cx, cy;
    explicit TriCentroid(const TriRegion& r) {
        Rat sx = 0, sy = 0;
        for (const auto& c : r.cells()) {
            sx += Rat(c.col, 2);
            sy += -Rat(c.row) - (c.orient == Orient::UP ? Rat(1, 3) : Rat(2, 3));
        }
        cx = sx / (long)r.size();
        cy = sy / (long)r.size();
    }
    Rat dist2(const TriCell& c) const {
        Rat x = Rat(c.col, 2) - cx;
        Rat y = -Rat(c.row) - (c.orient == Orient::UP ? Rat(1, 3) : Rat(2, 3)) - cy;
        return x * x + y * y;
    }
};

inline TriCell central_cell(const TriRegion& r, Orient orient) {
    TriCentroid ctr(r);
    const TriCell* best = nullptr;
    Rat bd = 0;
    for (const auto& c : r.cells()) {
        if (c.orient != orient) continue;
        Rat d = ctr.dist2(c);
        if (!best || d < bd) { best = &c; bd = d; }
    }
    if (!best) throw std::logic_error("central_cell: no cell of the requested orientation");
    return *best;
}

}  // namespace detail

enum class HoleyKind {
    CENTRAL_TRIANGLE,   // n,n+1,... alternating hexagon minus its central triangle
    THREE_SIDES,        // 2n,2n+3 hexagon minus the middle triangle of each long side
    OPPOSITE_PAIR,      // n,n,n hexagon minus the opposite central UP/DOWN pair
    ADJACENT_PAIR,      // n,n,n hexagon minus an adjacent central UP/DOWN pair
    CENTRAL_EDGE_HEX,   // plain 2n-1,2n,2n-1 hexagon (host of the central-edge law)
};

struct HoleyResult {
    TriRegion region;
    std::vector<std::pair<int, int>> removed;  // (row,col) of the removed cells
};

inline HoleyResult holey_hexagon(HoleyKind kind, long n) {
    if (n < 1) throw std::invalid_argument("holey_hexagon: n must be >= 1");
    switch (kind) {
        case HoleyKind::CENTRAL_TRIANGLE: {
            TriRegion host = hexagon_sides({n, n + 1, n, n + 1, n, n + 1});
            Orient maj = 2 * host.up_count() > host.size() ? Orient::UP : Orient::DOWN;
            TriCell cc = detail::central_cell(host, maj);
            return {host.without({{cc.row, cc.col}}), {{cc.row, cc.col}}};
        }
        case HoleyKind::THREE_SIDES: {
            // bottom, upper-right and upper-left sides are the long (2n+3) ones
            TriRegion host = hexagon_sides({2 * n + 3, 2 * n, 2 * n + 3, 2 * n, 2 * n + 3, 2 * n});
            std::map<int, std::pair<int, int>> extent;  // row -> (min col, max col)
            int rmax = 0;
            for (const auto& c : host.cells()) {
                auto it = extent.find(c.row);
                if (it == extent.end()) extent[c.row] = {c.col, c.col};
                else {
                    it->second.first = std::min(it->second.first, c.col);
                    it->second.second = std::max(it->second.second, c.col);
                }
                rmax = std::max(rmax, c.row);
            }
            int rmid = (int)n + 1;  // middle of the two upper slants
            auto [lo, hi] = extent.at(rmid);
            auto [blo, bhi] = extent.at(rmax);
            int bmid = (blo + bhi) / 2;
            return {host.without({{rmid, lo}, {rmid, hi}, {rmax, bmid}}),
                    {{rmid, lo}, {rmid, hi}, {rmax, bmid}}};
        }
        case HoleyKind::OPPOSITE_PAIR:
        case HoleyKind::ADJACENT_PAIR: {
            TriRegion host = hexagon({n, n, n});
            int lo = 1 << 30, hi = -(1 << 30);
            for (const auto& c : host.cells())
                if (c.row == n - 1) { lo = std::min(lo, c.col); hi = std::max(hi, c.col); }
            int m = (lo + hi) / 2;
            int col = kind == HoleyKind::OPPOSITE_PAIR ? m : m - 1;
            std::vector<std::pair<int, int>> rm = {{(int)n - 1, col}, {(int)n, col}};
            return {host.without(rm), rm};
        }
        case HoleyKind::CENTRAL_EDGE_HEX:
            return {hexagon({2 * n - 1, 2 * n, 2 * n - 1}), {}};
    }
    throw std::logic_error("holey_hexagon: unreachable");
}

// The two innermost triangles of a hexagon: the vertical UP/DOWN pair nearest
// the centroid. Returned as ((r,c) of UP, (r+1,c) of DOWN).
inline std::pair<std::pair<int, int>, std::pair<int, int>> central_edge(const TriRegion& r) {
    detail::TriCentroid ctr(r);
    bool found = false;
    std::pair<int, int> best;
    Rat bd = 0;
    for (const auto& c : r.cells()) {
        if (c.orient != Orient::UP || !r.contains(c.row + 1, c.col, Orient::DOWN)) continue;
        Rat x = Rat(c.col, 2) - ctr.cx;
        Rat y = -Rat(c.row) - 1 - ctr.cy;  // midpoint of the shared edge
        Rat d = x * x + y * y;
        if (!found || d < bd) { found = true; bd = d; best = {c.row, c.col}; }
    }
    if (!found) throw std::logic_error("central_edge: region has no vertical pair");
    return {best, {best.first + 1, best.second}};
}

// ---- Aztec-style square-lattice families ---------------------------------

enum class AztecKind {
    DIAMOND,
    CENTER_PAIR_REMOVED,
    KNIGHT_PAIR_REMOVED,
    RECT_CENTER_HOLE,
    RECT_ADJACENT_HOLE,
    INTRUDED_SQUARE,
    PILLOW_0MOD4,
    PILLOW_2MOD4,
    WINDOW,
};

struct AztecSpec {
    AztecKind kind = AztecKind::DIAMOND;
    long n = 1;       // order (x = inner order for WINDOW)
    long w = 0;       // WINDOW width, w = y - x, must be even
    long m = -1;      // INTRUDED_SQUARE intrusion length; defaults to n/2
};

namespace detail {

inline std::set<SqCell> diamond_cells(long n) {
    std::set<SqCell> cells;
    for (long r = 0; r < 2 * n; ++r)
        for (long c = 0; c < 2 * n; ++c)
            if (std::abs(2 * r + 1 - 2 * n) + std::abs(2 * c + 1 - 2 * n) <= 2 * n)
                cells.insert({(int)r, (int)c});
    return cells;
}

// diagonal box {|c-r| <= a, a-1 <= c+r <= a+2b-1}, normalized
inline std::set<SqCell> aztec_rectangle_cells(long a, long b) {
    std::set<SqCell> cells;
    for (long r = 0; r < a + b; ++r)
        for (long c = 0; c < a + b; ++c) {
            long u = c - r, v = c + r;
            if (-a <= u && u <= a && a - 1 <= v && v <= a + 2 * b - 1) cells.insert({(int)r, (int)c});
        }
    int rmin = 1 << 30, cmin = 1 << 30;
    for (const auto& c : cells) { rmin = std::min(rmin, c.row); cmin = std::min(cmin, c.col); }
    std::set<SqCell> out;
    for (const auto& c : cells) out.insert({c.row - rmin, c.col - cmin});
    return out;
}

}  // namespace detail

inline SquareRegion aztec(const AztecSpec& sp) {
    const long n = sp.n;
    if (n < 1) throw std::invalid_argument("aztec: order must be >= 1");
    switch (sp.kind) {
        case AztecKind::DIAMOND:
            return SquareRegion(detail::diamond_cells(n));
        case AztecKind::CENTER_PAIR_REMOVED: {
            if (n < 2) throw std::invalid_argument("aztec: CENTER_PAIR_REMOVED needs order >= 2");
            return SquareRegion(detail::diamond_cells(n))
                .without({{(int)n - 1, (int)n - 1}, {(int)n, (int)n - 1}});
        }
        case AztecKind::KNIGHT_PAIR_REMOVED: {
            if (n < 2) throw std::invalid_argument("aztec: KNIGHT_PAIR_REMOVED needs order >= 2");
            // canonical knight pair reproducing the order-5 picture: (n-2,n) and (n,n-1)
            return SquareRegion(detail::diamond_cells(n))
                .without({{(int)n - 2, (int)n}, {(int)n, (int)n - 1}});
        }
        case AztecKind::RECT_CENTER_HOLE: {
            long a = 2 * n, b = 2 * n + 1;
            long r0 = (a + b - 1) / 2;
            return SquareRegion(detail::aztec_rectangle_cells(a, b)).without({{(int)r0, (int)r0}});
        }
        case AztecKind::RECT_ADJACENT_HOLE: {
            long a = 2 * n - 1, b = 2 * n;
            long r0 = (a + b - 1) / 2;
            // the square directly above the central one
            return SquareRegion(detail::aztec_rectangle_cells(a, b)).without({{(int)r0 - 1, (int)r0}});
        }
        case AztecKind::INTRUDED_SQUARE: {
            long m = sp.m >= 0 ? sp.m : n / 2;
            if (m > n) throw std::invalid_argument("aztec: intrusion longer than the side allows");
            std::set<SqCell> cells;
            for (long r = 0; r < 2 * n; ++r)
                for (long c = 0; c < 2 * n; ++c) cells.insert({(int)r, (int)c});
            for (long r = 2 * n - m; r < 2 * n; ++r) {
                cells.erase({(int)r, (int)(2 * n - 1 - r)});
                cells.erase({(int)r, (int)(2 * n - r)});
            }
            return SquareRegion(std::move(cells));
        }
        case AztecKind::PILLOW_0MOD4:
        case AztecKind::PILLOW_2MOD4: {
            long sub = sp.kind == AztecKind::PILLOW_2MOD4 ? 2 : 0;
            std::set<SqCell> cells;
            for (long i = 0; i < n; ++i) {
                long L = 3 * (n - 1 - i);
                for (long c = L; c < L + 4 * (i + 1) - sub; ++c) cells.insert({(int)i, (int)c});
            }
            for (long j = 0; j < n; ++j)
                for (long c = j; c < j + 4 * (n - j) - sub; ++c) cells.insert({(int)(n + j), (int)c});
            return SquareRegion(std::move(cells));
        }
        case AztecKind::WINDOW: {
            if (sp.w <= 0 || sp.w % 2 != 0)
                throw std::invalid_argument("aztec: window width w must be positive and even");
            long x = n, y = n + sp.w;
            auto outer = detail::diamond_cells(y);
            long off = y - x;
            for (const auto& c : detail::diamond_cells(x)) {
                auto it = outer.find({(int)(c.row + off), (int)(c.col + off)});
                if (it == outer.end()) throw std::logic_error("aztec window: inner diamond escapes");
                outer.erase(it);
            }
            return SquareRegion(std::move(outer));
        }
    }
    throw std::logic_error("aztec: unreachable");
}

// ---- quasi-hexagons (squares sliced along every third up-diagonal) -------

// Cells are unit squares plus the two triangles of each square lying on a
// sliced diagonal (i+j = b mod 3). The a,b,c boundary is the lattice hexagon
// with corner steps a*(1,2), c*(2,1), b*(1,-1), a*(-1,-2), c*(-2,-1), b*(-1,1)
// starting from (0, b+1), in (row, col) corner coordinates.
inline CellComplex quasi_hexagon(const HexagonSpec& sp) {
    const long a = sp.a, b = sp.b, c = sp.c;
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("quasi_hexagon: sides must be >= 1");
    std::vector<std::pair<long, long>> corners;
    long I = 0, J = b + 1;
    const std::pair<long, std::pair<long, long>> steps[6] = {
        {a, {1, 2}}, {c, {2, 1}}, {b, {1, -1}}, {a, {-1, -2}}, {c, {-2, -1}}, {b, {-1, 1}}};
    for (auto& [len, d] : steps)
        for (long k = 0; k < len; ++k) {
            corners.push_back({I, J});
            I += d.first;
            J += d.second;
        }
    if (I != 0 || J != b + 1) throw std::logic_error("quasi_hexagon: boundary does not close");
    // centroid inclusion in (x,y) = (col, -row) sixths; hexagon is convex
    auto inside = [&](long x6, long y6) {
        int pos = 0, neg = 0;
        for (std::size_t k = 0; k < corners.size(); ++k) {
            auto [pi, pj] = corners[k];
            auto [qi, qj] = corners[(k + 1) % corners.size()];
            long long ax = qj - pj, ay = -(qi - pi);
            long long bx = x6 - 6 * pj, by = y6 + 6 * pi;
            long long cross = ax * by - ay * bx;
            if (cross > 0) ++pos;
            else if (cross < 0) ++neg;
            else return false;
        }
        return pos == 0 || neg == 0;
    };
    struct QCell {
        char type;  // 'S', 'U' (upper-left), 'L' (lower-right)
        long i, j;
    };
    std::vector<QCell> cells;
    for (long i = 0; i <= a + 2 * c + b; ++i)
        for (long j = 0; j <= b + 1 + 2 * a + c; ++j) {
            bool cut = ((i + j - b) % 3 + 3) % 3 == 0;
            if (cut) {
                if (inside(6 * j + 2, -(6 * i + 2))) cells.push_back({'U', i, j});
                if (inside(6 * j + 4, -(6 * i + 4))) cells.push_back({'L', i, j});
            } else {
                if (inside(6 * j + 3, -(6 * i + 3))) cells.push_back({'S', i, j});
            }
        }
    // graph with true centroids; 2-color by BFS afterwards
    PlaneGraph g;
    std::map<std::pair<long, long>, char> kinds;
    std::map<std::tuple<char, long, long>, int> id;
    auto label = [](char t, long i, long j) {
        return std::string(1, (char)std::tolower(t)) + std::to_string(i) + "_" + std::to_string(j);
    };
    for (const auto& q : cells) {
        Rat x, y;
        if (q.type == 'S') { x = Rat(2 * q.j + 1, 2); y = -Rat(2 * q.i + 1, 2); }
        else if (q.type == 'U') { x = Rat(3 * q.j + 1, 3); y = -Rat(3 * q.i + 1, 3); }
        else { x = Rat(3 * q.j + 2, 3); y = -Rat(3 * q.i + 2, 3); }
        id[{q.type, q.i, q.j}] = g.add_vertex(label(q.type, q.i, q.j), -1, x, y);
        kinds[{q.i, q.j}] = (char)(kinds[{q.i, q.j}] | (q.type == 'S' ? 1 : q.type == 'U' ? 2 : 4));
    }
    auto owner = [&](long i, long j, char tri_pref) -> std::optional<int> {
        auto it = kinds.find({i, j});
        if (it == kinds.end()) return std::nullopt;
        if (it->second & (tri_pref == 'U' ? 2 : 4)) {
            auto f = id.find({tri_pref, i, j});
            if (f != id.end()) return f->second;
        }
        auto f = id.find({'S', i, j});
        if (f != id.end()) return f->second;
        return std::nullopt;
    };
    for (const auto& [ij, mask] : kinds) {
        auto [i, j] = ij;
        auto r = owner(i, j, 'L'), rn = owner(i, j + 1, 'U');
        if (r && rn) g.add_edge(*r, *rn);
        auto bm = owner(i, j, 'L'), bn = owner(i + 1, j, 'U');
        if (bm && bn) g.add_edge(*bm, *bn);
        if ((mask & 2) && (mask & 4)) g.add_edge(id[{'U', i, j}], id[{'L', i, j}]);
    }
    if (!g.bipartite()) throw std::logic_error("quasi_hexagon: dissection dual is not 2-colorable");
    g.build_embedding();
    // export as a cell complex with faces supplied
    CellComplex cx;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        cx.cells.push_back({g.vertex((int)v).label, g.vertex((int)v).color});
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei)
        cx.edges.push_back({g.vertex(g.edge((int)ei).u).label, g.vertex(g.edge((int)ei).v).label, 1});
    for (const auto& f : g.faces()) {
        std::vector<std::string> ids;
        for (int v : f) ids.push_back(g.vertex(v).label);
        cx.faces.push_back(std::move(ids));
    }
    return cx;
}

// ---- non-bipartite / non-planar families ----------------------------------

// Triangular grid with n rows of vertices (1..n per row); all three sides of
// every small upward triangle are edges.
inline PlaneGraph triangle_graph(long n) {
    if (n < 1) throw std::invalid_argument("triangle_graph: order must be >= 1");
    PlaneGraph g;
    std::map<std::pair<long, long>, int> id;
    for (long r = 0; r < n; ++r)
        for (long c = 0; c <= r; ++c)
            id[{r, c}] = g.add_vertex(std::to_string(r) + "," + std::to_string(c), -1,
                                      Rat(2 * c - r), -Rat(r));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c <= r; ++c) {
            if (c + 1 <= r) g.add_edge(id[{r, c}], id[{r, c + 1}]);
            if (r + 1 < n) {
                g.add_edge(id[{r, c}], id[{r + 1, c}]);
                g.add_edge(id[{r, c}], id[{r + 1, c + 1}]);
            }
        }
    g.build_embedding();
    return g;
}

// Hamming cube on n-bit strings, bipartitioned by popcount parity. No embedding.
inline PlaneGraph cube_graph(long n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("cube_graph: n must be between 1 and 5 at desk scale");
    PlaneGraph g;
    const long N = 1L << n;
    for (long v = 0; v < N; ++v) {
        std::string bits;
        for (long k = n - 1; k >= 0; --k) bits += ((v >> k) & 1) ? '1' : '0';
        g.add_vertex(bits, __builtin_popcountl((unsigned long)v) % 2);
    }
    for (long v = 0; v < N; ++v)
        for (long k = 0; k < n; ++k)
            if ((v ^ (1L << k)) > v) g.add_edge((int)v, (int)(v ^ (1L << k)));
    g.mark_nonplanar();
    return g;
}

}  // namespace dimerlab
