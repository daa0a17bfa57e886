#pragma once

#include "dimerlab/families.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/matrix.hpp"
#include "dimerlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dimerlab {

// MacMahon's boxed-plane-partition product, accumulated as an exact rational;
// integrality is asserted at the end.
inline Int macmahon(const HexagonSpec& sp) {
    if (sp.a < 1 || sp.b < 1 || sp.c < 1) throw std::invalid_argument("macmahon: sides must be >= 1");
    Rat p = 1;
    for (long i = 0; i < sp.a; ++i)
        for (long j = 0; j < sp.b; ++j)
            for (long k = 0; k < sp.c; ++k) p *= Rat(i + j + k + 2, i + j + k + 1);
    if (den(p) != 1) throw std::logic_error("macmahon: product is not an integer");
    return num(p);
}

// P(edge in a uniform random matching), exact. Deletion method:
// |det K with the edge's row and column removed| / |det K|; cross-checked
// against the inverse-Kasteleyn entry |K[b,w] * K^-1[w,b]| on the same gauge.
inline Rat edge_probability(const PlaneGraph& g, int u, int v) {
    if (!g.find_edge(u, v)) throw std::invalid_argument("edge_probability: no such edge");
    if (g.planar() && g.bipartite()) {
        KasteleynMatrix k = sign_assignment(g);
        if (k.rows() != k.cols() || k.rows() == 0)
            throw std::domain_error("edge_probability: graph has no perfect matching");
        Int den_all;
        IntMatrix m = k.int_matrix(den_all);
        Int d = det_bareiss(m);
        if (d == 0) throw std::domain_error("edge_probability: graph has no perfect matching");
        if (d < 0) d = -d;
        int b = g.vertex(u).color == 0 ? u : v;
        int w = u + v - b;
        std::size_t row = std::lower_bound(k.blacks.begin(), k.blacks.end(), b) - k.blacks.begin();
        std::size_t col = std::lower_bound(k.whites.begin(), k.whites.end(), w) - k.whites.begin();
        Int dm = det_bareiss(m.minor_matrix(row, col));
        if (dm < 0) dm = -dm;
        // the cleared-denominator matrix scales Z(G) by den^n and the minor by den^(n-1)
        Rat p_del = Rat(dm) * Rat(den_all) / Rat(d) * g.edge(*g.find_edge(u, v)).weight;
        RationalMatrix inv = inverse_rational(m);
        Rat p_inv = Rat(m.at(row, col)) * inv.at(col, row);
        if (p_inv < 0) p_inv = -p_inv;
        if (p_del != p_inv)
            throw std::logic_error("edge_probability: deletion and inverse methods disagree");
        return p_del;
    }
    // general graphs: recount with the endpoints deleted
    Rat total = matching_sum(g);
    if (total == 0) throw std::domain_error("edge_probability: graph has no perfect matching");
    Rat without = matching_sum(g.without_vertices({u, v}));
    return without * g.edge(*g.find_edge(u, v)).weight / total;
}

struct MomentEntry {
    std::pair<int, int> up_cell;    // (row, col) of the UP triangle of the vertical pair
    Rat probability;
    long x, y;                      // figure coordinates, centered at 0
};

struct MomentReport {
    std::vector<MomentEntry> table;  // sorted by (y, x): the printed arrangement
    Rat vertical;                    // sum p * x^2
    Rat horizontal;                  // sum p * y^2
};

// Horizontal-edge probabilities of the n,n,n hexagon, with gaps between
// triangle rows as x (2n-1 columns) and character columns as y (4n-1 rows).
inline MomentReport moments_of_inertia(long n) {
    if (n < 1) throw std::invalid_argument("moments_of_inertia: n must be >= 1");
    TriRegion region = hexagon({n, n, n});
    PlaneGraph g = dual_graph(region);
    KasteleynMatrix k = sign_assignment(g);
    Int den_all;
    IntMatrix m = k.int_matrix(den_all);
    RationalMatrix inv = inverse_rational(m);
    std::map<int, std::size_t> brow, wcol;
    for (std::size_t i = 0; i < k.blacks.size(); ++i) brow[k.blacks[i]] = i;
    for (std::size_t j = 0; j < k.whites.size(); ++j) wcol[k.whites[j]] = j;
    MomentReport rep;
    rep.vertical = rep.horizontal = 0;
    for (const auto& c : region.cells()) {
        if (c.orient != Orient::UP || !region.contains(c.row + 1, c.col, Orient::DOWN)) continue;
        int b = *g.find_vertex(tri_label(c.row, c.col));
        int w = *g.find_vertex(tri_label(c.row + 1, c.col));
        std::size_t i = brow.at(b), j = wcol.at(w);
        Rat p = Rat(m.at(i, j)) * inv.at(j, i);
        if (p < 0) p = -p;
        MomentEntry e;
        e.up_cell = {c.row, c.col};
        e.probability = p;
        e.x = c.row - (n - 1);        // gap index, centered
        e.y = c.col - (2 * n - 1);    // column, centered
        rep.vertical += p * e.x * e.x;
        rep.horizontal += p * e.y * e.y;
        rep.table.push_back(std::move(e));
    }
    std::sort(rep.table.begin(), rep.table.end(),
              [](const MomentEntry& a, const MomentEntry& b) {
                  return std::pair(a.y, a.x) < std::pair(b.y, b.x);
              });
    return rep;
}

// Kasteleyn matrix of the order-n Aztec diamond with the alternating vertical
// sign rule: vertical edge below (r,c) gets -1 iff r+c is even, horizontals +1.
inline IntMatrix aztec_kasteleyn_alternating(long n) {
    SquareRegion reg = aztec({AztecKind::DIAMOND, n});
    std::vector<SqCell> blacks, whites;
    for (const auto& c : reg.cells()) (SquareRegion::color(c) == 0 ? blacks : whites).push_back(c);
    std::map<SqCell, std::size_t> brow, wcol;
    for (std::size_t i = 0; i < blacks.size(); ++i) brow[blacks[i]] = i;
    for (std::size_t j = 0; j < whites.size(); ++j) wcol[whites[j]] = j;
    IntMatrix m(blacks.size(), whites.size());
    for (const auto& c : reg.cells()) {
        for (auto [dr, dc] : {std::pair{0, 1}, {1, 0}}) {
            SqCell d{c.row + dr, c.col + dc};
            if (!reg.contains(d.row, d.col)) continue;
            const SqCell& b = SquareRegion::color(c) == 0 ? c : d;
            const SqCell& w = SquareRegion::color(c) == 0 ? d : c;
            int sign = dr == 1 ? ((c.row + c.col) % 2 == 0 ? -1 : 1) : 1;
            m.at(brow.at(b), wcol.at(w)) = sign;
        }
    }
    return m;
}

// Problem-12 sum of the entries of K_n^-1, plus the conjectured closed form.
struct InverseEntrySum {
    Rat sum;
    Rat closed_form;  // (n-1)(n+3)/2 - 2^(n-1) + 2
};

inline InverseEntrySum inverse_entry_sum(long n) {
    if (n < 1) throw std::invalid_argument("inverse_entry_sum: n must be >= 1");
    IntMatrix k = aztec_kasteleyn_alternating(n);
    RationalMatrix inv = inverse_rational(k);
    InverseEntrySum out;
    out.sum = inv.entry_sum();
    out.closed_form = Rat((n - 1) * (n + 3), 2) - Rat(pow_int(2, (unsigned long)(n - 1))) + 2;
    return out;
}

// ---- sequence fitting -----------------------------------------------------

enum class FitKind { POLYNOMIAL, RECURRENCE, NONE };

struct SequenceFit {
    FitKind kind = FitKind::NONE;
    RatPolynomial polynomial;          // POLYNOMIAL
    std::vector<Int> recurrence;       // RECURRENCE: c_k = r[0] c_{k-1} + ... + r[m-1] c_{k-m}
    long degree_or_order = -1;
    long validated = 0;                // held-out terms matched
};

// Minimal-degree interpolating polynomial through a prefix of the points,
// accepted only when it also reproduces at least two held-out points.
inline SequenceFit fit_polynomial(const std::vector<std::pair<Int, Int>>& points) {
    if (points.size() < 4)
        throw std::invalid_argument("fit_polynomial: need at least 4 points (2 for validation)");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("fit_polynomial: duplicate abscissa");
    SequenceFit fit;
    for (std::size_t use = 1; use + 2 <= points.size(); ++use) {
        // Newton interpolation through the first `use` points
        std::vector<Rat> xs;
        for (std::size_t i = 0; i < use; ++i) xs.push_back(Rat(points[i].first));
        std::vector<Rat> table;
        for (std::size_t i = 0; i < use; ++i) table.push_back(Rat(points[i].second));
        std::vector<Rat> newton{table[0]};
        for (std::size_t lvl = 1; lvl < use; ++lvl) {
            for (std::size_t i = 0; i + lvl < use; ++i)
                table[i] = (table[i + 1] - table[i]) / (xs[i + lvl] - xs[i]);
            table.resize(use - lvl);
            newton.push_back(table[0]);
        }
        RatPolynomial poly(std::vector<Rat>{newton[use - 1]});
        for (std::size_t i = use - 1; i-- > 0;) {
            poly = poly * RatPolynomial(std::vector<Rat>{-xs[i], 1});
            poly = poly + RatPolynomial(std::vector<Rat>{newton[i]});
        }
        long held = 0;
        bool all = true;
        for (std::size_t i = use; i < points.size(); ++i) {
            if (poly.eval(Rat(points[i].first)) == Rat(points[i].second)) ++held;
            else { all = false; break; }
        }
        if (all && held >= 2) {
            fit.kind = FitKind::POLYNOMIAL;
            fit.polynomial = poly;
            fit.degree_or_order = poly.degree();
            fit.validated = held;
            return fit;
        }
    }
    return fit;  // NONE
}

// Shortest integer linear recurrence reproducing every term, with at least two
// held-out validations. Exact rational elimination on the Hankel system.
inline SequenceFit fit_recurrence(const std::vector<Int>& terms, long max_order = 6) {
    SequenceFit fit;
    for (long m = 1; m <= max_order; ++m) {
        if ((long)terms.size() < 2 * m + 2) break;
        // solve sum_j a_j * t_{k-1-j} = t_k for k = m .. 2m-1 (m equations)
        std::vector<std::vector<Rat>> sys;
        for (long k = m; k < 2 * m; ++k) {
            std::vector<Rat> row;
            for (long j = 0; j < m; ++j) row.push_back(Rat(terms[k - 1 - j]));
            row.push_back(Rat(terms[k]));
            sys.push_back(row);
        }
        // Gaussian elimination
        std::vector<long> where(m, -1);
        long rank = 0;
        for (long col = 0; col < m && rank < (long)sys.size(); ++col) {
            long piv = -1;
            for (long r = rank; r < (long)sys.size(); ++r)
                if (sys[r][col] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(sys[rank], sys[piv]);
            Rat d = sys[rank][col];
            for (auto& x : sys[rank]) x /= d;
            for (long r = 0; r < (long)sys.size(); ++r) {
                if (r == rank || sys[r][col] == 0) continue;
                Rat f = sys[r][col];
                for (long c2 = 0; c2 <= m; ++c2) sys[r][c2] -= f * sys[rank][c2];
            }
            where[col] = rank;
            ++rank;
        }
        bool consistent = true;
        for (long r = rank; r < (long)sys.size(); ++r)
            if (sys[r][m] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rat> a(m, 0);  // free variables zero: lexicographically smallest
        for (long col = 0; col < m; ++col)
            if (where[col] >= 0) a[col] = sys[where[col]][m];
        bool integral = true;
        for (auto& x : a) integral &= den(x) == 1;
        if (!integral) continue;
        // verify on all terms; count held-out matches beyond the fitted window
        bool ok = true;
        long held = 0;
        for (long k = m; k < (long)terms.size(); ++k) {
            Rat s = 0;
            for (long j = 0; j < m; ++j) s += a[j] * Rat(terms[k - 1 - j]);
            if (s != Rat(terms[k])) { ok = false; break; }
            if (k >= 2 * m) ++held;
        }
        if (ok && held >= 2) {
            fit.kind = FitKind::RECURRENCE;
            for (auto& x : a) fit.recurrence.push_back(num(x));
            fit.degree_or_order = m;
            fit.validated = held;
            return fit;
        }
    }
    return fit;  // NONE
}

// Rewrites p(x) in t = x + w/4 and reports whether all odd-degree terms vanish.
inline bool window_evenness(const RatPolynomial& poly, long w) {
    RatPolynomial q = poly.shift(Rat(-w, 4));  // p(t - w/4)
    for (long k = 1; k <= q.degree(); k += 2)
        if (q.coeff((std::size_t)k) != 0) return false;
    return true;
}

}  // namespace dimerlab
