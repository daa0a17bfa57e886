#pragma once

#include "dimerlab/numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

// Variables are x1..x_{n-1}, y1..y_{m-1}; exponents are stored doubled so that
// the sqrt(x_j) half-steps of dimer weights stay integral.
struct WVar {
    char kind;  // 'x' or 'y'
    int index;
    auto operator<=>(const WVar&) const = default;
};

using Monomial = std::vector<std::pair<WVar, int>>;  // sorted by variable, doubled exponents

class WeightPolynomial {
public:
    using Terms = std::map<Monomial, Int>;

    WeightPolynomial() {}
    explicit WeightPolynomial(Terms t) : terms_(std::move(t)) { prune(); }

    static WeightPolynomial one() {
        Terms t;
        t[{}] = 1;
        return WeightPolynomial(std::move(t));
    }
    static WeightPolynomial variable(char kind, int index, int doubled_exp = 2) {
        Terms t;
        t[{{WVar{kind, index}, doubled_exp}}] = 1;
        return WeightPolynomial(std::move(t));
    }

    const Terms& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t monomial_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Int& coeff) {
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_[m] = coeff;
        else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeightPolynomial operator+(const WeightPolynomial& o) const {
        WeightPolynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    WeightPolynomial operator*(const WeightPolynomial& o) const {
        WeightPolynomial r;
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) {
                Monomial m;
                std::size_t i = 0, j = 0;
                while (i < ma.size() || j < mb.size()) {
                    if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first))
                        m.push_back(ma[i++]);
                    else if (i == ma.size() || mb[j].first < ma[i].first)
                        m.push_back(mb[j++]);
                    else {
                        m.push_back({ma[i].first, ma[i].second + mb[j].second});
                        ++i; ++j;
                    }
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }

    bool operator==(const WeightPolynomial& o) const { return terms_ == o.terms_; }

    bool all_exponents_even() const {
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m)
                if (e % 2) return false;
        return true;
    }

    // drop every monomial that mentions an even-indexed variable
    WeightPolynomial drop_even_indices() const {
        WeightPolynomial r;
        for (auto& [m, c] : terms_) {
            bool keep = true;
            for (auto& [v, e] : m) keep &= v.index % 2 == 1;
            if (keep) r.add_term(m, c);
        }
        return r;
    }

    // setting every variable to 1
    Int value_at_ones() const {
        Int s = 0;
        for (auto& [m, c] : terms_) s += c;
        return s;
    }

    // canonical sorted monomial rendering, e.g. "x1*x3 + x1*y1 + y1^2"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::ostringstream mono;
            bool mfirst = true;
            for (auto& [v, e] : m) {
                if (e % 2 != 0) throw std::logic_error("WeightPolynomial: half-integer exponent");
                if (!mfirst) mono << "*";
                mfirst = false;
                mono << v.kind << v.index;
                if (e / 2 != 1) mono << "^" << e / 2;
            }
            if (m.empty()) os << c.str();
            else if (c == 1) os << mono.str();
            else os << c.str() << "*" << mono.str();
        }
        return os.str();
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    Terms terms_;
};

struct RectangleSpec {
    long m, n;  // rows, columns; both even
};

// Sum over dimer coverings of the m x n rectangle: a horizontal domino in
// columns j,j+1 weighs sqrt(x_j), a vertical one in rows i,i+1 weighs sqrt(y_i).
inline WeightPolynomial dimer_polynomial(const RectangleSpec& sp) {
    const long m = sp.m, n = sp.n;
    if (m < 2 || n < 2 || m % 2 || n % 2)
        throw std::invalid_argument("dimer_polynomial: rows and columns must be even and positive");
    if (m * n > 40) throw std::invalid_argument("dimer_polynomial: more than 40 cells");
    WeightPolynomial poly;
    std::vector<char> used((std::size_t)(m * n), 0);
    Monomial mono;
    auto bump = [&](char kind, int index, int delta) {
        WVar v{kind, index};
        auto it = std::lower_bound(mono.begin(), mono.end(), v,
                                   [](const auto& p, const WVar& q) { return p.first < q; });
        if (it != mono.end() && it->first == v) {
            it->second += delta;
            if (it->second == 0) mono.erase(it);
        } else {
            mono.insert(it, {v, delta});
        }
    };
    std::function<void()> rec = [&]() {
        long cell = -1;
        for (long i = 0; i < m * n; ++i)
            if (!used[(std::size_t)i]) { cell = i; break; }
        if (cell < 0) {
            poly.add_term(mono, 1);
            return;
        }
        long r = cell / n, c = cell % n;
        used[(std::size_t)cell] = 1;
        if (c + 1 < n && !used[(std::size_t)(cell + 1)]) {
            used[(std::size_t)(cell + 1)] = 1;
            bump('x', (int)c + 1, 1);
            rec();
            bump('x', (int)c + 1, -1);
            used[(std::size_t)(cell + 1)] = 0;
        }
        if (r + 1 < m && !used[(std::size_t)(cell + n)]) {
            used[(std::size_t)(cell + n)] = 1;
            bump('y', (int)r + 1, 1);
            rec();
            bump('y', (int)r + 1, -1);
            used[(std::size_t)(cell + n)] = 0;
        }
        used[(std::size_t)cell] = 0;
    };
    rec();
    if (!poly.all_exponents_even())
        throw std::logic_error("dimer_polynomial: odd exponent survived; weights must square up");
    return poly;
}

// Dimer tableaux of the m/2 x n/2 rectangle: split by a monotone lattice path
// from the lower-left to the upper-right corner; fill the upper-left part from
// 1..n-1 with row rule i < j-1 and column rule i <= j+1 (weights x), the
// lower-right part from 1..m-1 with the reversed rules (weights y).
inline WeightPolynomial tableaux_polynomial(const RectangleSpec& sp) {
    const long m = sp.m, n = sp.n;
    if (m < 2 || n < 2 || m % 2 || n % 2)
        throw std::invalid_argument("tableaux_polynomial: rows and columns must be even and positive");
    const long M = m / 2, N = n / 2;
    if (M * N > 30) throw std::invalid_argument("tableaux_polynomial: more than 30 cells");
    WeightPolynomial poly;
    // path = nondecreasing heights f[0..N-1] in 0..M; cell (col c, height b) is
    // lower-right iff b < f[c]
    std::vector<long> f(N, 0);
    std::vector<std::vector<int>> entry(N, std::vector<int>(M, 0));
    Monomial mono;
    auto bump = [&](char kind, int index, int delta) {
        WVar v{kind, index};
        auto it = std::lower_bound(mono.begin(), mono.end(), v,
                                   [](const auto& p, const WVar& q) { return p.first < q; });
        if (it != mono.end() && it->first == v) {
            it->second += delta;
            if (it->second == 0) mono.erase(it);
        } else {
            mono.insert(it, {v, delta});
        }
    };
    // fill cells in scan order: top row (b = M-1) to bottom, left to right;
    // this visits each cell after its left and upper neighbours
    std::vector<std::pair<long, long>> scan;  // (c, b)
    for (long b = M - 1; b >= 0; --b)
        for (long c = 0; c < N; ++c) scan.push_back({c, b});
    std::function<void(std::size_t)> fill = [&](std::size_t at) {
        if (at == scan.size()) {
            poly.add_term(mono, 1);
            return;
        }
        auto [c, b] = scan[at];
        bool lower_right = b < f[c];
        long maxv = lower_right ? m - 1 : n - 1;
        char kind = lower_right ? 'y' : 'x';
        for (int v = 1; v <= maxv; ++v) {
            if (c > 0 && (b < f[c - 1]) == lower_right) {
                int left = entry[c - 1][b];
                if (lower_right ? !(left <= v + 1) : !(left < v - 1)) continue;
            }
            if (b + 1 < M && (b + 1 < f[c]) == lower_right) {
                int above = entry[c][b + 1];
                if (lower_right ? !(above < v - 1) : !(above <= v + 1)) continue;
            }
            entry[c][b] = v;
            bump(kind, v, 2);
            fill(at + 1);
            bump(kind, v, -2);
            entry[c][b] = 0;
        }
    };
    std::function<void(long, long)> paths = [&](long c, long last) {
        if (c == N) {
            fill(0);
            return;
        }
        for (long v = last; v <= M; ++v) {
            f[c] = v;
            paths(c + 1, v);
        }
        f[c] = 0;
    };
    paths(0, 0);
    return poly;
}

struct GesselVerdict {
    bool equal;
    // monomials present with different coefficients; (rendered monomial, dimer coeff, tableaux coeff)
    std::vector<std::tuple<std::string, Int, Int>> differences;
};

inline GesselVerdict gessel_check(const RectangleSpec& sp) {
    WeightPolynomial d = dimer_polynomial(sp);
    WeightPolynomial t = tableaux_polynomial(sp);
    GesselVerdict v{d == t, {}};
    if (!v.equal) {
        auto render = [](const Monomial& m) {
            WeightPolynomial::Terms terms;
            terms[m] = 1;
            return WeightPolynomial(std::move(terms)).str();
        };
        for (auto& [m, c] : d.terms()) {
            auto it = t.terms().find(m);
            Int tc = it == t.terms().end() ? Int(0) : it->second;
            if (tc != c) v.differences.push_back({render(m), c, tc});
        }
        for (auto& [m, c] : t.terms())
            if (!d.terms().count(m)) v.differences.push_back({render(m), 0, c});
    }
    return v;
}

// Note-(2) specialization: kill even-indexed variables on the dimer side and
// compare with prod over odd i,j of (x_i + y_j).
inline GesselVerdict schur_specialization_check(const RectangleSpec& sp) {
    WeightPolynomial lhs = dimer_polynomial(sp).drop_even_indices();
    WeightPolynomial rhs = WeightPolynomial::one();
    for (long i = 1; i <= sp.n - 1; i += 2)
        for (long j = 1; j <= sp.m - 1; j += 2)
            rhs = rhs * (WeightPolynomial::variable('x', (int)i) + WeightPolynomial::variable('y', (int)j));
    GesselVerdict v{lhs == rhs, {}};
    if (!v.equal) {
        auto render = [](const Monomial& m) {
            WeightPolynomial::Terms terms;
            terms[m] = 1;
            return WeightPolynomial(std::move(terms)).str();
        };
        for (auto& [m, c] : lhs.terms()) {
            auto it = rhs.terms().find(m);
            Int rc = it == rhs.terms().end() ? Int(0) : it->second;
            if (rc != c) v.differences.push_back({render(m), c, rc});
        }
        for (auto& [m, c] : rhs.terms())
            if (!lhs.terms().count(m)) v.differences.push_back({render(m), 0, c});
    }
    return v;
}

}  // namespace dimerlab
