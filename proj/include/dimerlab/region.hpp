#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

struct ParseError : std::runtime_error {
    int row, col;
    ParseError(const std::string& what, int r, int c)
        : std::runtime_error(what + " at row " + std::to_string(r) + ", column " + std::to_string(c)),
          row(r), col(c) {}
};

enum class Orient { UP, DOWN };  // UP = 'A', DOWN = 'V'

struct TriCell {
    int row, col;
    Orient orient;
    auto operator<=>(const TriCell&) const = default;
};

// Region on the triangular lattice. Absolute character columns define adjacency:
// an UP cell at (r,c) touches DOWN cells at (r,c-1), (r,c+1) and (r+1,c).
class TriRegion {
public:
    TriRegion() {}
    explicit TriRegion(std::set<TriCell> cells) : cells_(std::move(cells)) {}

    const std::set<TriCell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    bool contains(int r, int c, Orient o) const { return cells_.count({r, c, o}) > 0; }

    std::size_t up_count() const {
        std::size_t n = 0;
        for (const auto& c : cells_) n += c.orient == Orient::UP;
        return n;
    }

    TriRegion without(const std::vector<std::pair<int, int>>& holes) const {
        std::set<TriCell> out;
        for (const auto& c : cells_) {
            bool drop = false;
            for (auto& h : holes) drop |= (c.row == h.first && c.col == h.second);
            if (!drop) out.insert(c);
        }
        return TriRegion(std::move(out));
    }

    // Translate so the minimum occupied row and column are zero.
    TriRegion normalized() const {
        if (cells_.empty()) return {};
        int rmin = cells_.begin()->row, cmin = cells_.begin()->col;
        for (const auto& c : cells_) { rmin = std::min(rmin, c.row); cmin = std::min(cmin, c.col); }
        std::set<TriCell> out;
        for (const auto& c : cells_) out.insert({c.row - rmin, c.col - cmin, c.orient});
        return TriRegion(std::move(out));
    }

    std::string serialize() const {
        TriRegion n = normalized();
        if (n.cells_.empty()) return "";
        int rmax = 0, cmax = 0;
        for (const auto& c : n.cells_) { rmax = std::max(rmax, c.row); cmax = std::max(cmax, c.col); }
        std::vector<std::string> grid(rmax + 1, std::string(cmax + 1, ' '));
        for (const auto& c : n.cells_) grid[c.row][c.col] = c.orient == Orient::UP ? 'A' : 'V';
        std::ostringstream os;
        for (auto& line : grid) {
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << "\n";
        }
        return os.str();
    }

private:
    std::set<TriCell> cells_;
};

struct SqCell {
    int row, col;
    auto operator<=>(const SqCell&) const = default;
};

// Region on the square lattice; color(cell) = (row + col) mod 2.
class SquareRegion {
public:
    SquareRegion() {}
    explicit SquareRegion(std::set<SqCell> cells) : cells_(std::move(cells)) {}

    const std::set<SqCell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    bool contains(int r, int c) const { return cells_.count({r, c}) > 0; }
    static int color(const SqCell& c) { return ((c.row + c.col) % 2 + 2) % 2; }

    std::size_t color_count(int col) const {
        std::size_t n = 0;
        for (const auto& c : cells_) n += color(c) == col;
        return n;
    }

    SquareRegion without(const std::vector<std::pair<int, int>>& holes) const {
        std::set<SqCell> out;
        for (const auto& c : cells_) {
            bool drop = false;
            for (auto& h : holes) drop |= (c.row == h.first && c.col == h.second);
            if (!drop) out.insert(c);
        }
        return SquareRegion(std::move(out));
    }

    SquareRegion normalized() const {
        if (cells_.empty()) return {};
        int rmin = cells_.begin()->row, cmin = cells_.begin()->col;
        for (const auto& c : cells_) { rmin = std::min(rmin, c.row); cmin = std::min(cmin, c.col); }
        // keep the checkerboard coloring intact under translation
        if ((rmin + cmin) % 2 != 0) --cmin;
        std::set<SqCell> out;
        for (const auto& c : cells_) out.insert({c.row - rmin, c.col - cmin});
        return SquareRegion(std::move(out));
    }

    std::string serialize() const {
        SquareRegion n = normalized();
        if (n.cells_.empty()) return "";
        int rmax = 0, cmax = 0;
        for (const auto& c : n.cells_) { rmax = std::max(rmax, c.row); cmax = std::max(cmax, c.col); }
        std::vector<std::string> grid(rmax + 1, std::string(cmax + 1, ' '));
        for (const auto& c : n.cells_) grid[c.row][c.col] = 'X';
        std::ostringstream os;
        for (auto& line : grid) {
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << "\n";
        }
        return os.str();
    }

private:
    std::set<SqCell> cells_;
};

// One cell per non-space character at its absolute (row, column); 'A' = UP, 'V' = DOWN.
inline TriRegion parse_tri_region(const std::string& text) {
    std::set<TriCell> cells;
    int row = 0, col = 0;
    for (char ch : text) {
        switch (ch) {
            case 'A': cells.insert({row, col, Orient::UP}); ++col; break;
            case 'V': cells.insert({row, col, Orient::DOWN}); ++col; break;
            case ' ': ++col; break;
            case '\n': ++row; col = 0; break;
            case '\r': break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", row, col);
        }
    }
    return TriRegion(std::move(cells));
}

inline SquareRegion parse_square_region(const std::string& text) {
    std::set<SqCell> cells;
    int row = 0, col = 0;
    for (char ch : text) {
        switch (ch) {
            case 'X': cells.insert({row, col}); ++col; break;
            case ' ': ++col; break;
            case '\n': ++row; col = 0; break;
            case '\r': break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", row, col);
        }
    }
    return SquareRegion(std::move(cells));
}

}  // namespace dimerlab
