#pragma once

#include "dimerlab/numeric.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

// Generic carrier for planar dissections that are neither lozenge nor domino shaped.
// Line-oriented text format:
//   cell <id> [black|white]
//   edge <idA> <idB> [<p>/<q>]
//   face <id1> <id2> ... <idk>     (cyclic; consecutive ids must be declared edges,
//                                   faces listed counterclockwise)
//   # comment
struct CellComplex {
    struct Cell {
        std::string id;
        int color = -1;  // 0 black, 1 white, -1 undeclared
    };
    struct Edge {
        std::string a, b;
        Rat weight = 1;
    };
    std::vector<Cell> cells;
    std::vector<Edge> edges;
    std::vector<std::vector<std::string>> faces;

    std::optional<std::size_t> cell_index(const std::string& id) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].id == id) return i;
        return std::nullopt;
    }

    bool has_edge(const std::string& a, const std::string& b) const {
        for (const auto& e : edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
        return false;
    }

    std::string serialize() const {
        std::ostringstream os;
        for (const auto& c : cells) {
            os << "cell " << c.id;
            if (c.color == 0) os << " black";
            if (c.color == 1) os << " white";
            os << "\n";
        }
        for (const auto& e : edges) {
            os << "edge " << e.a << " " << e.b;
            if (e.weight != 1) os << " " << rat_str(e.weight);
            os << "\n";
        }
        for (const auto& f : faces) {
            os << "face";
            for (const auto& id : f) os << " " << id;
            os << "\n";
        }
        return os.str();
    }
};

inline CellComplex parse_cell_complex(const std::string& text) {
    CellComplex cx;
    std::map<std::string, int> color_of;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("cell complex line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "cell") {
            std::string id, color;
            if (!(ls >> id)) fail("missing cell id");
            int col = -1;
            if (ls >> color) {
                if (color == "black") col = 0;
                else if (color == "white") col = 1;
                else fail("unknown color '" + color + "'");
            }
            if (color_of.count(id)) fail("duplicate cell '" + id + "'");
            color_of[id] = col;
            cx.cells.push_back({id, col});
        } else if (kw == "edge") {
            std::string a, b, w;
            if (!(ls >> a >> b)) fail("edge needs two endpoints");
            if (!color_of.count(a)) fail("dangling edge endpoint '" + a + "'");
            if (!color_of.count(b)) fail("dangling edge endpoint '" + b + "'");
            int ca = color_of[a], cb = color_of[b];
            if (ca >= 0 && cb >= 0 && ca == cb)
                fail("edge joins two " + std::string(ca == 0 ? "black" : "white") + " cells");
            Rat weight = 1;
            if (ls >> w) {
                weight = parse_rational(w);
                if (weight <= 0) fail("weight must be a positive rational");
            }
            cx.edges.push_back({a, b, weight});
        } else if (kw == "face") {
            std::vector<std::string> ids;
            std::string id;
            while (ls >> id) ids.push_back(id);
            if (ids.size() < 2) fail("face needs at least two cells");
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (!color_of.count(ids[i])) fail("face references unknown cell '" + ids[i] + "'");
                const std::string& a = ids[i];
                const std::string& b = ids[(i + 1) % ids.size()];
                if (!cx.has_edge(a, b)) fail("face side " + a + "-" + b + " is not a declared edge");
            }
            cx.faces.push_back(std::move(ids));
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    return cx;
}

}  // namespace dimerlab
