#include "dimerlab/analysis.hpp"
#include "dimerlab/families.hpp"
#include "dimerlab/kasteleyn.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace dimerlab;

namespace {

// face sign product must be -1 for faces of length 0 mod 4, +1 otherwise
void check_face_condition(const PlaneGraph& g, const KasteleynMatrix& k) {
    for (const auto& face : g.faces()) {
        int prod = 1;
        for (std::size_t i = 0; i < face.size(); ++i)
            prod *= k.sign[*g.find_edge(face[i], face[(i + 1) % face.size()])];
        CHECK(prod == ((face.size() % 4 == 0) ? -1 : 1));
    }
}

}  // namespace

TEST_CASE("sign assignment on honeycomb duals needs no flips") {
    for (auto [a, b, c] : {std::tuple<long, long, long>{1, 1, 1}, {2, 2, 2}, {2, 3, 2}}) {
        PlaneGraph g = dual_graph(hexagon({a, b, c}));
        KasteleynMatrix k = sign_assignment(g);
        for (std::size_t ei = 0; ei < g.edge_count(); ++ei) CHECK(k.sign[ei] == 1);
        check_face_condition(g, k);
    }
}

TEST_CASE("sign assignment on a 4-cycle flips exactly one edge") {
    PlaneGraph g = dual_graph(parse_square_region("XX\nXX\n"));
    KasteleynMatrix k = sign_assignment(g);
    int negatives = 0;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) negatives += k.sign[ei] < 0;
    CHECK(negatives == 1);
    check_face_condition(g, k);
}

TEST_CASE("sign assignment is deterministic and satisfies faces on aztec regions") {
    for (long n : {2L, 3L, 4L}) {
        PlaneGraph g = dual_graph(aztec({AztecKind::DIAMOND, n}));
        KasteleynMatrix k1 = sign_assignment(g);
        KasteleynMatrix k2 = sign_assignment(g);
        CHECK(k1.sign == k2.sign);
        check_face_condition(g, k1);
    }
    // window regions have a long interior face around the hole
    PlaneGraph w = dual_graph(aztec({AztecKind::WINDOW, 1, 2}));
    KasteleynMatrix k = sign_assignment(w);
    check_face_condition(w, k);
    std::size_t longest = 0;
    for (const auto& f : w.faces()) longest = std::max(longest, f.size());
    CHECK(longest > 4);
}

TEST_CASE("alternating vertical sign rule is a valid gauge") {
    for (long n : {1L, 2L, 3L, 4L}) {
        IntMatrix k = aztec_kasteleyn_alternating(n);
        Int d = det_bareiss(k);
        if (d < 0) d = -d;
        CHECK(d == pow_int(2, (unsigned long)(n * (n + 1) / 2)));
    }
}

TEST_CASE("count_det examples") {
    CHECK(matching_count(dual_graph(hexagon({2, 2, 2}))) == 20);
    CHECK(matching_count(dual_graph(aztec({AztecKind::DIAMOND, 3}))) == 64);
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c)
                CHECK(matching_count(dual_graph(hexagon({a, b, c}))) == macmahon({a, b, c}));
    // unbalanced colors short-circuit to zero
    TriRegion unbalanced = parse_tri_region("AVA\n");
    CHECK(matching_count(dual_graph(unbalanced)) == 0);
}

TEST_CASE("count is invariant under re-gauging") {
    PlaneGraph g = dual_graph(aztec({AztecKind::DIAMOND, 2}));
    KasteleynMatrix k = sign_assignment(g);
    Int base = count_det(k);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        // flip signs across a random vertex cut: still a valid Kasteleyn matrix
        std::vector<int> eps(g.vertex_count());
        for (auto& e : eps) e = rng() % 2 ? 1 : -1;
        KasteleynMatrix k2 = k;
        for (std::size_t ei = 0; ei < g.edge_count(); ++ei)
            k2.sign[ei] = k.sign[ei] * eps[g.edge((int)ei).u] * eps[g.edge((int)ei).v];
        check_face_condition(g, k2);
        CHECK(count_det(k2) == base);
    }
}

TEST_CASE("pfaffian engine") {
    PlaneGraph c4 = dual_graph(parse_square_region("XX\nXX\n"));
    CHECK(pfaffian_count(c4) == 2);
    CHECK(pfaffian_count(triangle_graph(4)) == 6);
    std::vector<Int> seq;
    for (long n : {3L, 4L, 7L, 8L}) seq.push_back(pfaffian_count(triangle_graph(n)));
    CHECK(seq == std::vector<Int>{2, 6, 2196, 37004});
    PlaneGraph nofaces;
    nofaces.add_vertex("a");
    nofaces.add_vertex("b");
    nofaces.add_edge(0, 1);
    CHECK_THROWS_AS(pfaffian_count(nofaces), EngineError);
}

TEST_CASE("ryser permanent") {
    IntMatrix ones(2, 2);
    ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
    CHECK(permanent_ryser(ones) == 2);
    CHECK(permanent_ryser(cube_graph(3)) == 9);
    CHECK(permanent_ryser(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(permanent_ryser(IntMatrix(17, 17)), EngineError);
}

TEST_CASE("brute force oracle") {
    PlaneGraph six = dual_graph(hexagon({1, 1, 1}));
    CHECK(brute_force_count(six) == 2);
    CHECK(brute_force_count(dual_graph(hexagon({2, 2, 2}))) == 20);
    // weighted 4-cycle: a*c + b*d
    PlaneGraph c4;
    for (int i = 0; i < 4; ++i) c4.add_vertex(std::to_string(i), i % 2);
    c4.add_edge(0, 1, Rat(2));
    c4.add_edge(1, 2, Rat(3));
    c4.add_edge(2, 3, Rat(5));
    c4.add_edge(3, 0, Rat(7));
    CHECK(brute_force_count_weighted(c4) == Rat(2 * 5 + 3 * 7));
    // cap
    PlaneGraph big;
    for (int i = 0; i < 42; ++i) big.add_vertex(std::to_string(i));
    CHECK_THROWS_AS(brute_force_count(big), EngineError);
}

TEST_CASE("engine agreement on the golden suite") {
    std::vector<PlaneGraph> suite;
    suite.push_back(dual_graph(hexagon({1, 1, 1})));
    suite.push_back(dual_graph(hexagon({2, 2, 2})));
    suite.push_back(dual_graph(hexagon({1, 2, 1})));
    suite.push_back(dual_graph(holey_hexagon(HoleyKind::CENTRAL_TRIANGLE, 1).region));
    suite.push_back(dual_graph(holey_hexagon(HoleyKind::OPPOSITE_PAIR, 2).region));
    suite.push_back(dual_graph(holey_hexagon(HoleyKind::ADJACENT_PAIR, 2).region));
    suite.push_back(dual_graph(aztec({AztecKind::DIAMOND, 1})));
    suite.push_back(dual_graph(aztec({AztecKind::DIAMOND, 2})));
    suite.push_back(dual_graph(aztec({AztecKind::DIAMOND, 3})));
    suite.push_back(dual_graph(aztec({AztecKind::KNIGHT_PAIR_REMOVED, 2})));
    suite.push_back(dual_graph(aztec({AztecKind::CENTER_PAIR_REMOVED, 2})));
    suite.push_back(dual_graph(aztec({AztecKind::RECT_ADJACENT_HOLE, 1})));
    suite.push_back(dual_graph(aztec({AztecKind::RECT_CENTER_HOLE, 1})));
    suite.push_back(dual_graph(aztec({AztecKind::PILLOW_0MOD4, 2})));
    suite.push_back(dual_graph(aztec({AztecKind::PILLOW_2MOD4, 2})));
    suite.push_back(dual_graph(aztec({AztecKind::INTRUDED_SQUARE, 2, 0, 1})));
    suite.push_back(dual_graph(aztec({AztecKind::WINDOW, 1, 2})));
    suite.push_back(dual_graph(quasi_hexagon({1, 1, 1})));
    suite.push_back(dual_graph(quasi_hexagon({1, 2, 1})));
    suite.push_back(triangle_graph(3));
    suite.push_back(triangle_graph(4));
    suite.push_back(triangle_graph(7));
    suite.push_back(cube_graph(1));
    suite.push_back(cube_graph(2));
    suite.push_back(cube_graph(3));

    for (const PlaneGraph& g : suite) {
        REQUIRE(g.vertex_count() <= 36);
        Int oracle = brute_force_count(g);
        if (g.planar() && g.bipartite()) CHECK(matching_count(g, Method::DET) == oracle);
        if (g.planar()) CHECK(matching_count(g, Method::PFAFFIAN) == oracle);
        if (g.bipartite() && g.black_vertices().size() <= 16 &&
            g.black_vertices().size() == g.white_vertices().size())
            CHECK(matching_count(g, Method::PERMANENT) == oracle);
    }
}

TEST_CASE("matchings through an edge never exceed the total") {
    PlaneGraph g = dual_graph(hexagon({2, 2, 2}));
    Int total = matching_count(g);
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge((int)ei);
        Int through = matching_count(g.without_vertices({e.u, e.v}));
        CHECK(through <= total);
    }
}

TEST_CASE("auto engine picks something sane") {
    CHECK(pick_method(dual_graph(hexagon({1, 1, 1}))) == Method::DET);
    CHECK(pick_method(triangle_graph(3)) == Method::PFAFFIAN);
    CHECK(pick_method(cube_graph(3)) == Method::PERMANENT);
}
