#include "dimerlab/analysis.hpp"
#include "dimerlab/factor.hpp"
#include "dimerlab/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dimerlab;

TEST_CASE("macmahon product") {
    CHECK(macmahon({1, 1, 1}) == 2);
    CHECK(macmahon({2, 2, 2}) == 20);
    CHECK(macmahon({3, 3, 3}) == 980);
    CHECK(macmahon({1, 2, 1}) == 3);
}

TEST_CASE("edge probabilities") {
    // order-1 diamond: two tilings, each edge in exactly one
    PlaneGraph d1 = dual_graph(aztec({AztecKind::DIAMOND, 1}));
    for (std::size_t ei = 0; ei < d1.edge_count(); ++ei)
        CHECK(edge_probability(d1, d1.edge((int)ei).u, d1.edge((int)ei).v) == Rat(1, 2));

    // central edge of the 1,2,1 hexagon is used in one third of the tilings
    TriRegion h121 = hexagon({1, 2, 1});
    auto [up, down] = central_edge(h121);
    PlaneGraph g = dual_graph(h121);
    CHECK(edge_probability(g, *g.find_vertex(tri_label(up.first, up.second)),
                           *g.find_vertex(tri_label(down.first, down.second))) == Rat(1, 3));

    CHECK_THROWS_AS(edge_probability(dual_graph(parse_tri_region("A A\n")), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("probabilities of the edges at a vertex sum to one") {
    for (auto region : {hexagon({2, 2, 2}), hexagon({1, 2, 1})}) {
        PlaneGraph g = dual_graph(region);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            Rat sum = 0;
            for (int ei : g.incident((int)v))
                sum += edge_probability(g, g.edge(ei).u, g.edge(ei).v);
            CHECK(sum == 1);
        }
    }
    PlaneGraph az = dual_graph(aztec({AztecKind::DIAMOND, 2}));
    for (std::size_t v = 0; v < az.vertex_count(); ++v) {
        Rat sum = 0;
        for (int ei : az.incident((int)v)) sum += edge_probability(az, az.edge(ei).u, az.edge(ei).v);
        CHECK(sum == 1);
    }
}

TEST_CASE("moments of inertia") {
    MomentReport m1 = moments_of_inertia(1);
    CHECK(m1.vertical == 0);
    CHECK(m1.horizontal == 1);

    MomentReport m2 = moments_of_inertia(2);
    CHECK(m2.vertical == 2);
    CHECK(m2.horizontal == 18);  // exact value implied by the probability table
    REQUIRE(m2.table.size() == 10);
    // printed arrangement: the table of the side-2 hexagon, read row by row
    std::vector<Rat> want = {Rat(7, 10), Rat(3, 10), Rat(3, 10), Rat(3, 10), Rat(2, 5),
                             Rat(2, 5),  Rat(3, 10), Rat(3, 10), Rat(3, 10), Rat(7, 10)};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(m2.table[i].probability == want[i]);
    // x and y are consecutive integers centered at zero
    CHECK(m2.table.front().y == -3);
    CHECK(m2.table.back().y == 3);

    MomentReport m3 = moments_of_inertia(3);
    CHECK(m3.vertical == 12);
    CHECK(m3.horizontal == 93);
}

TEST_CASE("inverse entry sums match the closed form") {
    for (long n = 1; n <= 5; ++n) {
        auto r = inverse_entry_sum(n);
        CHECK(r.sum == r.closed_form);
    }
    CHECK(inverse_entry_sum(1).sum == 1);
    CHECK(inverse_entry_sum(2).sum == Rat(5, 2));
    CHECK(inverse_entry_sum(3).sum == 4);
}

TEST_CASE("polynomial fitting") {
    // vertical moments are (n^4 - n^2)/6
    std::vector<std::pair<Int, Int>> pts;
    for (long n = 1; n <= 8; ++n) pts.push_back({n, (n * n * n * n - n * n) / 6});
    SequenceFit fit = fit_polynomial(pts);
    REQUIRE(fit.kind == FitKind::POLYNOMIAL);
    CHECK(fit.degree_or_order == 4);
    CHECK(fit.validated >= 2);
    CHECK(fit.polynomial.coeff(4) == Rat(1, 6));
    CHECK(fit.polynomial.coeff(2) == Rat(-1, 6));

    std::vector<std::pair<Int, Int>> constant = {{1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}};
    SequenceFit cf = fit_polynomial(constant);
    REQUIRE(cf.kind == FitKind::POLYNOMIAL);
    CHECK(cf.degree_or_order == 0);

    std::vector<std::pair<Int, Int>> noise = {{1, 2}, {2, 3}, {3, 5}, {4, 7}, {5, 11}, {6, 14}};
    // an interpolating polynomial through all points exists but never validates
    CHECK(fit_polynomial(noise).kind == FitKind::NONE);
    CHECK_THROWS_AS(fit_polynomial({{1, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("recurrence fitting") {
    std::vector<Int> terms = {5, 13, 37, 109, 313, 905, 2617, 7561, 21853, 63157};
    SequenceFit fit = fit_recurrence(terms);
    REQUIRE(fit.kind == FitKind::RECURRENCE);
    CHECK(fit.recurrence == std::vector<Int>{2, 2, 2, -1});
    CHECK(fit.degree_or_order == 4);
    CHECK(fit.validated >= 2);

    std::vector<Int> geom = {1, 2, 4, 8, 16, 32, 64};
    SequenceFit g = fit_recurrence(geom);
    REQUIRE(g.kind == FitKind::RECURRENCE);
    CHECK(g.recurrence == std::vector<Int>{2});

    std::vector<Int> noise = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3};
    CHECK(fit_recurrence(noise).kind == FitKind::NONE);
}

TEST_CASE("window evenness") {
    // 2^13 (x^2 + 3x + 4)^4 is even in t = x + 3/2
    RatPolynomial base(std::vector<Rat>{4, 3, 1});
    RatPolynomial p = base * base;
    p = p * p;
    std::vector<Rat> scaled;
    for (long k = 0; k <= p.degree(); ++k) scaled.push_back(p.coeff((std::size_t)k) * 8192);
    RatPolynomial w6(scaled);
    CHECK(w6.coeff(8) == 8192);
    CHECK(window_evenness(w6, 6));

    RatPolynomial w2(std::vector<Rat>{Rat(1, 4), 1, 1});  // (x + 1/2)^2
    CHECK(window_evenness(w2, 2));

    RatPolynomial asym(std::vector<Rat>{1, 1, 0, 1});
    CHECK_FALSE(window_evenness(asym, 6));
}

TEST_CASE("factorization") {
    FactoredCount fc = factorize(Int("314703872"));
    REQUIRE(fc.factors.size() == 2);
    CHECK(fc.factors[0] == std::pair<Int, unsigned>{2, 17});
    CHECK(fc.factors[1] == std::pair<Int, unsigned>{7, 4});
    CHECK(fc.factored_str() == "2^17 * 7^4");

    CHECK(factorize(9).structure == CountStructure::SQUARE);
    FactoredCount f18 = factorize(18);
    CHECK(f18.structure == CountStructure::POW2_TIMES_ODD_SQUARE);
    CHECK(f18.pow2 == 1);
    CHECK(factorize(1).factored_str() == "1");

    // a large semiprime square from the intruded-square family
    Int p("2534588575976069659");
    FactoredCount big = factorize(32 * p * p);
    CHECK(big.structure == CountStructure::POW2_TIMES_ODD_SQUARE);
    CHECK(big.pow2 == 5);
    CHECK(big.largest_prime == p);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("roundness report") {
    auto r = roundness_report(factorize(20), 2);
    CHECK(r.largest_prime == 5);
    CHECK(r.prime_over_n == Rat(5, 2));
    auto r2 = roundness_report(factorize(2), 1);
    CHECK(r2.largest_prime == 2);
    CHECK_FALSE(r2.outlier);
    // the stray 73 at n=8 stands out
    auto r73 = roundness_report(factorize(Int("16777216") * 9 * 73), 8);
    CHECK(r73.largest_prime == 73);
    CHECK(r73.outlier);
}
