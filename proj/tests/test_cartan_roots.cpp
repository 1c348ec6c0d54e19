#include <doctest.h>

#include "weylbrick/diagram.hpp"

using namespace weylbrick;

TEST_CASE("Cartan matrix of A3 is the tridiagonal path matrix") {
    auto d = DynkinDiagram::preset("A3");
    auto c = d.cartan_matrix();
    long long expected[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c(i, j) == expected[i][j]);
}

TEST_CASE("Cartan matrix of D4: center row") {
    auto d = DynkinDiagram::preset("D4");
    auto c = d.cartan_matrix();
    CHECK(c(0, 0) == 2);
    CHECK(c(0, 1) == -1);
    CHECK(c(0, 2) == -1);
    CHECK(c(0, 3) == -1);
}

TEST_CASE("cycle on 3 vertices is rejected") {
    CHECK_THROWS_AS(DynkinDiagram(3, {{0, 1}, {1, 2}, {2, 0}}), InvalidDiagramError);
}

TEST_CASE("disconnected and malformed diagrams are rejected") {
    CHECK_THROWS_AS(DynkinDiagram(4, {{0, 1}, {2, 3}}), InvalidDiagramError);
    CHECK_THROWS_AS(DynkinDiagram(2, {{0, 0}}), InvalidDiagramError);
    CHECK_THROWS_AS(DynkinDiagram::preset("B2"), InvalidDiagramError);
}

TEST_CASE("pairing values") {
    auto d = DynkinDiagram::preset("A3");
    Root a1 = d.simple_root(0), a2 = d.simple_root(1);
    CHECK(d.pairing(a1, a1) == 2);
    CHECK(d.pairing(a1, a2) == -1);
    Root b1 = {1, 1, 0}, b2 = {0, 1, 1};
    long long v = d.pairing(b1, b2);
    CHECK((v >= -1 && v <= 1)); // distinct roots, simply-laced
    CHECK_THROWS_AS(d.pairing({1, 0}, a1), DomainError);
}

TEST_CASE("pairing on all pairs of roots stays in {-1,0,1} off the diagonal") {
    for (const char* name : {"A3", "D4"}) {
        auto d = DynkinDiagram::preset(name);
        auto pos = d.positive_roots();
        for (const Root& b : pos) {
            CHECK(d.pairing(b, b) == 2);
            for (const Root& g : pos) {
                if (b == g) continue;
                long long v = d.pairing(b, g);
                CHECK(v >= -1);
                CHECK(v <= 1);
            }
        }
    }
}

TEST_CASE("reflect basics") {
    auto d = DynkinDiagram::preset("A3");
    Root a1 = d.simple_root(0), a2 = d.simple_root(1);
    CHECK(d.reflect(a1, a1) == negate(a1));
    CHECK(d.reflect(a1, a2) == Root{1, 1, 0});
    // involution
    Root b = {1, 1, 1};
    CHECK(d.reflect(a2, d.reflect(a2, b)) == b);
    CHECK_THROWS_AS(d.reflect({1, 1, 2}, a1), DomainError);
}

TEST_CASE("positive root counts") {
    CHECK(DynkinDiagram::preset("A1").positive_roots().size() == 1);
    CHECK(DynkinDiagram::preset("A3").positive_roots().size() == 6);
    CHECK(DynkinDiagram::preset("D4").positive_roots().size() == 12);
    CHECK(DynkinDiagram::preset("D5").positive_roots().size() == 20);
    CHECK(DynkinDiagram::preset("E6").positive_roots().size() == 36);
    CHECK(DynkinDiagram::preset("E7").positive_roots().size() == 63);
    CHECK(DynkinDiagram::preset("E8").positive_roots().size() == 120);
}

TEST_CASE("A_n positive roots are the interval roots beta_(i,j)") {
    auto d = DynkinDiagram::preset("A4");
    for (const Root& r : d.positive_roots()) {
        int first = -1, last = -1;
        for (int k = 0; k < 4; ++k) {
            if (r[k] == 0) continue;
            CHECK(r[k] == 1);
            if (first < 0) first = k;
            last = k;
        }
        for (int k = first; k <= last; ++k) CHECK(r[k] == 1); // consecutive
    }
}

TEST_CASE("reflections permute the root set") {
    auto d = DynkinDiagram::preset("D4");
    auto pos = d.positive_roots();
    for (const Root& alpha : pos)
        for (const Root& beta : pos) CHECK(d.is_root(d.reflect(alpha, beta)));
}

TEST_CASE("every positive root is simple or drops into Phi+ by a simple root") {
    auto d = DynkinDiagram::preset("E6");
    for (const Root& b : d.positive_roots()) {
        int total = 0;
        for (int x : b) total += x;
        if (total == 1) continue; // simple
        bool drops = false;
        for (int i = 0; i < d.rank() && !drops; ++i) {
            Root c(b);
            c[i] -= 1;
            if (d.is_positive_root(c)) drops = true;
        }
        CHECK(drops);
    }
}

TEST_CASE("contracted pair configuration: alpha + beta a root forces pairing -1") {
    auto d = DynkinDiagram::preset("D4");
    auto pos = d.positive_roots();
    for (const Root& a : pos)
        for (const Root& b : pos) {
            Root s = add(a, b);
            if (!d.is_root(s)) continue;
            CHECK(d.pairing(a, b) == -1);
            CHECK(d.pairing(a, s) == 1);
        }
}

TEST_CASE("sum_decompositions") {
    auto d = DynkinDiagram::preset("A3");
    std::vector<Root> pool = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}};
    auto decs = d.sum_decompositions({1, 1, 1}, pool);
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].first == Root{0, 1, 1});
    CHECK(decs[0].second == Root{1, 0, 0});
    // simple roots are indecomposable
    CHECK(d.sum_decompositions(d.simple_root(0), d.positive_roots()).empty());
}
