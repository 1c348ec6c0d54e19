#include <doctest.h>

#include <algorithm>

#include "weylbrick/bruhat.hpp"
#include "weylbrick/sortable.hpp"
#include "weylbrick/typea.hpp"

using namespace weylbrick;

namespace {
std::vector<ValuePair> sorted_pairs(std::vector<ValuePair> v) {
    std::sort(v.begin(), v.end());
    return v;
}
std::vector<Permutation> all_perms(int m) {
    std::vector<int> line(m);
    for (int i = 0; i < m; ++i) line[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}
} // namespace

TEST_CASE("Permutation basics") {
    Permutation p({4, 2, 1, 5, 3});
    CHECK(p.size() == 5);
    CHECK(p.rank() == 4);
    CHECK(p(1) == 4);
    CHECK(p(3) == 1);
    CHECK(p.position(4) == 1);
    CHECK(p.position(3) == 5);
    CHECK(Permutation::identity(4)(2) == 2);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), DomainError);
}

TEST_CASE("classical and Bruhat inversions of 42153") {
    Permutation p({4, 2, 1, 5, 3});
    auto inv = classical_inversions(p);
    CHECK(sorted_pairs(inv) ==
          sorted_pairs({{1, 2}, {1, 4}, {2, 4}, {3, 4}, {3, 5}}));
    auto binv = bruhat_classical_inversions(p);
    CHECK(sorted_pairs(binv) ==
          sorted_pairs({{1, 2}, {2, 4}, {3, 4}, {3, 5}}));
}

TEST_CASE("Bruhat inversions of 42513 and 12543") {
    Permutation p({4, 2, 5, 1, 3});
    CHECK(classical_inversions(p).size() == 6);
    CHECK(sorted_pairs(bruhat_classical_inversions(p)) ==
          sorted_pairs({{1, 2}, {1, 5}, {2, 4}, {3, 4}, {3, 5}}));

    Permutation q({1, 2, 5, 4, 3});
    CHECK(sorted_pairs(bruhat_classical_inversions(q)) ==
          sorted_pairs({{3, 4}, {4, 5}}));
    CHECK(classical_inversions(q).size() == 3);
}

TEST_CASE("pair_root and root_pair invert each other") {
    CHECK(pair_root(4, {1, 3}) == Root{1, 1, 0, 0});
    CHECK(pair_root(4, {2, 3}) == Root{0, 1, 0, 0});
    CHECK(pair_root(4, {1, 5}) == Root{1, 1, 1, 1});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            ValuePair e{i, j};
            CHECK(root_pair(pair_root(4, e)) == e);
        }
}

TEST_CASE("perm_to_weyl and weyl_to_perm round trip") {
    for (const auto& p : all_perms(4)) {
        WeylElement w = perm_to_weyl(p);
        CHECK(weyl_to_perm(w).one_line() == p.one_line());
    }
    // rank mismatch
    auto d4 = DynkinDiagram::preset("D4");
    CHECK_THROWS_AS(perm_to_weyl(Permutation({2, 1, 3, 4, 5}), d4), DomainError);
}

TEST_CASE("inversion correspondence via pair_root") {
    for (const auto& p : all_perms(4)) {
        WeylElement w = perm_to_weyl(p);
        std::vector<Root> from_pairs;
        for (const auto& e : classical_inversions(p))
            from_pairs.push_back(pair_root(3, e));
        std::sort(from_pairs.begin(), from_pairs.end());
        CHECK(from_pairs == inversion_set(w));

        std::vector<Root> bfrom;
        for (const auto& e : bruhat_classical_inversions(p))
            bfrom.push_back(pair_root(3, e));
        std::sort(bfrom.begin(), bfrom.end());
        CHECK(bfrom == bruhat_inversions_def(w));
    }
}

TEST_CASE("inversion graph and forests") {
    Permutation p({4, 2, 1, 5, 3});
    auto g = inversion_graph(p);
    CHECK(g.m == 5);
    CHECK(g.dots.size() == 5);
    CHECK(g.dots[0] == std::pair<int, int>{1, 4});
    CHECK(g.edges.size() == 4); // the Bruhat inversions
    CHECK(is_forest(g));        // path 1-2-4-3-5

    Permutation q({4, 2, 5, 1, 3});
    CHECK_FALSE(is_forest(inversion_graph(q)));
}

TEST_CASE("forest-like equals pattern avoidance") {
    for (const auto& p : all_perms(5)) {
        CHECK(is_forest(inversion_graph(p)) == avoids_patterns(p));
    }
}

TEST_CASE("forest-like equals JHP in type A") {
    for (const auto& p : all_perms(5)) {
        CHECK(is_forest(inversion_graph(p)) ==
              jhp_check(perm_to_weyl(p)).verdict);
    }
}

TEST_CASE("forest-like counts") {
    CHECK(count_forest_like(1) == 1);
    CHECK(count_forest_like(2) == 2);
    CHECK(count_forest_like(3) == 6);
    CHECK(count_forest_like(4) == 22);
    CHECK(count_forest_like(5) == 89);
}

TEST_CASE("arc diagram of the running example") {
    Permutation p({5, 6, 7, 2, 3, 8, 1, 4});
    auto arc = arc_diagram(p, {3, 6});
    CHECK(arc.endpoints == ValuePair{3, 6});
    REQUIRE(arc.passes.count(4) == 1);
    REQUIRE(arc.passes.count(5) == 1);
    CHECK(arc.passes.at(4) == ArcSide::Above);
    CHECK(arc.passes.at(5) == ArcSide::Below);
    CHECK(arc.passes.size() == 2);
    CHECK_THROWS_AS(arc_diagram(p, {5, 6}), NotBruhatInversionError);
}

TEST_CASE("defining quivers of 42513") {
    using Arrows = std::vector<std::pair<int, int>>;
    Permutation p({4, 2, 5, 1, 3});

    auto magenta = defining_quiver(arc_diagram(p, {1, 2}));
    CHECK(magenta.vertices == std::vector<int>{1});
    CHECK(magenta.arrows.empty());

    auto green = defining_quiver(arc_diagram(p, {2, 4}));
    CHECK(green.vertices == std::vector<int>{2, 3});
    CHECK(green.arrows == Arrows{{2, 3}});

    auto red = defining_quiver(arc_diagram(p, {1, 5}));
    CHECK(red.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(red.arrows == Arrows{{2, 1}, {2, 3}, {4, 3}});

    auto gray = defining_quiver(arc_diagram(p, {3, 4}));
    CHECK(gray.vertices == std::vector<int>{3});
    CHECK(gray.arrows.empty());

    auto blue = defining_quiver(arc_diagram(p, {3, 5}));
    CHECK(blue.vertices == std::vector<int>{3, 4});
    CHECK(blue.arrows == Arrows{{4, 3}});
}

TEST_CASE("defining quivers of 42351") {
    using Arrows = std::vector<std::pair<int, int>>;
    Permutation p({4, 2, 3, 5, 1});

    auto red = defining_quiver(arc_diagram(p, {2, 4}));
    CHECK(red.vertices == std::vector<int>{2, 3});
    CHECK(red.arrows == Arrows{{2, 3}});

    auto blue = defining_quiver(arc_diagram(p, {1, 5}));
    CHECK(blue.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(blue.arrows == Arrows{{2, 1}, {3, 2}, {4, 3}});
}

TEST_CASE("join irreducible w_e") {
    Permutation p({5, 6, 7, 2, 3, 8, 1, 4});
    auto we = join_irreducible_w_e(p, {3, 6});
    CHECK(we.one_line() == std::vector<int>{1, 2, 5, 6, 3, 4, 7, 8});
    CHECK(descent_count(we) == 1);
    // Inv(w_e) is contained in Inv(p)
    auto inv_p = sorted_pairs(classical_inversions(p));
    for (const auto& e : classical_inversions(we))
        CHECK(std::binary_search(inv_p.begin(), inv_p.end(), e));
    // w_e has e as its unique descent-defining Bruhat inversion set maximum:
    // its Bruhat inversions all share the arc's interval
    auto binv_we = bruhat_classical_inversions(we);
    CHECK(std::count(binv_we.begin(), binv_we.end(), ValuePair{3, 6}) == 1);
}

TEST_CASE("w_e is well defined for every Bruhat inversion in S5") {
    for (const auto& p : all_perms(5))
        for (const auto& e : bruhat_classical_inversions(p)) {
            auto we = join_irreducible_w_e(p, e);
            CHECK(descent_count(we) == 1);
            auto inv_p = sorted_pairs(classical_inversions(p));
            auto inv_we = classical_inversions(we);
            CHECK(std::count(inv_we.begin(), inv_we.end(), e) == 1);
            for (const auto& f : inv_we)
                CHECK(std::binary_search(inv_p.begin(), inv_p.end(), f));
        }
}

TEST_CASE("descent count") {
    CHECK(descent_count(Permutation::identity(5)) == 0);
    CHECK(descent_count(Permutation({5, 4, 3, 2, 1})) == 4);
    CHECK(descent_count(Permutation({1, 2, 5, 6, 3, 4, 7, 8})) == 1);
}
