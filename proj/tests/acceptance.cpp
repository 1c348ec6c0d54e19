// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "weylbrick/io.hpp"

using namespace weylbrick;

namespace {

int failures = 0;

template <typename F>
void criterion(int num, const char* name, double budget_s, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string why;
    try {
        ok = body();
    } catch (const std::exception& e) {
        why = std::string(" (") + e.what() + ")";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > budget_s) {
        ok = false;
        why += " (over time budget)";
    }
    if (!ok) ++failures;
    std::printf("criterion %d %-34s %s  [%.2fs]%s\n", num, name,
                ok ? "PASS" : "FAIL", dt, why.c_str());
    std::fflush(stdout);
}

bool oracle_triangle_exhaustive(const DynkinDiagram& d) {
    for (const auto& w : enumerate_group(d)) {
        auto by_def = bruhat_inversions_def(w);
        if (by_def != bruhat_inversions_by_sum(w)) return false;
        if (bruhat_inversions_deletion(d, canonical_reduced_word(w)) != by_def)
            return false;
    }
    return true;
}

bool oracle_triangle_random(const DynkinDiagram& d, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gen(0, d.rank() - 1);
    for (int t = 0; t < samples; ++t) {
        WeylElement w = WeylElement::identity(d);
        int steps = 20 + static_cast<int>(rng() % 60);
        for (int s = 0; s < steps; ++s)
            w = w * WeylElement::simple_reflection(d, gen(rng));
        auto by_def = bruhat_inversions_def(w);
        if (by_def != bruhat_inversions_by_sum(w)) return false;
        if (bruhat_inversions_deletion(d, canonical_reduced_word(w)) != by_def)
            return false;
    }
    return true;
}

std::vector<Permutation> symmetric_group(int m) {
    std::vector<int> line(m);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

} // namespace

int main() {
    criterion(1, "forest-like counts", 10.0, [] {
        const long long expected[] = {2, 6, 22, 89, 379, 1661};
        for (int m = 2; m <= 7; ++m)
            if (count_forest_like(m) != expected[m - 2]) return false;
        return true;
    });

    criterion(2, "oracle triangle", 60.0, [] {
        if (!oracle_triangle_exhaustive(DynkinDiagram::preset("A3"))) return false;
        if (!oracle_triangle_exhaustive(DynkinDiagram::preset("A4"))) return false;
        if (!oracle_triangle_exhaustive(DynkinDiagram::preset("D4"))) return false;
        if (!oracle_triangle_random(DynkinDiagram::preset("D5"), 10000, 20240501))
            return false;
        if (!oracle_triangle_random(DynkinDiagram::preset("E6"), 10000, 20240502))
            return false;
        return true;
    });

    criterion(3, "worked examples bit-exact", 10.0, [] {
        auto a3 = DynkinDiagram::preset("A3");
        Word wa{0, 1, 2, 0, 1};
        auto seq = root_sequence(a3, wa);
        if (seq != std::vector<Root>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}})
            return false;
        WeylElement w = evaluate(a3, wa);
        std::vector<Root> binv{{0, 1, 0}, {0, 1, 1}, {1, 0, 0}};
        if (bruhat_inversions_def(w) != binv) return false;
        if (!jhp_check(w).verdict) return false;

        auto d4 = DynkinDiagram::preset("D4");
        WeylElement v = evaluate(d4, {0, 1, 2, 3, 0, 1, 2, 3, 0});
        auto inv = inversion_set(v);
        if (inv.size() != 9) return false;
        auto bdv = bruhat_inversions_def(v);
        if (bdv.size() != 8) return false;
        std::vector<Root> diff;
        std::set_difference(inv.begin(), inv.end(), bdv.begin(), bdv.end(),
                            std::back_inserter(diff));
        if (diff != std::vector<Root>{{2, 1, 1, 1}}) return false;
        if (jhp_check(v).verdict) return false;

        Permutation p({4, 2, 1, 5, 3});
        auto ci = classical_inversions(p);
        std::sort(ci.begin(), ci.end());
        if (ci != std::vector<ValuePair>{{1, 2}, {1, 4}, {2, 4}, {3, 4}, {3, 5}})
            return false;
        auto bi = bruhat_classical_inversions(p);
        std::sort(bi.begin(), bi.end());
        if (bi != std::vector<ValuePair>{{1, 2}, {2, 4}, {3, 4}, {3, 5}})
            return false;
        return true;
    });

    criterion(4, "Papi round trip", 30.0, [] {
        auto a3 = DynkinDiagram::preset("A3");
        for (const auto& w : enumerate_group(a3)) {
            std::set<std::vector<Root>> valid;
            for (const Word& u : all_reduced_words(w)) {
                auto seq = root_sequence(a3, u);
                if (!papi_check(a3, seq).ok) return false;
                valid.insert(seq);
            }
            // an ordering of inv(w) passes iff it is one of the root
            // sequences, so every permuted non-root-sequence fails
            std::vector<Root> perm = inversion_set(w);
            std::sort(perm.begin(), perm.end());
            do {
                if (papi_check(a3, perm).ok != (valid.count(perm) > 0))
                    return false;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return true;
    });

    criterion(5, "Poincare endpoints", 30.0, [] {
        for (const char* type : {"A3", "A4"}) {
            auto d = DynkinDiagram::preset(type);
            for (const auto& w : enumerate_group(d)) {
                auto c = bruhat_interval_poincare(w);
                size_t l = length(w);
                if (c.size() != l + 1 || c.front() != 1 || c.back() != 1) return false;
                if (l == 0) continue;
                if (c[1] != static_cast<long long>(support(w).size())) return false;
                if (c[l - 1] !=
                    static_cast<long long>(bruhat_inversions_def(w).size()))
                    return false;
            }
        }
        return true;
    });

    criterion(6, "type-A triangle over S6", 30.0, [] {
        for (const auto& p : symmetric_group(6)) {
            bool forest = is_forest(inversion_graph(p));
            if (forest != avoids_patterns(p)) return false;
            if (forest != jhp_check(perm_to_weyl(p)).counts_equal) return false;
        }
        return true;
    });

    criterion(7, "figure reproduction", 10.0, [] {
        using Arrows = std::vector<std::pair<int, int>>;
        auto quiver = [](const Permutation& p, ValuePair e) {
            return defining_quiver(arc_diagram(p, e));
        };
        Permutation p1({4, 2, 5, 1, 3});
        struct Expect {
            ValuePair e;
            std::vector<int> vertices;
            Arrows arrows;
        };
        const std::vector<Expect> fig1{
            {{1, 2}, {1}, {}},
            {{2, 4}, {2, 3}, {{2, 3}}},
            {{1, 5}, {1, 2, 3, 4}, {{2, 1}, {2, 3}, {4, 3}}},
            {{3, 4}, {3}, {}},
            {{3, 5}, {3, 4}, {{4, 3}}},
        };
        for (const auto& x : fig1) {
            auto q = quiver(p1, x.e);
            if (q.vertices != x.vertices || q.arrows != x.arrows) return false;
        }
        Permutation p2({4, 2, 3, 5, 1});
        const std::vector<Expect> fig2{
            {{2, 4}, {2, 3}, {{2, 3}}},
            {{1, 5}, {1, 2, 3, 4}, {{2, 1}, {3, 2}, {4, 3}}},
        };
        for (const auto& x : fig2) {
            auto q = quiver(p2, x.e);
            if (q.vertices != x.vertices || q.arrows != x.arrows) return false;
        }
        auto we = join_irreducible_w_e(Permutation({5, 6, 7, 2, 3, 8, 1, 4}), {3, 6});
        return we.one_line() == std::vector<int>{1, 2, 5, 6, 3, 4, 7, 8};
    });

    criterion(8, "representation-level checks over S5", 60.0, [] {
        for (const auto& p : symmetric_group(5)) {
            std::vector<ThinRep> simples;
            for (const auto& e : bruhat_classical_inversions(p)) {
                auto b = build_brick(defining_quiver(arc_diagram(p, e)), p.rank());
                if (!check_preprojective_relations(b)) return false;
                if (!is_brick(b)) return false;
                if (dimension_vector(b) != pair_root(p.rank(), e)) return false;
                simples.push_back(std::move(b));
            }
            for (const auto& a : simples)
                for (const auto& b : simples)
                    if (!zero_mono_check(a, b)) return false;
        }
        return true;
    });

    criterion(9, "sortable counts", 30.0, [] {
        auto a1 = DynkinDiagram::preset("A1");
        auto a2 = DynkinDiagram::preset("A2");
        auto a3 = DynkinDiagram::preset("A3");
        if (sortable_elements(Orientation(a1, {})).size() != 2) return false;
        if (sortable_elements(Orientation(a2, {{0, 1}})).size() != 5) return false;
        if (sortable_elements(Orientation(a2, {{1, 0}})).size() != 5) return false;
        if (sortable_elements(Orientation(a3, {{0, 1}, {1, 2}})).size() != 14)
            return false;
        if (sortable_elements(Orientation(a3, {{0, 1}, {2, 1}})).size() != 14)
            return false;
        return true;
    });

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
