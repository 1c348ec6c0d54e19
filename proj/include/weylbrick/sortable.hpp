#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <queue>
#include <set>
#include <unordered_set>
#include <vector>

#include "weylbrick/bruhat.hpp"

namespace weylbrick {

// An orientation of a Dynkin diagram: each edge directed. Always acyclic
// on a tree, asserted anyway.
struct Orientation {
    const DynkinDiagram* diagram;
    std::vector<std::pair<int, int>> arrows; // (from, to)

    Orientation(const DynkinDiagram& d, std::vector<std::pair<int, int>> arr)
        : diagram(&d), arrows(std::move(arr)) {
        std::set<std::pair<int, int>> undirected;
        for (auto [a, b] : arrows) {
            if (!d.adjacent(a, b)) throw DomainError("orientation arrow is not an edge");
            undirected.insert({std::min(a, b), std::max(a, b)});
        }
        if (undirected.size() != d.edges().size() || arrows.size() != d.edges().size())
            throw DomainError("orientation must direct each edge exactly once");
    }
};

// Coxeter word of an orientation: if there is an arrow i <- j then s_i
// comes before s_j; smallest available vertex first.
inline Word coxeter_element(const Orientation& o) {
    int n = o.diagram->rank();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> succ(n);
    for (auto [from, to] : o.arrows) {
        // arrow to <- from: "to" must come before "from"
        succ[to].push_back(from);
        ++indeg[from];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    Word out;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        out.push_back(v);
        for (int u : succ[v])
            if (--indeg[u] == 0) ready.push(u);
    }
    if (static_cast<int>(out.size()) != n)
        throw DomainError("orientation has a directed cycle");
    return out;
}

// A c-sorting word: blocks of letters, each a subword of c, with nested
// supports.
struct SortingWord {
    std::vector<Word> blocks;

    Word flatten() const {
        Word out;
        for (const Word& b : blocks) out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

// Greedy leftmost-fit scan of c^infinity: take a letter whenever it starts
// a reduced expression of what remains. Returns nullopt when the block
// supports fail to nest (w is not c-sortable).
inline std::optional<SortingWord> c_sorting_word(const WeylElement& w, const Word& c) {
    const DynkinDiagram& d = w.diagram();
    SortingWord sw;
    WeylElement rest_inv = w.inverse(); // track r^{-1} where w = prefix * r
    size_t remaining = length(w);
    while (remaining > 0) {
        Word block;
        for (int a : c) {
            // a is a left descent of r iff r^{-1}(alpha_a) is negative
            if (!is_nonpos(rest_inv.apply(d.simple_root(a)))) continue;
            block.push_back(a);
            rest_inv = rest_inv * WeylElement::simple_reflection(d, a);
            --remaining;
        }
        sw.blocks.push_back(std::move(block));
    }
    for (size_t b = 1; b < sw.blocks.size(); ++b) {
        std::set<int> prev(sw.blocks[b - 1].begin(), sw.blocks[b - 1].end());
        for (int a : sw.blocks[b])
            if (!prev.count(a)) return std::nullopt;
    }
    return sw;
}

// Enumerate the whole Weyl group by BFS over right multiplication.
inline std::vector<WeylElement> enumerate_group(const DynkinDiagram& d,
                                                size_t cap = kDefaultEnumerationCap) {
    std::vector<WeylElement> out;
    std::unordered_set<IntMatrix, MatrixHash> seen;
    std::deque<WeylElement> queue;
    WeylElement e = WeylElement::identity(d);
    seen.insert(e.matrix());
    out.push_back(e);
    queue.push_back(e);
    while (!queue.empty()) {
        WeylElement v = queue.front();
        queue.pop_front();
        for (int a = 0; a < d.rank(); ++a) {
            WeylElement u = v * WeylElement::simple_reflection(d, a);
            if (seen.count(u.matrix())) continue;
            if (out.size() >= cap)
                throw CapExceededError("group enumeration exceeds cap");
            seen.insert(u.matrix());
            out.push_back(u);
            queue.push_back(u);
        }
    }
    return out;
}

inline std::vector<WeylElement> sortable_elements(const Orientation& o,
                                                  size_t cap = kDefaultEnumerationCap) {
    Word c = coxeter_element(o);
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_group(*o.diagram, cap))
        if (c_sorting_word(w, c)) out.push_back(w);
    return out;
}

inline bool is_sortable(const WeylElement& w, const Orientation& o) {
    return c_sorting_word(w, coxeter_element(o)).has_value();
}

// F_Q(w) at the dimension-vector level: by Gabriel's theorem the
// indecomposables of the torsion-free class are the inversions of w.
inline std::vector<Root> torsion_free_indecomposables(const WeylElement& w,
                                                      const Orientation& o) {
    if (!is_sortable(w, o))
        throw NotSortableError("element is not c-sortable for this orientation");
    return inversion_set(w);
}

// Simple objects of F_Q(w): the Bruhat inversions.
inline std::vector<Root> path_algebra_simples(const WeylElement& w,
                                               const Orientation& o) {
    if (!is_sortable(w, o))
        throw NotSortableError("element is not c-sortable for this orientation");
    return bruhat_inversions_def(w);
}

} // namespace weylbrick
