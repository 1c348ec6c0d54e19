#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "weylbrick/bruhat.hpp"

namespace weylbrick {

// A permutation of S_{n+1} in one-line notation: one_line[k] = w(k+1),
// values 1..n+1. The type-A specialization of WeylElement.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
        int m = size();
        std::vector<int> seen(m + 1, 0);
        for (int v : one_line_) {
            if (v < 1 || v > m || seen[v]++)
                throw DomainError("one-line notation is not a permutation of 1.." +
                                  std::to_string(m));
        }
        pos_.assign(m + 1, 0);
        for (int k = 0; k < m; ++k) pos_[one_line_[k]] = k + 1;
    }

    static Permutation identity(int m) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(one_line_.size()); } // n+1
    int rank() const { return size() - 1; }                          // n
    int operator()(int i) const { return one_line_[i - 1]; }
    int position(int value) const { return pos_[value]; } // w^{-1}(value)
    const std::vector<int>& one_line() const { return one_line_; }

    bool operator==(const Permutation& o) const { return one_line_ == o.one_line_; }
    bool operator<(const Permutation& o) const { return one_line_ < o.one_line_; }

private:
    std::vector<int> one_line_;
    std::vector<int> pos_;
};

using ValuePair = std::pair<int, int>; // (i, j) with i < j

// beta_{(i,j)} = alpha_i + ... + alpha_{j-1} in 0-based vertex coordinates.
inline Root pair_root(int n, ValuePair e) {
    Root r(n, 0);
    for (int k = e.first; k < e.second; ++k) r[k - 1] = 1;
    return r;
}

// Recover (i, j) from beta_{(i,j)}; requires a consecutive 0/1 vector.
inline ValuePair root_pair(const Root& r) {
    int first = -1, last = -1;
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) {
            if (first < 0) first = static_cast<int>(k);
            last = static_cast<int>(k);
        }
    return {first + 1, last + 2};
}

// w(alpha_i) = eps_{w(i)} - eps_{w(i+1)} expressed back in simple-root
// coordinates.
inline WeylElement perm_to_weyl(const Permutation& p, const DynkinDiagram& d) {
    int n = p.rank();
    if (d.rank() != n)
        throw DomainError("permutation rank does not match the diagram");
    for (int k = 0; k + 1 < n; ++k)
        if (!d.adjacent(k, k + 1))
            throw DomainError("diagram is not the path 0-1-...-" + std::to_string(n - 1));
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        int a = p(i), b = p(i + 1);
        int lo = std::min(a, b), hi = std::max(a, b);
        int sign = a < b ? 1 : -1;
        for (int k = lo; k < hi; ++k) m(k - 1, i - 1) = sign;
    }
    return WeylElement(d, m);
}

inline WeylElement perm_to_weyl(const Permutation& p) {
    thread_local std::map<int, DynkinDiagram> cache;
    auto it = cache.find(p.rank());
    if (it == cache.end())
        it = cache.emplace(p.rank(),
                           DynkinDiagram::preset("A" + std::to_string(p.rank()))).first;
    return perm_to_weyl(p, it->second);
}

// Inverse of perm_to_weyl. The suffix column sum col_i + ... + col_n is
// w(eps_i - eps_{n+1}) = eps_{w(i)} - eps_{w(n+1)} in alpha coordinates;
// converting to eps coordinates reads off w(i) (the +1) and w(n+1)
// (the common -1).
inline Permutation weyl_to_perm(const WeylElement& w) {
    int n = w.diagram().rank();
    std::vector<int> oneline(n + 1, 0);
    std::vector<int> acc(n, 0);
    for (int i = n; i >= 1; --i) {
        for (int r = 0; r < n; ++r) acc[r] += static_cast<int>(w.matrix()(r, i - 1));
        std::vector<int> eps(n + 2, 0); // 1-based
        for (int k = 1; k <= n; ++k) {
            eps[k] += acc[k - 1];
            eps[k + 1] -= acc[k - 1];
        }
        for (int k = 1; k <= n + 1; ++k) {
            if (eps[k] == 1) oneline[i - 1] = k;
            if (eps[k] == -1) oneline[n] = k;
        }
    }
    return Permutation(oneline);
}

// Inv(w): pairs (i, j), i < j, with j appearing left of i.
inline std::vector<ValuePair> classical_inversions(const Permutation& p) {
    std::vector<ValuePair> out;
    int m = p.size();
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (p.position(j) < p.position(i)) out.push_back({i, j});
    return out;
}

// BInv(w): inversions (i, j) with no i < k < j appearing between j and i.
inline std::vector<ValuePair> bruhat_classical_inversions(const Permutation& p) {
    std::vector<ValuePair> out;
    int m = p.size();
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            if (p.position(j) >= p.position(i)) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k)
                if (p.position(j) < p.position(k) && p.position(k) < p.position(i))
                    blocked = true;
            if (!blocked) out.push_back({i, j});
        }
    return out;
}

// The Bruhat inversion graph G_w: a dot per row at column w(row), an edge
// per Bruhat inversion (joining the two dots with those values).
struct InversionGraph {
    int m = 0;                                  // n+1 dots
    std::vector<std::pair<int, int>> dots;      // (row, column) = (i, w(i))
    std::vector<ValuePair> edges;               // value pairs in BInv(w)
};

inline InversionGraph inversion_graph(const Permutation& p) {
    InversionGraph g;
    g.m = p.size();
    for (int r = 1; r <= g.m; ++r) g.dots.push_back({r, p(r)});
    g.edges = bruhat_classical_inversions(p);
    return g;
}

inline bool is_forest(const InversionGraph& g) {
    std::vector<int> parent(g.m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

// Pattern test from the factoriality criterion: w is forest-like iff there
// are no values a < b < c < d arranged as ...d...b...c...a... (4231) or
// ...c...da...b... with d,a adjacent (3-41-2 with Bruhat restriction).
inline bool avoids_patterns(const Permutation& p) {
    int m = p.size();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d) {
                    if (p.position(d) < p.position(b) &&
                        p.position(b) < p.position(c) &&
                        p.position(c) < p.position(a))
                        return false;
                    if (p.position(c) < p.position(d) &&
                        p.position(a) == p.position(d) + 1 &&
                        p.position(a) < p.position(b))
                        return false;
                }
    return true;
}

// # of forest-like permutations of S_m; the sequence for
// m = 2..7 is 2, 6, 22, 89, 379, 1661 (OEIS A111053).
inline long long count_forest_like(int m, int cap = 9) {
    if (m > cap) throw CapExceededError("count_forest_like: size above cap");
    if (m < 1) throw DomainError("count_forest_like: need m >= 1");
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    long long count = 0;
    do {
        if (is_forest(inversion_graph(Permutation(v)))) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

// Arc diagram of a Bruhat inversion edge (i, j): for each intermediate
// value k the arc passes above or below the dot k. The side is forced:
// the dot lies below the segment in the permutation diagram iff its row is
// below the row of i.
enum class ArcSide { Above, Below };

struct ArcDiagram {
    ValuePair endpoints;
    std::map<int, ArcSide> passes; // intermediate value -> side
};

inline ArcDiagram arc_diagram(const Permutation& p, ValuePair edge) {
    auto binv = bruhat_classical_inversions(p);
    if (std::find(binv.begin(), binv.end(), edge) == binv.end())
        throw NotBruhatInversionError("edge is not a Bruhat inversion of the permutation");
    ArcDiagram arc;
    arc.endpoints = edge;
    auto [i, j] = edge;
    for (int k = i + 1; k < j; ++k) {
        if (p.position(k) > p.position(i))
            arc.passes[k] = ArcSide::Above;
        else // the Bruhat condition forces position(k) < position(j)
            arc.passes[k] = ArcSide::Below;
    }
    return arc;
}

// The defining quiver Q(e): vertices are the dashed lines i..j-1 crossed by
// the arc; between lines k and k+1 sits the dot k+1, and the arrow points
// k -> k+1 when the arc passes above that dot.
struct DefiningQuiver {
    std::vector<int> vertices;                 // contiguous interval [i, j-1]
    std::vector<std::pair<int, int>> arrows;   // (from, to), |from - to| = 1
};

inline DefiningQuiver defining_quiver(const ArcDiagram& arc) {
    DefiningQuiver q;
    auto [i, j] = arc.endpoints;
    for (int k = i; k < j; ++k) q.vertices.push_back(k);
    for (int k = i; k + 1 < j; ++k) {
        if (arc.passes.at(k + 1) == ArcSide::Above)
            q.arrows.push_back({k, k + 1});
        else
            q.arrows.push_back({k + 1, k});
    }
    return q;
}

// The join-irreducible element w_e attached to a Bruhat inversion (i, j):
// values below i, plus the in-between values left of j, sorted ascending;
// then j i; then the in-between values right of i, plus values above j,
// sorted ascending. The result has a unique descent and Inv(w_e) is
// contained in Inv(w).
inline Permutation join_irreducible_w_e(const Permutation& p, ValuePair edge) {
    auto binv = bruhat_classical_inversions(p);
    if (std::find(binv.begin(), binv.end(), edge) == binv.end())
        throw NotBruhatInversionError("edge is not a Bruhat inversion of the permutation");
    auto [i, j] = edge;
    std::vector<int> left, right;
    for (int v = 1; v <= p.size(); ++v) {
        if (v == i || v == j) continue;
        if (v < i) left.push_back(v);
        else if (v > j) right.push_back(v);
        else if (p.position(v) < p.position(j)) left.push_back(v);
        else right.push_back(v); // position(v) > position(i) by the Bruhat condition
    }
    std::vector<int> one;
    one.insert(one.end(), left.begin(), left.end());
    one.push_back(j);
    one.push_back(i);
    one.insert(one.end(), right.begin(), right.end());
    return Permutation(one);
}

inline int descent_count(const Permutation& p) {
    int c = 0;
    for (int k = 1; k < p.size(); ++k)
        if (p(k) > p(k + 1)) ++c;
    return c;
}

} // namespace weylbrick
