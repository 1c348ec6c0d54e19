#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "weylbrick/typea.hpp"

namespace weylbrick {

// A thin representation of the double quiver of type A_n: every vertex
// space is 0 or 1 dimensional and every arrow map is the scalar 0 or 1.
// Vertices are 1..n; forward[k] is the arrow k -> k+1 and backward[k] the
// arrow k+1 -> k, for k = 1..n-1.
struct ThinRep {
    int n = 0;
    std::set<int> support;
    std::vector<int> forward;  // index k-1 holds arrow k -> k+1
    std::vector<int> backward; // index k-1 holds arrow k+1 -> k

    explicit ThinRep(int rank) : n(rank), forward(rank > 0 ? rank - 1 : 0, 0),
                                 backward(rank > 0 ? rank - 1 : 0, 0) {}

    bool has(int v) const { return support.count(v) > 0; }

    void set_forward(int k, int scalar) {
        if (scalar != 0 && (!has(k) || !has(k + 1)))
            throw DomainError("arrow scalar requires both endpoints in support");
        forward[k - 1] = scalar;
    }
    void set_backward(int k, int scalar) {
        if (scalar != 0 && (!has(k) || !has(k + 1)))
            throw DomainError("arrow scalar requires both endpoints in support");
        backward[k - 1] = scalar;
    }

    static ThinRep simple(int rank, int vertex) {
        ThinRep m(rank);
        m.support.insert(vertex);
        return m;
    }
};

// B_e from a defining quiver: vertex space k at each quiver vertex, the
// identity map on each quiver arrow, zero elsewhere.
inline ThinRep build_brick(const DefiningQuiver& q, int n) {
    ThinRep m(n);
    for (int v : q.vertices) {
        if (v < 1 || v > n) throw DomainError("defining quiver vertex out of range");
        m.support.insert(v);
    }
    for (auto [from, to] : q.arrows) {
        if (to == from + 1) m.set_forward(from, 1);
        else if (from == to + 1) m.set_backward(to, 1);
        else throw DomainError("defining quiver arrow is not between adjacent vertices");
    }
    return m;
}

// udim: the indicator vector of the support, in 0-based coordinates.
inline Root dimension_vector(const ThinRep& m) {
    Root r(m.n, 0);
    for (int v : m.support) r[v - 1] = 1;
    return r;
}

// The preprojective relation sum(a a* - a* a) evaluated at each vertex.
// For thin maps the value at vertex k is f[k] b[k] - b[k-1] f[k-1].
inline bool check_preprojective_relations(const ThinRep& m) {
    for (int k = 1; k <= m.n; ++k) {
        long long v = 0;
        if (k < m.n) v += static_cast<long long>(m.forward[k - 1]) * m.backward[k - 1];
        if (k > 1) v -= static_cast<long long>(m.backward[k - 2]) * m.forward[k - 2];
        if (v != 0) return false;
    }
    return true;
}

// Hom_Pi(M, N) for thin representations. Each commuting-square constraint
// degenerates to phi_u = phi_v, phi = 0, or 0 = 0, so the solution space
// is computed by constraint propagation (union-find plus zero marks) on
// the shared support.
struct HomSpace {
    int dimension = 0;
    // basis[b][v] is the scalar of basis hom b at vertex v (1-based, 0 off
    // the shared support)
    std::vector<std::vector<int>> basis;
    // component id per shared vertex, -1 if not shared; forced-zero
    // components have free_component[...] == false
    std::vector<int> component;
    std::vector<bool> component_free;
};

inline HomSpace hom_space(const ThinRep& m, const ThinRep& nn) {
    if (m.n != nn.n) throw DomainError("hom_space: rank mismatch");
    int n = m.n;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> zero(n + 1, false);
    auto shared = [&](int v) { return m.has(v) && nn.has(v); };

    // one constraint per double-quiver arrow a: v -> u, reading
    // N_a . phi_v = phi_u . M_a
    auto constrain = [&](int v, int u, int ma, int na) {
        if (!m.has(v) || !nn.has(u)) return; // domain or codomain is 0
        // a nonzero thin arrow scalar has both endpoints in support, so
        // na != 0 implies v is shared and ma != 0 implies u is shared
        int lhs = na != 0 ? v : 0; // 0 marks a literal zero term
        int rhs = ma != 0 ? u : 0;
        if (lhs == 0 && rhs == 0) return;
        if (lhs != 0 && rhs != 0) parent[find(lhs)] = find(rhs);
        else if (lhs != 0) zero[lhs] = true;
        else zero[rhs] = true;
    };
    for (int k = 1; k < n; ++k) {
        constrain(k, k + 1, m.forward[k - 1], nn.forward[k - 1]);
        constrain(k + 1, k, m.backward[k - 1], nn.backward[k - 1]);
    }

    HomSpace h;
    h.component.assign(n + 1, -1);
    std::vector<int> root_to_comp(n + 1, -1);
    std::vector<bool> comp_zero;
    for (int v = 1; v <= n; ++v) {
        if (!shared(v)) continue;
        int r = find(v);
        if (root_to_comp[r] < 0) {
            root_to_comp[r] = static_cast<int>(comp_zero.size());
            comp_zero.push_back(false);
        }
        h.component[v] = root_to_comp[r];
    }
    for (int v = 1; v <= n; ++v)
        if (zero[v] && h.component[v] >= 0) comp_zero[h.component[v]] = true;
    h.component_free.resize(comp_zero.size());
    for (size_t c = 0; c < comp_zero.size(); ++c) {
        h.component_free[c] = !comp_zero[c];
        if (!comp_zero[c]) {
            std::vector<int> b(n + 1, 0);
            for (int v = 1; v <= n; ++v)
                if (h.component[v] == static_cast<int>(c)) b[v] = 1;
            h.basis.push_back(std::move(b));
            ++h.dimension;
        }
    }
    return h;
}

inline bool is_brick(const ThinRep& m) {
    if (m.support.empty()) throw DomainError("is_brick: zero representation");
    return hom_space(m, m).dimension == 1;
}

// True iff every nonzero hom M -> N is injective. A thin hom is injective
// iff its scalar is nonzero on all of supp(M), so the check reduces to:
// either Hom = 0, or Hom is one-dimensional and its basis hom is nonzero
// on all of supp(M).
inline bool zero_mono_check(const ThinRep& m, const ThinRep& nn) {
    HomSpace h = hom_space(m, nn);
    if (h.dimension == 0) return true;
    if (h.dimension > 1) return false; // zero out one free component, keep another
    const auto& b = h.basis[0];
    for (int v : m.support)
        if (b[v] == 0) return false;
    return true;
}

} // namespace weylbrick
