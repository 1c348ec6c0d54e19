#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "weylbrick/errors.hpp"
#include "weylbrick/intlinalg.hpp"

namespace weylbrick {

// A root in simple-root coordinates. Entry i is the coefficient of alpha_i.
// Also used as the dimension vector of a module over the preprojective
// algebra (udim).
using Root = std::vector<int>;

inline bool is_nonneg(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}
inline bool is_nonpos(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
}
inline Root negate(const Root& r) {
    Root out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
    return out;
}
inline Root add(const Root& a, const Root& b) {
    Root out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// A validated simply-laced Dynkin diagram: connected simple graph whose
// Cartan matrix is positive definite. Immutable after construction;
// positive roots are enumerated eagerly so membership tests are O(1).
class DynkinDiagram {
public:
    DynkinDiagram(int vertices, std::vector<std::pair<int, int>> edges,
                  std::string preset = "")
        : n_(vertices), preset_(std::move(preset)) {
        if (n_ <= 0) throw InvalidDiagramError("diagram needs at least one vertex");
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_)
                throw InvalidDiagramError("edge endpoint out of range");
            if (a == b) throw InvalidDiagramError("loops are not allowed");
            edges_.insert({std::min(a, b), std::max(a, b)});
        }
        if (edges_.size() != edges.size())
            throw InvalidDiagramError("duplicate edge");
        check_connected();
        build_cartan();
        check_positive_definite();
        enumerate_roots();
    }

    static DynkinDiagram preset(const std::string& name) {
        if (name.size() < 2) throw InvalidDiagramError("unknown preset: " + name);
        char family = name[0];
        int n = std::stoi(name.substr(1));
        std::vector<std::pair<int, int>> edges;
        if (family == 'A' && n >= 1 && n <= 8) {
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return DynkinDiagram(n, edges, name);
        }
        if (family == 'D' && n >= 4 && n <= 8) {
            // center 0 adjacent to 1, 2 and 3, then a chain 3-4-...-(n-1);
            // for D4 this is the labeling with center 0 and leaves 1,2,3
            edges = {{0, 1}, {0, 2}, {0, 3}};
            for (int i = 3; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return DynkinDiagram(n, edges, name);
        }
        if (family == 'E' && n >= 6 && n <= 8) {
            // path 1-2-...-(n-1) with branch vertex 0 attached to 3
            for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, 3});
            return DynkinDiagram(n, edges, name);
        }
        throw InvalidDiagramError("unknown preset: " + name);
    }

    int rank() const { return n_; }
    const std::string& preset_name() const { return preset_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    const IntMatrix& cartan_matrix() const { return cartan_; }

    bool adjacent(int i, int j) const {
        return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
    }

    Root simple_root(int i) const {
        Root r(n_, 0);
        r[i] = 1;
        return r;
    }

    // Positive roots, sorted lexicographically by coordinates.
    const std::vector<Root>& positive_roots() const { return positive_; }

    bool is_root(const Root& r) const { return root_set_.count(r) > 0; }
    bool is_positive_root(const Root& r) const { return is_root(r) && is_nonneg(r); }

    // <beta, gamma> = beta^T C gamma, with all root lengths normalized to 2.
    long long pairing(const Root& beta, const Root& gamma) const {
        if (static_cast<int>(beta.size()) != n_ || static_cast<int>(gamma.size()) != n_)
            throw DomainError("pairing: dimension mismatch");
        long long out = 0;
        for (int i = 0; i < n_; ++i) {
            if (beta[i] == 0) continue;
            for (int j = 0; j < n_; ++j)
                out += static_cast<long long>(beta[i]) * cartan_(i, j) * gamma[j];
        }
        return out;
    }

    // t_alpha(beta) = beta - <beta, alpha> alpha
    Root reflect(const Root& alpha, const Root& beta) const {
        if (!is_root(alpha)) throw DomainError("reflect: alpha is not a root");
        long long c = pairing(beta, alpha);
        Root out(beta);
        for (int i = 0; i < n_; ++i) out[i] -= static_cast<int>(c) * alpha[i];
        return out;
    }

    // All unordered pairs {g1, g2} from the pool with g1 + g2 = beta and
    // g1 != g2, sorted lexicographically.
    std::vector<std::pair<Root, Root>>
    sum_decompositions(const Root& beta, const std::vector<Root>& pool) const {
        std::unordered_set<Root, VectorHash> in_pool(pool.begin(), pool.end());
        std::vector<std::pair<Root, Root>> out;
        for (const Root& g1 : pool) {
            Root g2(n_);
            for (int i = 0; i < n_; ++i) g2[i] = beta[i] - g1[i];
            if (g2 == g1) continue;
            if (g1 > g2) continue; // emit each unordered pair once
            if (in_pool.count(g2)) out.push_back({g1, g2});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void check_connected() {
        std::vector<int> seen(n_, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : edges_) {
                int u = -1;
                if (a == v) u = b;
                else if (b == v) u = a;
                if (u >= 0 && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw InvalidDiagramError("diagram is not connected");
    }

    void build_cartan() {
        cartan_ = IntMatrix(n_, n_);
        for (int i = 0; i < n_; ++i) cartan_(i, i) = 2;
        for (auto [a, b] : edges_) {
            cartan_(a, b) = -1;
            cartan_(b, a) = -1;
        }
    }

    void check_positive_definite() {
        for (long long minor : leading_principal_minors(cartan_))
            if (minor <= 0)
                throw InvalidDiagramError(
                    "Cartan matrix is not positive definite (not a Dynkin diagram)");
    }

    // Saturate the simple roots under all simple reflections (axiom R2) and
    // keep the positive orbit.
    void enumerate_roots() {
        std::vector<Root> queue;
        for (int i = 0; i < n_; ++i) {
            Root a = simple_root(i);
            root_set_.insert(a);
            root_set_.insert(negate(a));
            queue.push_back(a);
        }
        while (!queue.empty()) {
            Root r = queue.back();
            queue.pop_back();
            for (int i = 0; i < n_; ++i) {
                long long c = pairing(r, simple_root(i));
                Root s(r);
                s[i] -= static_cast<int>(c);
                if (!root_set_.count(s)) {
                    root_set_.insert(s);
                    root_set_.insert(negate(s));
                    queue.push_back(s);
                }
            }
        }
        for (const Root& r : root_set_)
            if (is_nonneg(r)) positive_.push_back(r);
        std::sort(positive_.begin(), positive_.end());
    }

    int n_;
    std::string preset_;
    std::set<std::pair<int, int>> edges_;
    IntMatrix cartan_;
    std::vector<Root> positive_;
    std::unordered_set<Root, VectorHash> root_set_;
};

inline IntMatrix cartan_matrix(const DynkinDiagram& d) { return d.cartan_matrix(); }

inline std::vector<Root> positive_roots(const DynkinDiagram& d) {
    return d.positive_roots();
}

// Support of a root: the vertex ids with nonzero coordinate.
inline std::set<int> root_support(const Root& r) {
    std::set<int> out;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) out.insert(static_cast<int>(i));
    return out;
}

} // namespace weylbrick
