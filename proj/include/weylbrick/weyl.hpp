#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weylbrick/diagram.hpp"

namespace weylbrick {

// A word in simple reflections; letters are vertex ids.
using Word = std::vector<int>;

// Cap for interval / group enumeration (|W(E8)| would not fit on a desk).
inline constexpr size_t kDefaultEnumerationCap = 1000000;

// A Weyl group element in canonical matrix form: column i is the image
// w(alpha_i) in simple-root coordinates. Equality is matrix equality.
class WeylElement {
public:
    WeylElement(const DynkinDiagram& d, IntMatrix m)
        : diagram_(&d), matrix_(std::move(m)) {}

    static WeylElement identity(const DynkinDiagram& d) {
        return WeylElement(d, IntMatrix::identity(d.rank()));
    }

    // The simple reflection s_i.
    static WeylElement simple_reflection(const DynkinDiagram& d, int i) {
        return reflection(d, d.simple_root(i));
    }

    // The reflection t_beta for any root beta; column j = t_beta(alpha_j).
    static WeylElement reflection(const DynkinDiagram& d, const Root& beta) {
        int n = d.rank();
        IntMatrix m(n, n);
        for (int j = 0; j < n; ++j) {
            Root img = d.reflect(beta, d.simple_root(j));
            for (int i = 0; i < n; ++i) m(i, j) = img[i];
        }
        return WeylElement(d, m);
    }

    const DynkinDiagram& diagram() const { return *diagram_; }
    const IntMatrix& matrix() const { return matrix_; }

    bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const { return matrix_.data < o.matrix_.data; }

    bool is_identity() const { return matrix_ == IntMatrix::identity(diagram_->rank()); }

    Root apply(const Root& r) const {
        auto v = weylbrick::apply(matrix_, r);
        Root out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<int>(v[i]);
        return out;
    }

    // Group product: (v * w)(x) = v(w(x)).
    WeylElement operator*(const WeylElement& o) const {
        return WeylElement(*diagram_, multiply(matrix_, o.matrix_));
    }

    // Inverse via the permutation action on the root set: column j of the
    // inverse is the unique root sent to alpha_j.
    WeylElement inverse() const {
        int n = diagram_->rank();
        IntMatrix m(n, n);
        auto record = [&](const Root& src) {
            Root img = apply(src);
            int ones = 0, idx = -1;
            for (int i = 0; i < n; ++i) {
                if (img[i] == 1 && ones == 0) { ones = 1; idx = i; }
                else if (img[i] != 0) { idx = -1; break; }
            }
            if (idx >= 0)
                for (int i = 0; i < n; ++i) m(i, idx) = src[i];
        };
        for (const Root& r : diagram_->positive_roots()) {
            record(r);
            record(negate(r));
        }
        return WeylElement(*diagram_, m);
    }

private:
    const DynkinDiagram* diagram_;
    IntMatrix matrix_;
};

struct WeylElementHash {
    size_t operator()(const WeylElement& w) const { return MatrixHash{}(w.matrix()); }
};

inline WeylElement evaluate(const DynkinDiagram& d, const Word& word) {
    WeylElement w = WeylElement::identity(d);
    for (int a : word) {
        if (a < 0 || a >= d.rank()) throw DomainError("word letter out of range");
        w = w * WeylElement::simple_reflection(d, a);
    }
    return w;
}

// inv(w) = Phi+ ∩ w(Phi-), sorted lexicographically.
inline std::vector<Root> inversion_set(const WeylElement& w) {
    std::vector<Root> out;
    for (const Root& r : w.diagram().positive_roots()) {
        Root img = w.apply(negate(r));
        if (is_nonneg(img)) out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline size_t length(const WeylElement& w) { return inversion_set(w).size(); }

inline bool is_reduced(const DynkinDiagram& d, const Word& word) {
    return length(evaluate(d, word)) == word.size();
}

// The lexicographically least reduced word: greedily take the smallest
// letter a with l(s_a w) < l(w), i.e. w^{-1}(alpha_a) negative.
inline Word canonical_reduced_word(const WeylElement& w) {
    const DynkinDiagram& d = w.diagram();
    int n = d.rank();
    Word out;
    IntMatrix inv = w.inverse().matrix(); // columns are w^{-1}(alpha_i)
    WeylElement x(d, inv);
    while (!x.is_identity()) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            Root col(n);
            for (int r = 0; r < n; ++r) col[r] = static_cast<int>(x.matrix()(r, i));
            if (is_nonpos(col)) pick = i;
        }
        // every non-identity element has a left descent
        out.push_back(pick);
        // (s_a w)^{-1} = w^{-1} s_a
        x = x * WeylElement::simple_reflection(d, pick);
    }
    return out;
}

// Root sequence of a reduced word: entry m is s_{u_1}...s_{u_{m-1}}(alpha_{u_m}).
inline std::vector<Root> root_sequence(const DynkinDiagram& d, const Word& word) {
    if (!is_reduced(d, word)) throw NonReducedWordError();
    std::vector<Root> out;
    WeylElement prefix = WeylElement::identity(d);
    for (int a : word) {
        out.push_back(prefix.apply(d.simple_root(a)));
        prefix = prefix * WeylElement::simple_reflection(d, a);
    }
    return out;
}

// Witness for a Papi violation: the triple (alpha, beta, alpha+beta) and
// which of the two conditions failed.
struct PapiViolation {
    Root alpha, beta, sum;
    int condition; // 1 = betweenness, 2 = missing summand before the sum
};

struct PapiResult {
    bool ok = true;
    std::optional<PapiViolation> violation;
};

// Papi's criterion: a sequence of positive roots is a root sequence iff for
// every pair alpha, beta of positive roots with alpha+beta a positive root,
// (1) if both appear, alpha+beta appears strictly between them, and
// (2) if alpha+beta appears, one of alpha, beta appears before it.
inline PapiResult papi_check(const DynkinDiagram& d, const std::vector<Root>& seq) {
    std::unordered_map<Root, int, VectorHash> pos;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (!d.is_positive_root(seq[i]))
            throw DomainError("papi_check: entry is not a positive root");
        pos[seq[i]] = static_cast<int>(i);
    }
    const auto& phi_plus = d.positive_roots();
    for (size_t i = 0; i < phi_plus.size(); ++i) {
        for (size_t j = i + 1; j < phi_plus.size(); ++j) {
            Root sum = add(phi_plus[i], phi_plus[j]);
            if (!d.is_positive_root(sum)) continue;
            auto pa = pos.find(phi_plus[i]);
            auto pb = pos.find(phi_plus[j]);
            auto ps = pos.find(sum);
            if (pa != pos.end() && pb != pos.end()) {
                int lo = std::min(pa->second, pb->second);
                int hi = std::max(pa->second, pb->second);
                if (ps == pos.end() || ps->second <= lo || ps->second >= hi)
                    return {false, PapiViolation{phi_plus[i], phi_plus[j], sum, 1}};
            }
            if (ps != pos.end()) {
                bool before = (pa != pos.end() && pa->second < ps->second) ||
                              (pb != pos.end() && pb->second < ps->second);
                if (!before)
                    return {false, PapiViolation{phi_plus[i], phi_plus[j], sum, 2}};
            }
        }
    }
    return {};
}

// Labeled Hasse quiver of the weak-order interval [e, w]: an arrow points
// from vs_a down to v and carries the root v(alpha_a).
struct HasseArrow {
    int from; // index of the longer element (v s_a)
    int to;   // index of v
    Root label;
};

struct HasseInterval {
    std::vector<WeylElement> vertices; // vertices[0] = w, sorted by descent BFS
    std::vector<HasseArrow> arrows;
    std::vector<size_t> lengths; // length of each vertex
};

inline HasseInterval weak_order_hasse_interval(const WeylElement& w,
                                               size_t cap = kDefaultEnumerationCap) {
    const DynkinDiagram& d = w.diagram();
    int n = d.rank();
    HasseInterval out;
    std::unordered_map<IntMatrix, int, MatrixHash> index;
    std::deque<int> queue;
    auto intern = [&](const WeylElement& v) {
        auto it = index.find(v.matrix());
        if (it != index.end()) return it->second;
        if (out.vertices.size() >= cap)
            throw CapExceededError("weak-order interval exceeds enumeration cap");
        int id = static_cast<int>(out.vertices.size());
        index.emplace(v.matrix(), id);
        out.vertices.push_back(v);
        out.lengths.push_back(length(v));
        queue.push_back(id);
        return id;
    };
    intern(w);
    while (!queue.empty()) {
        int uid = queue.front();
        queue.pop_front();
        WeylElement u = out.vertices[uid];
        for (int a = 0; a < n; ++a) {
            // a is a right descent of u iff u(alpha_a) is negative
            if (!is_nonpos(u.apply(d.simple_root(a)))) continue;
            WeylElement v = u * WeylElement::simple_reflection(d, a);
            int vid = intern(v);
            out.arrows.push_back({uid, vid, v.apply(d.simple_root(a))});
        }
    }
    return out;
}

// All reduced words of w = all maximal reverse paths in the weak-order
// Hasse interval, enumerated by recursive descent over right descents.
inline std::vector<Word> all_reduced_words(const WeylElement& w,
                                           size_t cap = kDefaultEnumerationCap) {
    const DynkinDiagram& d = w.diagram();
    int n = d.rank();
    std::vector<Word> out;
    struct Frame {
        WeylElement v;
        Word suffix;
    };
    std::vector<Frame> stack{{w, {}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.v.is_identity()) {
            Word word(f.suffix.rbegin(), f.suffix.rend());
            out.push_back(std::move(word));
            if (out.size() > cap)
                throw CapExceededError("reduced-word enumeration exceeds cap");
            continue;
        }
        for (int a = n - 1; a >= 0; --a) {
            if (!is_nonpos(f.v.apply(d.simple_root(a)))) continue;
            Frame g{f.v * WeylElement::simple_reflection(d, a), f.suffix};
            g.suffix.push_back(a);
            stack.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace weylbrick
