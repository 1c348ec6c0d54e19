#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weylbrick/weyl.hpp"

namespace weylbrick {

// Bruhat inversions straight from the definition:
// { beta in inv(w) : l(t_beta w) = l(w) - 1 }.
inline std::vector<Root> bruhat_inversions_def(const WeylElement& w) {
    const DynkinDiagram& d = w.diagram();
    std::vector<Root> inv = inversion_set(w);
    std::vector<Root> out;
    for (const Root& beta : inv) {
        WeylElement t = WeylElement::reflection(d, beta);
        if (length(t * w) + 1 == inv.size()) out.push_back(beta);
    }
    return out;
}

// Deletion characterization: beta_i is a Bruhat inversion iff deleting
// letter i from a reduced word leaves a reduced word. Uses prefix/suffix
// products so each deletion costs one multiplication.
inline std::vector<Root> bruhat_inversions_deletion(const DynkinDiagram& d,
                                                    const Word& word) {
    std::vector<Root> seq = root_sequence(d, word); // throws if not reduced
    size_t l = word.size();
    std::vector<WeylElement> prefix, suffix;
    prefix.reserve(l + 1);
    suffix.reserve(l + 1);
    prefix.push_back(WeylElement::identity(d));
    for (size_t i = 0; i < l; ++i)
        prefix.push_back(prefix.back() * WeylElement::simple_reflection(d, word[i]));
    suffix.assign(l + 1, WeylElement::identity(d));
    for (size_t i = l; i-- > 0;)
        suffix[i] = WeylElement::simple_reflection(d, word[i]) * suffix[i + 1];
    std::vector<Root> out;
    for (size_t i = 0; i < l; ++i)
        if (length(prefix[i] * suffix[i + 1]) == l - 1) out.push_back(seq[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Non-Bruhat inversions via the sum criterion (simply-laced): an inversion
// is non-Bruhat iff it is a sum of two inversions.
inline std::vector<Root> non_bruhat_by_sum(const WeylElement& w) {
    const DynkinDiagram& d = w.diagram();
    std::vector<Root> inv = inversion_set(w);
    std::vector<Root> out;
    for (const Root& beta : inv)
        if (!d.sum_decompositions(beta, inv).empty()) out.push_back(beta);
    return out;
}

inline std::vector<Root> bruhat_inversions_by_sum(const WeylElement& w) {
    std::vector<Root> inv = inversion_set(w);
    std::vector<Root> non = non_bruhat_by_sum(w);
    std::vector<Root> out;
    std::set_difference(inv.begin(), inv.end(), non.begin(), non.end(),
                        std::back_inserter(out));
    return out;
}

// supp(w) = union of supports of the inversions of w; equals the set of
// letters occurring in any reduced word.
inline std::set<int> support(const WeylElement& w) {
    std::set<int> out;
    for (const Root& beta : inversion_set(w))
        for (int v : root_support(beta)) out.insert(v);
    return out;
}

// Bruhat covers below w: pairs (beta, t_beta w) over Bruhat inversions.
inline std::vector<std::pair<Root, WeylElement>>
bruhat_covers_down(const WeylElement& w) {
    const DynkinDiagram& d = w.diagram();
    std::vector<std::pair<Root, WeylElement>> out;
    for (const Root& beta : bruhat_inversions_def(w))
        out.push_back({beta, WeylElement::reflection(d, beta) * w});
    return out;
}

// Poincare polynomial of the Bruhat interval [e, w]: coefficient a_i is the
// number of v <= w with l(v) = i. Computed by downward closure under
// Bruhat covers (the Bruhat order is graded, so covers reach everything).
inline std::vector<long long> bruhat_interval_poincare(
    const WeylElement& w, size_t cap = kDefaultEnumerationCap) {
    size_t lw = length(w);
    std::vector<long long> coeff(lw + 1, 0);
    std::unordered_set<IntMatrix, MatrixHash> seen;
    std::deque<WeylElement> queue;
    seen.insert(w.matrix());
    queue.push_back(w);
    coeff[lw] += 1;
    while (!queue.empty()) {
        WeylElement v = queue.front();
        queue.pop_front();
        for (auto& [beta, u] : bruhat_covers_down(v)) {
            if (seen.count(u.matrix())) continue;
            if (seen.size() >= cap)
                throw CapExceededError("Bruhat interval exceeds enumeration cap");
            seen.insert(u.matrix());
            coeff[length(u)] += 1;
            queue.push_back(u);
        }
    }
    return coeff;
}

// Jordan-Hoelder verdict for the torsion-free class attached to w. The
// count criterion and the linear-independence criterion are provably
// equivalent; both are computed and their agreement is asserted.
struct JhpReport {
    std::vector<Root> binv;
    std::set<int> supp;
    bool counts_equal = false;
    bool linearly_independent = false;
    bool verdict = false;
};

inline JhpReport jhp_check(const WeylElement& w) {
    JhpReport rep;
    rep.binv = bruhat_inversions_def(w);
    rep.supp = support(w);
    rep.counts_equal = rep.binv.size() == rep.supp.size();
    int n = w.diagram().rank();
    IntMatrix m(static_cast<int>(rep.binv.size()), n);
    for (size_t r = 0; r < rep.binv.size(); ++r)
        for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = rep.binv[r][c];
    rep.linearly_independent =
        integer_rank(m) == static_cast<int>(rep.binv.size());
    if (rep.counts_equal != rep.linearly_independent)
        throw DomainError("internal error: JHP criteria disagree");
    rep.verdict = rep.counts_equal;
    return rep;
}

// Dimension vectors of the simple objects in F(w): exactly the Bruhat
// inversions. The same set answers the path-algebra case.
inline std::vector<Root> simple_dimension_vectors(const WeylElement& w) {
    return bruhat_inversions_def(w);
}

// Brick dimension vectors along the maximal green sequence determined by a
// reduced word, each flagged simple (a Bruhat inversion) or not.
struct FlaggedRoot {
    Root root;
    bool simple;
};

inline std::vector<FlaggedRoot> brick_dimension_sequence(const DynkinDiagram& d,
                                                         const Word& word) {
    std::vector<Root> seq = root_sequence(d, word); // throws if not reduced
    std::vector<Root> binv = bruhat_inversions_deletion(d, word);
    std::unordered_set<Root, VectorHash> simple(binv.begin(), binv.end());
    std::vector<FlaggedRoot> out;
    for (const Root& r : seq) out.push_back({r, simple.count(r) > 0});
    return out;
}

} // namespace weylbrick
