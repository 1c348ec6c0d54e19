#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylbrick/quiverrep.hpp"
#include "weylbrick/sortable.hpp"

namespace weylbrick {

// Arm decomposition of a tree diagram around its unique branch vertex, if
// any. Used for the two-line root labels.
namespace detail {

inline std::vector<int> neighbors(const DynkinDiagram& d, int v) {
    std::vector<int> out;
    for (int u = 0; u < d.rank(); ++u)
        if (u != v && d.adjacent(u, v)) out.push_back(u);
    return out;
}

// Walk away from `from` starting at `start` until the path ends.
inline std::vector<int> walk_arm(const DynkinDiagram& d, int from, int start) {
    std::vector<int> arm{start};
    int prev = from, cur = start;
    while (true) {
        int next = -1;
        for (int u : neighbors(d, cur))
            if (u != prev) next = u;
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

} // namespace detail

// Compact coordinate label: "110" along the path for type A, and a
// "1/121" two-line string (top arm over the branch position) for D/E.
// Falls back to a comma-separated tuple for anything else.
inline std::string format_root(const DynkinDiagram& d, const Root& r) {
    int n = d.rank();
    int branch = -1;
    for (int v = 0; v < n; ++v) {
        size_t deg = detail::neighbors(d, v).size();
        if (deg > 3) branch = -2;
        if (deg == 3 && branch == -1) branch = v;
        else if (deg == 3) branch = -2;
    }
    auto digits = [&](const std::vector<int>& order) {
        std::string s;
        for (int v : order) {
            int c = r[v];
            if (c < 0 || c > 9) return std::string();
            s += static_cast<char>('0' + c);
        }
        return s;
    };
    if (branch == -1) {
        // path graph: digits from one endpoint to the other, smaller
        // endpoint first
        int end = -1;
        for (int v = 0; v < n && end < 0; ++v)
            if (detail::neighbors(d, v).size() <= 1) end = v;
        std::vector<int> order =
            n == 1 ? std::vector<int>{0} : detail::walk_arm(d, -1, end);
        std::string s = digits(order);
        if (!s.empty()) return s;
    } else if (branch >= 0) {
        auto nbrs = detail::neighbors(d, branch);
        std::vector<std::vector<int>> arms;
        for (int u : nbrs) arms.push_back(detail::walk_arm(d, branch, u));
        // top arm: among the shortest arms, the middle one by leaf id
        size_t min_len = arms[0].size();
        for (auto& a : arms) min_len = std::min(min_len, a.size());
        std::vector<int> cands;
        for (size_t i = 0; i < arms.size(); ++i)
            if (arms[i].size() == min_len) cands.push_back(static_cast<int>(i));
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            return arms[a].back() < arms[b].back();
        });
        int top = cands[cands.size() / 2];
        if (arms[top].size() == 1) {
            std::vector<int> bottom;
            std::vector<int> rest;
            for (size_t i = 0; i < arms.size(); ++i)
                if (static_cast<int>(i) != top) rest.push_back(static_cast<int>(i));
            // bottom line: first arm reversed, branch vertex, second arm
            const auto& left = arms[rest[0]].back() < arms[rest[1]].back()
                                   ? arms[rest[0]] : arms[rest[1]];
            const auto& right = &left == &arms[rest[0]] ? arms[rest[1]] : arms[rest[0]];
            for (auto it = left.rbegin(); it != left.rend(); ++it) bottom.push_back(*it);
            bottom.push_back(branch);
            for (int v : right) bottom.push_back(v);
            std::string sb = digits(bottom);
            std::string st = digits({arms[top][0]});
            if (!sb.empty() && !st.empty()) return st + "/" + sb;
        }
    }
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

inline nlohmann::json root_to_json(const Root& r) { return nlohmann::json(r); }

inline nlohmann::json roots_to_json(const std::vector<Root>& rs) {
    nlohmann::json j = nlohmann::json::array();
    for (const Root& r : rs) j.push_back(r);
    return j;
}

inline DynkinDiagram diagram_from_json(const nlohmann::json& j) {
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return DynkinDiagram(n, edges);
}

inline nlohmann::json thinrep_to_json(const ThinRep& m) {
    nlohmann::json arrows = nlohmann::json::array();
    for (int k = 1; k < m.n; ++k) {
        if (m.forward[k - 1]) arrows.push_back({{"from", k}, {"to", k + 1}});
        if (m.backward[k - 1]) arrows.push_back({{"from", k + 1}, {"to", k}});
    }
    return {{"n", m.n},
            {"support", std::vector<int>(m.support.begin(), m.support.end())},
            {"arrows", arrows}};
}

inline ThinRep thinrep_from_json(const nlohmann::json& j) {
    ThinRep m(j.at("n").get<int>());
    for (int v : j.at("support")) m.support.insert(v);
    for (const auto& a : j.at("arrows")) {
        int from = a.at("from").get<int>(), to = a.at("to").get<int>();
        if (to == from + 1) m.set_forward(from, 1);
        else if (from == to + 1) m.set_backward(to, 1);
        else throw DomainError("thin rep arrow is not between adjacent vertices");
    }
    return m;
}

inline nlohmann::json quiver_to_json(const DefiningQuiver& q, ValuePair edge) {
    nlohmann::json arrows = nlohmann::json::array();
    for (auto [from, to] : q.arrows) arrows.push_back({from, to});
    return {{"edge", {edge.first, edge.second}},
            {"vertices", q.vertices},
            {"arrows", arrows}};
}

// DOT emitters -------------------------------------------------------------

inline std::string hasse_to_dot(const DynkinDiagram& d, const HasseInterval& h) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=TB;\n";
    for (size_t i = 0; i < h.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << (h.lengths[i] == 0 ? "e" : "l=" +
               std::to_string(h.lengths[i])) << "\"];\n";
    std::vector<HasseArrow> arrows = h.arrows;
    std::sort(arrows.begin(), arrows.end(), [](const HasseArrow& a, const HasseArrow& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    for (const auto& a : arrows)
        os << "  v" << a.from << " -> v" << a.to << " [label=\""
           << format_root(d, a.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string inversion_graph_to_dot(const InversionGraph& g) {
    std::ostringstream os;
    os << "graph inversion_graph {\n  node [shape=point];\n";
    for (auto [row, col] : g.dots)
        os << "  d" << col << " [pos=\"" << col << "," << (g.m - row)
           << "!\", xlabel=\"" << col << "\"];\n";
    for (auto [a, b] : g.edges) os << "  d" << a << " -- d" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string quiver_to_dot(const DefiningQuiver& q) {
    std::ostringstream os;
    os << "digraph defining_quiver {\n  rankdir=LR;\n";
    for (int v : q.vertices) os << "  q" << v << " [label=\"" << v << "\"];\n";
    for (auto [from, to] : q.arrows) os << "  q" << from << " -> q" << to << ";\n";
    os << "}\n";
    return os.str();
}

// Word / permutation parsing ------------------------------------------------

inline Word parse_word(const std::string& s) {
    Word out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// Compact digit form allowed only for n+1 <= 9; otherwise comma-separated.
inline Permutation parse_permutation(const std::string& s) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) v.push_back(std::stoi(tok));
    } else {
        if (s.size() > 9)
            throw DomainError("compact digit form only allowed for n+1 <= 9");
        for (char c : s) {
            if (c < '1' || c > '9') throw DomainError("bad permutation digit");
            v.push_back(c - '0');
        }
    }
    return Permutation(v);
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

} // namespace weylbrick
