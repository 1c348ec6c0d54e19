// weylbrick: Bruhat inversions, brick sequences, and Jordan-Holder verdicts
// for simply-laced Weyl groups, plus the type-A permutation toolbox.

#include <cstdlib>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "weylbrick/io.hpp"

using namespace weylbrick;
using nlohmann::json;

namespace {

struct Options {
    std::string type;
    std::string edges;
    std::string word;
    std::string one_line;
    std::string method = "def";
    std::string format = "text";
    std::string orientation;
    std::string edge;
    size_t cap = kDefaultEnumerationCap;
    int jobs = 1;
    unsigned seed = 42;
    int n = 0;
};

// Generator letters mirror the usual labeling: 1..n for the A_n presets,
// 0-based vertex ids for everything else (D/E presets, custom --edges).
bool one_based(const std::string& type) {
    return !type.empty() && type[0] == 'A';
}

DynkinDiagram make_diagram(const Options& opt) {
    if (!opt.type.empty()) return DynkinDiagram::preset(opt.type);
    if (opt.edges.empty())
        throw DomainError("need --type or --edges to define a diagram");
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::stringstream ss(opt.edges);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw DomainError("--edges expects pairs like 0-1,1-2");
        int a = std::stoi(tok.substr(0, dash));
        int b = std::stoi(tok.substr(dash + 1));
        edges.push_back({a, b});
        n = std::max({n, a + 1, b + 1});
    }
    return DynkinDiagram(n, edges);
}

Word make_word(const Options& opt) {
    Word w = parse_word(opt.word);
    if (one_based(opt.type))
        for (int& a : w) --a;
    return w;
}

json root_json(const DynkinDiagram& d, const Root& r) {
    return {{"coords", r}, {"label", format_root(d, r)}};
}

void print_roots(const DynkinDiagram& d, const std::vector<Root>& rs,
                 const Options& opt) {
    if (opt.format == "json") {
        json j = json::array();
        for (const Root& r : rs) j.push_back(root_json(d, r));
        std::cout << j.dump() << "\n";
    } else {
        for (const Root& r : rs) std::cout << format_root(d, r) << "\n";
    }
}

ValuePair parse_edge(const std::string& s) {
    Word v = parse_word(s);
    if (v.size() != 2 || v[0] >= v[1] || v[0] < 1)
        throw DomainError("--edge expects i,j with 1 <= i < j");
    return {v[0], v[1]};
}

Orientation make_orientation(const Options& opt, const DynkinDiagram& d) {
    if (opt.orientation.empty())
        throw DomainError("need --orientation {\"diagram\":...,\"arrows\":[...]}");
    json j = json::parse(opt.orientation);
    int shift = one_based(j.value("diagram", opt.type)) ? 1 : 0;
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at(0).get<int>() - shift, a.at(1).get<int>() - shift});
    return Orientation(d, arrows);
}

// --- verify suites ----------------------------------------------------------

bool verify_oracle_exhaustive(const DynkinDiagram& d, size_t cap) {
    for (const auto& w : enumerate_group(d, cap)) {
        auto by_def = bruhat_inversions_def(w);
        if (by_def != bruhat_inversions_by_sum(w)) return false;
        if (bruhat_inversions_deletion(d, canonical_reduced_word(w)) != by_def)
            return false;
    }
    return true;
}

bool verify_oracle_random(const DynkinDiagram& d, int samples, unsigned seed,
                          int jobs) {
    jobs = std::max(1, jobs);
    std::vector<char> ok(jobs, 1);
    auto run = [&](int job) {
        std::mt19937 rng(seed + static_cast<unsigned>(job));
        std::uniform_int_distribution<int> gen(0, d.rank() - 1);
        int share = samples / jobs + (job < samples % jobs ? 1 : 0);
        for (int t = 0; t < share; ++t) {
            WeylElement w = WeylElement::identity(d);
            int steps = 20 + static_cast<int>(rng() % 60);
            for (int s = 0; s < steps; ++s)
                w = w * WeylElement::simple_reflection(d, gen(rng));
            auto by_def = bruhat_inversions_def(w);
            if (by_def != bruhat_inversions_by_sum(w) ||
                bruhat_inversions_deletion(d, canonical_reduced_word(w)) != by_def) {
                ok[job] = 0;
                return;
            }
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(run, j);
        for (auto& t : pool) t.join();
    }
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

int report(const char* name, bool ok) {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_verify(const std::string& suite, const Options& opt) {
    int bad = 0;
    if (suite == "oracle") {
        for (const char* t : {"A3", "A4", "D4"})
            bad += report(t, verify_oracle_exhaustive(DynkinDiagram::preset(t), opt.cap));
        for (const char* t : {"D5", "E6"})
            bad += report(t, verify_oracle_random(DynkinDiagram::preset(t), 10000,
                                                  opt.seed, opt.jobs));
    } else if (suite == "figures") {
        using Arrows = std::vector<std::pair<int, int>>;
        auto check = [](const Permutation& p, ValuePair e,
                        const std::vector<int>& vs, const Arrows& as) {
            auto q = defining_quiver(arc_diagram(p, e));
            return q.vertices == vs && q.arrows == as;
        };
        Permutation p1({4, 2, 5, 1, 3}), p2({4, 2, 3, 5, 1});
        bool figs = check(p1, {1, 2}, {1}, {}) &&
                    check(p1, {2, 4}, {2, 3}, {{2, 3}}) &&
                    check(p1, {1, 5}, {1, 2, 3, 4}, {{2, 1}, {2, 3}, {4, 3}}) &&
                    check(p1, {3, 4}, {3}, {}) &&
                    check(p1, {3, 5}, {3, 4}, {{4, 3}}) &&
                    check(p2, {2, 4}, {2, 3}, {{2, 3}}) &&
                    check(p2, {1, 5}, {1, 2, 3, 4}, {{2, 1}, {3, 2}, {4, 3}});
        bad += report("defining quivers", figs);
        auto we = join_irreducible_w_e(Permutation({5, 6, 7, 2, 3, 8, 1, 4}), {3, 6});
        bad += report("join-irreducible w_e",
                      we.one_line() == std::vector<int>{1, 2, 5, 6, 3, 4, 7, 8});
    } else if (suite == "counts") {
        const long long expected[] = {2, 6, 22, 89, 379, 1661};
        bool forests = true;
        for (int m = 2; m <= 7; ++m)
            forests = forests && count_forest_like(m) == expected[m - 2];
        bad += report("forest-like counts", forests);
        auto a1 = DynkinDiagram::preset("A1");
        auto a2 = DynkinDiagram::preset("A2");
        auto a3 = DynkinDiagram::preset("A3");
        bool sortables =
            sortable_elements(Orientation(a1, {})).size() == 2 &&
            sortable_elements(Orientation(a2, {{0, 1}})).size() == 5 &&
            sortable_elements(Orientation(a2, {{1, 0}})).size() == 5 &&
            sortable_elements(Orientation(a3, {{0, 1}, {1, 2}})).size() == 14 &&
            sortable_elements(Orientation(a3, {{0, 1}, {2, 1}})).size() == 14;
        bad += report("sortable counts", sortables);
    } else {
        throw DomainError("unknown verify suite: " + suite);
    }
    return bad == 0 ? 0 : 1;
}

// --- perm subcommand --------------------------------------------------------

int run_perm(const std::string& action, const Options& opt) {
    if (opt.one_line.empty()) throw DomainError("perm needs --one-line");
    Permutation p = parse_permutation(opt.one_line);
    int n = p.rank();
    auto pairs_out = [&](const std::vector<ValuePair>& ps) {
        if (opt.format == "json") {
            json j = json::array();
            for (auto [i, k] : ps) j.push_back({i, k});
            std::cout << j.dump() << "\n";
        } else {
            for (auto [i, k] : ps) std::cout << "(" << i << "," << k << ")\n";
        }
    };
    if (action == "inv") {
        pairs_out(classical_inversions(p));
    } else if (action == "binv") {
        pairs_out(bruhat_classical_inversions(p));
    } else if (action == "graph") {
        std::cout << inversion_graph_to_dot(inversion_graph(p));
    } else if (action == "forest") {
        std::cout << (is_forest(inversion_graph(p)) ? "true" : "false") << "\n";
    } else if (action == "patterns") {
        std::cout << (avoids_patterns(p) ? "true" : "false") << "\n";
    } else if (action == "arcs") {
        json j = json::array();
        for (const auto& e : bruhat_classical_inversions(p)) {
            auto arc = arc_diagram(p, e);
            json passes = json::object();
            for (auto [k, side] : arc.passes)
                passes[std::to_string(k)] = side == ArcSide::Above ? "above" : "below";
            j.push_back({{"edge", {e.first, e.second}}, {"passes", passes}});
        }
        if (opt.format == "json") {
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& a : j)
                std::cout << "(" << a["edge"][0] << "," << a["edge"][1]
                          << ") " << a["passes"].dump() << "\n";
        }
    } else if (action == "simples") {
        if (opt.format == "dot") {
            for (const auto& e : bruhat_classical_inversions(p))
                std::cout << quiver_to_dot(defining_quiver(arc_diagram(p, e)));
            return 0;
        }
        json j = json::array();
        for (const auto& e : bruhat_classical_inversions(p)) {
            auto b = build_brick(defining_quiver(arc_diagram(p, e)), n);
            json rep = thinrep_to_json(b);
            rep["edge"] = {e.first, e.second};
            j.push_back(rep);
        }
        std::cout << j.dump() << "\n";
    } else if (action == "we") {
        auto edges = opt.edge.empty()
                         ? bruhat_classical_inversions(p)
                         : std::vector<ValuePair>{parse_edge(opt.edge)};
        for (const auto& e : edges) {
            auto we = join_irreducible_w_e(p, e);
            std::cout << "(" << e.first << "," << e.second << ") ";
            for (size_t i = 0; i < we.one_line().size(); ++i)
                std::cout << (i ? "," : "") << we.one_line()[i];
            std::cout << "\n";
        }
    } else {
        throw DomainError("unknown perm action: " + action);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bruhat inversions and brick sequences for simply-laced Weyl groups"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("WEYLBRICK_CAP"))
        opt.cap = static_cast<size_t>(std::stoull(env));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", opt.type, "diagram preset (A1..A8, D4..D8, E6..E8)");
        sub->add_option("--edges", opt.edges, "custom tree edges, e.g. 0-1,1-2");
        sub->add_option("--format", opt.format, "text | json | dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--cap", opt.cap, "enumeration cap");
        sub->add_option("--jobs", opt.jobs, "parallel verification jobs");
        sub->add_option("--seed", opt.seed, "seed for sampled verification");
        return sub;
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("--word", opt.word, "comma-separated generator letters");
        return sub;
    };

    auto* roots = add_common(app.add_subcommand("roots", "list the positive roots"));
    auto* inv = add_word(add_common(app.add_subcommand("inv", "inversion set of a word")));
    auto* rootseq = add_word(add_common(
        app.add_subcommand("rootseq", "root sequence of a reduced word")));
    auto* binv = add_word(add_common(
        app.add_subcommand("binv", "Bruhat inversions of a reduced word")));
    binv->add_option("--method", opt.method, "def | deletion | sum | all")
        ->check(CLI::IsMember({"def", "deletion", "sum", "all"}));
    auto* jhp = add_word(add_common(
        app.add_subcommand("jhp", "Jordan-Holder verdict for the torsion-free class")));
    auto* hasse = add_word(add_common(
        app.add_subcommand("hasse", "weak-order Hasse interval [e, w] as DOT")));
    auto* poincare = add_word(add_common(
        app.add_subcommand("poincare", "Bruhat interval Poincare coefficients")));

    auto* perm = add_common(app.add_subcommand("perm", "type-A permutation toolbox"));
    std::string perm_action;
    perm->add_option("action", perm_action,
                     "inv | binv | graph | forest | patterns | arcs | simples | we")
        ->required();
    perm->add_option("--one-line", opt.one_line, "one-line notation, e.g. 42513");
    perm->add_option("--edge", opt.edge, "Bruhat inversion i,j (for we)");

    auto* count_forest = app.add_subcommand("count-forest",
                                            "count forest-like permutations of S_n");
    count_forest->add_option("--n", opt.n, "symmetric group size")->required();

    auto* sortable = add_word(add_common(
        app.add_subcommand("sortable", "c-sortable elements of a Weyl group")));
    std::string sortable_action;
    sortable->add_option("action", sortable_action, "list | count | simples")
        ->required();
    sortable->add_option("--orientation", opt.orientation,
                         "orientation JSON, e.g. {\"diagram\":\"A3\",\"arrows\":[[2,1],[2,3]]}");

    auto* verify = add_common(app.add_subcommand("verify", "batch verification suites"));
    std::string verify_suite;
    verify->add_option("suite", verify_suite, "oracle | figures | counts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (roots->parsed()) {
            auto d = make_diagram(opt);
            print_roots(d, d.positive_roots(), opt);
        } else if (inv->parsed()) {
            auto d = make_diagram(opt);
            print_roots(d, inversion_set(evaluate(d, make_word(opt))), opt);
        } else if (rootseq->parsed()) {
            auto d = make_diagram(opt);
            auto seq = root_sequence(d, make_word(opt));
            auto flagged = brick_dimension_sequence(d, make_word(opt));
            if (opt.format == "json") {
                json j = json::array();
                for (const auto& f : flagged) {
                    json r = root_json(d, f.root);
                    r["simple"] = f.simple;
                    j.push_back(r);
                }
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& f : flagged)
                    std::cout << format_root(d, f.root) << (f.simple ? " S" : "") << "\n";
            }
        } else if (binv->parsed()) {
            auto d = make_diagram(opt);
            Word u = make_word(opt);
            WeylElement w = evaluate(d, u);
            if (opt.method == "all") {
                auto by_def = bruhat_inversions_def(w);
                auto by_del = bruhat_inversions_deletion(d, u);
                auto by_sum = bruhat_inversions_by_sum(w);
                if (by_def != by_del || by_def != by_sum) {
                    std::cerr << "error: Bruhat inversion methods disagree\n";
                    return 1;
                }
                if (opt.format == "json") {
                    json j = json::array();
                    for (const Root& r : by_def) j.push_back(root_json(d, r));
                    std::cout << json{{"def", j}, {"deletion", j}, {"sum", j},
                                      {"agree", true}}.dump() << "\n";
                } else {
                    print_roots(d, by_def, opt);
                }
            } else if (opt.method == "deletion") {
                print_roots(d, bruhat_inversions_deletion(d, u), opt);
            } else if (opt.method == "sum") {
                print_roots(d, bruhat_inversions_by_sum(w), opt);
            } else {
                print_roots(d, bruhat_inversions_def(w), opt);
            }
        } else if (jhp->parsed()) {
            auto d = make_diagram(opt);
            auto rep = jhp_check(evaluate(d, make_word(opt)));
            if (opt.format == "json") {
                json j{{"simples", rep.binv.size()},
                       {"support", rep.supp.size()},
                       {"jhp", rep.verdict}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "simples " << rep.binv.size() << ", support "
                          << rep.supp.size() << ", JHP "
                          << (rep.verdict ? "true" : "false") << "\n";
            }
        } else if (hasse->parsed()) {
            auto d = make_diagram(opt);
            std::cout << hasse_to_dot(d, weak_order_hasse_interval(
                                             evaluate(d, make_word(opt))));
        } else if (poincare->parsed()) {
            auto d = make_diagram(opt);
            auto c = bruhat_interval_poincare(evaluate(d, make_word(opt)), opt.cap);
            if (opt.format == "json") {
                std::cout << json(c).dump() << "\n";
            } else {
                for (size_t i = 0; i < c.size(); ++i)
                    std::cout << (i ? " " : "") << c[i];
                std::cout << "\n";
            }
        } else if (perm->parsed()) {
            return run_perm(perm_action, opt);
        } else if (count_forest->parsed()) {
            std::cout << count_forest_like(opt.n) << "\n";
        } else if (sortable->parsed()) {
            auto d = make_diagram(opt);
            Orientation o = make_orientation(opt, d);
            if (sortable_action == "count") {
                std::cout << sortable_elements(o, opt.cap).size() << "\n";
            } else if (sortable_action == "list") {
                for (const auto& w : sortable_elements(o, opt.cap)) {
                    Word u = canonical_reduced_word(w);
                    if (one_based(opt.type))
                        for (int& a : u) ++a;
                    std::cout << (u.empty() ? "e" : word_to_string(u)) << "\n";
                }
            } else if (sortable_action == "simples") {
                print_roots(d, path_algebra_simples(evaluate(d, make_word(opt)), o),
                            opt);
            } else {
                throw DomainError("unknown sortable action: " + sortable_action);
            }
        } else if (verify->parsed()) {
            return run_verify(verify_suite, opt);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
