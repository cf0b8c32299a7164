// Command-line surface over the hyperoct library: exact computations around
// oracle identification on signed-permutation groups, plus a one-shot
// verification harness (verify-all) over all tabulated results.
//
// Exit codes: 0 ok, 1 verification/cross-check failure, 2 usage, 3 capacity.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>

#include "hyperoct/char_table.hpp"
#include "hyperoct/errors.hpp"
#include "hyperoct/moments.hpp"
#include "hyperoct/oracle_sim.hpp"
#include "hyperoct/reduction.hpp"
#include "hyperoct/tensor_graph.hpp"
#include "hyperoct/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hyperoct;

namespace {

json coeffs_json(const IntPolynomial& p, int min_len) {
    json arr = json::array();
    int len = std::max(static_cast<int>(p.coeffs.size()), min_len);
    for (int i = 0; i < len; ++i) arr.push_back(p.coeff(i).str());
    return arr;
}

json bipartition_list(const std::set<Bipartition>& s) {
    json arr = json::array();
    for (const auto& b : s) arr.push_back(b.to_string());
    return arr;
}

int cmd_qlv(int n, const std::string& format) {
    QlvResult graph_route = qlv_graph(n);
    FirstAppearance reduction_route = first_appearance(n);
    if (graph_route.qlv != reduction_route.t || graph_route.qlv != 2 * (n - 1)) {
        std::cerr << "route mismatch: graph=" << graph_route.qlv
                  << " reduction=" << reduction_route.t << "\n";
        return 1;
    }
    if (format == "json") {
        json out;
        out["n"] = n;
        out["qlv"] = graph_route.qlv;
        out["bottlenecks"] = bipartition_list(graph_route.bottlenecks);
        out["first_appearance_t"] = reduction_route.t;
        out["multiplicity"] = reduction_route.multiplicity.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n: " << n << "\nqlv: " << graph_route.qlv << "\nbottlenecks:";
        for (const auto& b : graph_route.bottlenecks) std::cout << " " << b.to_string();
        std::cout << "\nfirst_appearance_t: " << reduction_route.t
                  << "\nmultiplicity: " << reduction_route.multiplicity.str() << "\n";
    }
    return 0;
}

int cmd_verify_all(int max_n, bool corrupt) {
    auto records = verification_suite(max_n, corrupt);
    size_t id_width = 0, expected_width = 0;
    for (const auto& r : records) {
        id_width = std::max(id_width, r.check_id.size());
        expected_width = std::max(expected_width, r.expected.size());
    }
    std::vector<std::string> failing;
    for (const auto& r : records) {
        std::printf("%-*s  %-*s  %s\n", static_cast<int>(id_width), r.check_id.c_str(),
                    static_cast<int>(expected_width),
                    r.pass ? r.expected.c_str() : ("expected " + r.expected).c_str(),
                    r.pass ? "ok" : ("GOT " + r.actual).c_str());
        if (!r.pass) failing.push_back(r.check_id);
    }
    std::printf("%zu checks, %zu failed\n", records.size(), failing.size());
    if (!failing.empty()) {
        for (const auto& id : failing) std::printf("FAILED %s\n", id.c_str());
        return 1;
    }
    return 0;
}

int cmd_graph(int n, bool dot, bool layers) {
    TensorGraph g = TensorGraph::build(n);
    if (dot) {
        std::cout << to_dot(g);
        return 0;
    }
    if (layers) {
        auto dist = bfs(g, {trivial_bipartition(n)});
        int ecc = 0;
        for (const auto& [b, d] : dist) ecc = std::max(ecc, d);
        int cumulative = 0;
        for (int t = 0; t <= ecc; ++t) {
            std::set<Bipartition> layer;
            for (const auto& [b, d] : dist)
                if (d == t) layer.insert(b);
            cumulative += static_cast<int>(layer.size());
            std::cout << "t=" << t << " parity=" << (t % 2 == 0 ? "even" : "odd")
                      << " count=" << layer.size() << " cumulative=" << cumulative << " new:";
            for (const auto& b : layer) std::cout << " " << b.to_string();
            std::cout << "\n";
        }
        return 0;
    }
    std::cerr << "graph: one of --dot or --layers is required\n";
    return 2;
}

int cmd_reach(int n, int t) {
    auto reach = spectral_reach(n, t);
    json out;
    out["n"] = n;
    out["t"] = t;
    out["reach"] = bipartition_list(reach);
    out["p_opt"] = rational_string(p_opt(n, t));
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_moment(int m, int eval_f, bool has_eval) {
    IntPolynomial p = moment_poly(m);
    json out;
    out["m"] = m;
    out["coeffs"] = coeffs_json(p, m + 1);
    if (has_eval) {
        out["f"] = eval_f;
        out["value"] = p.eval(eval_f).str();
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_reduce(int n, int m) {
    ReductionReport rep = reduction_inner_product(n, m);
    json out;
    out["n"] = rep.n;
    out["m"] = rep.m;
    out["raw_sum"] = rep.raw_sum.str();
    out["multiplicity"] = rep.multiplicity.str();
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_genfun(int n) {
    json out;
    out["n"] = n;
    out["coeffs"] = coeffs_json(signed_genfun(n), n + 1);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_chartable(int n, const std::string& format) {
    CharacterTable t = load_table(n);
    if (format == "json") {
        json out;
        out["n"] = t.n;
        json classes = json::array();
        for (const auto& [type, size] : t.classes)
            classes.push_back({{"type", type.to_string()}, {"size", size.str()}});
        out["classes"] = classes;
        json irreps = json::array();
        for (const auto& [label, values] : t.irreps)
            irreps.push_back({{"bipartition", label.to_string()}, {"row", values}});
        out["irreps"] = irreps;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << pretty_table(t);
    }
    return 0;
}

json run_to_json(const std::string& word, const RunResult& run, int decision) {
    json out;
    out["element"] = word;
    out["queries"] = run.signed_queries + run.decomposed_queries;
    json dist;
    for (const auto& [label, p] : run.distribution) {
        double rounded = std::abs(p) < 1e-12 ? 0.0 : (std::abs(p - 1.0) < 1e-12 ? 1.0 : p);
        dist[label] = rounded;
    }
    out["distribution"] = dist;
    out["decision"] = decision;
    return out;
}

int cmd_simulate(const std::string& algorithm, const std::string& element) {
    std::vector<SignedPermutation> targets;
    if (!element.empty()) {
        SignedPermutation g = from_signed_word(element);
        if (g.degree() != 2)
            throw CLI::ValidationError("--element", "simulation algorithms run on B_2");
        targets.push_back(g);
    } else {
        targets = enumerate_group(2);
    }
    json runs = json::array();
    for (const auto& g : targets) {
        std::string word = to_signed_word(g);
        if (algorithm == "bell") {
            RunResult run = run_algorithm(make_bell_algorithm(), g);
            runs.push_back(run_to_json(word, run, bell_algorithm(g).decision));
        } else if (algorithm == "decomposed") {
            DecomposedOutcome out = decomposed_algorithm(g);
            RunResult run1 = run_algorithm(make_diag_probe(), g);
            RunResult run2 = run_algorithm(make_perm_probe(), g);
            json rec;
            rec["element"] = word;
            rec["queries"] = run1.decomposed_queries + run2.decomposed_queries;
            rec["distribution"] = {{"b1", out.b1}, {"b2", out.b2}};
            rec["decision"] = out.decision;
            runs.push_back(rec);
        } else {  // factor2
            RunResult run = run_algorithm(factor2_simulate(make_bell_algorithm()), g);
            int decision = run.distribution.at("phi-") > 0.5 ? 1 : 0;
            runs.push_back(run_to_json(word, run, decision));
        }
    }
    json out;
    out["algorithm"] = algorithm;
    out["runs"] = runs;
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact oracle-identification computations on signed permutation groups"};
    app.require_subcommand(1);

    int n = 2, m = 1, t = 1, max_n = 7, eval_f = 0;
    std::string format = "text", algorithm, element;
    bool dot = false, layers = false, corrupt = false;

    auto* qlv = app.add_subcommand("qlv", "query complexity, graph and reduction routes");
    qlv->add_option("--n", n, "group degree")->required()->check(CLI::Range(2, 30));
    qlv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->add_option("--max-n", max_n, "largest group degree")->check(CLI::Range(2, 7));
    verify->add_flag("--corrupt", corrupt)->group("");  // negative-control hook for tests

    auto* graph = app.add_subcommand("graph", "tensor product graph export");
    graph->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    graph->add_flag("--dot", dot, "DOT output");
    graph->add_flag("--layers", layers, "BFS layers from the trivial irrep");

    auto* reach = app.add_subcommand("reach", "cumulative spectral reach and p_opt");
    reach->add_option("--n", n)->required()->check(CLI::Range(2, 30));
    reach->add_option("--t", t)->required()->check(CLI::PositiveNumber);

    auto* moment = app.add_subcommand("moment", "Rademacher moment polynomial");
    moment->add_option("--m", m)->required()->check(CLI::Range(1, 64));
    auto* eval_opt = moment->add_option("--eval", eval_f, "evaluate at f");

    auto* reduce = app.add_subcommand("reduce", "sign multiplicity via the S_N reduction");
    reduce->add_option("--n", n)->required()->check(CLI::Range(2, 30));
    reduce->add_option("--m", m)->required()->check(CLI::Range(1, 64));

    auto* genfun = app.add_subcommand("genfun", "signed fixed-point generating function");
    genfun->add_option("--n", n)->required()->check(CLI::Range(1, 64));

    auto* chartable = app.add_subcommand("chartable", "tabulated character table");
    chartable->add_option("--n", n)->required()->check(CLI::IsMember({2, 3}));
    chartable->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* simulate = app.add_subcommand("simulate", "matrix-level oracle algorithms on B_2");
    simulate->add_option("--algorithm", algorithm)
        ->required()
        ->check(CLI::IsMember({"bell", "decomposed", "factor2"}));
    simulate->add_option("--element", element, "signed word \"w_1 ... w_N\"");

    try {
        app.parse(argc, argv);
        if (qlv->parsed()) return cmd_qlv(n, format);
        if (verify->parsed()) return cmd_verify_all(max_n, corrupt);
        if (graph->parsed()) return cmd_graph(n, dot, layers);
        if (reach->parsed()) return cmd_reach(n, t);
        if (moment->parsed()) return cmd_moment(m, eval_f, eval_opt->count() > 0);
        if (reduce->parsed()) return cmd_reduce(n, m);
        if (genfun->parsed()) return cmd_genfun(n);
        if (chartable->parsed()) return cmd_chartable(n, format);
        if (simulate->parsed()) return cmd_simulate(algorithm, element);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
