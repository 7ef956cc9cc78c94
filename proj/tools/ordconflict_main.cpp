#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ordconflict/io.hpp"
#include "ordconflict/params.hpp"

using namespace ordconflict;
using nlohmann::json;

namespace {

struct Global {
    std::string output = "json";
    std::uint64_t seed = 42;
    long long budget_nodes = 10'000'000;
    long long budget_ms = 60'000;

    SolveBudget budget() const { return SolveBudget{budget_nodes, budget_ms}; }
    bool text() const { return output == "text"; }
};

void emit(const Global& g, const json& doc, const std::string& text_form) {
    if (g.text())
        std::cout << text_form << "\n";
    else
        std::cout << doc.dump() << "\n";
}

std::string render_formula(const FormulaResult& r) {
    switch (r.kind) {
        case FormulaResult::Kind::Exact: return std::to_string(r.value) + "  (" + r.provenance + ")";
        case FormulaResult::Kind::Bounds:
            return "[" + rat_str(r.lower) + ", " + rat_str(r.upper) + "]  (" + r.provenance + ")";
        case FormulaResult::Kind::Infinite: return "infinite  (" + r.provenance + ")";
        case FormulaResult::Kind::Unknown: return "unknown  (" + r.provenance + ")";
    }
    return "?";
}

// Range strings like "-4..4".
std::pair<long long, long long> parse_range(const std::string& s) {
    auto at = s.find("..");
    if (at == std::string::npos) throw ValidationError("range must look like a..b");
    return {std::stoll(s.substr(0, at)), std::stoll(s.substr(at + 2))};
}

int cmd_conflict(const Global& g, const std::string& graph_path, const std::string& spec_path) {
    OrderedGraph graph = load_graph(graph_path);
    ConflictSpec spec = load_spec(spec_path);
    ConflictGraph cg = build_conflict_graph(graph, spec);
    if (g.text()) {
        std::cout << cg.adj.n() << " nodes, " << cg.adj.edge_count() << " conflicts\n";
        for (int a = 0; a < cg.adj.n(); ++a)
            for (int b = a + 1; b < cg.adj.n(); ++b)
                if (cg.adj.has_edge(a, b))
                    std::cout << "(" << cg.nodes[a].u << "," << cg.nodes[a].v << ") -- ("
                              << cg.nodes[b].u << "," << cg.nodes[b].v << ")\n";
    } else {
        std::cout << conflict_graph_to_json(cg).dump() << "\n";
    }
    return 0;
}

int cmd_solve(const Global& g, const std::string& graph_path, const std::string& spec_path,
              const std::string& what) {
    OrderedGraph graph = load_graph(graph_path);
    if (what == "chi-underlying") {
        int v = chromatic_number(graph.underlying(), g.budget());
        emit(g, json{{"what", what}, {"value", v}}, "chi(underlying) = " + std::to_string(v));
        return 0;
    }
    if (spec_path.empty()) throw ValidationError("--spec required for conflict-graph queries");
    ConflictSpec spec = load_spec(spec_path);
    if (!graph.has_edges()) throw ValidationError("graph has no edges");
    ConflictGraph cg = build_conflict_graph(graph, spec);
    int v = 0;
    if (what == "alpha")
        v = alpha(cg, g.budget());
    else if (what == "omega")
        v = omega(cg, g.budget());
    else if (what == "chi")
        v = chromatic_number(cg.adj, g.budget());
    else
        throw ValidationError("unknown query: " + what);
    emit(g, json{{"what", what}, {"value", v}}, what + " = " + std::to_string(v));
    return 0;
}

int cmd_formula(const Global& g, const std::string& spec_path, const std::string& what,
                long long k, long long a, long long w) {
    ConflictSpec spec = load_spec(spec_path);
    FormulaResult r;
    if (what == "A")
        r = closed_form_A(spec, k);
    else if (what == "W")
        r = closed_form_W(spec, k);
    else if (what == "Xind")
        r = closed_form_X_ind(spec, a);
    else if (what == "Xcli")
        r = closed_form_X_cli(spec, w);
    else
        throw ValidationError("unknown formula: " + what);
    emit(g, formula_to_json(r), what + " = " + render_formula(r));
    return 0;
}

int cmd_classify(const Global& g, const std::string& spec_path) {
    MatrixClass cls = classify_matrix(load_spec(spec_path));
    json j = class_to_json(cls);
    emit(g, j, j.dump(2));
    return 0;
}

int cmd_construct(const Global& g, const std::string& spec_path, int k, const std::string& side,
                  const std::string& out_path) {
    ConflictSpec spec = load_spec(spec_path);
    ExtremalEmbeddings ee = extremal_complete_graph(spec, k);
    const OrderedGraph& graph = side == "A" ? ee.alpha_side : ee.omega_side;
    json doc = graph_to_json(graph);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << doc.dump(2) << "\n";
        emit(g, json{{"written", out_path}, {"provenance", ee.provenance}},
             "wrote " + out_path + " (" + ee.provenance + ")");
    } else {
        emit(g, doc, doc.dump(2));
    }
    return 0;
}

int cmd_param(const Global& g, const std::string& graph_path, const std::string& what) {
    SimpleGraph f = load_unordered(graph_path);
    int v = 0;
    if (what == "page-number")
        v = page_number(f, g.budget());
    else if (what == "queue-number")
        v = queue_number(f, g.budget());
    else if (what == "degeneracy")
        v = degeneracy_framework(f);
    else if (what == "band-width")
        v = band_width(f);
    else if (what == "interval-chromatic")
        v = interval_chromatic(load_graph(graph_path));
    else if (what == "arch-number")
        v = arch_number(f, g.budget());
    else
        throw ValidationError("unknown parameter: " + what);
    emit(g, json{{"parameter", what}, {"value", v}}, what + " = " + std::to_string(v));
    return 0;
}

int cmd_verify(const Global& g, const std::string& suite, const std::string& p_range,
               const std::string& k_range, const std::string& out_path) {
    SuiteOptions opt;
    opt.seed = g.seed;
    if (!p_range.empty()) std::tie(opt.p_lo, opt.p_hi) = parse_range(p_range);
    if (!k_range.empty()) {
        auto [lo, hi] = parse_range(k_range);
        opt.k_lo = static_cast<int>(lo);
        opt.k_hi = static_cast<int>(hi);
    }
    auto reports = run_suite(suite, opt);
    long long failures = 0;
    for (const auto& r : reports)
        if (r.status == VerifyReport::Status::Fail) ++failures;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        for (const auto& r : reports) out << report_to_json(r).dump() << "\n";
    }
    if (g.text()) {
        for (const auto& r : reports)
            std::cout << "[" << status_name(r.status) << "] " << r.claim
                      << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        std::cout << reports.size() << " claims, " << failures << " failures\n";
    } else {
        json doc{{"suite", suite}, {"claims", reports.size()}, {"failures", failures}};
        if (out_path.empty()) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            doc["reports"] = std::move(arr);
        } else {
            doc["out"] = out_path;
        }
        std::cout << doc.dump() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conflict graphs of ordered graphs: exact solvers, closed forms, constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    app.add_option("--output", global.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", global.seed, "seed for randomized suites");
    app.add_option("--budget-nodes", global.budget_nodes, "search node limit");
    app.add_option("--budget-ms", global.budget_ms, "search time limit (ms)");

    std::string graph_path, spec_path, what, side = "A", out_path, p_range, k_range, suite;
    long long k = 0, a = 0, w = 0;

    auto* conflict = app.add_subcommand("conflict", "build and print a conflict graph");
    conflict->add_option("--graph", graph_path)->required();
    conflict->add_option("--spec", spec_path)->required();

    auto* solve = app.add_subcommand("solve", "exact alpha/omega/chi of a conflict graph");
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--spec", spec_path);
    solve->add_option("--what", what, "alpha|omega|chi|chi-underlying")->required();

    auto* formula = app.add_subcommand("formula", "closed-form A/W/Xind/Xcli");
    formula->add_option("--spec", spec_path)->required();
    formula->add_option("--what", what, "A|W|Xind|Xcli")->required();
    formula->add_option("--k", k);
    formula->add_option("--a", a);
    formula->add_option("--w", w);

    auto* classify = app.add_subcommand("classify", "normalize a matrix to its formula row");
    classify->add_option("--spec", spec_path)->required();

    auto* construct = app.add_subcommand("construct", "write an extremal complete-graph embedding");
    construct->add_option("--spec", spec_path)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--side", side, "A|W")->check(CLI::IsMember({"A", "W"}));
    construct->add_option("--out", out_path);

    auto* param = app.add_subcommand("param", "graph parameters via ordering search");
    param->add_option("--graph", graph_path)->required();
    param->add_option("--what", what,
                      "page-number|queue-number|degeneracy|band-width|interval-chromatic|arch-number")
        ->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "table1|table2|lemmas|theorem1|nest|density|question15")
        ->required();
    verify->add_option("--p-range", p_range, "a..b");
    verify->add_option("--k-range", k_range, "a..b");
    verify->add_option("--out", out_path, "JSONL report file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (conflict->parsed()) return cmd_conflict(global, graph_path, spec_path);
        if (solve->parsed()) return cmd_solve(global, graph_path, spec_path, what);
        if (formula->parsed()) return cmd_formula(global, spec_path, what, k, a, w);
        if (classify->parsed()) return cmd_classify(global, spec_path);
        if (construct->parsed())
            return cmd_construct(global, spec_path, static_cast<int>(k), side, out_path);
        if (param->parsed()) return cmd_param(global, graph_path, what);
        if (verify->parsed()) return cmd_verify(global, suite, p_range, k_range, out_path);
    } catch (const BudgetExceeded& e) {
        json err{{"error", "budget-exceeded"}, {"lower", e.lower}, {"upper", e.upper}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
