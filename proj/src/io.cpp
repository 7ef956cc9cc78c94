#include "ordconflict/io.hpp"

#include <fstream>

namespace ordconflict {

using nlohmann::json;

json graph_to_json(const OrderedGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

OrderedGraph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph json needs \"vertices\" and \"edges\"");
    std::vector<Int> vs = j.at("vertices").get<std::vector<Int>>();
    std::vector<std::pair<Int, Int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("edge must be a pair");
        es.emplace_back(e.at(0).get<Int>(), e.at(1).get<Int>());
    }
    return OrderedGraph::validated(std::move(vs), es);
}

json spec_to_json(const ConflictSpec& s) {
    json rows = json::array();
    for (const auto& r : s.matrix) rows.push_back({r[0], r[1], r[2], r[3]});
    return json{{"matrix", std::move(rows)}, {"p", s.p}};
}

ConflictSpec spec_from_json(const json& j) {
    if (!j.contains("matrix") || !j.contains("p"))
        throw ValidationError("spec json needs \"matrix\" and \"p\"");
    std::vector<std::array<Int, 4>> rows;
    for (const auto& r : j.at("matrix")) {
        if (!r.is_array() || r.size() != 4) throw ValidationError("matrix row must have 4 entries");
        rows.push_back({r.at(0).get<Int>(), r.at(1).get<Int>(), r.at(2).get<Int>(), r.at(3).get<Int>()});
    }
    return ConflictSpec::validated(std::move(rows), j.at("p").get<Int>());
}

json conflict_graph_to_json(const ConflictGraph& cg) {
    json nodes = json::array();
    for (const Edge& e : cg.nodes) nodes.push_back({e.u, e.v});
    json conflicts = json::array();
    int n = cg.adj.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cg.adj.has_edge(a, b)) conflicts.push_back({a, b});
    return json{{"nodes", std::move(nodes)}, {"conflicts", std::move(conflicts)}};
}

json formula_to_json(const FormulaResult& r) {
    json j;
    switch (r.kind) {
        case FormulaResult::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = r.value;
            break;
        case FormulaResult::Kind::Bounds:
            j["kind"] = "bounds";
            j["lower"] = {{"num", r.lower.num}, {"den", r.lower.den}};
            j["upper"] = {{"num", r.upper.num}, {"den", r.upper.den}};
            break;
        case FormulaResult::Kind::Infinite:
            j["kind"] = "infinite";
            break;
        case FormulaResult::Kind::Unknown:
            j["kind"] = "unknown";
            break;
    }
    j["provenance"] = r.provenance;
    return j;
}

json class_to_json(const MatrixClass& c) {
    json j;
    switch (c.tag) {
        case MatrixClass::Tag::NonInvariantPositive: j["tag"] = "non-invariant-positive"; break;
        case MatrixClass::Tag::NonInvariantNegative: j["tag"] = "non-invariant-negative"; break;
        case MatrixClass::Tag::NonInvariantMixed: j["tag"] = "non-invariant-mixed"; break;
        case MatrixClass::Tag::Zero: j["tag"] = "zero"; break;
        case MatrixClass::Tag::TableRow: j["tag"] = "table-row"; break;
        case MatrixClass::Tag::Shift:
        case MatrixClass::Tag::Nest: j["tag"] = "nest-like"; break;
        case MatrixClass::Tag::GeneralInvariant: j["tag"] = "general-invariant"; break;
    }
    if (c.row > 0) j["row"] = c.row;
    j["representative"] = spec_to_json(c.representative);
    json trace = json::array();
    for (Transform t : c.trace) trace.push_back(transform_name(t));
    j["trace"] = std::move(trace);
    return j;
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["claim"] = r.claim;
    j["status"] = status_name(r.status);
    j["counts"] = r.counts;
    j["runtime_ms"] = r.runtime_ms;
    if (!r.scope.empty()) j["scope"] = r.scope;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witness.is_null()) j["witness"] = r.witness;
    if (!r.data.is_null()) j["data"] = r.data;
    return j;
}

namespace {
json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}
}  // namespace

OrderedGraph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }
ConflictSpec load_spec(const std::string& path) { return spec_from_json(load_json(path)); }

SimpleGraph load_unordered(const std::string& path) {
    OrderedGraph g = load_graph(path);
    SimpleGraph f(g.n());
    for (const Edge& e : g.edges()) f.add_edge(g.vertex_index(e.u), g.vertex_index(e.v));
    return f;
}

std::string matrix_signature(const ConflictSpec& s) {
    std::string out;
    for (size_t i = 0; i < s.matrix.size(); ++i) {
        if (i) out += '|';
        const auto& r = s.matrix[i];
        bool sign = true;
        for (Int m : r) sign = sign && m >= -1 && m <= 1;
        if (sign) {
            for (Int m : r) out += (m < 0 ? '-' : m > 0 ? '+' : '0');
        } else {
            for (size_t c = 0; c < 4; ++c) {
                if (c) out += ',';
                out += std::to_string(r[c]);
            }
        }
    }
    return out;
}

}  // namespace ordconflict
