#pragma once

#include <string>

#include <json.hpp>

#include "ordconflict/verify.hpp"

namespace ordconflict {

nlohmann::json graph_to_json(const OrderedGraph& g);
OrderedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const ConflictSpec& s);
ConflictSpec spec_from_json(const nlohmann::json& j);

nlohmann::json conflict_graph_to_json(const ConflictGraph& cg);
nlohmann::json formula_to_json(const FormulaResult& r);
nlohmann::json class_to_json(const MatrixClass& c);
nlohmann::json report_to_json(const VerifyReport& r);

OrderedGraph load_graph(const std::string& path);
ConflictSpec load_spec(const std::string& path);
/// Same graph file schema, but only the order structure is kept: the sorted
/// vertices become 0..n-1.
SimpleGraph load_unordered(const std::string& path);

/// Compact matrix rendering for claim ids: sign rows as "+0-0", general rows
/// as comma-separated entries, rows joined by '|'.
std::string matrix_signature(const ConflictSpec& s);

}  // namespace ordconflict
