#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gaprig/embed/embedding.hpp"

namespace gaprig {

// Named standard embeddings.  Throws DomainError for unknown names and
// UnsupportedError for the spin-representation rows.
EmbeddingSpec catalog(const std::string& name);
// Concrete entries used by the test suites and the tables command.
std::vector<std::string> catalog_names();

// "I23" -> I(2,3); "II4", "III3", "IV5".  Products of one type: "I11^2".
Factor parse_compact(const std::string& s);
DomainSpec parse_compact_spec(const std::string& s);

// {source, target, images: [[["a/b + (c/d)i", ...], ...], ...]}
nlohmann::json to_json(const EmbeddingSpec& e);
EmbeddingSpec embedding_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json matrix_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace gaprig
