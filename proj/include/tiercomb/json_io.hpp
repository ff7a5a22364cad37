#pragma once

#include <string>

#include "json.hpp"
#include "tiercomb/dyck_path.hpp"
#include "tiercomb/gen_polynomial.hpp"
#include "tiercomb/tiered_tree.hpp"
#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

// JSON schemas (keys are emitted in alphabetical order by the serializer):
//   tree:  {"n": int, "parent": [int...], "w": [int...], "lv": [int...]}
//   path:  {"n": int, "steps": "NNE...", "pix": [int...], "piy": [int...]}
//   pair:  {"a": [int...], "b": [int...]}
//   composition: [int...]   (dense from index 1, trailing zeros trimmed)
// Parsers ignore unknown keys and throw std::invalid_argument on malformed
// input, naming the offending field.

nlohmann::json tree_to_json(const TieredRootedTree& t);
TieredRootedTree tree_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const LabelledDyckPath2& p);
LabelledDyckPath2 path_from_json(const nlohmann::json& j);

nlohmann::json pair_to_json(const SequencePair& sp);
SequencePair pair_from_json(const nlohmann::json& j);

nlohmann::json composition_to_json(const WeakComposition& c);
WeakComposition composition_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const GenPolynomial& p);
GenPolynomial polynomial_from_json(const nlohmann::json& j);

// Canonical one-line text form "parent;w;lv" with comma-separated entries.
std::string tree_to_text(const TieredRootedTree& t);
TieredRootedTree tree_from_text(const std::string& line);

}  // namespace tiercomb
