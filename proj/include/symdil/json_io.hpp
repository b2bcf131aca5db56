// ============================================================================
// json_io.hpp -- JSON (de)serialization for the on-disk interchange formats:
//
//   matrix        {"d": int, "rows": [[...], ...]}        (2d x 2d, row-major)
//   weight        {"family": "radial_log"|"spatial"|"frequency",
//                  "s": float, "t": float, "d": int}
//   factorization {"d", "index_set", "Q", "L", "P", ...}
//   verdict       {"status", "reason", "k", "exponent", ...}
//
// Matrices may also be described by a small generator recipe object, e.g.
// {"generator": "standard", "d": 2} -- used by sweep configs so common
// matrices need no side file.
// ============================================================================
#pragma once

#include <string>

#include "json.hpp"
#include "symdil/classifier.hpp"
#include "symdil/symplectic.hpp"
#include "symdil/weights.hpp"

namespace symdil {

using json = nlohmann::json;

// ---- plain matrices --------------------------------------------------------
json matrix_to_json(const Mat& m);                 // {"d", "rows"}
Mat matrix_from_json(const json& j);               // validates shape
Mat load_matrix(const std::string& path);          // file -> matrix
// accepts either the {"d","rows"} form or a generator recipe:
//   {"generator": "standard"|"identity"|"chirp"|"freq_shear"|"dilation"|
//                 "swap_product", "d": int, ...parameters}
Mat matrix_from_json_or_recipe(const json& j);

// ---- weights ---------------------------------------------------------------
json weight_to_json(const WeightSpec& w);
WeightSpec weight_from_json(const json& j);
WeightSpec load_weight(const std::string& path);

// ---- factorizations --------------------------------------------------------
json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

// ---- verdicts --------------------------------------------------------------
json verdict_to_json(const Verdict& v);

// ---- helpers ---------------------------------------------------------------
json load_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

} // namespace symdil
