#pragma once

#include <string>

#include <json.hpp>

#include "posetcode/ag.hpp"
#include "posetcode/codes.hpp"

namespace posetcode::io {

using nlohmann::json;

json field_to_json(const gf::Field& F);
gf::FieldPtr field_from_json(const json& j);

/// [[row 1], [row 2], ...] of packed codes.
json matrix_to_json(const poset::MatrixWord& A);
poset::MatrixWord matrix_from_json(const json& j);
/// "3 3 3;4 2 2"
std::string matrix_text(const poset::MatrixWord& A);

json metric_to_json(const codes::Metric& m);

/// code.json: field, points, s, t, b_row (null when absent), metric, basis
/// coefficient lists, generator matrices.
json rs_code_to_json(const codes::RSCode& code);
/// Rebuilds from the stored basis; throws ParseError on malformed input and
/// the usual parameter errors on invalid specs.
codes::RSCode rs_code_from_json(const json& j);

/// ag.json: the code.json fields plus places, divisor and the constraint flag.
json ag_code_to_json(const ag::AGCode& code);
ag::AGCode ag_code_from_json(const json& j);

json enumerator_to_json(const codes::WeightEnumerator& e);
/// "weight,count" header, one row per weight with a nonzero count.
std::string enumerator_to_csv(const codes::WeightEnumerator& e);

json read_json_file(const std::string& path);

}  // namespace posetcode::io
