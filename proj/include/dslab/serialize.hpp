#pragma once

#include <string>

#include "json.hpp"

#include "dslab/ds.hpp"

namespace dslab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Scalar& s);
Json to_json(const Matrix& m);
Json to_json(const SuperSpace& s);
Json to_json(const LieSA& g);
Json to_json(const Rep& r);
Json to_json(const OddElem& u);
Json to_json(const DSResult& d);
Json to_json(const Report& r);
Json to_json(const RankData& d);

// Readers throw SchemaViolation naming the JSON path of the bad field.
LieSA algebra_from_json(const Json& j);
Rep rep_from_json(const Json& j);
OddElem odd_from_json(const Json& j);
DSResult ds_from_json(const Json& j);
Report report_from_json(const Json& j);

/// Wraps a payload as {"schema": 1, "kind": kind, "data": payload}.
Json document(const std::string& kind, Json payload);
/// Checks schema and kind; returns the payload.
const Json& open_document(const Json& doc, const std::string& kind);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);
/// Parses text; SchemaViolation on malformed input.
Json parse_json(const std::string& text);

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace dslab
