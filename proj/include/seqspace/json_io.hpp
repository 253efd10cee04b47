#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "seqspace/duals.hpp"
#include "seqspace/matclass.hpp"

namespace seqspace::io {

using json = nlohmann::json;

/// Parses JSON keeping non-integer numeric literals as their raw text, so
/// "0.1" can become the exact rational 1/10 instead of the nearest double.
/// Integers stay integers. Throws std::invalid_argument on malformed input.
json parse_text(const std::string& text);
json parse_stream(std::istream& in);

/// Conversions from parsed JSON. `path` names the field in error messages.
Scalar scalar_from(const json& j, Mode mode, const std::string& path);
std::vector<Scalar> scalars_from(const json& j, Mode mode, const std::string& path);
SeqPrefix seq_from(const json& j, Mode mode, Tail tail, const std::string& path);
std::vector<SeqPrefix> matrix_rows_from(const json& j, Mode mode, const std::string& path);

/// Serialization. Exact rationals render as "p/q" strings (plain "p" for
/// integers) so parse(serialize(x)) is value-identical.
json to_json(const Scalar& s);
json to_json(const SeqPrefix& x);
json to_json(const LowerTable& t);
json to_json(const Verdict& v);
json to_json(const ConditionReport& r);
json to_json(const ClassifyReport& r);

}  // namespace seqspace::io
