// serialization.hpp -- JSON lines for counterexample records

#pragma once

#include "pseudoprim/exls.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoprim {

/// {l, n, m, theta, u, v, w, u_signs, v_signs, w_signs, provenance}; theta is
/// the explicit image string and signs are "+"/"-" strings.
nlohmann::ordered_json record_to_json(const CounterexampleRecord& record);

/// Throws `InputError` on missing fields, malformed words or signs, or sign
/// lengths that disagree with l, n, m.
CounterexampleRecord record_from_json(const nlohmann::json& j);

std::string record_to_jsonl(const CounterexampleRecord& record);

/// Reads one record per non-blank line. Errors name the offending line.
std::vector<CounterexampleRecord> read_records(std::istream& in);

} // namespace pseudoprim
