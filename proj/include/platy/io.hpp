#pragma once
// JSON forms of the core values; rationals are always "p/q" strings
#include "platy/bravo.hpp"
#include "platy/groups.hpp"
#include "platy/metrics.hpp"

#include "json.hpp"

namespace platy {

using json = nlohmann::ordered_json;

// throws DomainError("ParseError") with line and column
json parse_json_text(const std::string& text);
json read_json_file(const std::string& path);

json to_json(const Q& x);
Q q_from_json(const json& j);  // integer or "p/q" / decimal string

json to_json(const Conorms3& d);
json to_json(const Conorms2& d);
Conorms3 conorms3_from_json(const json& j);
Conorms2 conorms2_from_json(const json& j);
json gram_to_json(const Mat3& g);
// 2×2 or 3×3 row-major
std::vector<std::vector<Q>> matrix_from_json(const json& j);

json to_json(const Descriptor& d);
Descriptor descriptor_from_json(const json& j);

json to_json(const Affine& a);
json to_json(const SpaceGroup& g);
SpaceGroup group_from_json(const json& j);

json to_json(const MetricReport& r);

// compact text rendering of a JSON document (for --format text)
std::string render_text(const json& j);

}  // namespace platy
