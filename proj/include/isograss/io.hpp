#pragma once

#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/orbits.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace isograss {

/// Insertion-ordered JSON so that emitted files are byte-stable.
using Json = nlohmann::ordered_json;

/// "a/b" (or "a" for integers) over Q; {"re": "a/b", "im": "c/d"} over Q(i).
Json scalar_to_json(const Scalar& x, Field field);
/// Accepts a string, an integer, or an {"re", "im"} object. Throws ParseError.
Scalar scalar_from_json(const Json& j);

/// {"p","q","p1","q1"} for the signed cases, {"n","m"} otherwise.
Json params_to_json(CaseTag c, const GroupParams& g);
GroupParams params_from_json(CaseTag c, const Json& j);

/// {"case", "params", "basis"} with basis rows in ambient coordinates.
Json subspace_to_json(const Subspace& s);
/// Parses and validates (group params, row lengths, field of the entries).
/// Throws ParseError on malformed input and InvalidArgument on bad params.
Subspace subspace_from_json(const Json& j);

Json tuple_to_json(const OrbitParams& t);
Json orbit_info_to_json(CaseTag c, const GroupParams& g, const OrbitInfo& info);

/// {"case", "params", "r", "orbits": [...]}.
Json atlas_to_json(CaseTag c, const GroupParams& g, int r, const std::vector<OrbitInfo>& orbits);
/// Header plus one line per orbit, columns
/// case,params,tuple,dim_H,dim_stab,dim_orbit,is_open,component_count.
std::string atlas_to_csv(CaseTag c, const GroupParams& g, const std::vector<OrbitInfo>& orbits);

/// Whole-file helpers; throw ParseError when the file cannot be read or
/// written, or (for JSON) does not parse.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json read_json_file(const std::string& path);

}  // namespace isograss
