#pragma once

#include <json.hpp>

#include <string>

#include "drckit/biordered.hpp"
#include "drckit/cpc.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/semigroup.hpp"

namespace drckit {

// JSON layouts:
//   semigroup  {"n", "mul", "D", "R"}
//   algebra    {"n", "theta", "delta"}
//   category   {"m", "objects", "dom", "cod", "comp": [[a,b,ab]...],
//               "obj_leq": [[p,q]...], "lres": [[p,a,r]...],
//               "rres": [[a,q,r]...], "trunc_bound"}
//   cpc        category keys plus {"pa": <algebra>, "eval": [[p,q,m]...]}
// Map-backed triple lists are written sorted; obj_leq keeps stored order.
// Loaders validate shapes (and finalize categories) and throw Error on
// malformed input.

nlohmann::json to_json(const FiniteSemigroup& s);
nlohmann::json to_json(const ProjectionAlgebra& pa);
nlohmann::json to_json(const BiorderedCategory& c);
nlohmann::json to_json(const ChainedProjectionCategory& c);

FiniteSemigroup semigroup_from_json(const nlohmann::json& j);
ProjectionAlgebra pa_from_json(const nlohmann::json& j);
BiorderedCategory category_from_json(const nlohmann::json& j);
ChainedProjectionCategory cpc_from_json(const nlohmann::json& j);

// Two-space indented dump with sorted keys and a trailing newline; files
// written this way reload byte-identically.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

FiniteSemigroup load_semigroup(const std::string& path);
ProjectionAlgebra load_pa(const std::string& path);
BiorderedCategory load_category(const std::string& path);
ChainedProjectionCategory load_cpc(const std::string& path);

void save_semigroup(const std::string& path, const FiniteSemigroup& s);
void save_pa(const std::string& path, const ProjectionAlgebra& pa);
void save_category(const std::string& path, const BiorderedCategory& c);
void save_cpc(const std::string& path, const ChainedProjectionCategory& c);

// Kind sniffing for commands that accept several payloads.
bool looks_like_semigroup(const nlohmann::json& j);
bool looks_like_pa(const nlohmann::json& j);
bool looks_like_cpc(const nlohmann::json& j);
bool looks_like_category(const nlohmann::json& j);

}  // namespace drckit
