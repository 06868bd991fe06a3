#pragma once

// JSON readers and writers for the file formats used by the command line.
//
// Complex entries are a number or a [re, im] pair; a matrix is a list of
// rows. Group, module and algebra references may be inline objects or
// strings naming a file relative to the referring file (groups also accept
// builtin names such as "z2", "v4" or "s3").

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rigid/abelian.hpp"
#include "rigid/hochschild.hpp"
#include "rigid/morphisms.hpp"
#include "rigid/nonabelian.hpp"
#include "rigid/relative.hpp"

namespace rigid::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

/// Parsed document plus the directory relative references resolve against.
struct Document {
  json value;
  fs::path base;
  std::string digest;  // FNV-1a of the file bytes (empty for inline values)
};

/// Throws InputError for a missing file or malformed JSON.
Document load(const fs::path& path);

/// A string that names an existing file is loaded; anything else is
/// returned as an inline value with the same base.
Document resolve(const json& ref, const fs::path& base);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

cplx parse_complex(const json& j);
Vec parse_vector(const json& j);
Mat parse_matrix(const json& j);

json to_json(cplx z);
json to_json(const Vec& v);
json to_json(const Mat& m);

GroupPtr parse_group(const json& ref, const fs::path& base);
/// {"dim": d, "field": "real"|"complex", "action": {"g": M, ...}}; the
/// identity may be omitted. "trivial": true gives the trivial module.
ModulePtr parse_module(const json& j, const GroupPtr& g, const fs::path& base);

/// Tuple keys "g1,g2,..." (element names or indices); "" for degree 0.
std::vector<int> parse_tuple_key(const std::string& key, const FiniteGroup& g);
std::string tuple_key(std::span<const int> tuple, const FiniteGroup& g);

AbelianCochain parse_cochain(const json& j, const fs::path& base);

/// A nonabelian or relative cocycle file. `central` is set for relative
/// cocycles.
struct CocycleData {
  ActionPtr action;
  int degree = 1;
  std::vector<Mat> values;
  std::optional<CentralPair> central;
  bool normalized = false;
};
CocycleData parse_cocycle(const json& j, const fs::path& base);
NonabelianCocycle make_cocycle(const CocycleData& d, const ToleranceConfig& tol = {});
RelativeCocycle make_relative(const CocycleData& d, const ToleranceConfig& tol = {});

/// Full structure-constant form, "group_algebra_of", or
/// {"builtin": "matrix"|"diagonal"|"dual-numbers"|"product", ...}.
AlgebraPtr parse_algebra(const json& ref, const fs::path& base);
/// {"algebra": A, "kind": "regular"} or {"algebra": A, "left": [...],
/// "right": [...], "star": M} or {"algebra": A, "kind": "matrices",
/// "phi": [...], "psi": [...], "star": bool}.
BimodulePtr parse_bimodule(const json& ref, const fs::path& base);
/// {"bimodule": E, "degree": n, "values": {"i,j": [...]}} with basis indices.
HochschildCochain parse_hochschild_cochain(const json& j, const fs::path& base);
/// {"domain": A, "codomain": B, "matrix": [[...]] | "images": [M...], "cstar": bool}.
AlgebraMorphism parse_morphism(const json& ref, const fs::path& base);

}  // namespace rigid::io
