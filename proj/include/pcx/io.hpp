#pragma once

// Job files (TOML) and certificate serialization (JSON).
//
// A job names an algebra, a field and any number of objects:
//   [algebra]     vertices, arrows = [{name, from, to}], relations = [["b", "a"]]
//   [field]       p = 5, or rational = true
//   [objects.X]   projective objects: summands, degrees, period (0 = bounded), d
//   [modules.M]   representations: dims, arrows = {a = matrix}, optional differential
//   [maps.f]      source, target (object names), entries
//   [args]        command arguments
// Matrices over the algebra are grids of element strings such as "a*g*b",
// "-1*b", "0", "1". Scalar matrices are grids of integers or "p/q" strings.

#include "pcx/periodic.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace pcx {

using json = nlohmann::ordered_json;

struct Job {
  AlgebraPtr A;
  json algebra;  // normalized echo: vertices, arrows, relations
  std::map<std::string, Graded> objects;
  std::map<std::string, Representation> modules;
  std::map<std::string, RepComplex> dmodules;  // modules carrying a differential
  std::map<std::string, ProjMap> maps;
  json args = json::object();
  std::string command;  // [job] command, if given
};

/// Throws PARSE (with line and column) or a semantic error from the core.
/// length_bound overrides [algebra] length_bound.
Job parse_job(const std::string& text, const std::string& origin = "job",
              std::optional<Field> field_override = std::nullopt,
              std::optional<std::size_t> length_bound = std::nullopt);
Job load_job(const std::string& path, std::optional<Field> field_override = std::nullopt,
             std::optional<std::size_t> length_bound = std::nullopt);

/// "Q", "0", "rational" or a prime.
Field parse_field(const std::string& s);
AlgebraPtr algebra_from_json(const json& j, Field F);
/// The echo format read by algebra_from_json.
json algebra_json(const PathAlgebra& A);

json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Field& F, const json& j);
json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Field& F, const json& j, std::size_t rows, std::size_t cols);

json projmodule_json(const PathAlgebra& A, const ProjModule& P);
ProjModule projmodule_from_json(const PathAlgebra& A, const json& j);
/// Coefficients on the paths of each entry plus a path-word echo.
json projmap_json(const ProjMap& f);
ProjMap projmap_from_json(const AlgebraPtr& A, const json& j);
json graded_json(const Graded& X);
Graded graded_from_json(const AlgebraPtr& A, const json& j);
json rep_json(const Representation& M);
Representation rep_from_json(const AlgebraPtr& A, const json& j);
json repmap_json(const RepMap& f);
RepMap repmap_from_json(const Field& F, const json& j, const Representation& M, const Representation& N);
json rep_complex_json(const RepComplex& M);
RepComplex rep_complex_from_json(const AlgebraPtr& A, const json& j);

}  // namespace pcx
