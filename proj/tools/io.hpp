#pragma once

// JSON documents read and written by the kissgeo tool.
//
//   sphere set       {"n": 2, "spheres": [{"t": [0.5], "phi": 1}, {"h": 2}]}
//   matrix           {"labels": ["a", "b"], "d2": [[0, 1], [1, 0]]}
//                    separation matrices add "diag": -1
//   round spheres    {"n": 2, "spheres": [{"c": [0, 0], "r": 1}]}
//   graph            {"vertices": 4, "edges": [{"u": 0, "v": 1, "len": 1}]}
//   vectors          {"n": 2, "vectors": [[x_0, x_1, t], ...]}

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kissgeo/completion.hpp"
#include "kissgeo/embed.hpp"
#include "kissgeo/kissing.hpp"
#include "kissgeo/spheres.hpp"

namespace kissgeo::io {

using nlohmann::json;

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest tolerated |a_ij - a_ji| (and |diag - expected|) in matrix input.
inline constexpr double kSymmetrySlack = 1e-12;

json parse_document(std::istream& in);

/// Two-space indented JSON with a trailing newline. Doubles use the
/// shortest representation that reads back to the same value.
std::string dump(const json& doc);

struct SphereSet {
  int n = 2;
  std::vector<KissingSphere> spheres;
};

SphereSet parse_sphere_set(const json& doc);
json to_json(const SphereSet& set);

struct MatrixDocument {
  Eigen::MatrixXd values;
  std::optional<std::vector<std::string>> labels;
  /// "diag": -1 was given.
  bool separation = false;
};

/// Checks shape, finiteness and symmetry; the diagonal is checked by the
/// conversions below.
MatrixDocument parse_matrix(const json& doc);

/// Requires a zero diagonal and nonnegative entries.
SquaredDistanceMatrix to_distance_matrix(const MatrixDocument& m);
/// Requires the "diag": -1 marker and a -1 diagonal.
SeparationMatrix to_separation_matrix(const MatrixDocument& m);

json matrix_json(const Eigen::MatrixXd& m,
                 const std::optional<std::vector<std::string>>& labels = {},
                 bool separation = false);

struct RoundSphereSet {
  int n = 2;
  std::vector<EuclideanSphere> spheres;
};

RoundSphereSet parse_round_spheres(const json& doc);

LengthGraph parse_graph(const json& doc);
json to_json(const LengthGraph& g);

/// Vectors of R^{n,1}; each row holds n + 1 coordinates.
std::vector<MinkowskiVector> parse_vectors(const json& doc);
json vectors_json(int n, const std::vector<MinkowskiVector>& xs);

json to_json(const Certificate& c);
json to_json(const Inertia& in);

}  // namespace kissgeo::io
