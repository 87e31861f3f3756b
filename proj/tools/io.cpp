#include "io.hpp"

#include <cmath>
#include <istream>
#include <variant>

namespace kissgeo::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + " is missing \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(where + " must be finite");
  return x;
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<int>();
}

Eigen::VectorXd vector_of(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of numbers");
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = number(v[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& a = field(obj, key, where);
  if (!a.is_array()) throw InputError(where + "." + key + " must be an array");
  return a;
}

int dimension(const json& doc) {
  const int n = integer(field(doc, "n", "document"), "n");
  if (n < 1) throw InputError("n must be >= 1");
  return n;
}

json row_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i] + 0.0);
  return out;
}

}  // namespace

json parse_document(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

SphereSet parse_sphere_set(const json& doc) {
  SphereSet set;
  set.n = dimension(doc);
  const json& spheres = array_field(doc, "spheres", "document");
  if (spheres.empty()) throw InputError("sphere set is empty");
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    const std::string where = "spheres[" + std::to_string(i) + "]";
    const json& s = spheres[i];
    if (!s.is_object()) throw InputError(where + " must be an object");
    if (s.contains("h")) {
      if (s.contains("t") || s.contains("phi")) {
        throw InputError(where + " mixes a hyperplane height with a finite sphere");
      }
      const double h = number(s["h"], where + ".h");
      if (!(h > 0.0)) throw InputError(where + ".h must be positive");
      set.spheres.push_back(KissingSphere::hyperplane(h));
      continue;
    }
    Eigen::VectorXd t = vector_of(field(s, "t", where), where + ".t");
    if (t.size() != set.n - 1) {
      throw InputError(where + ".t has " + std::to_string(t.size()) +
                       " coordinates; n = " + std::to_string(set.n) + " needs n-1");
    }
    const double phi = number(field(s, "phi", where), where + ".phi");
    if (!(phi > 0.0)) throw InputError(where + ".phi must be positive");
    set.spheres.push_back(KissingSphere::finite(std::move(t), phi));
  }
  return set;
}

json to_json(const SphereSet& set) {
  json spheres = json::array();
  for (const auto& s : set.spheres) {
    if (s.is_hyperplane()) {
      spheres.push_back({{"h", s.height()}});
    } else {
      spheres.push_back({{"t", row_json(s.tangent())}, {"phi", s.diameter()}});
    }
  }
  return {{"n", set.n}, {"spheres", std::move(spheres)}};
}

MatrixDocument parse_matrix(const json& doc) {
  MatrixDocument m;
  const json& rows = array_field(doc, "d2", "document");
  const auto k = static_cast<Eigen::Index>(rows.size());
  if (k == 0) throw InputError("d2 is empty");
  m.values.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const std::string where = "d2[" + std::to_string(i) + "]";
    const Eigen::VectorXd row = vector_of(rows[i], where);
    if (row.size() != k) throw InputError(where + " has the wrong length; d2 must be square");
    m.values.row(i) = row.transpose();
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (std::abs(m.values(i, j) - m.values(j, i)) > kSymmetrySlack) {
        throw InputError("d2 is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array() || static_cast<Eigen::Index>(labels.size()) != k) {
      throw InputError("labels must be an array with one string per row");
    }
    std::vector<std::string> names;
    for (const auto& l : labels) {
      if (!l.is_string()) throw InputError("labels must be strings");
      names.push_back(l.get<std::string>());
    }
    m.labels = std::move(names);
  }
  if (doc.contains("diag")) {
    if (number(doc["diag"], "diag") != -1.0) throw InputError("diag marker must be -1");
    m.separation = true;
  }
  return m;
}

SquaredDistanceMatrix to_distance_matrix(const MatrixDocument& m) {
  if (m.separation) throw InputError("expected a squared-distance matrix, got \"diag\": -1");
  Eigen::MatrixXd v = m.values;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i, i)) > kSymmetrySlack) {
      throw InputError("d2 diagonal must be zero (row " + std::to_string(i) + ")");
    }
    v(i, i) = 0.0;
  }
  if ((v.array() < 0.0).any()) throw InputError("d2 has a negative entry");
  return SquaredDistanceMatrix(SymMatrix::symmetrized(v), m.labels);
}

SeparationMatrix to_separation_matrix(const MatrixDocument& m) {
  if (!m.separation) throw InputError("separation matrices need the \"diag\": -1 marker");
  Eigen::MatrixXd v = m.values;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i, i) + 1.0) > kSymmetrySlack) {
      throw InputError("separation diagonal must be -1 (row " + std::to_string(i) + ")");
    }
  }
  v = 0.5 * (v + v.transpose());
  v.diagonal().setConstant(-1.0);
  return SeparationMatrix(SymMatrix(std::move(v)));
}

json matrix_json(const Eigen::MatrixXd& m, const std::optional<std::vector<std::string>>& labels,
                 bool separation) {
  json doc = json::object();
  if (labels) doc["labels"] = *labels;
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(row_json(m.row(i).transpose()));
  doc["d2"] = std::move(rows);
  if (separation) doc["diag"] = -1;
  return doc;
}

RoundSphereSet parse_round_spheres(const json& doc) {
  RoundSphereSet set;
  set.n = dimension(doc);
  const json& spheres = array_field(doc, "spheres", "document");
  if (spheres.empty()) throw InputError("sphere set is empty");
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    const std::string where = "spheres[" + std::to_string(i) + "]";
    Eigen::VectorXd c = vector_of(field(spheres[i], "c", where), where + ".c");
    if (c.size() != set.n) {
      throw InputError(where + ".c must have n = " + std::to_string(set.n) + " coordinates");
    }
    const double r = number(field(spheres[i], "r", where), where + ".r");
    if (!(r > 0.0)) throw InputError(where + ".r must be positive");
    set.spheres.emplace_back(std::move(c), r);
  }
  return set;
}

LengthGraph parse_graph(const json& doc) {
  const int nv = integer(field(doc, "vertices", "document"), "vertices");
  if (nv < 1) throw InputError("vertices must be >= 1");
  LengthGraph g(nv);
  const json& edges = array_field(doc, "edges", "document");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const int u = integer(field(edges[i], "u", where), where + ".u");
    const int v = integer(field(edges[i], "v", where), where + ".v");
    const double len = number(field(edges[i], "len", where), where + ".len");
    try {
      g.add_edge(u, v, len);
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return g;
}

json to_json(const LengthGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"len", e.length}});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::vector<MinkowskiVector> parse_vectors(const json& doc) {
  const int n = dimension(doc);
  const json& rows = array_field(doc, "vectors", "document");
  if (rows.empty()) throw InputError("vector list is empty");
  std::vector<MinkowskiVector> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "vectors[" + std::to_string(i) + "]";
    const Eigen::VectorXd v = vector_of(rows[i], where);
    if (v.size() != n + 1) throw InputError(where + " must have n+1 coordinates");
    out.push_back(MinkowskiVector::from_coordinates(v));
  }
  return out;
}

json vectors_json(int n, const std::vector<MinkowskiVector>& xs) {
  json rows = json::array();
  for (const auto& x : xs) rows.push_back(row_json(x.coordinates()));
  return {{"n", n}, {"vectors", std::move(rows)}};
}

json to_json(const Inertia& in) {
  return {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
}

json to_json(const Certificate& c) {
  json doc = {{"verdict", to_string(c.verdict)}, {"method", to_string(c.method)}};
  if (c.witness) {
    doc["witness"] = std::visit(
        Overloaded{
            [](const MinorWitness& w) -> json {
              return {{"kind", "minor"}, {"subset", w.subset}, {"signed_det", w.signed_det}};
            },
            [](const RankWitness& w) -> json {
              return {{"kind", "rank"}, {"rank", w.rank}, {"bound", w.bound}};
            },
            [](const Inertia& in) -> json {
              json j = to_json(in);
              j["kind"] = "inertia";
              return j;
            },
        },
        *c.witness);
  }
  return doc;
}

}  // namespace kissgeo::io
