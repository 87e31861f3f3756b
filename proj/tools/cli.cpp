#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "io.hpp"
#include "kissgeo/errors.hpp"
#include "kissgeo/lightcone.hpp"

namespace kissgeo::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  std::string output;
  int n = 0;
  std::string mode = "kissing";
  std::string method = "inertia";
  bool inverse = false;
  int root = 0;
  std::vector<int> pivot;
  Tolerance tol;
};

struct Outcome {
  json doc;
  int code = kOk;
};

json load(const Options& o, std::istream& in) {
  if (o.input == "-") return io::parse_document(in);
  std::ifstream file(o.input);
  if (!file) throw io::InputError("cannot open " + o.input);
  return io::parse_document(file);
}

Method parse_method(const std::string& m) {
  if (m == "minors") return Method::Minors;
  if (m == "distance-inertia") return Method::DistanceInertia;
  return Method::Inertia;
}

Outcome cmd_dist(const Options& o, std::istream& in) {
  const io::SphereSet set = io::parse_sphere_set(load(o, in));
  const SquaredDistanceMatrix d2 = distance_matrix(set.spheres);
  json doc = io::matrix_json(d2.matrix());
  doc["dk"] = io::matrix_json(d2.matrix().cwiseSqrt())["d2"];
  return {doc};
}

Outcome cmd_classify(const Options& o, std::istream& in) {
  const io::SphereSet set = io::parse_sphere_set(load(o, in));
  common_tangent_dim(set.spheres);
  json pairs = json::array();
  for (std::size_t i = 0; i < set.spheres.size(); ++i) {
    for (std::size_t j = i + 1; j < set.spheres.size(); ++j) {
      pairs.push_back({{"i", i},
                       {"j", j},
                       {"dk", dist_k(set.spheres[i], set.spheres[j])},
                       {"class", to_string(classify_pair(set.spheres[i], set.spheres[j]))}});
    }
  }
  return {{{"pairs", std::move(pairs)}}};
}

Outcome cmd_check(const Options& o, std::istream& in) {
  const io::MatrixDocument m = io::parse_matrix(load(o, in));
  const Method method = parse_method(o.method);
  if (method == Method::DistanceInertia && o.mode != "euclidean") {
    throw io::InputError("--method distance-inertia needs --mode euclidean");
  }
  Certificate cert;
  if (o.mode == "spheres") {
    cert = check_spheres(io::to_separation_matrix(m), o.n, method, o.tol);
  } else if (o.mode == "euclidean") {
    cert = check_euclidean(io::to_distance_matrix(m), o.n, method, o.tol);
  } else {
    cert = check_kissing(io::to_distance_matrix(m), o.n, method, o.tol);
  }
  json doc = io::to_json(cert);
  doc["mode"] = o.mode;
  doc["n"] = o.n;
  return {doc, cert.embeddable() ? kOk : kInfeasible};
}

Outcome cmd_embed(const Options& o, std::istream& in) {
  const SquaredDistanceMatrix d = io::to_distance_matrix(io::parse_matrix(load(o, in)));
  EmbeddingResult r;
  if (o.pivot.empty()) {
    r = construct_embedding(d, o.n, o.tol);
  } else {
    const int k = d.order();
    if (o.pivot[0] < 0 || o.pivot[1] < 0 || o.pivot[0] >= k || o.pivot[1] >= k ||
        o.pivot[0] == o.pivot[1]) {
      throw io::InputError("--pivot needs two distinct indices below " + std::to_string(k));
    }
    r = schur_construction(d, o.n, o.pivot[0], o.pivot[1], o.tol);
  }
  json doc = {{"status", to_string(r.status)}};
  if (!r.ok()) {
    doc["diagnostic"] = r.diagnostic;
    return {doc, r.status == EmbeddingStatus::InadmissiblePivot ? kBadInput : kInfeasible};
  }
  const json set = io::to_json(io::SphereSet{o.n, r.spheres});
  doc["n"] = set["n"];
  doc["spheres"] = set["spheres"];
  doc["round_trip_error"] = r.round_trip_error;
  return {doc};
}

Outcome cmd_lightcone(const Options& o, std::istream& in) {
  const json input = load(o, in);
  if (o.inverse) {
    const std::vector<MinkowskiVector> xs = io::parse_vectors(input);
    io::SphereSet set{xs.front().spatial_dim(), {}};
    for (const auto& x : xs) set.spheres.push_back(psi_inverse(x, o.tol));
    return {io::to_json(set)};
  }
  const io::SphereSet set = io::parse_sphere_set(input);
  return {io::vectors_json(set.n, psi_all(set.spheres, set.n))};
}

Outcome cmd_spheres(const Options& o, std::istream& in) {
  const io::RoundSphereSet set = io::parse_round_spheres(load(o, in));
  const SeparationMatrix s = separation_matrix(set.spheres);
  std::vector<MinkowskiVector> xs;
  for (const auto& p : set.spheres) xs.push_back(hyperboloid_embed(p));
  const Certificate cert = check_spheres(s, set.n, parse_method(o.method), o.tol);
  json doc = io::matrix_json(s.matrix(), std::nullopt, true);
  doc["n"] = set.n;
  doc["hyperboloid"] = io::vectors_json(set.n + 1, xs)["vectors"];
  doc["certificate"] = io::to_json(cert);
  return {doc, cert.embeddable() ? kOk : kInfeasible};
}

Outcome cmd_complete(const Options& o, std::istream& in) {
  const LengthGraph g = io::parse_graph(load(o, in));
  const CompletionResult r = complete_chordal(g, o.n, o.tol, o.root);
  json doc = {{"verdict", to_string(r.verdict)}};
  if (r.verdict != CompletionVerdict::Completed) {
    doc["witness"] = r.witness;
    doc["diagnostic"] = r.diagnostic;
    return {doc, kInfeasible};
  }
  doc["d2"] = io::matrix_json(r.full_matrix->matrix())["d2"];
  doc["embedding"] = io::vectors_json(o.n, r.embedding);
  doc["report"] = {{"c1", r.report->c1},
                   {"c2", r.report->c2},
                   {"c3", r.report->c3},
                   {"c4", r.report->c4},
                   {"rank", r.report->rank},
                   {"inertia", io::to_json(r.report->inertia)},
                   {"worst_edge_deviation", r.report->worst_edge_deviation}};
  return {doc};
}

Outcome cmd_witness(const Options& o, std::istream& in) {
  const LengthGraph g = io::parse_graph(load(o, in));
  const ChordalityResult ch = is_chordal(g);
  if (ch.chordal) return {{{"verdict", "Chordal"}, {"peo", ch.peo}}, kInfeasible};
  const NonChordalWitness w = non_chordal_witness(g);
  json doc = io::to_json(w.lengths);
  doc["cycle"] = w.cycle;
  doc["e0"] = {w.e0.u, w.e0.v};
  return {doc};
}

void add_tolerances(CLI::App* sub, Options& o) {
  sub->add_option("--eig-zero", o.tol.eig_zero, "Relative eigenvalue zero threshold")
      ->check(CLI::PositiveNumber);
  sub->add_option("--residual", o.tol.residual, "Relative factorization residual bound")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Distance geometry of kissing spheres", "kissgeo"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write the JSON result to this file");

  using Handler = std::function<Outcome(const Options&, std::istream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Input JSON file, - for stdin");
    sub->fallthrough();
    add_tolerances(sub, o);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  add("dist", "Pairwise kissing distances of a sphere set", cmd_dist);
  add("classify", "Tangent/disjoint/intersecting class of every pair", cmd_classify);
  CLI::App* check = add("check", "Certify embeddability of a matrix", cmd_check);
  check->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  check->add_option("--mode", o.mode, "kissing, euclidean or spheres")
      ->check(CLI::IsMember({"kissing", "euclidean", "spheres"}));
  check->add_option("--method", o.method, "minors, inertia or distance-inertia")
      ->check(CLI::IsMember({"minors", "inertia", "distance-inertia"}));
  CLI::App* embed = add("embed", "Kissing spheres realizing a distance matrix", cmd_embed);
  embed->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  embed->add_option("--pivot", o.pivot, "Use the Schur construction with pivots a b")
      ->expected(2)
      ->allow_extra_args(false);
  CLI::App* lightcone = add("lightcone", "Map spheres to null vectors", cmd_lightcone);
  lightcone->add_flag("--inverse", o.inverse, "Map null vectors back to spheres");
  CLI::App* spheres = add("spheres", "Separations and hyperboloid vectors", cmd_spheres);
  spheres->add_option("--method", o.method, "minors or inertia")
      ->check(CLI::IsMember({"minors", "inertia"}));
  CLI::App* complete = add("complete", "Complete lengths on a chordal graph", cmd_complete);
  complete->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  complete->add_option("--root", o.root, "Root clique index")->check(CLI::NonNegativeNumber);
  add("witness", "Clique-feasible lengths with no completion", cmd_witness);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Outcome result;
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) result = handler(o, in);
    }
  } catch (const io::InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  const std::string text = io::dump(result.doc);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "cannot write " << o.output << "\n";
      return kBadInput;
    }
    file << text;
  }
  return result.code;
}

}  // namespace kissgeo::cli
