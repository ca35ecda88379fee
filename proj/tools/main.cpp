#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootpoly/characters.hpp"
#include "rootpoly/errors.hpp"
#include "rootpoly/io.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/reconstruct.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

namespace {

using namespace rootpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistency = 3;

LatticeVector parse_lambda(const std::string& text) {
  LatticeVector lambda;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      lambda.push_back(value);
    } catch (const std::exception&) {
      throw ArgumentError("--lambda: cannot parse integer from '" + piece +
                          "'");
    }
  }
  if (lambda.empty()) {
    throw ArgumentError("--lambda: expected comma-separated integers");
  }
  return lambda;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<LatticeVector> rows;
  std::stringstream stream(text);
  std::string row_text;
  while (std::getline(stream, row_text, ';')) {
    rows.push_back(parse_lambda(row_text));
  }
  if (rows.empty()) {
    throw ArgumentError("--matrix: expected rows separated by ';'");
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ArgumentError("--matrix: expected a square matrix");
    }
  }
  return IntMatrix::from_rows(rows);
}

void emit(const nlohmann::json& j) { std::cout << dump_json(j); }

int run_validate(const std::string& path) {
  RootDatum datum = datum_from_json(load_json_file(path), path);
  std::vector<std::string> violations = validate(datum);
  nlohmann::json out;
  out["ok"] = violations.empty();
  out["violations"] = violations;
  emit(out);
  return violations.empty() ? kExitOk : kExitVerdictFalse;
}

int run_weights(const std::string& path, const std::string& lambda_text) {
  RootDatum datum = datum_from_json(load_json_file(path), path);
  LatticeVector lambda = parse_lambda(lambda_text);
  SimpleSystem sys = find_simple_system(datum);
  FormalCharacter chi = irreducible_character(datum, sys, lambda);
  std::set<LatticeVector> wts = weight_set(datum, sys, lambda);

  nlohmann::json out;
  out["lambda"] = nlohmann::json::array();
  for (Int x : lambda) out["lambda"].push_back(x);
  out["weight_set"] = nlohmann::json::array();
  for (const auto& w : wts) {
    nlohmann::json jt = nlohmann::json::array();
    for (Int x : w) jt.push_back(x);
    out["weight_set"].push_back(jt);
  }
  out["character"] = character_to_json(chi);
  out["dimension"] = chi.total();
  emit(out);
  return kExitOk;
}

int run_polytope(const std::string& path, const std::string& lambda_text) {
  RootDatum datum = datum_from_json(load_json_file(path), path);
  LatticeVector lambda = parse_lambda(lambda_text);
  SimpleSystem sys = find_simple_system(datum);
  WeightPolytope polytope = build_polytope(datum, sys, lambda);
  emit(polytope_to_json(polytope));
  return kExitOk;
}

/** Full inverse pipeline from a matched presentation alone: recover both
 *  sides' root data from the weight multisets, then run the transport
 *  battery against the recovered data. */
ReconstructionReport reconstruct_from_presentation(
    const MatchedPresentation& mp) {
  ReconstructionReport report;
  std::vector<std::string> violations = validate(mp);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      report.failures.push_back("matched presentation: " + v);
    }
    return report;
  }

  std::vector<FormalCharacter> primed, unprimed;
  for (const auto& irrep : mp.irreps) {
    primed.push_back(irrep.weights_prime);
    unprimed.push_back(irrep.weights);
  }
  try {
    BlindResult rec_prime = blind_reconstruct(mp.rank, primed);
    BlindResult rec = blind_reconstruct(mp.rank, unprimed);
    for (const auto& f : rec_prime.flags) {
      report.failures.push_back("primed recovery: " + f);
    }
    for (const auto& f : rec.flags) {
      report.failures.push_back("recovery: " + f);
    }
    if (!report.failures.empty()) return report;

    RootDatum datum_prime{"recovered primed", mp.rank, rec_prime.roots,
                          rec_prime.coroots};
    RootDatum datum{"recovered", mp.rank, rec.roots, rec.coroots};
    return assemble_isomorphism(datum, datum_prime, mp);
  } catch (const InconsistencyError&) {
    throw;
  } catch (const Error& err) {
    report.failures.push_back(err.what());
    return report;
  }
}

int run_reconstruct(const std::string& path) {
  MatchedPresentation mp = mp_from_json(load_json_file(path), path);
  ReconstructionReport report = reconstruct_from_presentation(mp);
  emit(report_to_json(report));
  return report.isomorphism_ok ? kExitOk : kExitVerdictFalse;
}

int run_blind(const std::string& path) {
  auto [rank, characters] = blind_input_from_json(load_json_file(path), path);
  BlindResult result = blind_reconstruct(rank, characters);
  emit(blind_to_json(result, rank));
  return result.saturated && result.flags.empty() ? kExitOk
                                                  : kExitVerdictFalse;
}

int run_transport_check(const std::string& path, const std::string& path_prime,
                        const std::string& matrix_text) {
  RootDatum datum = datum_from_json(load_json_file(path), path);
  RootDatum datum_prime =
      datum_from_json(load_json_file(path_prime), path_prime);
  IntMatrix m = parse_matrix(matrix_text);
  if (m.rows != datum_prime.rank) {
    throw ArgumentError("--matrix: size differs from the primed datum rank");
  }
  MatchedPresentation mp = make_matched_presentation(datum_prime, m);
  ReconstructionReport report = assemble_isomorphism(datum, datum_prime, mp);
  emit(report_to_json(report));
  return report.isomorphism_ok ? kExitOk : kExitVerdictFalse;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  auto guarded = [&check](const std::string& name, auto&& body) {
    try {
      check(name, body());
    } catch (const std::exception& err) {
      check(name + " (" + err.what() + ")", false);
    }
  };

  const std::vector<std::string> fixtures = {"A1", "A2", "B2", "G2", "A3",
                                             "A1xA1"};
  for (const auto& type : fixtures) {
    guarded("datum axioms: " + type, [&type]() {
      RootDatum datum = make_datum(type, Lattice::simply_connected);
      return validate(datum).empty();
    });
  }

  guarded("hexagon polytope", []() {
    RootDatum datum = make_datum("A2", Lattice::simply_connected);
    SimpleSystem sys = find_simple_system(datum);
    WeightPolytope p = build_polytope(datum, sys, {1, 1});
    return p.vertices.size() == 6 && p.edges.size() == 6;
  });

  guarded("weight set routes agree", []() {
    RootDatum datum = make_datum("B2", Lattice::simply_connected);
    SimpleSystem sys = find_simple_system(datum);
    LatticeVector lambda{1, 1};
    return weight_set(datum, sys, lambda) ==
           weight_set_hull_coset(datum, sys, lambda);
  });

  guarded("edge routes agree", []() {
    RootDatum datum = make_datum("G2", Lattice::simply_connected);
    SimpleSystem sys = find_simple_system(datum);
    LatticeVector lambda = dominant_representative(datum, sys, {1, 0}).first;
    std::set<LatticeVector> wts = weight_set(datum, sys, lambda);
    auto reflections = edges_via_reflections(datum, sys, lambda);
    auto lp = edges_via_lp(wts);
    return reflections == lp;
  });

  guarded("rank-1 blind recovery", []() {
    FormalCharacter chi;
    chi.add_term({1}, 1);
    chi.add_term({-1}, 1);
    BlindResult result = blind_reconstruct(1, {chi});
    return result.roots == std::vector<LatticeVector>{{-2}, {2}} &&
           result.coroots == std::vector<LatticeVector>{{-1}, {1}} &&
           result.saturated;
  });

  guarded("identity round trip", []() {
    RootDatum datum = make_datum("A2", Lattice::simply_connected);
    MatchedPresentation mp =
        make_matched_presentation(datum, IntMatrix::identity(2));
    ReconstructionReport report = assemble_isomorphism(datum, datum, mp);
    return report.isomorphism_ok;
  });

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weight polytopes of irreducible representations and root-datum "
      "recovery from character data"};
  app.require_subcommand(1);

  std::string datum_path, datum_prime_path, lambda_text, matrix_text;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check root-datum axioms of a JSON file");
  validate_cmd->add_option("datum", datum_path, "root-datum JSON file")
      ->required();

  CLI::App* weights_cmd = app.add_subcommand(
      "weights", "Weight set and character of an irreducible");
  weights_cmd->add_option("datum", datum_path, "root-datum JSON file")
      ->required();
  weights_cmd
      ->add_option("--lambda", lambda_text,
                   "dominant highest weight, comma-separated integers")
      ->required();

  CLI::App* polytope_cmd =
      app.add_subcommand("polytope", "Weight polytope vertices and edges");
  polytope_cmd->add_option("datum", datum_path, "root-datum JSON file")
      ->required();
  polytope_cmd
      ->add_option("--lambda", lambda_text,
                   "dominant highest weight, comma-separated integers")
      ->required();

  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Recover root data from a matched presentation");
  reconstruct_cmd
      ->add_option("presentation", datum_path, "matched-presentation JSON")
      ->required();

  CLI::App* blind_cmd = app.add_subcommand(
      "blind", "Recover roots and coroots from characters alone");
  blind_cmd->add_option("input", datum_path, "blind-input JSON file")
      ->required();

  CLI::App* transport_cmd = app.add_subcommand(
      "transport-check",
      "Verify a matrix as a root-data isomorphism between two datum files");
  transport_cmd->add_option("datum", datum_path, "target root-datum JSON")
      ->required();
  transport_cmd
      ->add_option("datum_prime", datum_prime_path, "source root-datum JSON")
      ->required();
  transport_cmd
      ->add_option("--matrix", matrix_text,
                   "integer matrix, rows ';'-separated, entries ','-separated")
      ->required();

  app.add_subcommand("selftest", "Run the built-in fixture battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(datum_path);
    if (weights_cmd->parsed()) return run_weights(datum_path, lambda_text);
    if (polytope_cmd->parsed()) return run_polytope(datum_path, lambda_text);
    if (reconstruct_cmd->parsed()) return run_reconstruct(datum_path);
    if (blind_cmd->parsed()) return run_blind(datum_path);
    if (transport_cmd->parsed()) {
      return run_transport_check(datum_path, datum_prime_path, matrix_text);
    }
    return run_selftest();
  } catch (const InconsistencyError& err) {
    std::cerr << "inconsistency: " << err.what() << "\n";
    return kExitInconsistency;
  } catch (const ResourceError& err) {
    std::cerr << "resource limit: " << err.what() << "\n";
    return kExitInconsistency;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInconsistency;
  }
}
