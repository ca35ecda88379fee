#include "rootpoly/io.hpp"

#include <fstream>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name,
                          const std::string& where) {
  if (!j.is_object()) {
    throw ArgumentError(where + ": expected an object");
  }
  auto it = j.find(name);
  if (it == j.end()) {
    throw ArgumentError(where + ": missing field '" + name + "'");
  }
  return *it;
}

long long as_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ArgumentError(where + ": expected an integer");
  }
  return j.get<long long>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ArgumentError(where + ": expected a string");
  }
  return j.get<std::string>();
}

LatticeVector as_lattice_vector(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ArgumentError(where + ": expected an array of integers");
  }
  LatticeVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(as_integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

std::vector<LatticeVector> as_vector_list(const json& j,
                                          const std::string& where) {
  if (!j.is_array()) {
    throw ArgumentError(where + ": expected an array of arrays");
  }
  std::vector<LatticeVector> list;
  list.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    list.push_back(
        as_lattice_vector(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return list;
}

json vector_to_json(const LatticeVector& v) {
  json out = json::array();
  for (Int x : v) out.push_back(x);
  return out;
}

json vector_list_to_json(const std::vector<LatticeVector>& list) {
  json out = json::array();
  for (const auto& v : list) out.push_back(vector_to_json(v));
  return out;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArgumentError(path + ": cannot open file");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ArgumentError(path + ": " + err.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

RootDatum datum_from_json(const json& j, const std::string& where) {
  RootDatum datum;
  datum.label = as_string(require_field(j, "label", where), where + ".label");
  long long rank = as_integer(require_field(j, "rank", where), where + ".rank");
  if (rank <= 0) {
    throw ArgumentError(where + ".rank: must be positive");
  }
  datum.rank = static_cast<std::size_t>(rank);
  datum.roots = as_vector_list(require_field(j, "roots", where),
                               where + ".roots");
  datum.coroots = as_vector_list(require_field(j, "coroots", where),
                                 where + ".coroots");
  if (datum.roots.size() != datum.coroots.size()) {
    throw ArgumentError(where + ": roots and coroots differ in length");
  }
  for (const auto* side : {&datum.roots, &datum.coroots}) {
    for (const auto& v : *side) {
      if (v.size() != datum.rank) {
        throw ArgumentError(where +
                            ": root or coroot dimension differs from rank");
      }
    }
  }
  return datum;
}

json datum_to_json(const RootDatum& datum) {
  json out;
  out["label"] = datum.label;
  out["rank"] = datum.rank;
  out["roots"] = vector_list_to_json(datum.roots);
  out["coroots"] = vector_list_to_json(datum.coroots);
  return out;
}

FormalCharacter character_from_json(const json& j, const std::string& where) {
  const json& terms = require_field(j, "terms", where);
  if (!terms.is_array()) {
    throw ArgumentError(where + ".terms: expected an array");
  }
  FormalCharacter chi;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string term_where =
        where + ".terms[" + std::to_string(i) + "]";
    LatticeVector weight = as_lattice_vector(
        require_field(terms[i], "weight", term_where), term_where + ".weight");
    long long mult = as_integer(require_field(terms[i], "mult", term_where),
                                term_where + ".mult");
    chi.add_term(weight, mult);
  }
  return chi;
}

json character_to_json(const FormalCharacter& chi) {
  json terms = json::array();
  for (const auto& [w, m] : chi.terms()) {
    json term;
    term["weight"] = vector_to_json(w);
    term["mult"] = m;
    terms.push_back(term);
  }
  json out;
  out["terms"] = terms;
  return out;
}

json polytope_to_json(const WeightPolytope& polytope) {
  json edges = json::array();
  for (const auto& e : polytope.edges) {
    json edge;
    edge["a"] = vector_to_json(e.a);
    edge["b"] = vector_to_json(e.b);
    edge["lattice_count"] = e.lattice_count;
    edges.push_back(edge);
  }
  json out;
  out["lambda"] = vector_to_json(polytope.lambda);
  out["vertices"] = vector_list_to_json(polytope.vertices);
  out["edges"] = edges;
  return out;
}

MatchedPresentation mp_from_json(const json& j, const std::string& where) {
  MatchedPresentation mp;
  long long rank = as_integer(require_field(j, "rank", where), where + ".rank");
  if (rank <= 0) {
    throw ArgumentError(where + ".rank: must be positive");
  }
  mp.rank = static_cast<std::size_t>(rank);
  std::vector<LatticeVector> rows =
      as_vector_list(require_field(j, "M", where), where + ".M");
  if (rows.size() != mp.rank) {
    throw ArgumentError(where + ".M: expected " + std::to_string(mp.rank) +
                        " rows");
  }
  for (const auto& row : rows) {
    if (row.size() != mp.rank) {
      throw ArgumentError(where + ".M: expected square rows of length " +
                          std::to_string(mp.rank));
    }
  }
  mp.M = IntMatrix::from_rows(rows);

  const json& irreps = require_field(j, "irreps", where);
  if (!irreps.is_array()) {
    throw ArgumentError(where + ".irreps: expected an array");
  }
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const std::string irrep_where =
        where + ".irreps[" + std::to_string(i) + "]";
    MatchedIrrep irrep;
    irrep.label = as_string(require_field(irreps[i], "label", irrep_where),
                            irrep_where + ".label");
    irrep.weights_prime = character_from_json(
        json{{"terms", require_field(irreps[i], "weights_prime", irrep_where)}},
        irrep_where + ".weights_prime");
    irrep.weights = character_from_json(
        json{{"terms", require_field(irreps[i], "weights", irrep_where)}},
        irrep_where + ".weights");
    mp.irreps.push_back(std::move(irrep));
  }
  return mp;
}

json mp_to_json(const MatchedPresentation& mp) {
  json irreps = json::array();
  for (const auto& irrep : mp.irreps) {
    json entry;
    entry["label"] = irrep.label;
    entry["weights_prime"] = character_to_json(irrep.weights_prime)["terms"];
    entry["weights"] = character_to_json(irrep.weights)["terms"];
    irreps.push_back(entry);
  }
  json out;
  out["rank"] = mp.rank;
  out["M"] = vector_list_to_json(mp.M.to_rows());
  out["irreps"] = irreps;
  return out;
}

json report_to_json(const ReconstructionReport& report) {
  json out;
  out["recovered_roots"] = vector_list_to_json(report.recovered_roots);
  out["recovered_coroots"] = vector_list_to_json(report.recovered_coroots);
  out["simple_system_image"] = vector_list_to_json(report.simple_system_image);
  out["weyl_transport_ok"] = report.weyl_transport_ok;
  out["coroot_transport_ok"] = report.coroot_transport_ok;
  out["isomorphism_ok"] = report.isomorphism_ok;
  out["failures"] = report.failures;
  return out;
}

std::pair<std::size_t, std::vector<FormalCharacter>> blind_input_from_json(
    const json& j, const std::string& where) {
  long long rank = as_integer(require_field(j, "rank", where), where + ".rank");
  if (rank <= 0) {
    throw ArgumentError(where + ".rank: must be positive");
  }
  const json& characters = require_field(j, "characters", where);
  if (!characters.is_array()) {
    throw ArgumentError(where + ".characters: expected an array");
  }
  std::vector<FormalCharacter> list;
  for (std::size_t i = 0; i < characters.size(); ++i) {
    list.push_back(character_from_json(
        characters[i], where + ".characters[" + std::to_string(i) + "]"));
  }
  return {static_cast<std::size_t>(rank), std::move(list)};
}

json blind_to_json(const BlindResult& result, std::size_t rank) {
  json out;
  out["rank"] = rank;
  out["roots"] = vector_list_to_json(result.roots);
  out["coroots"] = vector_list_to_json(result.coroots);
  out["saturated"] = result.saturated;
  out["flags"] = result.flags;
  return out;
}

}  // namespace rootpoly
