#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rootpoly/characters.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/reconstruct.hpp"
#include "rootpoly/root_datum.hpp"

namespace rootpoly {

/** Reads and parses a JSON file; ArgumentError names the path on failure. */
nlohmann::json load_json_file(const std::string& path);

/** Canonical serialization: two-space indent, alphabetically sorted keys,
 *  trailing newline.  Byte-for-byte deterministic for fixed input. */
std::string dump_json(const nlohmann::json& j);

/* Root datum: {"label": string, "rank": int,
 *              "roots": [[int]], "coroots": [[int]]} (index-aligned). */
RootDatum datum_from_json(const nlohmann::json& j,
                          const std::string& where = "datum");
nlohmann::json datum_to_json(const RootDatum& datum);

/* Character: {"terms": [{"weight": [int], "mult": int}]}. */
FormalCharacter character_from_json(const nlohmann::json& j,
                                    const std::string& where = "character");
nlohmann::json character_to_json(const FormalCharacter& chi);

/* Polytope: {"lambda": [int], "vertices": [[int]],
 *            "edges": [{"a": [int], "b": [int], "lattice_count": int}]}. */
nlohmann::json polytope_to_json(const WeightPolytope& polytope);

/* Matched presentation:
 * {"rank": int, "M": [[int]],
 *  "irreps": [{"label": string, "weights_prime": [{"weight","mult"}],
 *              "weights": [{"weight","mult"}]}]}. */
MatchedPresentation mp_from_json(const nlohmann::json& j,
                                 const std::string& where = "presentation");
nlohmann::json mp_to_json(const MatchedPresentation& mp);

nlohmann::json report_to_json(const ReconstructionReport& report);

/* Blind input: {"rank": int, "characters": [character]}. */
std::pair<std::size_t, std::vector<FormalCharacter>> blind_input_from_json(
    const nlohmann::json& j, const std::string& where = "blind input");
nlohmann::json blind_to_json(const BlindResult& result, std::size_t rank);

}  // namespace rootpoly
