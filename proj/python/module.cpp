// Python bindings: thin conversions between plain Python containers and the
// C++ core.  Data crosses the boundary as dicts, lists and (weight, mult)
// pairs, so the Python side needs no wrapper classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootpoly/characters.hpp"
#include "rootpoly/errors.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/reconstruct.hpp"
#include "rootpoly/root_datum.hpp"
#include "rootpoly/weyl.hpp"

namespace py = pybind11;
using namespace rootpoly;

namespace {

using PyCharacter = std::vector<std::pair<LatticeVector, long long>>;

RootDatum datum_from_dict(const py::dict& d) {
  RootDatum datum;
  datum.label = py::cast<std::string>(d["label"]);
  datum.rank = py::cast<std::size_t>(d["rank"]);
  datum.roots = py::cast<std::vector<LatticeVector>>(d["roots"]);
  datum.coroots = py::cast<std::vector<LatticeVector>>(d["coroots"]);
  return datum;
}

py::dict datum_to_dict(const RootDatum& datum) {
  py::dict d;
  d["label"] = datum.label;
  d["rank"] = datum.rank;
  d["roots"] = datum.roots;
  d["coroots"] = datum.coroots;
  return d;
}

Lattice lattice_from_string(const std::string& name) {
  if (name == "sc") return Lattice::simply_connected;
  if (name == "adj") return Lattice::adjoint;
  if (name == "gl") return Lattice::gl_variant;
  throw ArgumentError("lattice: expected 'sc', 'adj' or 'gl', got '" + name +
                      "'");
}

FormalCharacter character_from_pairs(std::size_t rank, const PyCharacter& terms) {
  FormalCharacter chi(rank);
  for (const auto& [w, m] : terms) chi.add_term(w, m);
  return chi;
}

PyCharacter character_to_pairs(const FormalCharacter& chi) {
  PyCharacter out;
  for (const auto& [w, m] : chi.terms()) out.emplace_back(w, m);
  return out;
}

py::dict report_to_dict(const ReconstructionReport& report) {
  py::dict d;
  d["recovered_roots"] = report.recovered_roots;
  d["recovered_coroots"] = report.recovered_coroots;
  d["simple_system_image"] = report.simple_system_image;
  d["weyl_transport_ok"] = report.weyl_transport_ok;
  d["coroot_transport_ok"] = report.coroot_transport_ok;
  d["isomorphism_ok"] = report.isomorphism_ok;
  d["failures"] = report.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Weight polytopes of irreducible representations and root-datum "
      "recovery from character data";

  py::register_exception<DimensionError>(m, "DimensionError");
  py::register_exception<ArgumentError>(m, "ArgumentError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<ResourceError>(m, "ResourceError");
  py::register_exception<InconsistencyError>(m, "InconsistencyError");
  py::register_exception<MissingDataError>(m, "MissingDataError");

  m.def(
      "construct",
      [](const std::string& type, const std::string& lattice) {
        return datum_to_dict(make_datum(type, lattice_from_string(lattice)));
      },
      py::arg("type"), py::arg("lattice") = "sc",
      "Build a named root datum; lattice is 'sc', 'adj' or 'gl'.");

  m.def(
      "validate",
      [](const py::dict& datum) { return validate(datum_from_dict(datum)); },
      py::arg("datum"),
      "All axiom violations of the datum; empty means valid.");

  m.def(
      "weights",
      [](const py::dict& datum_dict, const LatticeVector& lambda) {
        RootDatum datum = datum_from_dict(datum_dict);
        SimpleSystem sys = find_simple_system(datum);
        std::set<LatticeVector> wts = weight_set(datum, sys, lambda);
        return std::vector<LatticeVector>(wts.begin(), wts.end());
      },
      py::arg("datum"), py::arg("lambda_"),
      "Sorted weight set of the irreducible with the given highest weight.");

  m.def(
      "character",
      [](const py::dict& datum_dict, const LatticeVector& lambda) {
        RootDatum datum = datum_from_dict(datum_dict);
        SimpleSystem sys = find_simple_system(datum);
        return character_to_pairs(irreducible_character(datum, sys, lambda));
      },
      py::arg("datum"), py::arg("lambda_"),
      "Weight multiplicities of the irreducible, as (weight, mult) pairs.");

  m.def(
      "dimension",
      [](const py::dict& datum_dict, const LatticeVector& lambda) {
        RootDatum datum = datum_from_dict(datum_dict);
        SimpleSystem sys = find_simple_system(datum);
        // Exact rational, always integer-valued for dominant weights.
        return weyl_dimension(datum, sys, lambda).convert_to<long long>();
      },
      py::arg("datum"), py::arg("lambda_"),
      "Dimension of the irreducible, by the product formula.");

  m.def(
      "polytope",
      [](const py::dict& datum_dict, const LatticeVector& lambda) {
        RootDatum datum = datum_from_dict(datum_dict);
        SimpleSystem sys = find_simple_system(datum);
        WeightPolytope p = build_polytope(datum, sys, lambda);
        py::dict d;
        d["lambda"] = p.lambda;
        d["vertices"] = p.vertices;
        py::list edges;
        for (const auto& e : p.edges) {
          edges.append(py::make_tuple(e.a, e.b, e.lattice_count));
        }
        d["edges"] = edges;
        return d;
      },
      py::arg("datum"), py::arg("lambda_"),
      "Vertices and edges of the weight polytope; edges carry their lattice "
      "point count.");

  m.def(
      "decompose",
      [](const py::dict& datum_dict, const PyCharacter& chi_pairs) {
        RootDatum datum = datum_from_dict(datum_dict);
        SimpleSystem sys = find_simple_system(datum);
        WeylGroup group = weyl_group(datum, sys);
        FormalCharacter chi = character_from_pairs(datum.rank, chi_pairs);
        std::map<LatticeVector, long long> parts =
            decompose(datum, sys, group, chi);
        return PyCharacter(parts.begin(), parts.end());
      },
      py::arg("datum"), py::arg("character"),
      "Write an invariant character as (highest weight, coefficient) pairs.");

  m.def(
      "transport_check",
      [](const py::dict& datum_dict, const py::dict& datum_prime_dict,
         const std::vector<LatticeVector>& matrix_rows,
         const std::vector<LatticeVector>& extra_highest_weights) {
        RootDatum datum = datum_from_dict(datum_dict);
        RootDatum datum_prime = datum_from_dict(datum_prime_dict);
        IntMatrix m_ = IntMatrix::from_rows(matrix_rows);
        MatchedPresentation mp =
            make_matched_presentation(datum_prime, m_, extra_highest_weights);
        return report_to_dict(assemble_isomorphism(datum, datum_prime, mp));
      },
      py::arg("datum"), py::arg("datum_prime"), py::arg("matrix"),
      py::arg("extra_highest_weights") = std::vector<LatticeVector>{},
      "Verify a matrix as a root-data isomorphism through character "
      "transport; returns the full report.");

  m.def(
      "blind",
      [](std::size_t rank, const std::vector<PyCharacter>& characters) {
        std::vector<FormalCharacter> list;
        for (const auto& pairs : characters) {
          list.push_back(character_from_pairs(rank, pairs));
        }
        BlindResult result = blind_reconstruct(rank, list);
        py::dict d;
        d["roots"] = result.roots;
        d["coroots"] = result.coroots;
        d["saturated"] = result.saturated;
        d["flags"] = result.flags;
        return d;
      },
      py::arg("rank"), py::arg("characters"),
      "Recover roots and coroots from raw weight multisets alone.");
}
