#ifndef SINGSPEC_DOCUMENT_HPP
#define SINGSPEC_DOCUMENT_HPP

// JSON input documents. Exactly one top-level key selects the variant:
//
//   {"nc":        {"multiplicities": [2, 3]}}
//   {"curve":     {"components": [{"id": "E1", "kind": "exceptional", "m": 2, "a": 1, "self": -3}, ...],
//                  "edges": [["E1", "E3"], ...]}}
//   {"proximity": {"mults": [2, 1, 1], "prox": [[1, 0], [2, 0], [2, 1]], "branches": [{"on": 2}]}}
//   {"newton":    {"support": [[2, 0], [0, 3]], "nondegenerate": true}}
//   {"qh":        {"a": 2, "b": 3}}
//
// All numeric fields are integers.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "singspec/resolution.hpp"

namespace singspec {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct NcDocument {
  std::vector<std::int64_t> multiplicities;
};

struct CurveDocument {
  std::vector<ComponentSpec> components;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct NewtonDocument {
  std::vector<LatticePoint> support;
  bool nondegenerate = true;
};

struct QhDocument {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

using InputDocument = std::variant<NcDocument, CurveDocument, ProximityInput, NewtonDocument, QhDocument>;

InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_document_text(const std::string& text);
InputDocument load_document(const std::filesystem::path& path);

const char* variant_name(const InputDocument& doc);

/// A plane-curve germ assembled from a curve-type document, with whatever
/// classical invariants the input determines.
struct Germ {
  ResolutionData resolution;
  std::optional<std::int64_t> delta;
  std::optional<std::int64_t> branches;
  std::optional<std::pair<std::int64_t, std::int64_t>> qh;  // x^a + y^b
  std::optional<ProximityBuild> proximity;
  bool toric = false;  // built by from_newton
};

/// Throws InputError for the nc variant; builder errors propagate.
Germ build_germ(const InputDocument& doc);

}  // namespace singspec

#endif  // SINGSPEC_DOCUMENT_HPP
