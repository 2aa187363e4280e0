#ifndef SINGSPEC_RESOLUTION_HPP
#define SINGSPEC_RESOLUTION_HPP

// Combinatorial embedded resolution of a plane-curve germ: the components of
// the total transform with multiplicities and discrepancies, exceptional
// self-intersections, and the dual graph of transverse intersections.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singspec {

enum class ComponentKind { exceptional, non_exceptional };

/// Primitive ray of the toric fan, set only by the Newton-polygon builder.
using ToricRay = std::array<std::int64_t, 2>;

struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::exceptional;
  std::int64_t m = 1;  // multiplicity in the total transform
  std::int64_t a = 0;  // coefficient in the relative canonical divisor
  std::optional<std::int64_t> self_int;  // exceptional components only
  std::optional<ToricRay> ray;

  bool exceptional() const { return kind == ComponentKind::exceptional; }
};

using Edge = std::pair<std::size_t, std::size_t>;

class ResolutionData {
 public:
  ResolutionData() = default;
  ResolutionData(std::vector<Component> components, std::vector<Edge> edges);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return components_.size(); }
  const Component& operator[](std::size_t i) const { return components_[i]; }

  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws std::out_of_range

  /// Intersection number D'_i . D'_j: self_int on the diagonal (exceptional
  /// only), otherwise the number of edges joining i and j.
  std::int64_t intersection(std::size_t i, std::size_t j) const;

  const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_[i]; }
  std::vector<std::size_t> exceptional_indices() const;

  /// True when every non-exceptional component has multiplicity 1.
  bool reduced() const;

 private:
  std::vector<Component> components_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

enum class ViolationKind {
  component_field,
  duplicate_id,
  simple_graph,
  disconnected,
  not_negative_definite,
  adjunction,
  projection_formula,
};

struct Violation {
  ViolationKind kind;
  std::string component;  // empty when the violation is global
  std::string message;
};

const char* to_string(ViolationKind kind);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Checks component fields, simple graph, connected negative-definite
/// exceptional configuration, adjunction and the projection formula in exact
/// integer arithmetic. Empty result means the data is valid.
std::vector<Violation> validate(const ResolutionData& res);

/// Throws ValidationError when validate() reports anything.
void require_valid(const ResolutionData& res);

// ---------------------------------------------------------------------------
// Builders

struct ComponentSpec {
  std::string id;
  ComponentKind kind = ComponentKind::exceptional;
  std::int64_t m = 1;
  std::int64_t a = 0;
  std::optional<std::int64_t> self_int;
};

/// Validated data from an explicit component/edge listing (edges by id).
ResolutionData from_explicit(const std::vector<ComponentSpec>& components,
                             const std::vector<std::pair<std::string, std::string>>& edges);

struct BranchAttachment {
  std::size_t on = 0;   // index of the last infinitely-near point on the branch
  std::optional<std::string> id;
  std::int64_t m = 1;
};

struct ProximityInput {
  std::vector<std::int64_t> mults;                         // e_i
  std::vector<std::pair<std::size_t, std::size_t>> prox;   // (i, j): p_i proximate to p_j, j < i
  std::vector<BranchAttachment> branches;
};

struct ProximityBuild {
  ResolutionData resolution;
  std::int64_t delta = 0;     // sum e_i (e_i - 1) / 2
  std::int64_t branches = 0;  // r
};

/// Resolution of a sequence of point blow-ups. Exceptional ids are E1, E2, ...
/// in blow-up order; branches default to C (single) or C1, C2, ...
ProximityBuild from_proximity(const ProximityInput& input);

using LatticePoint = std::array<std::int64_t, 2>;

/// Toric log resolution of a Newton-nondegenerate germ from its support.
/// Interior fan rays are inserted as Stern-Brocot mediants and named E1, E2,
/// ... in insertion order. Coordinate axes dividing f become non-exceptional
/// components X ({x=0}) and Y ({y=0}).
ResolutionData from_newton(const std::vector<LatticePoint>& support, bool assume_nondegenerate = true);

struct NewtonEdge {
  LatticePoint from;
  LatticePoint to;
  ToricRay normal;             // primitive inward normal
  std::int64_t lattice_length;
};

/// Compact edges of the Newton polygon, ordered from the y-axis side to the
/// x-axis side.
std::vector<NewtonEdge> newton_edges(const std::vector<LatticePoint>& support);

/// Canonical string of the labelled dual graph (labels: kind, m, a,
/// self-intersection), invariant under relabelling of ids. Two resolutions are
/// isomorphic as labelled graphs iff their canonical forms agree. Requires the
/// dual graph to be a forest.
std::string canonical_form(const ResolutionData& res);

}  // namespace singspec

#endif  // SINGSPEC_RESOLUTION_HPP
