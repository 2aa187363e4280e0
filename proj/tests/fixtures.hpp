#ifndef SINGSPEC_TESTS_FIXTURES_HPP
#define SINGSPEC_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "singspec/resolution.hpp"

namespace fixtures {

using singspec::ComponentKind;
using singspec::ComponentSpec;

inline ComponentSpec exc(std::string id, std::int64_t m, std::int64_t a, std::int64_t self) {
  return ComponentSpec{std::move(id), ComponentKind::exceptional, m, a, self};
}

inline ComponentSpec branch(std::string id, std::int64_t m = 1) {
  return ComponentSpec{std::move(id), ComponentKind::non_exceptional, m, 0, std::nullopt};
}

using EdgeList = std::vector<std::pair<std::string, std::string>>;

// x^2 + y^3 after three blow-ups.
inline std::vector<ComponentSpec> cusp_components() {
  return {exc("E1", 2, 1, -3), exc("E2", 3, 2, -2), exc("E3", 6, 4, -1), branch("C")};
}
inline EdgeList cusp_edges() { return {{"E1", "E3"}, {"E2", "E3"}, {"E3", "C"}}; }
inline singspec::ResolutionData cusp() { return singspec::from_explicit(cusp_components(), cusp_edges()); }

// x^2 + y^2 after one blow-up.
inline singspec::ResolutionData node() {
  return singspec::from_explicit({exc("E1", 2, 1, -1), branch("B1"), branch("B2")}, {{"E1", "B1"}, {"E1", "B2"}});
}

// x^2 + y^4 after two blow-ups.
inline singspec::ResolutionData a3() {
  return singspec::from_explicit({exc("E1", 2, 1, -2), exc("E2", 4, 2, -1), branch("B1"), branch("B2")},
                                 {{"E1", "E2"}, {"E2", "B1"}, {"E2", "B2"}});
}

inline singspec::ResolutionData smooth() { return singspec::from_explicit({branch("C")}, {}); }

inline singspec::ProximityInput cusp_proximity() {
  return {{2, 1, 1}, {{1, 0}, {2, 0}, {2, 1}}, {singspec::BranchAttachment{2, std::nullopt, 1}}};
}

}  // namespace fixtures

#endif  // SINGSPEC_TESTS_FIXTURES_HPP
