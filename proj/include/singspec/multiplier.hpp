#ifndef SINGSPEC_MULTIPLIER_HPP
#define SINGSPEC_MULTIPLIER_HPP

// Multiplier ideals, jumping numbers and adjoint conditions of a germ given
// by its embedded resolution. Ideals are represented by order conditions
// along the components of the total transform.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singspec/nc_engine.hpp"
#include "singspec/rational.hpp"
#include "singspec/resolution.hpp"

namespace singspec {

/// The germ {g : ord_{D'_i}(pi^* g) >= c_i for all i}. Entries follow the
/// component order of the resolution; ids not listed have threshold 0.
class ValuationConditions {
 public:
  ValuationConditions() = default;

  void set(std::string id, std::int64_t threshold);
  std::int64_t threshold(const std::string& id) const;
  const std::vector<std::pair<std::string, std::int64_t>>& entries() const { return entries_; }

  /// Componentwise comparison of thresholds.
  bool weaker_or_equal(const ValuationConditions& other) const;

  bool operator==(const ValuationConditions&) const = default;

 private:
  std::vector<std::pair<std::string, std::int64_t>> entries_;
};

/// c_i = max(floor(alpha m_i) - a_i, 0).
ValuationConditions multiplier_conditions(const ResolutionData& res, const Rational& alpha);

/// {(a_i + 1 + k)/m_i : k >= 0} intersected with (lo, hi], sorted. 0 <= lo < hi.
std::vector<Rational> jumping_candidates(const ResolutionData& res, const Rational& lo, const Rational& hi);

/// dim of the graded piece at x, computed as chi(K_alpha) with h^1 = 0
/// enforced. alpha in (0,1].
std::int64_t graded_dim(const ResolutionData& res, const Rational& alpha);

struct JumpMultiplicity {
  Rational alpha;
  std::int64_t dim;
  bool operator==(const JumpMultiplicity&) const = default;
};

/// Candidates in (0,1] with positive graded dimension.
std::vector<JumpMultiplicity> punctual_jumping_numbers(const ResolutionData& res);

/// min_i (a_i + 1)/m_i.
Rational lct(const ResolutionData& res);

/// {xi + k : k >= 0, xi + k <= bound}, sorted. jumps must lie in (0,1].
std::vector<Rational> skoda_extend(const std::vector<Rational>& jumps, const Rational& bound);

/// c_i = max(m_i - a_i, 0) on exceptional components, 0 on branches.
/// Requires a reduced divisor.
ValuationConditions adjoint_conditions(const ResolutionData& res);

struct OmegaQuotient {
  std::vector<JumpMultiplicity> graded;  // alpha in (0,1), positive dims only
  std::int64_t bound_at_one = 0;         // dim Gr^1 <= graded_dim(1)

  struct Sandwich {
    std::int64_t lower = 0;  // sum over (0,1)
    std::int64_t delta = 0;
    std::int64_t upper = 0;  // sum over (0,1]
    bool holds() const { return lower <= delta && delta <= upper; }
  };
  std::optional<Sandwich> sandwich;
};

/// Graded dimensions of omega_D / omega~_D; the sandwich is filled in when
/// delta is known.
OmegaQuotient omega_quotient_dims(const ResolutionData& res, std::optional<std::int64_t> delta = std::nullopt);

/// J(alpha D) of a germ built by from_newton, as a monomial ideal in (x, y).
/// Valid for alpha < 1, where strict transforms impose no condition.
MonomialIdeal toric_multiplier_ideal(const ResolutionData& res, const Rational& alpha);

}  // namespace singspec

#endif  // SINGSPEC_MULTIPLIER_HPP
