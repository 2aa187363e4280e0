#ifndef SINGSPEC_EXC_GEOMETRY_HPP
#define SINGSPEC_EXC_GEOMETRY_HPP

// Line bundles K_alpha, K'_alpha on the part E(alpha) of the exceptional
// fiber, their cohomology, and the spectrum of a plane-curve germ assembled
// from them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singspec/rational.hpp"
#include "singspec/resolution.hpp"

namespace singspec {

struct EAlpha {
  std::vector<std::size_t> exceptional;  // E(alpha): exceptional E_i with m_i alpha integral
  std::vector<std::size_t> other;        // E'(alpha): non-exceptional with m_i alpha integral
  std::vector<Edge> double_prime;        // E''(alpha): (exceptional, other) pairs that meet
};

/// alpha in (0,1]. E''(alpha) is read component-wise: both meeting
/// components must satisfy the integrality condition.
EAlpha e_alpha(const ResolutionData& res, const Rational& alpha);

/// Nodal configuration of rational curves carrying a line bundle.
struct CurveConfig {
  struct Curve {
    std::string id;
    std::int64_t degree = 0;
  };
  std::vector<Curve> curves;
  std::vector<std::pair<std::size_t, std::size_t>> nodes;  // indices into curves
};

/// The restriction of K_alpha (primed = false) or K'_alpha (primed = true)
/// to E(alpha). alpha in (0,1].
CurveConfig k_sheaf(const ResolutionData& res, const Rational& alpha, bool primed);

/// Riemann-Roch on a nodal curve of P^1's: sum (deg + 1) - #nodes.
std::int64_t euler_char(const CurveConfig& cfg);

/// h^0 by exact linear algebra: on each curve sections are polynomials of
/// degree <= deg in an affine coordinate, and node k on a curve sits at the
/// point first_position + k. Nodes glue values.
std::int64_t h0_at_positions(const CurveConfig& cfg, std::int64_t first_position);

struct Cohomology {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  bool operator==(const Cohomology&) const = default;
};

/// h^0 from two independent node placements (0,1,2,... and 10,11,12,...),
/// h^1 = h^0 - chi. Throws ConsistencyError if the placements disagree or
/// h^1 would be negative.
Cohomology h0_h1(const CurveConfig& cfg);

/// Finite fractional polynomial sum n_alpha t^alpha with n_alpha > 0.
class Spectrum {
 public:
  Spectrum() = default;

  void add(const Rational& alpha, std::int64_t count);
  std::int64_t multiplicity(const Rational& alpha) const;
  std::int64_t total() const;
  bool empty() const { return terms_.empty(); }
  const std::map<Rational, std::int64_t>& terms() const { return terms_; }

  /// n_alpha = n_{center*2 - alpha} for every alpha.
  bool symmetric_about(const Rational& center) const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::map<Rational, std::int64_t> terms_;
};

/// {j/m_i : E_i exceptional, 1 <= j <= m_i}: every alpha in (0,1] with
/// E(alpha) nonempty. Sorted.
std::vector<Rational> fiber_exponents(const ResolutionData& res);

/// Spectrum of a reduced plane-curve germ from its resolution:
/// n_alpha = chi(K_alpha) for alpha in (0,1] (with h^1(K_alpha) = 0 checked)
/// and n_{2-beta} = chi(K'_beta) for beta in (0,1).
Spectrum spectrum(const ResolutionData& res);

struct HodgePieces {
  Cohomology k;        // F^1 H^1, F^1 H^2 of the Milnor fiber, e(-alpha) part
  Cohomology k_prime;  // same with compact supports
  bool operator==(const HodgePieces&) const = default;
};

HodgePieces hodge_piece_dims(const ResolutionData& res, const Rational& alpha);

/// Throws std::invalid_argument unless the data describes a reduced germ
/// whose exceptional fiber is a divisor (or a smooth germ with none).
void require_curve_germ(const ResolutionData& res);

}  // namespace singspec

#endif  // SINGSPEC_EXC_GEOMETRY_HPP
