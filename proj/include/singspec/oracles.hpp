#ifndef SINGSPEC_ORACLES_HPP
#define SINGSPEC_ORACLES_HPP

// Closed-form ground truth, independent of the resolution engine: spectra and
// b-function roots of x^a + y^b and of monomials, Milnor/delta invariants,
// and the standard blow-up sequence of x^a + y^b.

#include <cstdint>
#include <vector>

#include "singspec/exc_geometry.hpp"
#include "singspec/rational.hpp"
#include "singspec/resolution.hpp"

namespace singspec {

/// Distinct roots of a Bernstein-Sato polynomial, sorted ascending (all < 0).
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<Rational> roots);

  bool contains(const Rational& r) const;
  const std::vector<Rational>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  bool operator==(const RootSet&) const = default;

 private:
  std::vector<Rational> roots_;
};

/// Spectrum of x^a + y^b: one unit at i/a + j/b, 1 <= i < a, 1 <= j < b.
Spectrum qh_spectrum(std::int64_t a, std::int64_t b);

/// {-(i/a + j/b)} together with -1.
RootSet qh_bfunction_roots(std::int64_t a, std::int64_t b);

/// Weighted-homogeneous f with weights (wx, wy) and a monomial basis
/// x^i y^j of its Milnor algebra: one unit at wx (i+1) + wy (j+1) per basis
/// element. The basis is supplied by the caller.
Spectrum wh_spectrum(const Rational& wx, const Rational& wy, const std::vector<LatticePoint>& basis);

/// Negated wh_spectrum exponents together with -1.
RootSet wh_bfunction_roots(const Rational& wx, const Rational& wy, const std::vector<LatticePoint>& basis);

/// {-j/m_i : 1 <= j <= m_i} for the monomial prod x_i^{m_i}.
RootSet nc_bfunction_roots(const std::vector<std::int64_t>& m);

struct MilnorData {
  std::int64_t mu = 0;
  std::int64_t delta = 0;
  std::int64_t branches = 0;
  bool operator==(const MilnorData&) const = default;
};

/// x^a + y^b: mu = (a-1)(b-1), r = gcd(a,b), delta = (mu + r - 1)/2.
MilnorData milnor_delta(std::int64_t a, std::int64_t b);

/// From a proximity build: delta and r as recorded, mu = 2 delta - r + 1.
MilnorData milnor_delta(const ProximityBuild& build);

/// Throws ConsistencyError if the proximity build's invariants disagree with
/// the closed form for x^a + y^b.
void check_milnor_consistency(std::int64_t a, std::int64_t b, const ProximityBuild& build);

/// Jumping numbers xi with -xi not a root. Empty means the check passes.
std::vector<Rational> elsv_violators(const std::vector<Rational>& jumps, const RootSet& roots);

/// Infinitely-near point sequence of x^a + y^b from the Euclidean algorithm
/// on (a, b): multiplicities, proximities and the strict-transform branches.
ProximityInput qh_proximity_input(std::int64_t a, std::int64_t b);

}  // namespace singspec

#endif  // SINGSPEC_ORACLES_HPP
