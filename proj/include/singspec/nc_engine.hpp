#ifndef SINGSPEC_NC_ENGINE_HPP
#define SINGSPEC_NC_ENGINE_HPP

// Local normal-crossing model f = prod_i x_i^{m_i}: the V-filtration on the
// structure sheaf, multiplier ideals, jumping numbers, and the dimensions of
// the combinatorial pieces of the nearby-cycle module.
//
// Coordinates are 0-based throughout the C++ API.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

using Exponent = std::vector<std::int64_t>;
using IndexSet = std::vector<std::size_t>;

class NCModel {
 public:
  /// Throws std::invalid_argument if m is empty, has a negative entry, or is
  /// identically zero.
  explicit NCModel(std::vector<std::int64_t> multiplicities);

  std::size_t dimension() const { return m_.size(); }
  const std::vector<std::int64_t>& multiplicities() const { return m_; }
  std::int64_t multiplicity(std::size_t i) const { return m_[i]; }

  /// Coordinates with m_i > 0, ascending.
  IndexSet support() const;

  bool operator==(const NCModel&) const = default;

 private:
  std::vector<std::int64_t> m_;
};

/// Monomial ideal in n variables, stored as its minimal generators sorted
/// lexicographically. No generators is the zero ideal; the single zero
/// exponent is the unit ideal.
class MonomialIdeal {
 public:
  /// Reduces `generators` to the componentwise-minimal antichain.
  MonomialIdeal(std::size_t n, std::vector<Exponent> generators);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Exponent(n, 0)}); }
  static MonomialIdeal principal(Exponent generator);

  std::size_t dimension() const { return n_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(std::span<const std::int64_t> monomial) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t n_;
  std::vector<Exponent> gens_;
};

/// true iff a <= b in every coordinate.
bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// The unique alpha with x^nu in V^alpha but not in V^{>alpha}:
/// min over the support of (nu_i + 1)/m_i.
Rational monomial_v_order(const NCModel& model, std::span<const std::int64_t> nu);

/// Generator of the principal ideal V^alpha O: nu_i = max(ceil(m_i alpha) - 1, 0).
Exponent v_generator(const NCModel& model, const Rational& alpha);

/// J(alpha D) with the identity resolution: generator floor(alpha m_i),
/// clamped at 0. Equals V^{alpha + eps} O.
MonomialIdeal multiplier_nc(const NCModel& model, const Rational& alpha);

/// {j/m_i : j >= 1, j/m_i <= bound}, sorted and deduplicated. bound must be > 0.
std::vector<Rational> jumping_nc(const NCModel& model, const Rational& bound);

struct BfGenerator {
  Exponent exponent;
  std::int64_t j;  // power of d/dt
  bool operator==(const BfGenerator&) const = default;
};

/// Generators V^{alpha+j}O (x) d_t^j, 0 <= j <= max(1 - alpha, 0), of V^alpha B_f.
std::vector<BfGenerator> v_bf_generators(const NCModel& model, const Rational& alpha);

/// Components of D(alpha): {i : m_i > 0, m_i alpha integral}. alpha in (0,1].
IndexSet d_alpha_nc(const NCModel& model, const Rational& alpha);

struct PsiPieceQuery {
  Rational alpha;           // in (0,1]
  std::vector<Rational> mu; // each in (0,1]
  IndexSet I;
  IndexSet J;
  IndexSet J_prime;
};

/// Throws std::invalid_argument unless alpha, mu are in (0,1], I is a subset
/// of the support, and J, J' partition the support.
void validate_query(const NCModel& model, const PsiPieceQuery& q);

/// True iff mu_i + m_i alpha is integral on every support coordinate.
bool psi_eigen_condition(const NCModel& model, const PsiPieceQuery& q);

/// dim C[s]/s^{|I|} when the eigenvalue condition holds, else 0.
std::int64_t psi_piece_dim(const NCModel& model, const PsiPieceQuery& q);

struct PsiDims {
  std::int64_t full = 0;
  std::int64_t shriek = 0;  // j'_! j'^* piece: |I| - |I n J|
  std::int64_t star = 0;    // i_* i^! piece:   |I \ J'|
  bool operator==(const PsiDims&) const = default;
};

PsiDims psi_localized_dims(const NCModel& model, const PsiPieceQuery& q);

}  // namespace singspec

#endif  // SINGSPEC_NC_ENGINE_HPP
