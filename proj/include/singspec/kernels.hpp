#ifndef SINGSPEC_KERNELS_HPP
#define SINGSPEC_KERNELS_HPP

// Data-parallel kernels. Each OpenMP kernel has a serial reference with the
// same signature; the two must agree exactly (tests/test_kernels.cpp) and
// bench/ compares their speed.

#include <cstdint>
#include <string>
#include <vector>

#include "singspec/exc_geometry.hpp"
#include "singspec/nc_engine.hpp"
#include "singspec/rational.hpp"
#include "singspec/resolution.hpp"

namespace singspec {

/// Everything computed about K_alpha and K'_alpha at one exponent.
struct SheafPieces {
  Rational alpha;
  std::int64_t chi = 0;
  Cohomology k;
  std::int64_t chi_prime = 0;
  Cohomology k_prime;
  bool operator==(const SheafPieces&) const = default;
};

SheafPieces evaluate_sheaf_pieces(const ResolutionData& res, const Rational& alpha);

std::vector<SheafPieces> sheaf_pieces_serial(const ResolutionData& res, const std::vector<Rational>& alphas);
std::vector<SheafPieces> sheaf_pieces_parallel(const ResolutionData& res, const std::vector<Rational>& alphas);

/// All multiplicity vectors of length 1..max_n with entries in 0..max_m and
/// at least one positive entry, in lexicographic order by (n, m).
std::vector<NCModel> enumerate_nc_models(std::size_t max_n, std::int64_t max_m);

struct NcSweepReport {
  std::int64_t models = 0;
  std::int64_t alphas = 0;
  std::int64_t equivalence_failures = 0;   // J(alpha D) vs V^{>alpha} O
  std::int64_t shift_failures = 0;         // v(alpha + 1) = v(alpha) + m
  std::int64_t monotonicity_failures = 0;
  std::int64_t discreteness_failures = 0;  // constant on (alpha, next jump]
  std::int64_t root_failures = 0;          // jumping numbers in (0,1] vs b-function roots
  std::vector<std::string> first_failures;  // at most a few, for diagnostics

  std::int64_t failures() const {
    return equivalence_failures + shift_failures + monotonicity_failures + discreteness_failures + root_failures;
  }
  bool operator==(const NcSweepReport&) const = default;
};

/// Checks the normal-crossing identities on every model and every candidate
/// alpha <= alpha_bound.
NcSweepReport nc_sweep_serial(const std::vector<NCModel>& models, const Rational& alpha_bound);
NcSweepReport nc_sweep_parallel(const std::vector<NCModel>& models, const Rational& alpha_bound);

struct PsiSweepReport {
  std::int64_t queries = 0;
  std::int64_t nonzero = 0;           // queries where the eigenvalue condition held
  std::int64_t exactness_failures = 0;
  bool operator==(const PsiSweepReport&) const = default;
};

/// For each model and each alpha in its D(alpha)-relevant exponents, runs
/// every I within the support and every split of the support into (J, J'),
/// with mu chosen to satisfy and to violate the eigenvalue condition.
PsiSweepReport psi_sweep_serial(const std::vector<NCModel>& models);
PsiSweepReport psi_sweep_parallel(const std::vector<NCModel>& models);

}  // namespace singspec

#endif  // SINGSPEC_KERNELS_HPP
