#include "singspec/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "singspec/errors.hpp"

namespace singspec {

RootSet::RootSet(std::vector<Rational> roots) : roots_(std::move(roots)) {
  sort_unique(roots_);
  for (const auto& r : roots_) {
    if (r >= 0) throw std::invalid_argument("RootSet: b-function roots are negative, got " + to_string(r));
  }
}

bool RootSet::contains(const Rational& r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }

namespace {

void require_qh(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 2) throw std::invalid_argument("x^a + y^b oracle needs a, b >= 2");
}

}  // namespace

Spectrum qh_spectrum(std::int64_t a, std::int64_t b) {
  require_qh(a, b);
  Spectrum sp;
  for (std::int64_t i = 1; i < a; ++i) {
    for (std::int64_t j = 1; j < b; ++j) sp.add(make_rational(i, a) + make_rational(j, b), 1);
  }
  return sp;
}

RootSet qh_bfunction_roots(std::int64_t a, std::int64_t b) {
  require_qh(a, b);
  std::vector<Rational> roots{Rational(-1)};
  for (std::int64_t i = 1; i < a; ++i) {
    for (std::int64_t j = 1; j < b; ++j) roots.push_back(-(make_rational(i, a) + make_rational(j, b)));
  }
  return RootSet(std::move(roots));
}

Spectrum wh_spectrum(const Rational& wx, const Rational& wy, const std::vector<LatticePoint>& basis) {
  if (wx <= 0 || wy <= 0) throw std::invalid_argument("wh_spectrum: weights must be positive");
  Spectrum sp;
  for (const auto& [i, j] : basis) sp.add(wx * (i + 1) + wy * (j + 1), 1);
  return sp;
}

RootSet wh_bfunction_roots(const Rational& wx, const Rational& wy, const std::vector<LatticePoint>& basis) {
  std::vector<Rational> roots{Rational(-1)};
  const auto sp = wh_spectrum(wx, wy, basis);
  for (const auto& [alpha, n] : sp.terms()) roots.push_back(-alpha);
  return RootSet(std::move(roots));
}

RootSet nc_bfunction_roots(const std::vector<std::int64_t>& m) {
  std::vector<Rational> roots;
  for (auto mi : m) {
    if (mi < 0) throw std::invalid_argument("nc_bfunction_roots: negative multiplicity");
    for (std::int64_t j = 1; j <= mi; ++j) roots.push_back(-make_rational(j, mi));
  }
  if (roots.empty()) throw std::invalid_argument("nc_bfunction_roots: some multiplicity must be positive");
  return RootSet(std::move(roots));
}

MilnorData milnor_delta(std::int64_t a, std::int64_t b) {
  require_qh(a, b);
  MilnorData d;
  d.mu = (a - 1) * (b - 1);
  d.branches = std::gcd(a, b);
  d.delta = (d.mu + d.branches - 1) / 2;
  return d;
}

MilnorData milnor_delta(const ProximityBuild& build) {
  return MilnorData{2 * build.delta - build.branches + 1, build.delta, build.branches};
}

void check_milnor_consistency(std::int64_t a, std::int64_t b, const ProximityBuild& build) {
  const auto closed = milnor_delta(a, b);
  const auto from_points = milnor_delta(build);
  if (closed != from_points) {
    throw ConsistencyError("x^" + std::to_string(a) + "+y^" + std::to_string(b) + ": closed form (mu,delta,r) = (" +
                           std::to_string(closed.mu) + "," + std::to_string(closed.delta) + "," +
                           std::to_string(closed.branches) + ") but proximity data gives (" +
                           std::to_string(from_points.mu) + "," + std::to_string(from_points.delta) + "," +
                           std::to_string(from_points.branches) + ")");
  }
}

std::vector<Rational> elsv_violators(const std::vector<Rational>& jumps, const RootSet& roots) {
  std::vector<Rational> out;
  for (const auto& xi : jumps) {
    if (!roots.contains(-xi)) out.push_back(xi);
  }
  return out;
}

ProximityInput qh_proximity_input(std::int64_t a, std::int64_t b) {
  require_qh(a, b);
  std::int64_t larger = std::max(a, b);
  std::int64_t smaller = std::min(a, b);

  // Euclid: each division step larger = q * smaller + r contributes q points
  // of multiplicity `smaller`.
  std::vector<std::vector<std::size_t>> blocks;
  ProximityInput in;
  while (smaller > 0) {
    const std::int64_t q = larger / smaller;
    const std::int64_t r = larger % smaller;
    blocks.emplace_back();
    for (std::int64_t k = 0; k < q; ++k) {
      blocks.back().push_back(in.mults.size());
      in.mults.push_back(smaller);
    }
    larger = smaller;
    smaller = r;
  }

  for (std::size_t t = 0; t < blocks.size(); ++t) {
    for (std::size_t s = 0; s < blocks[t].size(); ++s) {
      const std::size_t p = blocks[t][s];
      if (p > 0) in.prox.emplace_back(p, p - 1);
      // Satellite points also lie on the last exceptional curve of an
      // earlier block.
      if (s > 0 && t >= 1) in.prox.emplace_back(p, blocks[t - 1].back());
      if (s == 0 && t >= 2) in.prox.emplace_back(p, blocks[t - 2].back());
    }
  }

  const std::int64_t g = std::gcd(a, b);
  for (std::int64_t k = 0; k < g; ++k) in.branches.push_back(BranchAttachment{in.mults.size() - 1, std::nullopt, 1});
  return in;
}

}  // namespace singspec
