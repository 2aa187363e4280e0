#include "singspec/multiplier.hpp"

#include <algorithm>
#include <stdexcept>

#include "singspec/errors.hpp"
#include "singspec/exc_geometry.hpp"
#include "singspec/kernels.hpp"

namespace singspec {

void ValuationConditions::set(std::string id, std::int64_t threshold) {
  if (threshold < 0) throw std::invalid_argument("ValuationConditions: negative threshold for " + id);
  for (auto& [key, value] : entries_) {
    if (key == id) {
      value = threshold;
      return;
    }
  }
  entries_.emplace_back(std::move(id), threshold);
}

std::int64_t ValuationConditions::threshold(const std::string& id) const {
  for (const auto& [key, value] : entries_) {
    if (key == id) return value;
  }
  return 0;
}

bool ValuationConditions::weaker_or_equal(const ValuationConditions& other) const {
  for (const auto& [key, value] : entries_) {
    if (value > other.threshold(key)) return false;
  }
  return true;
}

ValuationConditions multiplier_conditions(const ResolutionData& res, const Rational& alpha) {
  ValuationConditions out;
  for (const auto& c : res.components()) {
    out.set(c.id, std::max<std::int64_t>(floor_i64(alpha * c.m) - c.a, 0));
  }
  return out;
}

std::vector<Rational> jumping_candidates(const ResolutionData& res, const Rational& lo, const Rational& hi) {
  if (lo < 0 || lo >= hi) throw std::invalid_argument("jumping_candidates: need 0 <= lo < hi");
  std::vector<Rational> out;
  for (const auto& c : res.components()) {
    // (a + 1 + k)/m ranges over j/m with j >= a + 1.
    const std::int64_t first = std::max<std::int64_t>(c.a + 1, floor_i64(lo * c.m) + 1);
    const std::int64_t last = floor_i64(hi * c.m);
    for (std::int64_t j = first; j <= last; ++j) out.push_back(make_rational(j, c.m));
  }
  sort_unique(out);
  return out;
}

namespace {

std::int64_t checked_dim(const SheafPieces& piece) {
  if (piece.k.h1 != 0) {
    throw ConsistencyError("h1(K_" + to_string(piece.alpha) + ") = " + std::to_string(piece.k.h1) + ", expected 0");
  }
  if (piece.chi < 0) throw ConsistencyError("chi(K_" + to_string(piece.alpha) + ") is negative");
  return piece.chi;
}

}  // namespace

std::int64_t graded_dim(const ResolutionData& res, const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("graded_dim: alpha must lie in (0,1]");
  return checked_dim(evaluate_sheaf_pieces(res, alpha));
}

std::vector<JumpMultiplicity> punctual_jumping_numbers(const ResolutionData& res) {
  std::vector<JumpMultiplicity> out;
  for (const auto& piece : sheaf_pieces_parallel(res, jumping_candidates(res, Rational(0), Rational(1)))) {
    const auto dim = checked_dim(piece);
    if (dim > 0) out.push_back({piece.alpha, dim});
  }
  return out;
}

Rational lct(const ResolutionData& res) {
  if (res.size() == 0) throw std::invalid_argument("lct: empty resolution");
  Rational best;
  bool first = true;
  for (const auto& c : res.components()) {
    const Rational v = make_rational(c.a + 1, c.m);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

std::vector<Rational> skoda_extend(const std::vector<Rational>& jumps, const Rational& bound) {
  std::vector<Rational> out;
  for (const auto& xi : jumps) {
    if (xi <= 0 || xi > 1) throw std::invalid_argument("skoda_extend: jumps must lie in (0,1]");
    for (Rational v = xi; v <= bound; v += 1) out.push_back(v);
  }
  sort_unique(out);
  return out;
}

ValuationConditions adjoint_conditions(const ResolutionData& res) {
  if (!res.reduced()) throw std::invalid_argument("adjoint ideal needs a reduced divisor");
  ValuationConditions out;
  for (const auto& c : res.components()) {
    out.set(c.id, c.exceptional() ? std::max<std::int64_t>(c.m - c.a, 0) : 0);
  }
  return out;
}

OmegaQuotient omega_quotient_dims(const ResolutionData& res, std::optional<std::int64_t> delta) {
  if (!res.reduced()) throw std::invalid_argument("omega quotient needs a reduced divisor");
  OmegaQuotient out;
  std::int64_t inner = 0;
  for (const auto& jump : punctual_jumping_numbers(res)) {
    if (jump.alpha < 1) {
      out.graded.push_back(jump);
      inner += jump.dim;
    }
  }
  out.bound_at_one = graded_dim(res, Rational(1));
  if (delta) out.sandwich = OmegaQuotient::Sandwich{inner, *delta, inner + out.bound_at_one};
  return out;
}

MonomialIdeal toric_multiplier_ideal(const ResolutionData& res, const Rational& alpha) {
  const auto conditions = multiplier_conditions(res, alpha);
  struct Constraint {
    ToricRay ray;
    std::int64_t threshold;
  };
  std::vector<Constraint> constraints;
  std::int64_t largest = 0;
  std::int64_t on_x = 0, on_y = 0;
  for (const auto& c : res.components()) {
    const auto t = conditions.threshold(c.id);
    if (!c.ray) {
      if (t > 0) {
        throw std::invalid_argument("toric_multiplier_ideal: component " + c.id +
                                    " is not toric and imposes a condition; needs alpha < 1 on a Newton germ");
      }
      continue;
    }
    constraints.push_back({*c.ray, t});
    largest = std::max(largest, t);
    if (*c.ray == ToricRay{1, 0}) on_x = t;
    if (*c.ray == ToricRay{0, 1}) on_y = t;
  }

  auto satisfies = [&](std::int64_t x, std::int64_t y) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& k) { return k.ray[0] * x + k.ray[1] * y >= k.threshold; });
  };

  // Minimal generators lie in this box: lowering a coordinate that exceeds
  // every threshold keeps all constraints satisfied.
  const std::int64_t max_x = on_x + largest;
  const std::int64_t max_y = on_y + largest;
  std::vector<Exponent> gens;
  for (std::int64_t x = 0; x <= max_x; ++x) {
    for (std::int64_t y = 0; y <= max_y; ++y) {
      if (satisfies(x, y)) {
        gens.push_back({x, y});
        break;
      }
    }
  }
  return MonomialIdeal(2, std::move(gens));
}

}  // namespace singspec
