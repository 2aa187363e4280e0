#include "singspec/exc_geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "singspec/errors.hpp"
#include "singspec/kernels.hpp"
#include "singspec/linalg.hpp"

namespace singspec {

namespace {

void require_unit_interval(const Rational& alpha, const char* what) {
  if (alpha <= 0 || alpha > 1) {
    throw std::invalid_argument(std::string(what) + ": alpha must lie in (0,1], got " + to_string(alpha));
  }
}

bool integral_at(const Component& c, const Rational& alpha) { return is_integral(alpha * c.m); }

}  // namespace

EAlpha e_alpha(const ResolutionData& res, const Rational& alpha) {
  require_unit_interval(alpha, "e_alpha");
  EAlpha out;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!integral_at(res[i], alpha)) continue;
    (res[i].exceptional() ? out.exceptional : out.other).push_back(i);
  }
  for (auto [u, v] : res.edges()) {
    if (res[u].exceptional() == res[v].exceptional()) continue;
    if (!res[u].exceptional()) std::swap(u, v);
    if (integral_at(res[u], alpha) && integral_at(res[v], alpha)) out.double_prime.emplace_back(u, v);
  }
  return out;
}

CurveConfig k_sheaf(const ResolutionData& res, const Rational& alpha, bool primed) {
  const EAlpha ea = e_alpha(res, alpha);

  // Twist coefficients [(alpha - eps) m_i] = ceil(alpha m_i) - 1.
  std::vector<std::int64_t> coef(res.size());
  for (std::size_t i = 0; i < res.size(); ++i) coef[i] = ceil_i64(alpha * res[i].m) - 1;

  CurveConfig cfg;
  std::vector<std::ptrdiff_t> slot(res.size(), -1);
  for (auto j : ea.exceptional) {
    std::int64_t degree = -2 - *res[j].self_int;
    degree -= coef[j] * res.intersection(j, j);
    for (auto i : res.neighbours(j)) degree -= coef[i];
    if (primed) {
      degree -= std::count_if(ea.double_prime.begin(), ea.double_prime.end(),
                              [&](const Edge& e) { return e.first == j; });
    }
    slot[j] = static_cast<std::ptrdiff_t>(cfg.curves.size());
    cfg.curves.push_back({res[j].id, degree});
  }
  for (const auto& [u, v] : res.edges()) {
    if (slot[u] >= 0 && slot[v] >= 0) {
      cfg.nodes.emplace_back(static_cast<std::size_t>(slot[u]), static_cast<std::size_t>(slot[v]));
    }
  }
  return cfg;
}

std::int64_t euler_char(const CurveConfig& cfg) {
  std::int64_t chi = 0;
  for (const auto& c : cfg.curves) chi += c.degree + 1;
  return chi - static_cast<std::int64_t>(cfg.nodes.size());
}

std::int64_t h0_at_positions(const CurveConfig& cfg, std::int64_t first_position) {
  std::vector<std::size_t> offset(cfg.curves.size());
  std::size_t unknowns = 0;
  for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
    offset[c] = unknowns;
    if (cfg.curves[c].degree >= 0) unknowns += static_cast<std::size_t>(cfg.curves[c].degree + 1);
  }
  if (unknowns == 0) return 0;

  std::vector<std::int64_t> next_point(cfg.curves.size(), first_position);
  RationalMatrix constraints(cfg.nodes.size(), unknowns);
  for (std::size_t row = 0; row < cfg.nodes.size(); ++row) {
    const auto [u, v] = cfg.nodes[row];
    auto evaluate_into = [&](std::size_t curve, int sign) {
      const Rational t(next_point[curve]++);
      Rational power(1);
      for (std::int64_t k = 0; k <= cfg.curves[curve].degree; ++k) {
        constraints(row, offset[curve] + static_cast<std::size_t>(k)) += sign * power;
        power *= t;
      }
    };
    evaluate_into(u, 1);
    evaluate_into(v, -1);
  }
  return static_cast<std::int64_t>(unknowns - rank(std::move(constraints)));
}

Cohomology h0_h1(const CurveConfig& cfg) {
  const auto h0 = h0_at_positions(cfg, 0);
  const auto h0_shifted = h0_at_positions(cfg, 10);
  if (h0 != h0_shifted) {
    throw ConsistencyError("h0 depends on node positions: " + std::to_string(h0) + " vs " +
                           std::to_string(h0_shifted));
  }
  const auto h1 = h0 - euler_char(cfg);
  if (h1 < 0) throw ConsistencyError("h1 = h0 - chi is negative (" + std::to_string(h1) + ")");
  return {h0, h1};
}

void Spectrum::add(const Rational& alpha, std::int64_t count) {
  if (count < 0) throw std::invalid_argument("Spectrum::add: negative multiplicity");
  if (count == 0) return;
  terms_[alpha] += count;
}

std::int64_t Spectrum::multiplicity(const Rational& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Spectrum::total() const {
  std::int64_t t = 0;
  for (const auto& [alpha, n] : terms_) t += n;
  return t;
}

bool Spectrum::symmetric_about(const Rational& center) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
    return multiplicity(2 * center - term.first) == term.second;
  });
}

std::vector<Rational> fiber_exponents(const ResolutionData& res) {
  std::vector<Rational> out;
  for (auto i : res.exceptional_indices()) {
    for (std::int64_t j = 1; j <= res[i].m; ++j) out.push_back(make_rational(j, res[i].m));
  }
  sort_unique(out);
  return out;
}

void require_curve_germ(const ResolutionData& res) {
  if (!res.reduced()) throw std::invalid_argument("expected a reduced germ (every branch with m = 1)");
  if (res.exceptional_indices().empty() && res.size() != 1) {
    throw std::invalid_argument(
        "the exceptional fiber must be a divisor: blow up the singular point at least once");
  }
}

Spectrum spectrum(const ResolutionData& res) {
  require_curve_germ(res);
  Spectrum sp;
  for (const auto& piece : sheaf_pieces_parallel(res, fiber_exponents(res))) {
    if (piece.k.h1 != 0) {
      throw ConsistencyError("h1(K_" + to_string(piece.alpha) + ") = " + std::to_string(piece.k.h1) +
                             ", expected 0");
    }
    sp.add(piece.alpha, piece.chi);
    if (piece.alpha < 1) {
      if (piece.chi_prime < 0) {
        throw ConsistencyError("negative spectral multiplicity at " + to_string(2 - piece.alpha));
      }
      sp.add(2 - piece.alpha, piece.chi_prime);
    }
  }
  return sp;
}

HodgePieces hodge_piece_dims(const ResolutionData& res, const Rational& alpha) {
  require_unit_interval(alpha, "hodge_piece_dims");
  return {h0_h1(k_sheaf(res, alpha, false)), h0_h1(k_sheaf(res, alpha, true))};
}

}  // namespace singspec
