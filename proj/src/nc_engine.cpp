#include "singspec/nc_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace singspec {

NCModel::NCModel(std::vector<std::int64_t> multiplicities) : m_(std::move(multiplicities)) {
  if (m_.empty()) throw std::invalid_argument("NCModel: dimension must be at least 1");
  bool any_positive = false;
  for (auto v : m_) {
    if (v < 0) throw std::invalid_argument("NCModel: multiplicities must be nonnegative");
    any_positive = any_positive || v > 0;
  }
  if (!any_positive) throw std::invalid_argument("NCModel: at least one multiplicity must be positive");
}

IndexSet NCModel::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] > 0) s.push_back(i);
  }
  return s;
}

bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> generators) : n_(n) {
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("MonomialIdeal: generator has wrong length");
    if (std::any_of(g.begin(), g.end(), [](auto e) { return e < 0; })) {
      throw std::invalid_argument("MonomialIdeal: negative exponent");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && divides(generators[j], generators[i]);
    }
    if (!redundant) gens_.push_back(generators[i]);
  }
}

MonomialIdeal MonomialIdeal::principal(Exponent generator) {
  const auto n = generator.size();
  return MonomialIdeal(n, {std::move(generator)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](auto e) { return e == 0; });
}

bool MonomialIdeal::contains(std::span<const std::int64_t> monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, monomial); });
}

Rational monomial_v_order(const NCModel& model, std::span<const std::int64_t> nu) {
  if (nu.size() != model.dimension()) throw std::invalid_argument("monomial_v_order: wrong exponent length");
  Rational best;
  bool first = true;
  for (auto i : model.support()) {
    if (nu[i] < 0) throw std::invalid_argument("monomial_v_order: negative exponent");
    Rational candidate = make_rational(nu[i] + 1, model.multiplicity(i));
    if (first || candidate < best) best = candidate;
    first = false;
  }
  return best;
}

// ceil(m alpha) - 1 = max{r in Z : r < m alpha}: the exact "alpha - eps" floor.
Exponent v_generator(const NCModel& model, const Rational& alpha) {
  Exponent nu(model.dimension(), 0);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const Rational beta = alpha * model.multiplicity(i);
    nu[i] = std::max<std::int64_t>(ceil_i64(beta) - 1, 0);
  }
  return nu;
}

MonomialIdeal multiplier_nc(const NCModel& model, const Rational& alpha) {
  Exponent nu(model.dimension(), 0);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    nu[i] = std::max<std::int64_t>(floor_i64(alpha * model.multiplicity(i)), 0);
  }
  return MonomialIdeal::principal(std::move(nu));
}

std::vector<Rational> jumping_nc(const NCModel& model, const Rational& bound) {
  if (bound <= 0) throw std::invalid_argument("jumping_nc: bound must be positive");
  std::vector<Rational> out;
  for (auto i : model.support()) {
    const auto m = model.multiplicity(i);
    const auto top = floor_i64(bound * m);
    for (std::int64_t j = 1; j <= top; ++j) out.push_back(make_rational(j, m));
  }
  sort_unique(out);
  return out;
}

std::vector<BfGenerator> v_bf_generators(const NCModel& model, const Rational& alpha) {
  const Rational limit = alpha < 1 ? Rational(1 - alpha) : Rational(0);
  const auto top = floor_i64(limit);
  std::vector<BfGenerator> out;
  for (std::int64_t j = 0; j <= top; ++j) {
    out.push_back({v_generator(model, alpha + j), j});
  }
  return out;
}

namespace {

void require_unit_interval(const Rational& alpha, const char* what) {
  if (alpha <= 0 || alpha > 1) {
    throw std::invalid_argument(std::string(what) + ": alpha must lie in (0,1], got " + to_string(alpha));
  }
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::int64_t intersection_size(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<std::int64_t>(out.size());
}

}  // namespace

IndexSet d_alpha_nc(const NCModel& model, const Rational& alpha) {
  require_unit_interval(alpha, "d_alpha_nc");
  IndexSet out;
  for (auto i : model.support()) {
    if (is_integral(alpha * model.multiplicity(i))) out.push_back(i);
  }
  return out;
}

void validate_query(const NCModel& model, const PsiPieceQuery& q) {
  require_unit_interval(q.alpha, "PsiPieceQuery");
  if (q.mu.size() != model.dimension()) throw std::invalid_argument("PsiPieceQuery: mu has wrong length");
  for (const auto& v : q.mu) {
    if (v <= 0 || v > 1) throw std::invalid_argument("PsiPieceQuery: mu entries must lie in (0,1]");
  }
  const IndexSet support = model.support();
  const IndexSet I = sorted(q.I);
  const IndexSet J = sorted(q.J);
  const IndexSet Jp = sorted(q.J_prime);
  for (const IndexSet* s : {&I, &J, &Jp}) {
    if (std::adjacent_find(s->begin(), s->end()) != s->end()) {
      throw std::invalid_argument("PsiPieceQuery: repeated index");
    }
  }
  if (!is_subset(I, support)) throw std::invalid_argument("PsiPieceQuery: I must lie in the support of D");
  if (intersection_size(J, Jp) != 0) throw std::invalid_argument("PsiPieceQuery: J and J' must be disjoint");
  IndexSet joined;
  std::set_union(J.begin(), J.end(), Jp.begin(), Jp.end(), std::back_inserter(joined));
  if (joined != support) throw std::invalid_argument("PsiPieceQuery: J and J' must cover the support");
}

bool psi_eigen_condition(const NCModel& model, const PsiPieceQuery& q) {
  for (auto i : model.support()) {
    if (!is_integral(q.mu[i] + q.alpha * model.multiplicity(i))) return false;
  }
  return true;
}

std::int64_t psi_piece_dim(const NCModel& model, const PsiPieceQuery& q) {
  validate_query(model, q);
  return psi_eigen_condition(model, q) ? static_cast<std::int64_t>(q.I.size()) : 0;
}

PsiDims psi_localized_dims(const NCModel& model, const PsiPieceQuery& q) {
  validate_query(model, q);
  if (!psi_eigen_condition(model, q)) return {};
  const IndexSet I = sorted(q.I);
  const IndexSet J = sorted(q.J);
  const IndexSet Jp = sorted(q.J_prime);
  const auto size_I = static_cast<std::int64_t>(I.size());
  return PsiDims{
      .full = size_I,
      .shriek = size_I - intersection_size(I, J),
      .star = size_I - intersection_size(I, Jp),
  };
}

}  // namespace singspec
