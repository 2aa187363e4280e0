#include "singspec/kernels.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>

#include "singspec/oracles.hpp"

namespace singspec {

SheafPieces evaluate_sheaf_pieces(const ResolutionData& res, const Rational& alpha) {
  const auto k = k_sheaf(res, alpha, false);
  const auto kp = k_sheaf(res, alpha, true);
  return SheafPieces{alpha, euler_char(k), h0_h1(k), euler_char(kp), h0_h1(kp)};
}

std::vector<SheafPieces> sheaf_pieces_serial(const ResolutionData& res, const std::vector<Rational>& alphas) {
  std::vector<SheafPieces> out;
  out.reserve(alphas.size());
  for (const auto& alpha : alphas) out.push_back(evaluate_sheaf_pieces(res, alpha));
  return out;
}

namespace {

// Runs body(i) for i in [0, n) on the OpenMP team. The first exception thrown
// by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(singspec_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<SheafPieces> sheaf_pieces_parallel(const ResolutionData& res, const std::vector<Rational>& alphas) {
  std::vector<SheafPieces> out(alphas.size());
  parallel_for(alphas.size(), [&](std::size_t i) { out[i] = evaluate_sheaf_pieces(res, alphas[i]); });
  return out;
}

std::vector<NCModel> enumerate_nc_models(std::size_t max_n, std::int64_t max_m) {
  std::vector<NCModel> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::int64_t> m(n, 0);
    while (true) {
      if (std::any_of(m.begin(), m.end(), [](auto v) { return v > 0; })) out.emplace_back(m);
      std::size_t pos = n;
      while (pos > 0 && m[pos - 1] == max_m) m[--pos] = 0;
      if (pos == 0) break;
      ++m[pos - 1];
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

std::string describe(const NCModel& model, const Rational& alpha, const char* what) {
  std::string s = what;
  s += " at m=(";
  for (std::size_t i = 0; i < model.dimension(); ++i) {
    if (i) s += ",";
    s += std::to_string(model.multiplicity(i));
  }
  return s + ") alpha=" + to_string(alpha);
}

void note(NcSweepReport& r, std::int64_t& counter, const NCModel& model, const Rational& alpha, const char* what) {
  ++counter;
  if (r.first_failures.size() < kMaxReportedFailures) r.first_failures.push_back(describe(model, alpha, what));
}

Exponent plus(Exponent a, const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

NcSweepReport sweep_one(const NCModel& model, const Rational& alpha_bound) {
  NcSweepReport r;
  r.models = 1;
  const auto& m = model.multiplicities();
  const std::int64_t L = lcm_of(m);

  // Candidates up to bound + 1, each with its successor.
  std::vector<Rational> points{Rational(0)};
  const auto jumps = jumping_nc(model, alpha_bound + 1);
  points.insert(points.end(), jumps.begin(), jumps.end());

  for (std::size_t k = 0; k + 1 < points.size() && points[k] <= alpha_bound; ++k) {
    const Rational& alpha = points[k];
    const Rational& next = points[k + 1];
    ++r.alphas;

    const Rational mid = (alpha + next) / 2;
    const Rational first_step = alpha + make_rational(1, L);
    const auto v_next = v_generator(model, next);

    const auto ideal = multiplier_nc(model, alpha);
    if (ideal != MonomialIdeal::principal(v_next) || ideal != MonomialIdeal::principal(v_generator(model, mid))) {
      note(r, r.equivalence_failures, model, alpha, "J(alpha D) != V^{>alpha} O");
    }
    if (v_generator(model, first_step) != v_next || v_generator(model, mid) != v_next) {
      note(r, r.discreteness_failures, model, alpha, "V not constant on (alpha, next jump]");
    }
    const auto v_here = v_generator(model, alpha);
    if (!divides(v_here, v_next)) note(r, r.monotonicity_failures, model, alpha, "V not decreasing");
    if (alpha > 0) {
      if (v_generator(model, alpha + 1) != plus(v_here, m) || v_generator(model, mid + 1) != plus(v_generator(model, mid), m)) {
        note(r, r.shift_failures, model, alpha, "f V^alpha != V^{alpha+1}");
      }
    }
  }

  const auto roots = nc_bfunction_roots(m);
  for (const auto& xi : elsv_violators(jumping_nc(model, Rational(1)), roots)) {
    note(r, r.root_failures, model, xi, "jumping number not a b-function root");
  }
  return r;
}

void merge(NcSweepReport& into, const NcSweepReport& part) {
  into.models += part.models;
  into.alphas += part.alphas;
  into.equivalence_failures += part.equivalence_failures;
  into.shift_failures += part.shift_failures;
  into.monotonicity_failures += part.monotonicity_failures;
  into.discreteness_failures += part.discreteness_failures;
  into.root_failures += part.root_failures;
  for (const auto& f : part.first_failures) {
    if (into.first_failures.size() < kMaxReportedFailures) into.first_failures.push_back(f);
  }
}

}  // namespace

NcSweepReport nc_sweep_serial(const std::vector<NCModel>& models, const Rational& alpha_bound) {
  NcSweepReport total;
  for (const auto& model : models) merge(total, sweep_one(model, alpha_bound));
  return total;
}

NcSweepReport nc_sweep_parallel(const std::vector<NCModel>& models, const Rational& alpha_bound) {
  std::vector<NcSweepReport> parts(models.size());
  parallel_for(models.size(), [&](std::size_t i) { parts[i] = sweep_one(models[i], alpha_bound); });
  NcSweepReport total;
  for (const auto& p : parts) merge(total, p);
  return total;
}

namespace {

// mu_i in (0,1] with mu_i + m_i alpha integral.
std::vector<Rational> matching_mu(const NCModel& model, const Rational& alpha) {
  std::vector<Rational> mu(model.dimension(), Rational(1));
  for (auto i : model.support()) {
    const Rational beta = alpha * model.multiplicity(i);
    Rational gap = Rational(ceil_of(beta)) - beta;
    mu[i] = gap == 0 ? Rational(1) : gap;
  }
  return mu;
}

IndexSet subset_of(const IndexSet& universe, unsigned mask) {
  IndexSet out;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (mask & (1u << k)) out.push_back(universe[k]);
  }
  return out;
}

PsiSweepReport psi_one(const NCModel& model) {
  PsiSweepReport r;
  const IndexSet support = model.support();
  const unsigned subsets = 1u << support.size();

  std::vector<Rational> alphas{Rational(1)};
  for (auto i : support) {
    for (std::int64_t j = 1; j < model.multiplicity(i); ++j) alphas.push_back(make_rational(j, model.multiplicity(i)));
  }
  sort_unique(alphas);

  for (const auto& alpha : alphas) {
    const auto good = matching_mu(model, alpha);
    auto bad = good;
    bad[support.front()] /= 2;
    for (const auto* mu : std::array<const std::vector<Rational>*, 2>{&good, &bad}) {
      for (unsigned im = 0; im < subsets; ++im) {
        for (unsigned jm = 0; jm < subsets; ++jm) {
          PsiPieceQuery q{alpha, *mu, subset_of(support, im), subset_of(support, jm),
                          subset_of(support, (subsets - 1) & ~jm)};
          const auto dims = psi_localized_dims(model, q);
          ++r.queries;
          if (dims.full > 0) ++r.nonzero;
          if (dims.shriek + dims.star != dims.full || dims.full != psi_piece_dim(model, q)) ++r.exactness_failures;
        }
      }
    }
  }
  return r;
}

void merge(PsiSweepReport& into, const PsiSweepReport& part) {
  into.queries += part.queries;
  into.nonzero += part.nonzero;
  into.exactness_failures += part.exactness_failures;
}

}  // namespace

PsiSweepReport psi_sweep_serial(const std::vector<NCModel>& models) {
  PsiSweepReport total;
  for (const auto& model : models) merge(total, psi_one(model));
  return total;
}

PsiSweepReport psi_sweep_parallel(const std::vector<NCModel>& models) {
  std::vector<PsiSweepReport> parts(models.size());
  parallel_for(models.size(), [&](std::size_t i) { parts[i] = psi_one(models[i]); });
  PsiSweepReport total;
  for (const auto& p : parts) merge(total, p);
  return total;
}

}  // namespace singspec
