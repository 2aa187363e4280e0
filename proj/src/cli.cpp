#include "singspec/cli.hpp"

#include <algorithm>
#include <sstream>

#include "singspec/errors.hpp"
#include "singspec/exc_geometry.hpp"
#include "singspec/kernels.hpp"
#include "singspec/multiplier.hpp"
#include "singspec/nc_engine.hpp"
#include "singspec/oracles.hpp"

namespace singspec::cli {

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json exponent_json(const Exponent& e) { return Json(e); }

// 1-based coordinate labels, matching the usual x_1, ..., x_n notation.
Json coordinates_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

Json conditions_json(const ValuationConditions& c) {
  Json out = Json::object();
  for (const auto& [id, t] : c.entries()) out[id] = t;
  return out;
}

Json spectrum_json(const Spectrum& sp) {
  Json out = Json::array();
  for (const auto& [alpha, n] : sp.terms()) out.push_back(Json::array({to_string(alpha), n}));
  return out;
}

Json jumps_json(const std::vector<JumpMultiplicity>& jumps) {
  Json out = Json::array();
  for (const auto& j : jumps) out.push_back(Json::array({to_string(j.alpha), j.dim}));
  return out;
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(exponent_json(g));
  return out;
}

const Rational& require_alpha(const Flags& flags, const std::string& command) {
  if (!flags.alpha) throw InputError(command + " needs --alpha p/q");
  return *flags.alpha;
}

const NcDocument& require_nc(const InputDocument& doc, const std::string& command) {
  const auto* nc = std::get_if<NcDocument>(&doc);
  if (!nc) throw InputError(command + " needs an nc document, got " + variant_name(doc));
  return *nc;
}

NCModel nc_model(const NcDocument& doc) {
  try {
    return NCModel(doc.multiplicities);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// ---------------------------------------------------------------------------

Json vfilt(const InputDocument& doc, const Flags& flags) {
  const auto model = nc_model(require_nc(doc, "vfilt"));
  auto entry = [&](const Rational& alpha) {
    Json e;
    e["alpha"] = rational_json(alpha);
    e["generator"] = exponent_json(v_generator(model, alpha));
    Json bf = Json::array();
    for (const auto& g : v_bf_generators(model, alpha)) {
      bf.push_back(Json{{"exponent", exponent_json(g.exponent)}, {"j", g.j}});
    }
    e["bf_generators"] = bf;
    if (alpha > 0 && alpha <= 1) e["d_alpha"] = coordinates_json(d_alpha_nc(model, alpha));
    return e;
  };
  if (flags.alpha) return entry(*flags.alpha);
  Json rows = Json::array();
  for (const auto& alpha : jumping_nc(model, flags.max)) rows.push_back(entry(alpha));
  return Json{{"filtration", rows}};
}

Json multiplier(const InputDocument& doc, const Flags& flags) {
  const auto& alpha = require_alpha(flags, "multiplier");
  if (const auto* nc = std::get_if<NcDocument>(&doc)) {
    return Json{{"generators", ideal_json(multiplier_nc(nc_model(*nc), alpha))}};
  }
  const auto germ = build_germ(doc);
  Json out{{"conditions", conditions_json(multiplier_conditions(germ.resolution, alpha))}};
  if (germ.toric && alpha < 1) out["generators"] = ideal_json(toric_multiplier_ideal(germ.resolution, alpha));
  return out;
}

Json jumping(const InputDocument& doc, const Flags& flags) {
  if (const auto* nc = std::get_if<NcDocument>(&doc)) {
    return Json{{"jumping", rationals_json(jumping_nc(nc_model(*nc), flags.max))}};
  }
  const auto germ = build_germ(doc);
  const auto punctual = punctual_jumping_numbers(germ.resolution);
  std::vector<Rational> base;
  for (const auto& j : punctual) base.push_back(j.alpha);
  return Json{
      {"jumping", rationals_json(skoda_extend(base, flags.max))},
      {"punctual", jumps_json(punctual)},
      {"lct", rational_json(lct(germ.resolution))},
      // Jumps at 1 supported along D away from x are not punctual; -1 is a
      // b-function root regardless.
      {"minus_one_is_root", true},
  };
}

Json spectrum_cmd(const InputDocument& doc, const Flags& flags) {
  const auto germ = build_germ(doc);
  const auto sp = spectrum(germ.resolution);
  Json out{
      {"spectrum", spectrum_json(sp)},
      {"mu", sp.total()},
      {"symmetric", sp.symmetric_about(Rational(1))},
  };
  if (flags.alpha) {
    const auto pieces = hodge_piece_dims(germ.resolution, *flags.alpha);
    out["hodge"] = Json{
        {"alpha", rational_json(*flags.alpha)},
        {"h0K", pieces.k.h0},
        {"h1K", pieces.k.h1},
        {"h0K'", pieces.k_prime.h0},
        {"h1K'", pieces.k_prime.h1},
    };
  }
  return out;
}

Json adjoint(const InputDocument& doc) {
  const auto germ = build_germ(doc);
  return Json{{"conditions", conditions_json(adjoint_conditions(germ.resolution))}};
}

Json omega(const InputDocument& doc) {
  const auto germ = build_germ(doc);
  const auto q = omega_quotient_dims(germ.resolution, germ.delta);
  Json out{{"graded", jumps_json(q.graded)}, {"bound_at_1", q.bound_at_one}};
  if (q.sandwich) {
    out["delta"] = q.sandwich->delta;
    out["sandwich"] = Json{{"lower", q.sandwich->lower}, {"upper", q.sandwich->upper}, {"holds", q.sandwich->holds()}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// check

struct CheckList {
  Json items = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json e{{"name", name}, {"pass", pass}};
    if (!detail.empty()) e["detail"] = detail;
    items.push_back(std::move(e));
    ok = ok && pass;
  }
};

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + to_string(v);
  return s;
}

void check_nc(const NCModel& model, CheckList& checks) {
  const auto report = nc_sweep_serial({model}, Rational(3));
  const std::string first = report.first_failures.empty() ? "" : report.first_failures.front();
  checks.add("multiplier equals V above alpha", report.equivalence_failures == 0, first);
  checks.add("shift f V^alpha = V^(alpha+1)", report.shift_failures == 0, first);
  checks.add("monotonicity", report.monotonicity_failures == 0, first);
  checks.add("discreteness", report.discreteness_failures == 0, first);
  checks.add("jumping numbers are b-function roots", report.root_failures == 0, first);

  // Support of Gr_V: the minimizing coordinate of every monomial's V-order
  // lies in D(alpha) for the fractional representative of the order.
  bool support_ok = true;
  Exponent nu(model.dimension(), 0);
  const auto& m = model.multiplicities();
  while (true) {
    const auto alpha = monomial_v_order(model, nu);
    const Rational frac = alpha - Rational(ceil_of(alpha)) + 1;
    support_ok = support_ok && !d_alpha_nc(model, frac).empty();
    std::size_t pos = nu.size();
    while (pos > 0 && nu[pos - 1] == 2 * m[pos - 1]) nu[--pos] = 0;
    if (pos == 0) break;
    ++nu[pos - 1];
  }
  checks.add("Gr_V support lies in D(alpha)", support_ok);

  const auto psi = psi_sweep_serial({model});
  checks.add("psi localization exactness", psi.exactness_failures == 0,
             std::to_string(psi.queries) + " queries");
}

void check_germ(const Germ& germ, CheckList& checks) {
  const auto& res = germ.resolution;
  checks.add("resolution identities", validate(res).empty());

  const auto sp = spectrum(res);  // h1(K_alpha) = 0 and h0 placement checks throw
  checks.add("h1(K_alpha) = 0 and h0 placement independence", true,
             std::to_string(fiber_exponents(res).size()) + " exponents");
  bool in_range = std::all_of(sp.terms().begin(), sp.terms().end(),
                              [](const auto& t) { return t.first > 0 && t.first < 2 && t.second > 0; });
  checks.add("spectrum support in (0,2)", in_range);
  checks.add("spectrum symmetric about 1", sp.symmetric_about(Rational(1)));

  if (germ.branches && germ.delta) {
    const auto mu = 2 * *germ.delta - *germ.branches + 1;
    checks.add("sum n_alpha = 2 delta - r + 1", sp.total() == mu,
               std::to_string(sp.total()) + " vs " + std::to_string(mu));
  }

  const auto punctual = punctual_jumping_numbers(res);
  const auto candidates = jumping_candidates(res, Rational(0), Rational(1));
  std::vector<Rational> jumps;
  for (const auto& j : punctual) jumps.push_back(j.alpha);
  checks.add("punctual jumps are candidates", std::all_of(jumps.begin(), jumps.end(), [&](const Rational& a) {
               return std::binary_search(candidates.begin(), candidates.end(), a);
             }));
  if (!jumps.empty()) {
    checks.add("lct = smallest punctual jump", lct(res) == jumps.front(),
               to_string(lct(res)) + " vs " + to_string(jumps.front()));
  }
  std::vector<std::int64_t> mults;
  for (const auto& c : res.components()) mults.push_back(c.m);
  const auto L = lcm_of(mults);
  checks.add("jump denominators divide lcm(m_i)", std::all_of(jumps.begin(), jumps.end(), [&](const Rational& a) {
               return L % to_i64(a.get_den()) == 0;
             }));

  // chi(K_alpha) vanishes away from the jumping candidates.
  std::vector<Rational> off;
  for (const auto& piece : sheaf_pieces_serial(res, fiber_exponents(res))) {
    if (!std::binary_search(candidates.begin(), candidates.end(), piece.alpha) && piece.chi != 0) {
      off.push_back(piece.alpha);
    }
  }
  checks.add("graded pieces vanish off candidates", off.empty(), join(off));

  bool monotone = true;
  std::vector<Rational> grid{Rational(0)};
  const auto upto2 = jumping_candidates(res, Rational(0), Rational(2));
  grid.insert(grid.end(), upto2.begin(), upto2.end());
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const auto here = multiplier_conditions(res, grid[k]);
    const auto mid = multiplier_conditions(res, (grid[k] + grid[k + 1]) / 2);
    const auto next = multiplier_conditions(res, grid[k + 1]);
    monotone = monotone && here == mid && here.weaker_or_equal(next);
  }
  checks.add("multiplier conditions monotone, constant between candidates", monotone);

  if (germ.qh) {
    const auto [a, b] = *germ.qh;
    const auto oracle = qh_spectrum(a, b);
    checks.add("spectrum matches x^a+y^b oracle", sp == oracle);
    const auto violators = elsv_violators(jumps, qh_bfunction_roots(a, b));
    checks.add("punctual jumps are b-function roots", violators.empty(), join(violators));
    const auto build = from_proximity(qh_proximity_input(a, b));
    checks.add("Newton and proximity builders agree", canonical_form(build.resolution) == canonical_form(res));
    check_milnor_consistency(a, b, build);
    checks.add("mu = 2 delta - r + 1 on the blow-up sequence", true);
  }

  if (res.reduced()) {
    const auto omega = omega_quotient_dims(res, germ.delta);
    if (omega.sandwich) {
      checks.add("omega quotient sandwich around delta", omega.sandwich->holds(),
                 std::to_string(omega.sandwich->lower) + " <= " + std::to_string(omega.sandwich->delta) +
                     " <= " + std::to_string(omega.sandwich->upper));
    }
  }
}

Json check(const InputDocument& doc, int& exit_code) {
  CheckList checks;
  if (const auto* nc = std::get_if<NcDocument>(&doc)) {
    check_nc(nc_model(*nc), checks);
  } else {
    check_germ(build_germ(doc), checks);
  }
  if (!checks.ok) exit_code = kExitInternal;
  return Json{{"variant", variant_name(doc)}, {"checks", checks.items}, {"ok", checks.ok}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"vfilt", "multiplier", "jumping", "spectrum", "adjoint", "omega", "check"};
  return names;
}

Result run(const std::string& command, const InputDocument& doc, const Flags& flags) {
  Result r;
  try {
    if (command == "vfilt") {
      r.output = vfilt(doc, flags);
    } else if (command == "multiplier") {
      r.output = multiplier(doc, flags);
    } else if (command == "jumping") {
      if (flags.max <= 0) throw InputError("--max must be positive");
      r.output = jumping(doc, flags);
    } else if (command == "spectrum") {
      r.output = spectrum_cmd(doc, flags);
    } else if (command == "adjoint") {
      r.output = adjoint(doc);
    } else if (command == "omega") {
      r.output = omega(doc);
    } else if (command == "check") {
      r.output = check(doc, r.exit_code);
    } else {
      throw InputError("unknown command '" + command + "'");
    }
  } catch (const ValidationError& e) {
    r.exit_code = kExitInvalid;
    r.output = error_json("validation", e.what());
    Json violations = Json::array();
    for (const auto& v : e.violations()) {
      violations.push_back(Json{{"kind", to_string(v.kind)}, {"component", v.component}, {"message", v.message}});
    }
    r.output["violations"] = violations;
  } catch (const ConsistencyError& e) {
    r.exit_code = kExitInternal;
    r.output = error_json("consistency", e.what());
  } catch (const InputError& e) {
    r.exit_code = kExitInvalid;
    r.output = error_json("input", e.what());
  } catch (const std::invalid_argument& e) {
    r.exit_code = kExitInvalid;
    r.output = error_json("input", e.what());
  }
  return r;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_value(std::ostringstream& out, const std::string& key, const Json& v) {
  if (v.is_array() && !v.empty() && v.front().is_array()) {
    out << key << ":\n";
    for (const auto& row : v) {
      out << " ";
      for (const auto& cell : row) out << "  " << scalar(cell);
      out << "\n";
    }
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << key << ":\n";
    for (const auto& row : v) {
      out << " ";
      for (const auto& [k, cell] : row.items()) out << "  " << k << "=" << scalar(cell);
      out << "\n";
    }
  } else if (v.is_array()) {
    out << key << ":";
    for (const auto& cell : v) out << " " << scalar(cell);
    out << "\n";
  } else if (v.is_object()) {
    out << key << ":\n";
    for (const auto& [k, cell] : v.items()) out << "  " << k << "  " << scalar(cell) << "\n";
  } else {
    out << key << ": " << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_table(const Json& output) {
  std::ostringstream out;
  for (const auto& [key, value] : output.items()) render_value(out, key, value);
  return out.str();
}

}  // namespace singspec::cli
