#include "singspec/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "singspec/linalg.hpp"

namespace singspec {

ResolutionData::ResolutionData(std::vector<Component> components, std::vector<Edge> edges)
    : components_(std::move(components)), edges_(std::move(edges)), adjacency_(components_.size()) {
  for (auto& [u, v] : edges_) {
    if (u >= components_.size() || v >= components_.size()) {
      throw std::out_of_range("ResolutionData: edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
    adjacency_[u].push_back(v);
    if (u != v) adjacency_[v].push_back(u);
  }
}

std::optional<std::size_t> ResolutionData::find(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ResolutionData::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw std::out_of_range("unknown component id '" + id + "'");
}

std::int64_t ResolutionData::intersection(std::size_t i, std::size_t j) const {
  if (i == j) {
    const auto& c = components_[i];
    if (!c.exceptional() || !c.self_int) {
      throw std::logic_error("self-intersection requested for non-exceptional component " + c.id);
    }
    return *c.self_int;
  }
  return std::count(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::vector<std::size_t> ResolutionData::exceptional_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].exceptional()) out.push_back(i);
  }
  return out;
}

bool ResolutionData::reduced() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Component& c) { return c.exceptional() || c.m == 1; });
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::component_field: return "component_field";
    case ViolationKind::duplicate_id: return "duplicate_id";
    case ViolationKind::simple_graph: return "simple_graph";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::not_negative_definite: return "not_negative_definite";
    case ViolationKind::adjunction: return "adjunction";
    case ViolationKind::projection_formula: return "projection_formula";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string s = "invalid resolution data:";
  for (const auto& v : violations) {
    s += "\n  [";
    s += to_string(v.kind);
    s += "] ";
    if (!v.component.empty()) s += v.component + ": ";
    s += v.message;
  }
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const ResolutionData& res) {
  std::vector<Violation> out;
  const auto& comps = res.components();

  std::set<std::string> seen;
  for (const auto& c : comps) {
    if (c.id.empty()) out.push_back({ViolationKind::component_field, c.id, "empty id"});
    if (!seen.insert(c.id).second) out.push_back({ViolationKind::duplicate_id, c.id, "id used twice"});
    if (c.m < 1) out.push_back({ViolationKind::component_field, c.id, "multiplicity must be positive"});
    if (c.a < 0) out.push_back({ViolationKind::component_field, c.id, "discrepancy must be nonnegative"});
    if (c.exceptional()) {
      if (!c.self_int) {
        out.push_back({ViolationKind::component_field, c.id, "exceptional component needs a self-intersection"});
      } else if (*c.self_int > -1) {
        out.push_back({ViolationKind::component_field, c.id, "self-intersection must be <= -1"});
      }
    } else {
      if (c.a != 0) out.push_back({ViolationKind::component_field, c.id, "non-exceptional component must have a = 0"});
      if (c.self_int) {
        out.push_back({ViolationKind::component_field, c.id, "non-exceptional component carries no self-intersection"});
      }
    }
  }

  std::set<Edge> edge_set;
  bool graph_ok = true;
  for (const auto& e : res.edges()) {
    if (e.first == e.second) {
      out.push_back({ViolationKind::simple_graph, comps[e.first].id, "self-loop"});
      graph_ok = false;
    } else if (!edge_set.insert(e).second) {
      out.push_back({ViolationKind::simple_graph, comps[e.first].id,
                     "repeated intersection with " + comps[e.second].id});
      graph_ok = false;
    }
  }

  const auto exc = res.exceptional_indices();
  const bool fields_ok = std::none_of(out.begin(), out.end(), [](const Violation& v) {
    return v.kind == ViolationKind::component_field;
  });
  if (!graph_ok || !fields_ok || exc.empty()) return out;

  // Connectivity of the exceptional subgraph.
  {
    std::vector<bool> is_exc(comps.size(), false);
    for (auto i : exc) is_exc[i] = true;
    std::vector<bool> reached(comps.size(), false);
    std::vector<std::size_t> stack{exc.front()};
    reached[exc.front()] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : res.neighbours(u)) {
        if (is_exc[v] && !reached[v]) {
          reached[v] = true;
          stack.push_back(v);
        }
      }
    }
    for (auto i : exc) {
      if (!reached[i]) {
        out.push_back({ViolationKind::disconnected, comps[i].id, "not connected to " + comps[exc.front()].id});
      }
    }
  }

  RationalMatrix q(exc.size(), exc.size());
  for (std::size_t r = 0; r < exc.size(); ++r) {
    for (std::size_t c = 0; c < exc.size(); ++c) q(r, c) = Rational(res.intersection(exc[r], exc[c]));
  }
  if (!is_negative_definite(q)) {
    out.push_back({ViolationKind::not_negative_definite, "", "exceptional intersection matrix is not negative definite"});
  }

  for (auto i : exc) {
    const auto& ci = comps[i];
    std::int64_t canonical = 0;
    for (auto j : exc) canonical += comps[j].a * res.intersection(j, i);
    const std::int64_t expected = -2 - *ci.self_int;
    if (canonical != expected) {
      out.push_back({ViolationKind::adjunction, ci.id,
                     "sum a_j (E_j.E_i) = " + std::to_string(canonical) + ", expected " + std::to_string(expected)});
    }
    std::int64_t total = 0;
    for (std::size_t j = 0; j < comps.size(); ++j) total += comps[j].m * res.intersection(j, i);
    if (total != 0) {
      out.push_back({ViolationKind::projection_formula, ci.id,
                     "sum m_j (D'_j.E_i) = " + std::to_string(total) + ", expected 0"});
    }
  }
  return out;
}

void require_valid(const ResolutionData& res) {
  auto violations = validate(res);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

ResolutionData from_explicit(const std::vector<ComponentSpec>& components,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Component> comps;
  comps.reserve(components.size());
  for (const auto& s : components) {
    comps.push_back(Component{s.id, s.kind, s.m, s.a, s.self_int, std::nullopt});
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < comps.size(); ++i) index.emplace(comps[i].id, i);

  std::vector<Violation> unknown;
  std::vector<Edge> idx_edges;
  for (const auto& [u, v] : edges) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end()) {
      unknown.push_back({ViolationKind::simple_graph, iu == index.end() ? u : v, "edge names an unknown component"});
      continue;
    }
    idx_edges.emplace_back(iu->second, iv->second);
  }
  if (!unknown.empty()) throw ValidationError(std::move(unknown));

  ResolutionData res(std::move(comps), std::move(idx_edges));
  require_valid(res);
  return res;
}

ProximityBuild from_proximity(const ProximityInput& input) {
  const std::size_t k = input.mults.size();
  if (k == 0) throw std::invalid_argument("proximity: at least one point must be blown up");
  for (auto e : input.mults) {
    if (e < 0) throw std::invalid_argument("proximity: multiplicities must be nonnegative");
  }

  std::vector<std::vector<std::size_t>> proximate_to(k);  // proximate_to[i] = {j : p_i -> p_j}
  std::set<std::pair<std::size_t, std::size_t>> prox_set;
  for (const auto& [i, j] : input.prox) {
    if (i >= k || j >= i) {
      throw std::invalid_argument("proximity: pair [" + std::to_string(i) + "," + std::to_string(j) +
                                  "] must satisfy j < i < number of points");
    }
    if (prox_set.insert({i, j}).second) proximate_to[i].push_back(j);
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (!prox_set.contains({i, i - 1})) {
      throw std::invalid_argument("proximity: p" + std::to_string(i) + " must be proximate to its predecessor");
    }
    if (proximate_to[i].size() > 2) {
      throw std::invalid_argument("proximity: p" + std::to_string(i) + " is proximate to more than two points");
    }
  }

  std::vector<Component> comps;
  std::vector<std::int64_t> m(k), a(k);
  for (std::size_t i = 0; i < k; ++i) {
    m[i] = input.mults[i];
    a[i] = 1;
    for (auto j : proximate_to[i]) {
      m[i] += m[j];
      a[i] += a[j];
    }
    std::int64_t later = 0;
    for (std::size_t l = i + 1; l < k; ++l) later += prox_set.contains({l, i}) ? 1 : 0;
    comps.push_back(Component{"E" + std::to_string(i + 1), ComponentKind::exceptional, m[i], a[i], -1 - later,
                              std::nullopt});
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!prox_set.contains({j, i})) continue;
      bool separated = false;
      for (std::size_t l = j + 1; l < k && !separated; ++l) {
        separated = prox_set.contains({l, i}) && prox_set.contains({l, j});
      }
      if (!separated) edges.emplace_back(i, j);
    }
  }

  const auto& branches = input.branches;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (branches[b].on >= k) throw std::invalid_argument("proximity: branch attached to unknown point");
    std::string id = branches[b].id ? *branches[b].id
                     : branches.size() == 1 ? std::string("C")
                                            : "C" + std::to_string(b + 1);
    comps.push_back(Component{std::move(id), ComponentKind::non_exceptional, branches[b].m, 0, std::nullopt,
                              std::nullopt});
    edges.emplace_back(branches[b].on, comps.size() - 1);
  }

  ProximityBuild build;
  build.resolution = ResolutionData(std::move(comps), std::move(edges));
  require_valid(build.resolution);
  for (auto e : input.mults) build.delta += e * (e - 1) / 2;
  build.branches = static_cast<std::int64_t>(branches.size());
  return build;
}

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::int64_t det(const ToricRay& u, const ToricRay& v) { return u[0] * v[1] - u[1] * v[0]; }

std::vector<LatticePoint> checked_support(const std::vector<LatticePoint>& support) {
  if (support.empty()) throw std::invalid_argument("newton: empty support");
  std::vector<LatticePoint> pts = support;
  for (const auto& p : pts) {
    if (p[0] < 0 || p[1] < 0) throw std::invalid_argument("newton: exponents must be nonnegative");
    if (p[0] == 0 && p[1] == 0) throw std::invalid_argument("newton: f must vanish at the origin");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::vector<NewtonEdge> newton_edges(const std::vector<LatticePoint>& support) {
  const auto pts = checked_support(support);
  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  const auto lowest = *std::min_element(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
    return l[1] != r[1] ? l[1] < r[1] : l[0] < r[0];
  });
  std::vector<NewtonEdge> edges;
  for (std::size_t i = 0; i + 1 < hull.size() && hull[i] != lowest; ++i) {
    const auto& p = hull[i];
    const auto& q = hull[i + 1];
    const std::int64_t dx = q[0] - p[0];
    const std::int64_t dy = p[1] - q[1];
    const std::int64_t g = std::gcd(dx, dy);
    edges.push_back(NewtonEdge{p, q, ToricRay{dy / g, dx / g}, g});
  }
  return edges;
}

ResolutionData from_newton(const std::vector<LatticePoint>& support, bool assume_nondegenerate) {
  if (!assume_nondegenerate) {
    throw std::invalid_argument("newton: the toric resolution is only valid for Newton-nondegenerate germs");
  }
  const auto pts = checked_support(support);
  const auto edges = newton_edges(pts);

  std::vector<ToricRay> targets;
  for (const auto& e : edges) targets.push_back(e.normal);

  // Stern-Brocot refinement of the quadrant: every cone stays unimodular and
  // the inserted rays are exactly the ancestors of the edge normals.
  struct Ray {
    ToricRay v;
    std::size_t order;  // insertion order, drives naming
  };
  std::vector<Ray> fan;
  std::size_t counter = 0;
  std::function<void(const ToricRay&, const ToricRay&)> refine = [&](const ToricRay& u, const ToricRay& v) {
    const bool needed = std::any_of(targets.begin(), targets.end(), [&](const ToricRay& t) {
      return det(u, t) > 0 && det(t, v) > 0;
    });
    if (!needed) return;
    const ToricRay w{u[0] + v[0], u[1] + v[1]};
    const std::size_t order = counter++;
    refine(u, w);
    fan.push_back(Ray{w, order});
    refine(w, v);
  };
  refine(ToricRay{1, 0}, ToricRay{0, 1});

  auto valuation = [&](const ToricRay& r) {
    std::int64_t best = -1;
    for (const auto& p : pts) {
      const std::int64_t val = r[0] * p[0] + r[1] * p[1];
      if (best < 0 || val < best) best = val;
    }
    return best;
  };

  // Components are emitted in insertion order so E1, E2, ... match the
  // blow-up order of the equivalent point sequence.
  std::vector<std::size_t> by_order(fan.size());
  for (std::size_t pos = 0; pos < fan.size(); ++pos) by_order[fan[pos].order] = pos;

  std::vector<Component> comps;
  std::vector<std::size_t> comp_of_pos(fan.size());
  for (std::size_t ord = 0; ord < fan.size(); ++ord) {
    const std::size_t pos = by_order[ord];
    const ToricRay& r = fan[pos].v;
    const ToricRay prev = pos == 0 ? ToricRay{1, 0} : fan[pos - 1].v;
    const ToricRay next = pos + 1 == fan.size() ? ToricRay{0, 1} : fan[pos + 1].v;
    const ToricRay sum{prev[0] + next[0], prev[1] + next[1]};
    const std::int64_t c = r[0] != 0 ? sum[0] / r[0] : sum[1] / r[1];
    if (sum[0] != c * r[0] || sum[1] != c * r[1]) throw std::logic_error("newton: fan is not unimodular");
    comp_of_pos[pos] = comps.size();
    comps.push_back(Component{"E" + std::to_string(ord + 1), ComponentKind::exceptional, valuation(r),
                              r[0] + r[1] - 1, -c, r});
  }

  std::vector<Edge> graph;
  for (std::size_t pos = 0; pos + 1 < fan.size(); ++pos) graph.emplace_back(comp_of_pos[pos], comp_of_pos[pos + 1]);

  std::int64_t branch_total = 0;
  for (const auto& e : edges) branch_total += e.lattice_length;
  std::int64_t branch_index = 0;
  for (const auto& e : edges) {
    const auto pos = static_cast<std::size_t>(
        std::find_if(fan.begin(), fan.end(), [&](const Ray& r) { return r.v == e.normal; }) - fan.begin());
    for (std::int64_t b = 0; b < e.lattice_length; ++b) {
      ++branch_index;
      std::string id = branch_total == 1 ? std::string("C") : "C" + std::to_string(branch_index);
      comps.push_back(Component{std::move(id), ComponentKind::non_exceptional, 1, 0, std::nullopt, std::nullopt});
      graph.emplace_back(comp_of_pos[pos], comps.size() - 1);
    }
  }

  const std::int64_t order_x = valuation(ToricRay{1, 0});
  const std::int64_t order_y = valuation(ToricRay{0, 1});
  std::optional<std::size_t> x_axis, y_axis;
  if (order_x > 0) {
    x_axis = comps.size();
    comps.push_back(Component{"X", ComponentKind::non_exceptional, order_x, 0, std::nullopt, ToricRay{1, 0}});
    if (!fan.empty()) graph.emplace_back(comp_of_pos.front(), *x_axis);
  }
  if (order_y > 0) {
    y_axis = comps.size();
    comps.push_back(Component{"Y", ComponentKind::non_exceptional, order_y, 0, std::nullopt, ToricRay{0, 1}});
    if (!fan.empty()) graph.emplace_back(comp_of_pos.back(), *y_axis);
  }
  if (fan.empty() && x_axis && y_axis) graph.emplace_back(*x_axis, *y_axis);

  ResolutionData res(std::move(comps), std::move(graph));
  require_valid(res);
  return res;
}

namespace {

std::string label_of(const Component& c) {
  std::string s = c.exceptional() ? "E" : "N";
  s += ":" + std::to_string(c.m) + ":" + std::to_string(c.a);
  if (c.self_int) s += ":" + std::to_string(*c.self_int);
  return s;
}

std::string rooted_form(const ResolutionData& res, std::size_t node, std::size_t parent) {
  std::vector<std::string> children;
  for (auto v : res.neighbours(node)) {
    if (v != parent) children.push_back(rooted_form(res, v, node));
  }
  std::sort(children.begin(), children.end());
  std::string s = "(" + label_of(res[node]);
  for (const auto& c : children) s += c;
  return s + ")";
}

}  // namespace

std::string canonical_form(const ResolutionData& res) {
  const std::size_t n = res.size();
  std::vector<int> component(n, -1);
  std::vector<std::vector<std::size_t>> trees;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    trees.emplace_back();
    std::vector<std::size_t> stack{s};
    component[s] = static_cast<int>(trees.size() - 1);
    std::size_t edge_ends = 0;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      trees.back().push_back(u);
      edge_ends += res.neighbours(u).size();
      for (auto v : res.neighbours(u)) {
        if (component[v] < 0) {
          component[v] = component[s];
          stack.push_back(v);
        }
      }
    }
    if (edge_ends / 2 + 1 != trees.back().size()) {
      throw std::invalid_argument("canonical_form: dual graph is not a forest");
    }
  }
  std::vector<std::string> forms;
  for (const auto& tree : trees) {
    std::string best;
    for (auto root : tree) {
      auto f = rooted_form(res, root, n);
      if (best.empty() || f < best) best = std::move(f);
    }
    forms.push_back(std::move(best));
  }
  std::sort(forms.begin(), forms.end());
  std::string out;
  for (const auto& f : forms) out += f;
  return out;
}

}  // namespace singspec
