#include <numeric>

#include "doctest.h"
#include "singspec/errors.hpp"
#include "singspec/oracles.hpp"

using namespace singspec;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("qh_spectrum examples") {
  const auto cusp = qh_spectrum(2, 3);
  CHECK(cusp.terms() == std::map<Rational, std::int64_t>{{q(5, 6), 1}, {q(7, 6), 1}});
  CHECK(qh_spectrum(2, 2).terms() == std::map<Rational, std::int64_t>{{q(1), 1}});
  CHECK(qh_spectrum(2, 5).terms() ==
        std::map<Rational, std::int64_t>{{q(7, 10), 1}, {q(9, 10), 1}, {q(11, 10), 1}, {q(13, 10), 1}});
}

TEST_CASE("qh_spectrum totals and symmetry") {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a; b <= 9; ++b) {
      const auto s = qh_spectrum(a, b);
      CHECK(s.total() == (a - 1) * (b - 1));
      CHECK(s.symmetric_about(q(1)));
      const auto roots = qh_bfunction_roots(a, b);
      for (const auto& [alpha, n] : s.terms()) CHECK(roots.contains(-alpha));
    }
  }
}

TEST_CASE("qh_bfunction_roots examples") {
  CHECK(qh_bfunction_roots(2, 3).roots() == std::vector<Rational>{q(-7, 6), q(-1), q(-5, 6)});
  CHECK(qh_bfunction_roots(2, 2).roots() == std::vector<Rational>{q(-1)});
  CHECK(qh_bfunction_roots(2, 5).roots() ==
        std::vector<Rational>{q(-13, 10), q(-11, 10), q(-1), q(-9, 10), q(-7, 10)});
}

TEST_CASE("nc_bfunction_roots examples") {
  CHECK(nc_bfunction_roots({2, 3}).roots() == std::vector<Rational>{q(-1), q(-2, 3), q(-1, 2), q(-1, 3)});
  CHECK(nc_bfunction_roots({1}).roots() == std::vector<Rational>{q(-1)});
  CHECK(nc_bfunction_roots({6}).size() == 6);
  CHECK(nc_bfunction_roots({0, 6}).contains(q(-1, 6)));
}

TEST_CASE("milnor_delta examples") {
  CHECK(milnor_delta(2, 3) == MilnorData{2, 1, 1});
  CHECK(milnor_delta(3, 4) == MilnorData{6, 3, 1});
  CHECK(milnor_delta(2, 2) == MilnorData{1, 1, 2});
  ProximityBuild node_build;
  node_build.delta = 1;
  node_build.branches = 2;
  CHECK(milnor_delta(node_build) == MilnorData{1, 1, 2});
}

TEST_CASE("milnor consistency against the blow-up sequence") {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a; b <= 9; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK_NOTHROW(check_milnor_consistency(a, b, from_proximity(qh_proximity_input(a, b))));
    }
  }
  ProximityBuild wrong;
  wrong.delta = 2;
  wrong.branches = 1;
  CHECK_THROWS_AS(check_milnor_consistency(2, 3, wrong), ConsistencyError);
}

TEST_CASE("qh_proximity_input multiplicities follow Euclid") {
  const auto in = qh_proximity_input(3, 5);
  CHECK(in.mults == std::vector<std::int64_t>{3, 2, 1, 1});
  CHECK(in.branches.size() == 1);
  const auto node = qh_proximity_input(2, 2);
  CHECK(node.mults == std::vector<std::int64_t>{2});
  CHECK(node.branches.size() == 2);
}

TEST_CASE("elsv_violators examples") {
  CHECK(elsv_violators({q(5, 6)}, qh_bfunction_roots(2, 3)).empty());
  CHECK(elsv_violators({q(1, 3), q(1, 2), q(2, 3), q(1)}, nc_bfunction_roots({2, 3})).empty());
  CHECK(elsv_violators({q(1, 4)}, qh_bfunction_roots(2, 3)) == std::vector<Rational>{q(1, 4)});
}

TEST_CASE("weighted-homogeneous oracle") {
  // x^2 + y^3 with basis {1, y}.
  CHECK(wh_spectrum(q(1, 2), q(1, 3), {{0, 0}, {0, 1}}) == qh_spectrum(2, 3));
  // x^2 y + y^4 (D5): Jacobian ideal (xy, x^2 + 4y^3), basis {1, x, y, y^2, y^3}.
  const std::vector<LatticePoint> d5{{0, 0}, {1, 0}, {0, 1}, {0, 2}, {0, 3}};
  const auto s = wh_spectrum(q(3, 8), q(1, 4), d5);
  CHECK(s.terms() == std::map<Rational, std::int64_t>{{q(5, 8), 1}, {q(7, 8), 1}, {q(1), 1}, {q(9, 8), 1}, {q(11, 8), 1}});
  CHECK(wh_bfunction_roots(q(3, 8), q(1, 4), d5).contains(q(-5, 8)));
  CHECK_THROWS(wh_spectrum(q(0), q(1, 2), d5));
}
