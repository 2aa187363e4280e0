#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "singspec/nc_engine.hpp"

using namespace singspec;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

// Scans the exponent box for the nu with nu_i + 1 >= m_i alpha that is
// smallest in every coordinate.
Exponent brute_v_generator(const std::vector<std::int64_t>& m, const Rational& alpha) {
  const std::int64_t box = 40;
  Exponent best;
  const std::size_t n = m.size();
  Exponent nu(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (Rational(nu[i] + 1) < alpha * m[i]) ok = false;
    }
    if (ok && (best.empty() || std::lexicographical_compare(nu.begin(), nu.end(), best.begin(), best.end()))) {
      best = nu;
    }
    std::size_t pos = n;
    while (pos > 0 && nu[pos - 1] == box) nu[--pos] = 0;
    if (pos == 0) break;
    ++nu[pos - 1];
  }
  return best;
}

// Rational in lowest terms that lies just above alpha and below every j/m_i > alpha.
Rational just_above(const Rational& alpha, const std::vector<std::int64_t>& m) {
  std::int64_t big = 1;
  for (auto v : m) big *= std::max<std::int64_t>(v, 1);
  return alpha + q(1, 4 * big);
}

}  // namespace

TEST_CASE("monomial_v_order") {
  NCModel f({2, 3});
  CHECK(monomial_v_order(f, Exponent{0, 0}) == q(1, 3));
  CHECK(monomial_v_order(NCModel({1}), Exponent{0}) == 1);
  CHECK(monomial_v_order(f, Exponent{1, 2}) == 1);
}

TEST_CASE("v_generator examples") {
  NCModel f({2, 3});
  CHECK(v_generator(f, q(5, 6)) == Exponent{1, 2});
  CHECK(v_generator(f, q(1, 3)) == Exponent{0, 0});
  CHECK(v_generator(f, q(0)) == Exponent{0, 0});
  CHECK(v_generator(f, q(-7, 2)) == Exponent{0, 0});
  CHECK(v_generator(NCModel({5, 0, 1}), q(-1)) == Exponent{0, 0, 0});
}

TEST_CASE("v_generator agrees with a box scan") {
  for (const auto& m : std::vector<std::vector<std::int64_t>>{{2, 3}, {1, 4}, {3, 0, 5}, {6}, {2, 2, 7}}) {
    NCModel f(m);
    for (std::int64_t num = -3; num <= 30; ++num) {
      const Rational alpha = q(num, 7);
      CAPTURE(to_string(alpha));
      CHECK(v_generator(f, alpha) == brute_v_generator(m, alpha));
    }
  }
}

TEST_CASE("multiplier_nc examples") {
  NCModel f({2, 3});
  CHECK(multiplier_nc(f, q(1, 3)) == MonomialIdeal::principal({0, 1}));
  CHECK(multiplier_nc(f, q(5, 6)) == MonomialIdeal::principal({1, 2}));
  CHECK(multiplier_nc(f, q(5, 6)) == MonomialIdeal::principal(v_generator(f, just_above(q(5, 6), {2, 3}))));
  CHECK(multiplier_nc(f, q(0)).is_unit());
  CHECK(multiplier_nc(f, q(-2)).is_unit());
}

TEST_CASE("jumping_nc examples") {
  CHECK(jumping_nc(NCModel({2, 3}), q(1)) == std::vector<Rational>{q(1, 3), q(1, 2), q(2, 3), q(1)});
  CHECK(jumping_nc(NCModel({1}), q(2)) == std::vector<Rational>{q(1), q(2)});
  std::vector<Rational> sixths;
  for (int j = 1; j <= 6; ++j) sixths.push_back(q(j, 6));
  CHECK(jumping_nc(NCModel({6}), q(1)) == sixths);
}

TEST_CASE("jumping numbers are exactly where multiplier_nc shrinks") {
  for (const auto& m : std::vector<std::vector<std::int64_t>>{{2, 3}, {4, 6}, {1, 0, 5}}) {
    NCModel f(m);
    const auto jumps = jumping_nc(f, q(2));
    for (std::int64_t num = 1; num <= 2 * 120; ++num) {
      const Rational alpha = q(num, 120);
      const Rational below = alpha - q(1, 1000000);
      const bool shrinks = multiplier_nc(f, below) != multiplier_nc(f, alpha);
      CAPTURE(to_string(alpha));
      CHECK(shrinks == std::binary_search(jumps.begin(), jumps.end(), alpha));
    }
  }
}

TEST_CASE("v_bf_generators examples") {
  NCModel f({2, 3});
  CHECK(v_bf_generators(f, q(5, 6)) == std::vector<BfGenerator>{{{1, 2}, 0}});
  CHECK(v_bf_generators(f, q(-1)) == std::vector<BfGenerator>{{{0, 0}, 0}, {{0, 0}, 1}, {{1, 2}, 2}});
  CHECK(v_bf_generators(f, q(2)) == std::vector<BfGenerator>{{{3, 5}, 0}});
}

TEST_CASE("d_alpha_nc") {
  CHECK(d_alpha_nc(NCModel({2, 3}), q(1, 2)) == IndexSet{0});
  CHECK(d_alpha_nc(NCModel({2, 3}), q(1)) == IndexSet{0, 1});
  CHECK(d_alpha_nc(NCModel({2, 3, 0}), q(1, 3)) == IndexSet{1});
  CHECK_THROWS_AS(d_alpha_nc(NCModel({2, 3}), q(0)), std::invalid_argument);
  CHECK_THROWS_AS(d_alpha_nc(NCModel({2, 3}), q(3, 2)), std::invalid_argument);
}

TEST_CASE("support property of the V-order") {
  for (const auto& m : std::vector<std::vector<std::int64_t>>{{2, 3}, {4, 0, 6}, {5}}) {
    NCModel f(m);
    for (std::int64_t a = 0; a < 7; ++a) {
      for (std::int64_t b = 0; b < 7; ++b) {
        Exponent nu(m.size(), 0);
        nu[0] = a;
        nu.back() = b;
        const Rational alpha = monomial_v_order(f, nu);
        CHECK(alpha > 0);
        const Rational frac = alpha - Rational(ceil_of(alpha)) + 1;
        CHECK_FALSE(d_alpha_nc(f, frac).empty());
      }
    }
  }
}

TEST_CASE("psi_piece_dim examples") {
  CHECK(psi_piece_dim(NCModel({1, 1}), {q(1), {q(1), q(1)}, {0, 1}, {0, 1}, {}}) == 2);
  CHECK(psi_piece_dim(NCModel({2, 3}), {q(5, 6), {q(1), q(1)}, {0}, {0, 1}, {}}) == 0);
  CHECK(psi_piece_dim(NCModel({2, 3}), {q(5, 6), {q(1, 3), q(1, 2)}, {0}, {0, 1}, {}}) == 1);
}

TEST_CASE("psi_localized_dims examples") {
  NCModel f({1, 1, 1});
  const std::vector<Rational> ones(3, q(1));
  CHECK(psi_localized_dims(f, {q(1), ones, {0, 1, 2}, {0}, {1, 2}}) == PsiDims{3, 2, 1});
  CHECK(psi_localized_dims(f, {q(1), ones, {}, {0}, {1, 2}}) == PsiDims{0, 0, 0});
  CHECK(psi_localized_dims(f, {q(1), ones, {0, 1, 2}, {}, {0, 1, 2}}) == PsiDims{3, 3, 0});
}

TEST_CASE("psi queries are validated") {
  NCModel f({2, 3, 0});
  const std::vector<Rational> mu{q(1), q(1), q(1)};
  CHECK_THROWS_AS(validate_query(f, {q(1), mu, {2}, {0, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query(f, {q(1), mu, {0}, {0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query(f, {q(1), mu, {0}, {0}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query(f, {q(0), mu, {0}, {0, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query(f, {q(1), {q(1), q(0), q(1)}, {0}, {0, 1}, {}}), std::invalid_argument);
  CHECK_NOTHROW(validate_query(f, {q(1), mu, {0, 1}, {1}, {0}}));
}

TEST_CASE("monomial ideals reduce to minimal generators") {
  MonomialIdeal ideal(2, {{1, 2}, {2, 2}, {0, 3}, {1, 2}});
  CHECK(ideal.generators() == std::vector<Exponent>{{0, 3}, {1, 2}});
  CHECK(ideal.contains(Exponent{5, 2}));
  CHECK_FALSE(ideal.contains(Exponent{0, 2}));
  CHECK(MonomialIdeal::zero(2).is_zero());
  CHECK_FALSE(MonomialIdeal::zero(2).contains(Exponent{9, 9}));
}

TEST_CASE("NCModel rejects bad multiplicities") {
  CHECK_THROWS_AS(NCModel({}), std::invalid_argument);
  CHECK_THROWS_AS(NCModel({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(NCModel({2, -1}), std::invalid_argument);
}
