#include "doctest.h"
#include "fixtures.hpp"
#include "singspec/exc_geometry.hpp"
#include "singspec/kernels.hpp"

using namespace singspec;

TEST_CASE("enumerate_nc_models counts every nonzero vector") {
  const auto models = enumerate_nc_models(2, 3);
  // n = 1: 3 vectors, n = 2: 16 - 1.
  CHECK(models.size() == 18);
  CHECK(models.front().multiplicities() == std::vector<std::int64_t>{1});
  CHECK(models.back().multiplicities() == std::vector<std::int64_t>{3, 3});
}

TEST_CASE("sheaf pieces: serial and parallel agree") {
  for (const auto& res : {fixtures::cusp(), fixtures::a3(), from_newton({{5, 0}, {2, 1}, {0, 3}}),
                          from_newton({{7, 0}, {0, 9}})}) {
    const auto alphas = fiber_exponents(res);
    const auto serial = sheaf_pieces_serial(res, alphas);
    CHECK(serial == sheaf_pieces_parallel(res, alphas));
    for (const auto& p : serial) {
      CHECK(p.k.h0 - p.k.h1 == p.chi);
      CHECK(p.k_prime.h0 - p.k_prime.h1 == p.chi_prime);
    }
  }
}

TEST_CASE("nc sweep: serial and parallel agree and find nothing") {
  const auto models = enumerate_nc_models(3, 4);
  const auto serial = nc_sweep_serial(models, make_rational(3));
  CHECK(serial == nc_sweep_parallel(models, make_rational(3)));
  CHECK(serial.models == static_cast<std::int64_t>(models.size()));
  CHECK(serial.failures() == 0);
}

TEST_CASE("psi sweep: serial and parallel agree and find nothing") {
  const auto models = enumerate_nc_models(3, 3);
  const auto serial = psi_sweep_serial(models);
  CHECK(serial == psi_sweep_parallel(models));
  CHECK(serial.exactness_failures == 0);
  CHECK(serial.nonzero > 0);
  CHECK(serial.nonzero < serial.queries);
}

TEST_CASE("parallel kernels propagate errors") {
  const auto cusp = fixtures::cusp();
  CHECK_THROWS(sheaf_pieces_parallel(cusp, {make_rational(1, 2), make_rational(3, 2)}));
}
