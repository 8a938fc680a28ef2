// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <casimir/quadrature.hpp>

using namespace casimir;

TEST_CASE("smooth integrand") {
  auto res = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                                1e-12, 1e-15, 100);
  CHECK(res.converged);
  CHECK(std::fabs(res.value - 2.0) < 1e-12);
  CHECK(res.error >= std::fabs(res.value - 2.0));
}

TEST_CASE("integrable endpoint singularity") {
  // Int_0^1 ln(x) dx = -1; the singular endpoint forces real subdivision work
  auto res = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10, 1e-14, 200);
  CHECK(res.converged);
  CHECK(std::fabs(res.value + 1.0) < 1e-8);
  CHECK(res.segments > 4);
}

TEST_CASE("subdivision budget is honored") {
  auto res = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 1e-14, 0.0, 3);
  CHECK_FALSE(res.converged);
  CHECK(res.segments <= 4);
}

TEST_CASE("error estimate bounds the true error on oscillatory integrands") {
  // Int_0^10 cos(7x) dx = sin(70)/7
  const double exact = std::sin(70.0) / 7.0;
  auto res =
      integrate_adaptive([](double x) { return std::cos(7.0 * x); }, 0.0, 10.0, 1e-10, 1e-14, 200);
  CHECK(res.converged);
  CHECK(std::fabs(res.value - exact) <= res.error + 1e-14);
}

TEST_CASE("partitioned start matches single-interval result") {
  auto f = [](double x) { return std::exp(-x) * x * x; };
  auto whole = integrate_adaptive(f, 0.0, 30.0, 1e-11, 1e-16, 200);
  auto parts = integrate_adaptive_partition(f, {0.0, 1.0, 2.5, 10.0, 30.0}, 1e-11, 1e-16, 200);
  CHECK(whole.converged);
  CHECK(parts.converged);
  // Int_0^inf x^2 e^-x dx = 2, truncation at 30 removes ~8.6e-11
  CHECK(std::fabs(whole.value - 2.0) < 1e-9);
  CHECK(std::fabs(parts.value - whole.value) < 1e-10);
}

TEST_CASE("empty interval") {
  auto res = integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-10, 1e-14, 10);
  CHECK(res.converged);
  CHECK(res.value == 0.0);
}
