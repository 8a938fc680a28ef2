// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <casimir/materials.hpp>
#include <casimir/units.hpp>

using namespace casimir;

namespace {

double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("ev_to_radsec") {
  CHECK(ev_to_radsec(0.0) == 0.0);
  // e/hbar from the defining SI constants, recomputed independently here
  const double e_over_hbar = 1.602176634e-19 / (6.62607015e-34 / (2.0 * 3.14159265358979323846));
  CHECK(rel_diff(ev_to_radsec(1.0), e_over_hbar) < 1e-12);
  CHECK(rel_diff(ev_to_radsec(1.0), 1.5192674e15) < 1e-6);
  CHECK(rel_diff(ev_to_radsec(9.0), 1.36734e16) < 1e-5);
  CHECK_THROWS_AS(ev_to_radsec(-1.0), std::domain_error);
}

TEST_CASE("matsubara frequencies") {
  CHECK(matsubara_frequency(0, 300.0) == 0.0);
  CHECK(rel_diff(matsubara_frequency(1, 300.0), 2.46778e14) < 1e-5);
  CHECK(rel_diff(matsubara_frequency(10, 300.0), 2.46778e15) < 1e-5);
  CHECK_THROWS_AS(matsubara_frequency(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(matsubara_frequency(1, -10.0), std::domain_error);
}

TEST_CASE("matsubara frequency is exactly linear in n and T") {
  for (double T : {1.0, 77.0, 300.0, 1234.5}) {
    for (long n : {1L, 2L, 5L, 17L, 1000L}) {
      CHECK(matsubara_frequency(2 * n, T) == 2.0 * matsubara_frequency(n, T));
      CHECK(matsubara_frequency(n, 2.0 * T) == 2.0 * matsubara_frequency(n, T));
    }
  }
}

TEST_CASE("characteristic frequency") {
  CHECK(rel_diff(characteristic_frequency(100e-9), 1.5e15) < 1e-3);
  CHECK(rel_diff(characteristic_frequency(500e-9), 3e14) < 1e-3);
  CHECK(rel_diff(characteristic_frequency(1e-6), 1.5e14) < 1e-3);
  CHECK_THROWS_AS(characteristic_frequency(0.0), std::domain_error);
  CHECK_THROWS_AS(characteristic_frequency(-1e-6), std::domain_error);
}

TEST_CASE("characteristic_frequency(a) * 2a / c == 1") {
  for (double a : {1e-9, 100e-9, 1e-6, 1e-3, 1.0}) {
    const double x = characteristic_frequency(a) * 2.0 * a / constants::c;
    CHECK(std::fabs(x - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("anomalous frequency") {
  CHECK(anomalous_frequency(0.0, 1.37e16) == 0.0);
  CHECK(rel_diff(anomalous_frequency(4.67e-3, 1.37e16), 6.40e13) < 1e-3);
  CHECK(anomalous_frequency(4.67e-3, 2.0 * 1.37e16) ==
        2.0 * anomalous_frequency(4.67e-3, 1.37e16));
  MaterialParams gold{1.37e16, 5.32e13, 4.67e-3, 1.0};
  CHECK(anomalous_frequency(gold) == anomalous_frequency(4.67e-3, 1.37e16));
}
