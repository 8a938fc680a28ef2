// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace casimir {

// Kahan compensated accumulator. Addition order is part of the contract:
// callers that need reproducible sums must add terms in a fixed order.
class KahanSum {
public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace casimir
