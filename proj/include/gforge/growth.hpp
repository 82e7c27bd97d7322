#pragma once

#include <cstdint>
#include <vector>

#include "gforge/algebra.hpp"

namespace gforge {

struct SpanBudgets {
  std::size_t max_dim = 400000;       // largest span dimension tracked
  std::size_t max_products = 4000000; // element multiplications per call
  std::size_t max_enum = 4000000;     // words visited in counting walks
};

// Basis elements of V^0, V^1, ..., V^n for V = span(frame), concatenated;
// level_end[k] is how many of them span V^k.
struct SpanLevels {
  std::vector<AlgebraElement> elements;
  std::vector<std::size_t> level_end;
};

SpanLevels span_levels(const Algebra& alg,
                       const std::vector<AlgebraElement>& frame,
                       std::uint32_t n_max, const SpanBudgets& budgets = {});

std::vector<AlgebraElement> span_basis(const Algebra& alg,
                                       const std::vector<AlgebraElement>& frame,
                                       std::uint32_t n,
                                       const SpanBudgets& budgets = {});

// dims[k] = dim V^k for k = 0..n_max.
std::vector<std::uint64_t> dim_series(const Algebra& alg,
                                      const std::vector<AlgebraElement>& frame,
                                      std::uint32_t n_max,
                                      const SpanBudgets& budgets = {});

std::uint64_t dim_Vn(const Algebra& alg,
                     const std::vector<AlgebraElement>& frame, std::uint32_t n,
                     const SpanBudgets& budgets = {});

struct GrowthReport {
  std::vector<std::uint64_t> dims;
  std::uint32_t window_lo = 0;
  std::uint32_t window_hi = 0;
  Scalar c1;      // min dims[n]/n^2 over the window
  Scalar c2;      // max dims[n]/n^2 over the window
  double slope = 0.0;
  bool quadratic = false;
};

// Fits the window [n_max/2, n_max]. The quadratic verdict requires c1 > 0,
// c2 <= 8*c1, and a log-log slope inside [1.6, 2.4].
GrowthReport growth_report(const Algebra& alg,
                           const std::vector<AlgebraElement>& frame,
                           std::uint32_t n_max, const SpanBudgets& budgets = {});

// Least-squares slope of log dims[n] against log n over n in [lo, hi].
// Needs at least three usable points with n >= 2.
double gk_estimate(const std::vector<std::uint64_t>& dims, std::uint32_t lo,
                   std::uint32_t hi);

// dim V^n >= n(n+1)/2.
bool bergman_bound_check(const Algebra& alg,
                         const std::vector<AlgebraElement>& frame,
                         std::uint32_t n, const SpanBudgets& budgets = {});

} // namespace gforge
