#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gforge/algebra.hpp"
#include "gforge/growth.hpp"
#include "gforge/word_engine.hpp"

namespace gforge {

struct AnnihilatorReport {
  std::optional<AlgebraElement> element; // a with a * (V^m z) = 0
  std::uint32_t n = 0;                   // level where found, or last tried
  std::uint64_t dim_vn = 0;
  std::uint64_t dim_vmz = 0;
  std::uint64_t dim_image = 0;
  std::uint64_t dim_kernel = 0;
};

// Builds a basis x_1..x_d of V^m z, then feeds V^n level by level through
// a |-> (a x_1, ..., a x_d) until the map develops a kernel. The report
// carries the exact rank accounting of the level where the search stopped.
AnnihilatorReport annihilator_search(const Algebra& alg,
                                     const AlgebraElement& z, std::uint32_t m,
                                     std::uint32_t n_max,
                                     const std::vector<AlgebraElement>& frame,
                                     const SpanBudgets& budgets = {});

// dim span{a z b : a, b in V^n}.
std::uint64_t two_sided_growth(const Algebra& alg, const AlgebraElement& z,
                               std::uint32_t n,
                               const std::vector<AlgebraElement>& frame,
                               const SpanBudgets& budgets = {});

struct ReductionTerm {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::string left;
  std::string right;
  Scalar coeff;
};

struct ReductionRow {
  std::string left;  // spanning pair: left * z * right
  std::string right;
  std::vector<ReductionTerm> combination;
};

struct ReductionRelation {
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::vector<ReductionRow> rows;
};

// Least pair (m, p) under (sum, then m) with
//   V^m z V^p contained in sum of V^i z V^j over i + j < m + p,
// searched over m + p <= bound, with one certificate row per nonzero
// spanning product. Every combination entry lands at strictly smaller
// total degree, which is what makes the containment a genuine reduction;
// allowing equal-degree terms would let central-looking z succeed
// vacuously through V^0 z V^{m+p}.
std::optional<ReductionRelation> reduction_search(
    const Algebra& alg, const AlgebraElement& z, std::uint32_t bound,
    const std::vector<AlgebraElement>& frame, const SpanBudgets& budgets = {});

// Re-expands every certificate row and checks the order side conditions.
bool verify_reduction(const Algebra& alg, const AlgebraElement& z,
                      const ReductionRelation& rel);

// dim span V^{dn} u^n V^{dn}; throws NilpotentInputError when a power of u
// up to power_bound vanishes.
std::uint64_t ideal_power_growth(const Algebra& alg, const AlgebraElement& u,
                                 std::uint32_t d, std::uint32_t n,
                                 const std::vector<AlgebraElement>& frame,
                                 const SpanBudgets& budgets = {},
                                 std::uint32_t power_bound = 64);

// Least k <= k_max with (V^d u)^k = 0, if any.
std::optional<std::uint32_t> nilpotency_index(
    const Algebra& alg, const AlgebraElement& u, std::uint32_t d,
    std::uint32_t k_max, const std::vector<AlgebraElement>& frame,
    const SpanBudgets& budgets = {});

// Shortest letter word w (ties: lexicographic) with w1 w w2 an allowed
// factor and |w| <= len_bound; none if the joint cannot be made.
std::optional<std::string> prime_witness_word(const VInfinity& engine,
                                              const std::string& w1,
                                              const std::string& w2,
                                              std::uint64_t len_bound);

} // namespace gforge
