#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gforge/extended_nat.hpp"
#include "gforge/group.hpp"
#include "gforge/group_ring.hpp"

namespace gforge {

/// Cutoffs for the subalgebra-of-the-group-ring computations. Exceeding one
/// raises BudgetError; results are never silently truncated.
struct BBudgets {
  std::uint64_t max_terms = 2'000'000;    // distinct (word, group) pairs kept
  std::uint64_t max_products = 8'000'000; // term-by-term multiplications
  std::uint64_t bfs_nodes = 200'000;      // states in the group-word search
};

/// The eight fixed generators of the subalgebra B, in this order:
/// x*s_0, x*s_0^-1, x*t_0, x*t_0^-1, x*u, x*u^-1, x, y (each times the
/// named group element, the last two times the identity).
std::vector<GroupRingElement> b_generators(const GroupRing& ring);

/// The pure group-part frame: identity, s_0^{±1}, t_0^{±1}, u^{±1}.
std::vector<GroupElement> group_frame();

/// dim span(products of <= n generators of B, including the empty product),
/// computed by level-wise expansion with canonical (word, group) dedup.
/// Distinct pairs are linearly independent, so the dimension is the count.
std::uint64_t b_dim_Vn(const GroupRing& ring, std::uint32_t n,
                       const BBudgets& budgets = {});

/// The whole series [dim V^0, ..., dim V^n_max].
std::vector<std::uint64_t> b_dim_series(const GroupRing& ring,
                                        std::uint32_t n_max,
                                        const BBudgets& budgets = {});

struct BGrowthReport {
  std::vector<std::uint64_t> dims;
  std::uint32_t window_lo = 0;
  std::uint32_t window_hi = 0;
  double slope = 0.0;  // log-log fit over the window; 0 when degenerate
  double eps = 0.5;
  bool trend_ok = false;  // dims[n] <= n^(2+eps) across the window
};

/// Growth series for B with a trend verdict on the window [n_max/2, n_max].
BGrowthReport b_growth_report(const GroupRing& ring, std::uint32_t n_max,
                              double eps = 0.5, const BBudgets& budgets = {});

/// A recipe placing a group element inside B: indices into b_generators()
/// for the x-carrying picks, the forced y-run paddings inserted between
/// consecutive picks, and the multiplied-out single-term product.
struct BExpression {
  std::vector<std::size_t> gens;
  std::vector<ExtendedNat> paddings;
  GroupRingElement product;
  std::uint64_t cost = 0;  // number of x letters consumed
};

/// Finds a product of x-carrying generators whose group part equals g using
/// at most c_max x's: breadth-first search over short generator words first,
/// then a direct commutator/conjugation route for far-away elements. The
/// word part is the shortest prefix of the infinite word with that many x's,
/// so it is a nonzero factor by construction. Returns nullopt when g is not
/// reachable within the x budget.
std::optional<BExpression> express_in_B(const GroupRing& ring,
                                        const GroupElement& g,
                                        std::uint64_t c_max,
                                        const BBudgets& budgets = {});

/// A single-term element of B whose group part is exactly z_n. Also checks
/// the two-sided module property on sampled word elements r: multiplying by
/// r on either side keeps the group part z_n and multiplies only the word.
/// Throws BudgetError when the index is out of expressibility range.
GroupRingElement central_witness(const GroupRing& ring, const GInt& n,
                                 const BBudgets& budgets = {});

/// Forms all products of <= degree central witnesses for the given indices
/// (word parts padded with forced y-runs so they stay alive) and returns
/// true iff every product is nonzero and the group parts are pairwise
/// distinct monomials in the z's — one per exponent vector.
bool independence_check(const GroupRing& ring, std::uint32_t degree,
                        const std::vector<GInt>& indices,
                        const BBudgets& budgets = {});

/// A single-term c in B with b1*c*b2 != 0, combining the word-level witness
/// search with an x-count cap so c stays inside B. Group part is identity.
/// Throws std::invalid_argument when either operand is zero.
std::optional<GroupRingElement> prime_witness_B(const GroupRing& ring,
                                                const GroupRingElement& b1,
                                                const GroupRingElement& b2,
                                                const ExtendedNat& len_bound,
                                                std::uint64_t c_max,
                                                const BBudgets& budgets = {});

/// Least k <= k_max with (V^d * x * V^d)^k = 0, where V is the generator
/// frame of B. Word parts gain one x per factor while length grows by at
/// most 2d+1, so the factor constraint forces vanishing; without it (free
/// mode) nothing vanishes and the result is nullopt.
std::optional<std::uint32_t> x_ideal_nilpotency_B(const GroupRing& ring,
                                                  std::uint32_t d,
                                                  std::uint32_t k_max,
                                                  const BBudgets& budgets = {});

}  // namespace gforge
