#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/errors.hpp"
#include "gforge/run_word.hpp"
#include "gforge/sequence_spec.hpp"
#include "gforge/suffix_automaton.hpp"

namespace gforge {

struct WordBudgets {
  /// Largest level word materialized as explicit letters.
  std::uint64_t max_chars = 6u << 20;
  /// Largest factor length handled by enumeration.
  std::uint64_t max_len = 1u << 20;
  /// Hard cap on the stabilization search.
  std::uint32_t max_level = 32;
  /// Cap on run-compressed level words.
  std::uint64_t max_prefix_runs = 1u << 20;
  /// Cap on candidates tried by the witness search.
  std::uint64_t witness_candidates = 200000;
};

/// The infinite word built from w_1 = x, w_{k+1} = w_k y^{q_k} w_k, where
/// q_k comes from a RunSequenceSpec.  Every level word is a prefix of the
/// next, so the limit word is well defined; for an explicit run list the
/// word stops at the last buildable level and queries address that word.
///
/// Queries run over materialized prefixes when the budgets allow and fall
/// back to exact positional analysis of the gap structure otherwise: the
/// i-th x (1-based) is followed by a y-run of length q_{ruler(i)}, with
/// ruler(i) = (number of trailing zero bits of i) + 1.
class VInfinity {
public:
  explicit VInfinity(RunSequenceSpec spec, WordBudgets budgets = {});

  const RunSequenceSpec& sequence() const { return spec_; }
  const WordBudgets& budgets() const { return budgets_; }

  /// Length of the level-k word: L(1) = 1, L(k+1) = 2 L(k) + q_k.
  ExtendedNat word_length(std::uint32_t k) const;
  /// The level-k word in run form.
  RunWord level_word(std::uint32_t k) const;
  /// The level-k word as explicit letters (budget-guarded, cached).
  const std::string& level_letters(std::uint32_t k) const;
  /// Prefix ending at the c-th x: x y^{g_1} x ... y^{g_{c-1}} x.
  RunWord prefix_with_x(std::uint64_t c) const;

  static std::uint32_t ruler(std::uint64_t i);
  /// y-run length after the i-th x.
  ExtendedNat gap(std::uint64_t i) const;

  /// True when the level-k word already carries every factor of this
  /// length, measured against level k+1.
  bool stabilization_check(std::uint64_t len, std::uint32_t k) const;
  /// Least k passing stabilization_check, found by direct comparison.
  std::uint32_t stable_level(std::uint64_t len) const;
  /// Least k with q_{k-1} >= len and L(k-1) >= len - 1; agrees with
  /// stable_level wherever both are computable and is durable upward.
  std::uint32_t closed_form_level(const ExtendedNat& len) const;

  /// Number of distinct factors of the given length.
  std::uint64_t factor_complexity(std::uint64_t len) const;
  /// Factor counts for lengths 1..lmax (index 0 unused).
  std::vector<std::uint64_t> complexity_table(std::uint64_t lmax) const;

  bool is_factor(const RunWord& w) const;
  bool is_factor_letters(std::string_view w) const;

  /// Largest number of x letters among factors of the given length.
  std::uint64_t max_x_occurrences(const ExtendedNat& len) const;

  /// Shortest w (ties broken by letter order) with w1 w w2 a factor and
  /// |w| <= len_bound; nullopt when none exists within the bound.
  std::optional<RunWord> prime_witness(const RunWord& w1, const RunWord& w2,
                                       const ExtendedNat& len_bound) const;

private:
  struct Level {
    std::string letters;
    SuffixAutomaton sam;
    std::vector<std::uint64_t> counts;
    std::uint64_t counts_lmax = 0;
    std::vector<std::uint32_t> xprefix;
  };

  Level& level(std::uint32_t k) const;
  const std::vector<std::uint64_t>& counts(std::uint32_t k,
                                           std::uint64_t lmax) const;
  std::uint32_t top_level() const;
  bool structural_is_factor(const RunWord& w) const;
  std::optional<RunWord> structural_witness(const RunWord& w1,
                                            const RunWord& w2,
                                            const ExtendedNat& bound) const;
  std::optional<RunWord> scan_witness(const RunWord& w1, const RunWord& w2,
                                      std::uint64_t bound) const;

  RunSequenceSpec spec_;
  WordBudgets budgets_;
  mutable std::map<std::uint32_t, Level> levels_;
};

} // namespace gforge
