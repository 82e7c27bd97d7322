#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/extended_nat.hpp"

namespace gforge {

struct Run {
  char letter = 'x';
  ExtendedNat count;

  bool operator==(const Run&) const = default;
};

/// A word over {x, y} stored as alternating runs, so symbolic run lengths
/// (y^(2^^(4;3)) and friends) stay exact.  Adjacent runs always carry
/// distinct letters; counts are >= 1.
class RunWord {
public:
  RunWord() = default;

  static RunWord letter(char c);
  static RunWord run(char c, const ExtendedNat& count);
  static RunWord from_letters(std::string_view text);
  /// Accepts "x y^65536 x", "x*y^2*x", exponents parenthesized or not.
  static RunWord parse(const std::string& text);

  void append(char letter, const ExtendedNat& count);
  void append(const RunWord& tail);
  RunWord concat(const RunWord& tail) const;

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  /// Total letter count; throws TowerOverflow when not representable.
  ExtendedNat length() const;
  /// Number of x letters; throws TowerOverflow when not representable.
  ExtendedNat x_count() const;
  std::uint64_t x_count_u64() const;
  bool pure(char letter) const;
  bool has_letter(char letter) const;
  /// Largest count among runs of `letter`; zero if absent.
  ExtendedNat max_run(char letter) const;

  /// "x y^65536 x"; empty word renders as "e".
  std::string str(char sep = ' ') const;
  /// Explicit letters; throws BudgetError past `cap` characters.
  std::string letters(std::uint64_t cap = (1u << 22)) const;

  std::strong_ordering operator<=>(const RunWord& o) const;
  bool operator==(const RunWord& o) const { return runs_ == o.runs_; }

  std::size_t hash() const;

private:
  std::vector<Run> runs_;
};

} // namespace gforge
