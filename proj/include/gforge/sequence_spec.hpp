#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gforge/extended_nat.hpp"

namespace gforge {

/// Chooses the run-length sequence q_n that separates the doubling word's
/// blocks: the tower values 2^(2^(2^(2^n))), a geometric family b^n, or an
/// explicit desk-scale list.  Values must be >= 1 and strictly increasing;
/// explicit lists violating that are rejected.
class RunSequenceSpec {
public:
  enum class Kind { Tower, Geometric, Explicit };

  static RunSequenceSpec tower();
  static RunSequenceSpec geometric(std::uint64_t base);
  static RunSequenceSpec explicit_list(std::vector<ExtendedNat> values);

  Kind kind() const { return kind_; }
  std::uint64_t base() const { return base_; }
  const std::vector<ExtendedNat>& list() const { return list_; }

  /// q_n (1-indexed).  Throws std::invalid_argument past an explicit list.
  ExtendedNat run(std::uint64_t n) const;
  /// Number of q_n available; UINT64_MAX for unbounded specs.
  std::uint64_t levels() const;
  bool unbounded() const { return kind_ != Kind::Explicit; }

  /// Least m with q_m >= v, if any within `cap` levels.
  std::optional<std::uint64_t> level_at_least(const ExtendedNat& v,
                                              std::uint64_t cap = 4096) const;
  /// The m with q_m == v exactly, if any.
  std::optional<std::uint64_t> level_of(const ExtendedNat& v,
                                        std::uint64_t cap = 4096) const;

  std::string str() const;
  static RunSequenceSpec parse(const std::string& text);

  bool operator==(const RunSequenceSpec& o) const = default;

private:
  Kind kind_ = Kind::Tower;
  std::uint64_t base_ = 0;
  std::vector<ExtendedNat> list_;
};

} // namespace gforge
