#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace gforge {

/// Suffix automaton over the two-letter alphabet {x, y}; recognizes every
/// factor of the word it was built from and counts distinct factors per
/// length in linear time.
class SuffixAutomaton {
public:
  SuffixAutomaton();
  explicit SuffixAutomaton(std::string_view word);

  void extend(char c);
  bool contains(std::string_view w) const;
  /// counts[l] = number of distinct factors of length l, for l in [1, lmax].
  std::vector<std::uint64_t> counts_by_length(std::uint64_t lmax) const;
  std::size_t states() const { return nodes_.size(); }

private:
  struct Node {
    std::int64_t len = 0;
    std::int32_t link = -1;
    std::int32_t next[2] = {-1, -1};
  };

  static int idx(char c) { return c == 'x' ? 0 : 1; }

  std::vector<Node> nodes_;
  std::int32_t last_ = 0;
};

} // namespace gforge
