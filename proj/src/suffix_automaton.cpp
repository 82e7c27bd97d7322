#include "gforge/suffix_automaton.hpp"

#include <algorithm>

namespace gforge {

SuffixAutomaton::SuffixAutomaton() { nodes_.emplace_back(); }

SuffixAutomaton::SuffixAutomaton(std::string_view word) : SuffixAutomaton() {
  for (char c : word) extend(c);
}

void SuffixAutomaton::extend(char c) {
  int a = idx(c);
  std::int32_t cur = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[cur].len = nodes_[last_].len + 1;
  std::int32_t p = last_;
  while (p != -1 && nodes_[p].next[a] == -1) {
    nodes_[p].next[a] = cur;
    p = nodes_[p].link;
  }
  if (p == -1) {
    nodes_[cur].link = 0;
  } else {
    std::int32_t q = nodes_[p].next[a];
    if (nodes_[p].len + 1 == nodes_[q].len) {
      nodes_[cur].link = q;
    } else {
      std::int32_t clone = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(nodes_[q]);
      nodes_[clone].len = nodes_[p].len + 1;
      while (p != -1 && nodes_[p].next[a] == q) {
        nodes_[p].next[a] = clone;
        p = nodes_[p].link;
      }
      nodes_[q].link = clone;
      nodes_[cur].link = clone;
    }
  }
  last_ = cur;
}

bool SuffixAutomaton::contains(std::string_view w) const {
  std::int32_t s = 0;
  for (char c : w) {
    s = nodes_[s].next[idx(c)];
    if (s == -1) return false;
  }
  return true;
}

std::vector<std::uint64_t>
SuffixAutomaton::counts_by_length(std::uint64_t lmax) const {
  // Each state other than the root contributes one factor per length in
  // [link.len + 1, len]; accumulate with a difference array.
  std::vector<std::int64_t> diff(lmax + 2, 0);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    std::int64_t lo = nodes_[nodes_[i].link].len + 1;
    std::int64_t hi = nodes_[i].len;
    if (lo > static_cast<std::int64_t>(lmax)) continue;
    hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(lmax));
    diff[static_cast<std::size_t>(lo)] += 1;
    diff[static_cast<std::size_t>(hi) + 1] -= 1;
  }
  std::vector<std::uint64_t> counts(lmax + 1, 0);
  std::int64_t acc = 0;
  for (std::uint64_t l = 1; l <= lmax; ++l) {
    acc += diff[l];
    counts[l] = static_cast<std::uint64_t>(acc);
  }
  return counts;
}

} // namespace gforge
