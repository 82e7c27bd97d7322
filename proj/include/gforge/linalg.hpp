#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gforge/field.hpp"

namespace gforge {

// Sparse linear combination over previously inserted vectors, keyed by the
// zero-based insert call index.
using Dependency = std::vector<std::pair<std::size_t, Scalar>>;

// Incremental echelon basis with provenance. Vectors are inserted one at a
// time; a vector already in the span comes back as an exact combination of
// the earlier inserts, which is what certificates are built from.
template <typename Key, typename Cmp = std::less<Key>>
class RowBasis {
 public:
  using Row = std::map<Key, Scalar, Cmp>;

  explicit RowBasis(Field field) : field_(std::move(field)) {}

  std::size_t dim() const { return pivots_.size(); }
  std::size_t inserted() const { return calls_; }

  // Returns the dependency if the vector was already in the span (possibly
  // empty, for the zero vector); nullopt if it added a new dimension.
  std::optional<Dependency> insert(Row v) {
    std::size_t idx = calls_++;
    std::map<std::size_t, Scalar> combo;
    combo[idx] = field_.from_int(1);
    reduce_in_place(v, combo);
    if (v.empty()) {
      // v = sum of earlier rows: report the combination without v itself.
      combo.erase(idx);
      Dependency dep;
      for (auto& [i, c] : combo) dep.emplace_back(i, field_.neg(c));
      return dep;
    }
    normalize_and_store(std::move(v), std::move(combo));
    return std::nullopt;
  }

  // Like insert, but never extends the basis and does not count as an
  // insert; nullopt means the vector is outside the current span.
  std::optional<Dependency> reduce(Row v) const {
    std::map<std::size_t, Scalar> combo;
    reduce_in_place(v, combo);
    if (!v.empty()) return std::nullopt;
    Dependency dep;
    for (auto& [i, c] : combo) dep.emplace_back(i, field_.neg(c));
    return dep;
  }

  bool contains(Row v) const { return reduce(std::move(v)).has_value(); }

  // Basis rows in insertion order (each normalized to leading coefficient 1).
  const std::vector<Row>& rows() const { return rows_; }

 private:
  void reduce_in_place(Row& v, std::map<std::size_t, Scalar>& combo) const {
    while (!v.empty()) {
      const Key& lead = v.rbegin()->first;
      auto p = pivots_.find(lead);
      if (p == pivots_.end()) return;
      const Row& prow = rows_[p->second];
      const auto& pcombo = combos_[p->second];
      Scalar c = v.rbegin()->second;
      for (const auto& [k, pc] : prow) {
        auto it = v.find(k);
        Scalar nv = field_.sub(it == v.end() ? Scalar(0) : it->second,
                               field_.mul(c, pc));
        if (field_.is_zero(nv)) {
          if (it != v.end()) v.erase(it);
        } else {
          v[k] = nv;
        }
      }
      for (const auto& [i, pc] : pcombo) {
        auto it = combo.find(i);
        Scalar nv = field_.sub(it == combo.end() ? Scalar(0) : it->second,
                               field_.mul(c, pc));
        if (field_.is_zero(nv)) {
          if (it != combo.end()) combo.erase(it);
        } else {
          combo[i] = nv;
        }
      }
    }
  }

  void normalize_and_store(Row v, std::map<std::size_t, Scalar> combo) {
    Scalar lead = v.rbegin()->second;
    if (lead != 1) {
      Scalar inv = field_.inv(lead);
      for (auto& [k, c] : v) c = field_.mul(c, inv);
      for (auto& [i, c] : combo) c = field_.mul(c, inv);
    }
    pivots_[v.rbegin()->first] = rows_.size();
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
  }

  Field field_;
  std::map<Key, std::size_t, Cmp> pivots_;
  std::vector<Row> rows_;
  std::vector<std::map<std::size_t, Scalar>> combos_;
  std::size_t calls_ = 0;
};

} // namespace gforge
