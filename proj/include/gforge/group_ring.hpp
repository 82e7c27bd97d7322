#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "gforge/field.hpp"
#include "gforge/group.hpp"
#include "gforge/run_word.hpp"
#include "gforge/word_engine.hpp"

namespace gforge {

// One basis monomial of the group ring: a word part (kept as runs so
// symbolic run lengths survive) and a group part.
struct AGKey {
  RunWord word;
  GroupElement g;

  bool operator==(const AGKey&) const = default;
};

struct AGKeyLess {
  bool operator()(const AGKey& a, const AGKey& b) const {
    if (!(a.word == b.word)) return a.word < b.word;
    return group_less(a.g, b.g);
  }
};

using AGTermMap = std::map<AGKey, Scalar, AGKeyLess>;

class GroupRingElement {
 public:
  GroupRingElement() = default;

  const AGTermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const AGKey* single_key() const {
    return terms_.size() == 1 ? &terms_.begin()->first : nullptr;
  }

  bool operator==(const GroupRingElement&) const = default;

 private:
  explicit GroupRingElement(AGTermMap t) : terms_(std::move(t)) {}
  AGTermMap terms_;
  friend class GroupRing;
};

// Group ring over the run-word monomial algebra: coefficients commute with
// group parts, and terms whose word product is not a factor vanish. A null
// engine drops the word constraint entirely, which is the free-word control.
class GroupRing {
 public:
  GroupRing(Field field, std::shared_ptr<const VInfinity> engine)
      : field_(std::move(field)), engine_(std::move(engine)) {}

  const Field& field() const { return field_; }
  bool factor_mode() const { return engine_ != nullptr; }
  const VInfinity& engine() const;
  bool allows(const RunWord& w) const;

  GroupRingElement zero() const { return GroupRingElement(); }
  GroupRingElement one() const;
  GroupRingElement from_term(const RunWord& word, const GroupElement& g,
                             const Scalar& coeff = Scalar(1)) const;

  GroupRingElement add(const GroupRingElement& a,
                       const GroupRingElement& b) const;
  GroupRingElement sub(const GroupRingElement& a,
                       const GroupRingElement& b) const;
  GroupRingElement scale(const Scalar& c, const GroupRingElement& a) const;
  GroupRingElement multiply(const GroupRingElement& a,
                            const GroupRingElement& b) const;
  GroupRingElement power(const GroupRingElement& a, std::uint64_t k) const;

  // Terms look like "(x*y^2*x : z(1) t(0) s(1))", joined by + and -, with an
  // optional rational coefficient and an optional ^k on a term; "0" is zero.
  GroupRingElement parse(const std::string& text) const;
  std::string str(const GroupRingElement& a) const;

 private:
  struct WordHash {
    std::size_t operator()(const RunWord& w) const { return w.hash(); }
  };

  Field field_;
  std::shared_ptr<const VInfinity> engine_;
  mutable std::unordered_map<RunWord, bool, WordHash> factor_cache_;
};

} // namespace gforge
