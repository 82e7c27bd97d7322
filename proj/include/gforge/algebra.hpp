#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gforge/field.hpp"
#include "gforge/universe.hpp"

namespace gforge {

// Degree-then-lexicographic order on words, with x below y.
struct DegLex {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<std::string, Scalar, DegLex>;

// Finite K-linear combination of allowed words. The empty word is the
// identity; the map never stores zero coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // The word of a one-term element, if it is one (any coefficient).
  const std::string* single_word() const {
    return terms_.size() == 1 ? &terms_.begin()->first : nullptr;
  }

  bool operator==(const AlgebraElement&) const = default;

 private:
  explicit AlgebraElement(TermMap t) : terms_(std::move(t)) {}
  TermMap terms_;
  friend class Algebra;
};

// The monomial algebra on {x, y} cut down by a word universe: products
// whose concatenated word is not allowed vanish.
class Algebra {
 public:
  Algebra(Field field, std::shared_ptr<const WordUniverse> universe)
      : field_(std::move(field)), universe_(std::move(universe)) {}

  const Field& field() const { return field_; }
  const WordUniverse& universe() const { return *universe_; }

  AlgebraElement zero() const { return AlgebraElement(); }
  AlgebraElement one() const { return from_word(""); }
  // Zero if the word is not allowed.
  AlgebraElement from_word(const std::string& word) const;
  AlgebraElement from_term(const std::string& word, const Scalar& coeff) const;
  // Canonicalizes: drops zero coefficients and disallowed words.
  AlgebraElement from_terms(TermMap terms) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const Scalar& c, const AlgebraElement& a) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement power(const AlgebraElement& a, std::uint64_t k) const;

  // Grammar: terms joined by + and -, each an optional rational coefficient
  // and *-separated letter powers, e.g. "3*x*y^2 + y - 1/2*x".
  AlgebraElement parse(const std::string& text) const;
  std::string str(const AlgebraElement& a) const;

  // {1, x, y}: the frame every growth statement quantifies over by default.
  std::vector<AlgebraElement> default_frame() const;

 private:
  Field field_;
  std::shared_ptr<const WordUniverse> universe_;
};

// Render a word with run exponents ("x*y^2*x"); empty word prints "1".
std::string word_str(const std::string& word);

} // namespace gforge
