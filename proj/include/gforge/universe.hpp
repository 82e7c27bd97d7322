#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gforge/word_engine.hpp"

namespace gforge {

// Decides which words over {x, y} survive as nonzero monomials. A product
// whose word is not allowed collapses to zero.
class WordUniverse {
 public:
  virtual ~WordUniverse() = default;
  virtual bool allows(std::string_view word) const = 0;
  virtual std::string str() const = 0;
};

// Words allowed iff they occur in the recursive word of an engine.
class FactorUniverse : public WordUniverse {
 public:
  explicit FactorUniverse(std::shared_ptr<const VInfinity> engine)
      : engine_(std::move(engine)) {}

  bool allows(std::string_view word) const override;
  std::string str() const override;
  const VInfinity& engine() const { return *engine_; }

 private:
  std::shared_ptr<const VInfinity> engine_;
  mutable std::unordered_map<std::string, bool> memo_;
};

// Every word allowed: the free algebra on two letters.
class FreeUniverse : public WordUniverse {
 public:
  bool allows(std::string_view) const override { return true; }
  std::string str() const override { return "free"; }
};

// Allowed words are y^a and y^a x. A single trailing x kills everything
// multiplied on the right, which makes this a handy non-prime control.
class YStarX : public WordUniverse {
 public:
  bool allows(std::string_view word) const override;
  std::string str() const override { return "ystarx"; }
};

} // namespace gforge
