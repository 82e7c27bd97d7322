#include "gforge/universe.hpp"

namespace gforge {

bool FactorUniverse::allows(std::string_view word) const {
  if (word.empty()) return true;
  auto it = memo_.find(std::string(word));
  if (it != memo_.end()) return it->second;
  bool ok = engine_->is_factor_letters(word);
  if (memo_.size() < (1u << 22)) memo_.emplace(std::string(word), ok);
  return ok;
}

std::string FactorUniverse::str() const {
  return "factors:" + engine_->sequence().str();
}

bool YStarX::allows(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == 'x') return i + 1 == word.size();
  return true;
}

} // namespace gforge
