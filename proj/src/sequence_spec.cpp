#include "gforge/sequence_spec.hpp"

#include <sstream>
#include <stdexcept>

namespace gforge {

RunSequenceSpec RunSequenceSpec::tower() {
  RunSequenceSpec s;
  s.kind_ = Kind::Tower;
  return s;
}

RunSequenceSpec RunSequenceSpec::geometric(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("geometric base must be >= 2");
  RunSequenceSpec s;
  s.kind_ = Kind::Geometric;
  s.base_ = base;
  return s;
}

RunSequenceSpec RunSequenceSpec::explicit_list(std::vector<ExtendedNat> values) {
  if (values.empty()) throw std::invalid_argument("explicit run list is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero())
      throw std::invalid_argument("run values must be >= 1");
    if (i > 0 && !(values[i - 1] < values[i]))
      throw std::invalid_argument("run values must be strictly increasing");
  }
  RunSequenceSpec s;
  s.kind_ = Kind::Explicit;
  s.list_ = std::move(values);
  return s;
}

ExtendedNat RunSequenceSpec::run(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("run index is 1-based");
  switch (kind_) {
    case Kind::Tower:
      return ExtendedNat::tower(4, BigInt(n));
    case Kind::Geometric: {
      if (n > (1u << 20))
        throw BudgetError("geometric run index too large");
      BigInt v = boost::multiprecision::pow(BigInt(base_),
                                            static_cast<unsigned>(n));
      return ExtendedNat(v);
    }
    case Kind::Explicit:
      if (n > list_.size()) {
        std::ostringstream os;
        os << "explicit run list exhausted at index " << n;
        throw std::invalid_argument(os.str());
      }
      return list_[n - 1];
  }
  throw std::logic_error("unreachable");
}

std::uint64_t RunSequenceSpec::levels() const {
  return kind_ == Kind::Explicit ? list_.size() : UINT64_MAX;
}

std::optional<std::uint64_t>
RunSequenceSpec::level_at_least(const ExtendedNat& v, std::uint64_t cap) const {
  std::uint64_t top = std::min<std::uint64_t>(cap, levels());
  for (std::uint64_t m = 1; m <= top; ++m)
    if (!(run(m) < v)) return m;
  return std::nullopt;
}

std::optional<std::uint64_t>
RunSequenceSpec::level_of(const ExtendedNat& v, std::uint64_t cap) const {
  std::uint64_t top = std::min<std::uint64_t>(cap, levels());
  for (std::uint64_t m = 1; m <= top; ++m) {
    ExtendedNat q = run(m);
    if (q == v) return m;
    if (v < q) return std::nullopt;
  }
  return std::nullopt;
}

std::string RunSequenceSpec::str() const {
  switch (kind_) {
    case Kind::Tower:
      return "tower";
    case Kind::Geometric:
      return "geo:" + std::to_string(base_);
    case Kind::Explicit: {
      std::string out = "list:";
      for (std::size_t i = 0; i < list_.size(); ++i) {
        if (i) out += ',';
        out += list_[i].str();
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

RunSequenceSpec RunSequenceSpec::parse(const std::string& text) {
  if (text == "tower") return tower();
  if (text.rfind("geo:", 0) == 0) {
    std::size_t pos = 0;
    std::uint64_t b = 0;
    try {
      b = std::stoull(text.substr(4), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad geometric base in '" + text + "'");
    }
    if (pos != text.size() - 4)
      throw std::invalid_argument("bad geometric base in '" + text + "'");
    return geometric(b);
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<ExtendedNat> vals;
    std::string body = text.substr(5);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string item = body.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty())
        throw std::invalid_argument("empty entry in run list '" + text + "'");
      vals.push_back(ExtendedNat::parse(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return explicit_list(std::move(vals));
  }
  throw std::invalid_argument("unknown run sequence '" + text +
                              "' (expected tower, geo:<b>, or list:<v,...>)");
}

} // namespace gforge
