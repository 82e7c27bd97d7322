#include "gforge/extended_nat.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cassert>
#include <cctype>
#include <vector>

namespace gforge {

namespace {

std::uint64_t g_threshold_bits = 1u << 20;

int big_cmp(const BigInt& a, const BigInt& b) { return a.compare(b); }

bool big_is_pow2(const BigInt& v) {
  if (v <= 0) return false;
  return boost::multiprecision::lsb(v) == boost::multiprecision::msb(v);
}

} // namespace

std::uint64_t ExtendedNat::threshold_bits() { return g_threshold_bits; }

void ExtendedNat::set_threshold_bits(std::uint64_t bits) {
  if (bits < 64) throw std::invalid_argument("threshold below 64 bits");
  g_threshold_bits = bits;
}

ExtendedNat::ExtendedNat(BigInt v) : exact_(std::move(v)) {
  if (exact_ < 0) throw std::invalid_argument("ExtendedNat from negative value");
  canonicalize();
}

ExtendedNat ExtendedNat::tower(std::uint32_t height, BigInt top) {
  if (top < 0) throw std::invalid_argument("tower top must be nonnegative");
  ExtendedNat r;
  r.exact_ = std::move(top);
  r.height_ = height;
  r.canonicalize();
  return r;
}

void ExtendedNat::canonicalize() {
  // Materialize as long as the next exponentiation stays under the threshold.
  while (height_ > 0 && exact_ < g_threshold_bits) {
    exact_ = BigInt(1) << static_cast<std::uint64_t>(exact_);
    --height_;
  }
  if (height_ == 0) {
    // Over-threshold exact powers of two have a tower form; use it so that
    // equal values always share one representation.
    if (exact_ > 0 && boost::multiprecision::msb(exact_) >= g_threshold_bits &&
        big_is_pow2(exact_)) {
      exact_ = boost::multiprecision::msb(exact_);
      height_ = 1;
    } else {
      return;
    }
  }
  // Maximal height: de-exponentiate the top while it remains a power of two.
  while (big_is_pow2(exact_) && exact_ > 2) {
    exact_ = boost::multiprecision::msb(exact_);
    ++height_;
  }
}

const BigInt& ExtendedNat::exact() const {
  if (height_ > 0) throw TowerOverflow("symbolic tower has no exact form");
  return exact_;
}

bool ExtendedNat::fits_u64() const {
  return height_ == 0 && exact_ <= BigInt(UINT64_MAX);
}

std::uint64_t ExtendedNat::to_u64() const {
  if (!fits_u64()) throw TowerOverflow("value does not fit in 64 bits");
  return static_cast<std::uint64_t>(exact_);
}

ExtendedNat ExtendedNat::log2_floor() const {
  if (is_zero()) throw std::invalid_argument("log2 of zero");
  if (height_ == 0) return ExtendedNat(BigInt(boost::multiprecision::msb(exact_)));
  return tower(height_ - 1, exact_);
}

bool ExtendedNat::is_power_of_two() const {
  if (height_ > 0) return true;
  return big_is_pow2(exact_);
}

ExtendedNat ExtendedNat::two_pow(const ExtendedNat& e) {
  if (e.height_ > 0) return tower(e.height_ + 1, e.exact_);
  return tower(1, e.exact_);
}

ExtendedNat ExtendedNat::operator+(const ExtendedNat& o) const {
  if (height_ == 0 && o.height_ == 0) return ExtendedNat(exact_ + o.exact_);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  throw TowerOverflow("sum with a symbolic tower is not representable");
}

ExtendedNat& ExtendedNat::operator+=(const ExtendedNat& o) {
  *this = *this + o;
  return *this;
}

ExtendedNat ExtendedNat::sub(const ExtendedNat& o) const {
  auto c = *this <=> o;
  if (c == std::strong_ordering::less)
    throw std::invalid_argument("negative difference");
  if (c == std::strong_ordering::equal) return ExtendedNat();
  if (height_ == 0 && o.height_ == 0) return ExtendedNat(exact_ - o.exact_);
  if (o.is_zero()) return *this;
  throw TowerOverflow("difference with a symbolic tower is not representable");
}

ExtendedNat ExtendedNat::doubled() const {
  if (height_ == 0) return ExtendedNat(exact_ << 1);
  ExtendedNat e = log2_floor();
  if (e.height_ > 0)
    throw TowerOverflow("doubling this tower is not representable");
  return two_pow(ExtendedNat(e.exact_ + 1));
}

std::strong_ordering ExtendedNat::operator<=>(const ExtendedNat& o) const {
  if (height_ == 0 && o.height_ == 0) {
    int c = big_cmp(exact_, o.exact_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  if (height_ > 0 && o.height_ > 0) {
    if (height_ == o.height_ && exact_ == o.exact_)
      return std::strong_ordering::equal;
    auto c = log2_floor() <=> o.log2_floor();
    assert(c != std::strong_ordering::equal);
    return c;
  }
  if (height_ == 0) {
    // exact vs tower; a canonical tower exceeds 2^threshold, and a canonical
    // exact value is never a power of two that large.
    if (exact_ <= 1) return std::strong_ordering::less;
    auto c = log2_floor() <=> o.log2_floor();
    if (c == std::strong_ordering::equal) return std::strong_ordering::greater;
    return c;
  }
  auto c = o <=> *this;
  return c == std::strong_ordering::less      ? std::strong_ordering::greater
         : c == std::strong_ordering::greater ? std::strong_ordering::less
                                              : std::strong_ordering::equal;
}

std::string ExtendedNat::str() const {
  if (height_ > 0)
    return "2^^(" + std::to_string(height_) + ";" +
           ExtendedNat(exact_).str() + ")";
  if (exact_ == 0 || boost::multiprecision::msb(exact_) < 256)
    return exact_.str();
  std::vector<std::string> terms;
  BigInt rest = exact_;
  while (rest > 0) {
    std::uint64_t e = boost::multiprecision::msb(rest);
    if (e < 64 || terms.size() >= 64) {
      // Dense or small tail: decimal keeps the output exact and bounded.
      if (terms.size() >= 64) return exact_.str();
      terms.push_back(rest.str());
      break;
    }
    terms.push_back("2^^(1;" + ExtendedNat(BigInt(e)).str() + ")");
    rest -= BigInt(1) << e;
  }
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out += "+" + terms[i];
  return out;
}

namespace {

struct NatParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse natural '" + s + "': " + why);
  }

  BigInt digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return BigInt(s.substr(start, pos - start));
  }

  ExtendedNat atom() {
    skip_ws();
    if (s.compare(pos, 4, "2^^(") == 0) {
      pos += 4;
      BigInt h = digits();
      skip_ws();
      if (pos >= s.size() || s[pos] != ';') fail("expected ';'");
      ++pos;
      ExtendedNat inner = sum();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      if (h < 0 || h > BigInt(UINT32_MAX)) fail("tower height out of range");
      auto height = static_cast<std::uint32_t>(h);
      if (inner.is_exact()) return ExtendedNat::tower(height, inner.exact());
      return ExtendedNat::tower(height + inner.tower_height(),
                                inner.tower_top());
    }
    return ExtendedNat(digits());
  }

  ExtendedNat sum() {
    ExtendedNat v = atom();
    skip_ws();
    while (pos < s.size() && s[pos] == '+') {
      ++pos;
      v += atom();
      skip_ws();
    }
    return v;
  }
};

} // namespace

ExtendedNat ExtendedNat::parse(const std::string& text) {
  NatParser p{text};
  ExtendedNat v = p.sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

std::size_t ExtendedNat::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(height_);
  if (exact_ > 0) {
    mix(static_cast<std::uint64_t>(exact_ & BigInt(UINT64_MAX)));
    mix(boost::multiprecision::msb(exact_));
  }
  return static_cast<std::size_t>(h);
}

} // namespace gforge
