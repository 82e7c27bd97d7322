#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "gforge/errors.hpp"

namespace gforge {

using BigInt = boost::multiprecision::cpp_int;

/// Natural number that is either held exactly or as an iterated power of two
/// 2^(2^(...^top)) with `height` exponentiations.  Values whose materialized
/// form fits the configured bit threshold are always stored exactly, so
/// equality is structural.  Canonical towers carry maximal height: the top is
/// de-exponentiated while it remains a power of two, which is what makes the
/// tower run lengths print as 2^^(4;n).
class ExtendedNat {
public:
  ExtendedNat() : exact_(0) {}
  ExtendedNat(std::uint64_t v) : exact_(v) {}
  ExtendedNat(BigInt v);

  /// 2^(2^(...^top)), `height` arrows deep.  height == 0 yields top itself.
  static ExtendedNat tower(std::uint32_t height, BigInt top);
  /// 2^e for an arbitrary (possibly symbolic) exponent.
  static ExtendedNat two_pow(const ExtendedNat& e);

  /// Materialization threshold in bits shared by all values (default 2^20).
  static std::uint64_t threshold_bits();
  static void set_threshold_bits(std::uint64_t bits);

  bool is_exact() const { return height_ == 0; }
  bool is_tower() const { return height_ > 0; }
  bool is_zero() const { return height_ == 0 && exact_ == 0; }
  /// Exact value; throws TowerOverflow on symbolic towers.
  const BigInt& exact() const;
  /// Exact value if it additionally fits in 64 bits.
  std::uint64_t to_u64() const;
  bool fits_u64() const;
  std::uint32_t tower_height() const { return height_; }
  const BigInt& tower_top() const { return exact_; }

  /// floor(log2(value)) for nonzero values, as an ExtendedNat.
  ExtendedNat log2_floor() const;
  bool is_power_of_two() const;

  ExtendedNat operator+(const ExtendedNat& o) const;
  ExtendedNat& operator+=(const ExtendedNat& o);
  /// this - o; requires this >= o, throws TowerOverflow when the difference
  /// is not representable.
  ExtendedNat sub(const ExtendedNat& o) const;
  ExtendedNat doubled() const;

  std::strong_ordering operator<=>(const ExtendedNat& o) const;
  bool operator==(const ExtendedNat& o) const = default;

  /// Decimal for small values, sparse 2^^(h;t)[+rest] form for large ones.
  std::string str() const;
  /// Inverse of str(); accepts decimal, 2^^(h;t) and '+'-joined sums.
  static ExtendedNat parse(const std::string& text);

  std::size_t hash() const;

private:
  // height_ == 0: exact_ holds the value.  height_ > 0: value is
  // 2^(2^(...^exact_)) with height_ exponentiations.
  BigInt exact_;
  std::uint32_t height_ = 0;

  void canonicalize();
};

} // namespace gforge
