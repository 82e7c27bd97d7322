#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gforge {

using Scalar = boost::multiprecision::cpp_rational;

// Coefficient field for all linear algebra: exact rationals or a prime
// field GF(p). Prime-field values are kept as canonical integers in [0, p).
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t p);
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar norm(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar from_int(long long v) const;

  std::string str() const;
  std::string str(const Scalar& a) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

} // namespace gforge
