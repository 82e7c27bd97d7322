#include "gforge/field.hpp"

#include <stdexcept>

namespace gforge {

namespace {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "rationals" || text == "q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = std::stoull(text.substr(3), &used);
    if (used != text.size() - 3)
      throw std::invalid_argument("bad field spec: " + text);
    return prime(p);
  }
  throw std::invalid_argument("unknown field spec: " + text);
}

Scalar Field::norm(const Scalar& a) const {
  if (p_ == 0) return a;
  BigInt num = boost::multiprecision::numerator(a);
  BigInt den = boost::multiprecision::denominator(a);
  BigInt p = p_;
  BigInt dm = den % p;
  if (dm < 0) dm += p;
  if (dm == 0)
    throw std::invalid_argument("denominator vanishes in the prime field");
  BigInt nm = num % p;
  if (nm < 0) nm += p;
  std::uint64_t di = dm.convert_to<std::uint64_t>();
  std::uint64_t dinv = mod_pow(di, p_ - 2, p_);
  BigInt r = nm * dinv % p;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return norm(a + b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return norm(a - b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return norm(a * b); }

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (b == 0) throw std::invalid_argument("division by zero");
  return norm(a / b);
}

Scalar Field::neg(const Scalar& a) const { return norm(-a); }

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::invalid_argument("division by zero");
  return norm(1 / a);
}

Scalar Field::from_int(long long v) const { return norm(Scalar(v)); }

std::string Field::str() const {
  return p_ == 0 ? "rationals" : "gf:" + std::to_string(p_);
}

std::string Field::str(const Scalar& a) const {
  return a.str();
}

} // namespace gforge
