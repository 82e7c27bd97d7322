#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gforge {

using GInt = boost::multiprecision::cpp_int;

// Finitely supported exponent vector over integer indices; zero exponents
// are never stored.
class IndexedExponents {
 public:
  IndexedExponents() = default;

  const std::map<GInt, GInt>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  GInt at(const GInt& n) const;
  void add(const GInt& n, const GInt& delta);
  IndexedExponents shifted(const GInt& k) const;
  IndexedExponents negated() const;

  bool operator==(const IndexedExponents&) const = default;

 private:
  std::map<GInt, GInt> e_;
};

// Element of the group generated by u and the families z_n, t_n, s_n, held
// in the normal form (prod z_n^a) (prod t_n^b) (prod s_n^c) u^k. The z_n are
// central, the t's commute among themselves and so do the s's, conjugation
// by u shifts every s- and t-index up by one, and s_n t_m = z_{n-m} t_m s_n.
// The normal form is unique, so equality is field-wise.
class GroupElement {
 public:
  GroupElement() = default; // identity

  static GroupElement z(const GInt& n, const GInt& e = 1);
  static GroupElement t(const GInt& n, const GInt& e = 1);
  static GroupElement s(const GInt& n, const GInt& e = 1);
  static GroupElement u(const GInt& k = 1);

  const IndexedExponents& z_part() const { return z_; }
  const IndexedExponents& t_part() const { return t_; }
  const IndexedExponents& s_part() const { return s_; }
  const GInt& u_exp() const { return u_; }

  bool is_identity() const {
    return z_.empty() && t_.empty() && s_.empty() && u_ == 0;
  }

  bool operator==(const GroupElement&) const = default;

  // Tokens s(n), t(n), z(n), u, each with an optional ^k; juxtaposition or
  // whitespace multiplies; "e" is the identity. Indices and exponents may be
  // negative and arbitrarily large.
  static GroupElement parse(const std::string& text);
  // Canonical normal-form rendering, e.g. "z(1) t(0)^-1 s(1) u^2"; "e" for
  // the identity.
  std::string str() const;

 private:
  IndexedExponents z_, t_, s_;
  GInt u_ = 0;

  friend GroupElement multiply(const GroupElement&, const GroupElement&);
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
// u^k g u^{-k}: shifts s- and t-indices by k, fixes the z-part and u-part.
GroupElement conjugate_by_u(const GroupElement& g, const GInt& k);
// Checks commutation with the three group generators s_0, t_0, u.
bool is_central(const GroupElement& g);
GroupElement commutator(const GroupElement& g, const GroupElement& h);

// Strict total order, for use as an ordered-container key.
bool group_less(const GroupElement& a, const GroupElement& b);

} // namespace gforge
