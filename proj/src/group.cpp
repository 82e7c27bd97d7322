#include "gforge/group.hpp"

#include <cctype>
#include <stdexcept>

namespace gforge {

GInt IndexedExponents::at(const GInt& n) const {
  auto it = e_.find(n);
  return it == e_.end() ? GInt(0) : it->second;
}

void IndexedExponents::add(const GInt& n, const GInt& delta) {
  if (delta == 0) return;
  auto [it, fresh] = e_.emplace(n, delta);
  if (!fresh) {
    it->second += delta;
    if (it->second == 0) e_.erase(it);
  }
}

IndexedExponents IndexedExponents::shifted(const GInt& k) const {
  if (k == 0) return *this;
  IndexedExponents r;
  for (const auto& [n, e] : e_) r.e_.emplace(n + k, e);
  return r;
}

IndexedExponents IndexedExponents::negated() const {
  IndexedExponents r;
  for (const auto& [n, e] : e_) r.e_.emplace(n, -e);
  return r;
}

GroupElement GroupElement::z(const GInt& n, const GInt& e) {
  GroupElement g;
  g.z_.add(n, e);
  return g;
}

GroupElement GroupElement::t(const GInt& n, const GInt& e) {
  GroupElement g;
  g.t_.add(n, e);
  return g;
}

GroupElement GroupElement::s(const GInt& n, const GInt& e) {
  GroupElement g;
  g.s_.add(n, e);
  return g;
}

GroupElement GroupElement::u(const GInt& k) {
  GroupElement g;
  g.u_ = k;
  return g;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  GroupElement r;
  r.u_ = g.u_ + h.u_;
  // pull h through u^k: s- and t-indices shift, the z-part does not
  IndexedExponents ht = h.t_.shifted(g.u_);
  IndexedExponents hs = h.s_.shifted(g.u_);
  r.z_ = g.z_;
  for (const auto& [n, e] : h.z_.entries()) r.z_.add(n, e);
  // g's s-block crosses the shifted t-block: s_n^a t_m^b = z_{n-m}^{ab} t_m^b s_n^a
  for (const auto& [n, a] : g.s_.entries())
    for (const auto& [m, b] : ht.entries()) r.z_.add(n - m, a * b);
  r.t_ = g.t_;
  for (const auto& [m, b] : ht.entries()) r.t_.add(m, b);
  r.s_ = g.s_;
  for (const auto& [n, a] : hs.entries()) r.s_.add(n, a);
  return r;
}

GroupElement inverse(const GroupElement& g) {
  // (z^a t^b s^c u^k)^{-1} = u^{-k} s^{-c} t^{-b} z^{-a}, renormalized
  GroupElement us = GroupElement::u(-g.u_exp());
  GroupElement sp, tp, zp;
  for (const auto& [n, e] : g.s_part().entries())
    sp = multiply(sp, GroupElement::s(n, -e));
  for (const auto& [n, e] : g.t_part().entries())
    tp = multiply(tp, GroupElement::t(n, -e));
  for (const auto& [n, e] : g.z_part().entries())
    zp = multiply(zp, GroupElement::z(n, -e));
  return multiply(multiply(multiply(us, sp), tp), zp);
}

GroupElement conjugate_by_u(const GroupElement& g, const GInt& k) {
  return multiply(multiply(GroupElement::u(k), g), GroupElement::u(-k));
}

bool is_central(const GroupElement& g) {
  const GroupElement gens[] = {GroupElement::s(0), GroupElement::t(0),
                               GroupElement::u()};
  for (const GroupElement& h : gens)
    if (!(multiply(g, h) == multiply(h, g))) return false;
  return true;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
}

namespace {

int cmp_exponents(const IndexedExponents& a, const IndexedExponents& b) {
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != ea) return 1;
  if (ib != eb) return -1;
  return 0;
}

} // namespace

bool group_less(const GroupElement& a, const GroupElement& b) {
  if (int c = cmp_exponents(a.z_part(), b.z_part())) return c < 0;
  if (int c = cmp_exponents(a.t_part(), b.t_part())) return c < 0;
  if (int c = cmp_exponents(a.s_part(), b.s_part())) return c < 0;
  return a.u_exp() < b.u_exp();
}

namespace {

struct GroupParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad group word at position " +
                                std::to_string(pos) + ": " + why);
  }

  GInt integer() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) fail("expected an integer");
    return GInt(s.substr(start, pos - start));
  }

  GInt exponent() {
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      return integer();
    }
    return 1;
  }
};

} // namespace

GroupElement GroupElement::parse(const std::string& text) {
  GroupParser p{text};
  GroupElement acc;
  bool saw = false;
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) break;
    char c = text[p.pos];
    if (c == 'e') {
      ++p.pos;
      saw = true;
      continue;
    }
    if (c == 'u') {
      ++p.pos;
      acc = multiply(acc, GroupElement::u(p.exponent()));
      saw = true;
      continue;
    }
    if (c == 's' || c == 't' || c == 'z') {
      ++p.pos;
      p.skip_ws();
      if (p.pos == text.size() || text[p.pos] != '(') p.fail("expected (");
      ++p.pos;
      p.skip_ws();
      GInt n = p.integer();
      p.skip_ws();
      if (p.pos == text.size() || text[p.pos] != ')') p.fail("expected )");
      ++p.pos;
      GInt e = p.exponent();
      GroupElement f = c == 's'   ? GroupElement::s(n, e)
                       : c == 't' ? GroupElement::t(n, e)
                                  : GroupElement::z(n, e);
      acc = multiply(acc, f);
      saw = true;
      continue;
    }
    p.fail("expected s, t, z, u or e");
  }
  if (!saw) p.fail("expected a group word");
  return acc;
}

std::string GroupElement::str() const {
  if (is_identity()) return "e";
  std::string out;
  auto part = [&](char c, const IndexedExponents& p) {
    for (const auto& [n, e] : p.entries()) {
      if (!out.empty()) out += ' ';
      out += c;
      out += '(';
      out += n.str();
      out += ')';
      if (e != 1) {
        out += '^';
        out += e.str();
      }
    }
  };
  part('z', z_);
  part('t', t_);
  part('s', s_);
  if (u_ != 0) {
    if (!out.empty()) out += ' ';
    out += 'u';
    if (u_ != 1) {
      out += '^';
      out += u_.str();
    }
  }
  return out;
}

} // namespace gforge
