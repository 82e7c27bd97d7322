#include "gforge/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gforge {

const VInfinity& GroupRing::engine() const {
  if (!engine_)
    throw std::logic_error("this group ring runs in free-word mode");
  return *engine_;
}

bool GroupRing::allows(const RunWord& w) const {
  if (!engine_) return true;
  if (w.empty()) return true;
  auto it = factor_cache_.find(w);
  if (it != factor_cache_.end()) return it->second;
  bool ok = engine_->is_factor(w);
  if (factor_cache_.size() < (1u << 20)) factor_cache_.emplace(w, ok);
  return ok;
}

GroupRingElement GroupRing::one() const {
  return from_term(RunWord(), GroupElement());
}

GroupRingElement GroupRing::from_term(const RunWord& word,
                                      const GroupElement& g,
                                      const Scalar& coeff) const {
  Scalar c = field_.norm(coeff);
  GroupRingElement r;
  if (!field_.is_zero(c) && allows(word)) r.terms_[AGKey{word, g}] = c;
  return r;
}

GroupRingElement GroupRing::add(const GroupRingElement& a,
                                const GroupRingElement& b) const {
  GroupRingElement r = a;
  for (const auto& [k, c] : b.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_[k] = c;
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

GroupRingElement GroupRing::sub(const GroupRingElement& a,
                                const GroupRingElement& b) const {
  return add(a, scale(field_.from_int(-1), b));
}

GroupRingElement GroupRing::scale(const Scalar& c,
                                  const GroupRingElement& a) const {
  Scalar cc = field_.norm(c);
  GroupRingElement r;
  if (field_.is_zero(cc)) return r;
  for (const auto& [k, v] : a.terms_) r.terms_[k] = field_.mul(cc, v);
  return r;
}

GroupRingElement GroupRing::multiply(const GroupRingElement& a,
                                     const GroupRingElement& b) const {
  GroupRingElement r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      RunWord w = ka.word.concat(kb.word);
      if (!allows(w)) continue;
      AGKey key{std::move(w), gforge::multiply(ka.g, kb.g)};
      Scalar c = field_.mul(ca, cb);
      auto it = r.terms_.find(key);
      if (it == r.terms_.end()) {
        r.terms_[std::move(key)] = c;
      } else {
        it->second = field_.add(it->second, c);
        if (field_.is_zero(it->second)) r.terms_.erase(it);
      }
    }
  }
  return r;
}

GroupRingElement GroupRing::power(const GroupRingElement& a,
                                  std::uint64_t k) const {
  GroupRingElement r = one();
  for (std::uint64_t i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

namespace {

struct AGParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad group-ring element at position " +
                                std::to_string(pos) + ": " + why);
  }

  Scalar number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    Scalar num(boost::multiprecision::cpp_int(s.substr(start, pos - start)));
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == dstart) fail("expected a denominator");
      boost::multiprecision::cpp_int den(s.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    return num;
  }

  std::uint64_t unsigned_int() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an exponent");
    return std::stoull(s.substr(start, pos - start));
  }
};

} // namespace

GroupRingElement GroupRing::parse(const std::string& text) const {
  AGParser p{text};
  p.skip_ws();
  if (p.pos < text.size() && text[p.pos] == '0') {
    ++p.pos;
    p.skip_ws();
    if (p.pos != text.size())
      throw std::invalid_argument("trailing input after 0");
    return from_term(RunWord(), GroupElement(), Scalar(0));
  }
  GroupRingElement acc;
  bool negate = false;
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) {
      if (first) p.fail("expected a term");
      break;
    }
    if (!first) {
      if (text[p.pos] == '+') {
        negate = false;
      } else if (text[p.pos] == '-') {
        negate = true;
      } else {
        p.fail("expected + or -");
      }
      ++p.pos;
      p.skip_ws();
    } else if (text[p.pos] == '-') {
      negate = true;
      ++p.pos;
      p.skip_ws();
    }
    Scalar coeff(1);
    if (p.pos < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[p.pos]))) {
      coeff = p.number();
      p.skip_ws();
      if (p.pos < text.size() && text[p.pos] == '*') {
        ++p.pos;
        p.skip_ws();
      }
    }
    if (p.pos == text.size() || text[p.pos] != '(') p.fail("expected (");
    ++p.pos;
    // The group grammar nests parentheses (e.g. "z(1)"), so the term's
    // closing ')' is the one that returns the depth to zero.
    std::size_t colon = std::string::npos;
    std::size_t close = std::string::npos;
    int depth = 1;
    for (std::size_t i = p.pos; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '(') {
        ++depth;
      } else if (ch == ')') {
        if (--depth == 0) {
          close = i;
          break;
        }
      } else if (ch == ':' && depth == 1 && colon == std::string::npos) {
        colon = i;
      }
    }
    if (colon == std::string::npos || close == std::string::npos)
      p.fail("expected (word : group)");
    RunWord w = RunWord::parse(text.substr(p.pos, colon - p.pos));
    GroupElement g = GroupElement::parse(text.substr(colon + 1, close - colon - 1));
    p.pos = close + 1;
    GroupRingElement term = from_term(w, g, Scalar(1));
    if (p.pos < text.size() && text[p.pos] == '^') {
      ++p.pos;
      term = power(term, p.unsigned_int());
    }
    if (negate) coeff = -coeff;
    acc = add(acc, scale(coeff, term));
    first = false;
  }
  return acc;
}

std::string GroupRing::str(const GroupRingElement& a) const {
  if (a.is_zero()) return "0";
  // Print longest word first (ties: descending word, ascending group), the
  // same degree-first convention the plain algebra printer uses.
  std::vector<const AGTermMap::value_type*> ordered;
  ordered.reserve(a.terms_.size());
  for (const auto& term : a.terms_) ordered.push_back(&term);
  std::sort(ordered.begin(), ordered.end(), [](const auto* x, const auto* y) {
    ExtendedNat lx = x->first.word.length();
    ExtendedNat ly = y->first.word.length();
    if (!(lx == ly)) return ly < lx;
    if (!(x->first.word == y->first.word)) return y->first.word < x->first.word;
    return group_less(x->first.g, y->first.g);
  });
  std::string out;
  for (const auto* term : ordered) {
    const auto& [k, c] = *term;
    bool neg = field_.is_rational() && c < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) {
      out += field_.str(mag);
      out += '*';
    }
    out += '(';
    out += k.word.str('*');
    out += " : ";
    out += k.g.str();
    out += ')';
  }
  return out;
}

} // namespace gforge
