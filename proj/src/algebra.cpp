#include "gforge/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace gforge {

AlgebraElement Algebra::from_word(const std::string& word) const {
  return from_term(word, Scalar(1));
}

AlgebraElement Algebra::from_term(const std::string& word,
                                  const Scalar& coeff) const {
  Scalar c = field_.norm(coeff);
  AlgebraElement r;
  if (!field_.is_zero(c) && universe_->allows(word)) r.terms_[word] = c;
  return r;
}

AlgebraElement Algebra::from_terms(TermMap terms) const {
  AlgebraElement r;
  for (auto& [w, c] : terms) {
    Scalar cc = field_.norm(c);
    if (!field_.is_zero(cc) && universe_->allows(w)) r.terms_[w] = cc;
  }
  return r;
}

AlgebraElement Algebra::add(const AlgebraElement& a,
                            const AlgebraElement& b) const {
  AlgebraElement r = a;
  for (const auto& [w, c] : b.terms_) {
    auto it = r.terms_.find(w);
    if (it == r.terms_.end()) {
      r.terms_[w] = c;
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

AlgebraElement Algebra::sub(const AlgebraElement& a,
                            const AlgebraElement& b) const {
  return add(a, scale(field_.from_int(-1), b));
}

AlgebraElement Algebra::scale(const Scalar& c, const AlgebraElement& a) const {
  Scalar cc = field_.norm(c);
  AlgebraElement r;
  if (field_.is_zero(cc)) return r;
  for (const auto& [w, v] : a.terms_) r.terms_[w] = field_.mul(cc, v);
  return r;
}

AlgebraElement Algebra::multiply(const AlgebraElement& a,
                                 const AlgebraElement& b) const {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      std::string w = wa + wb;
      if (!universe_->allows(w)) continue;
      Scalar c = field_.mul(ca, cb);
      auto it = r.terms_.find(w);
      if (it == r.terms_.end()) {
        r.terms_[w] = c;
      } else {
        it->second = field_.add(it->second, c);
        if (field_.is_zero(it->second)) r.terms_.erase(it);
      }
    }
  }
  return r;
}

AlgebraElement Algebra::power(const AlgebraElement& a, std::uint64_t k) const {
  AlgebraElement r = one();
  for (std::uint64_t i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

std::vector<AlgebraElement> Algebra::default_frame() const {
  return {one(), from_word("x"), from_word("y")};
}

namespace {

struct ElemParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad element at position " +
                                std::to_string(pos) + ": " + why);
  }

  Scalar number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    Scalar num(boost::multiprecision::cpp_int(s.substr(start, pos - start)));
    if (eat('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == dstart) fail("expected a denominator");
      boost::multiprecision::cpp_int den(s.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    return num;
  }

  std::uint64_t exponent() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an exponent");
    return std::stoull(s.substr(start, pos - start));
  }

  // letters with optional ^k, or "1"/"e" for the empty word
  std::string word_factor() {
    skip_ws();
    if (pos < s.size() && (s[pos] == '1' || s[pos] == 'e')) {
      ++pos;
      return "";
    }
    std::string w;
    while (pos < s.size() && (s[pos] == 'x' || s[pos] == 'y')) {
      char letter = s[pos++];
      std::uint64_t k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = exponent();
        if (k == 0) fail("exponents are positive");
      }
      w.append(k, letter);
    }
    if (w.empty()) fail("expected a word factor");
    return w;
  }

  // coefficient and word of one term
  std::pair<Scalar, std::string> term() {
    skip_ws();
    Scalar coeff(1);
    bool saw_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number();
      saw_coeff = true;
    }
    std::string w;
    bool saw_word = false;
    while (true) {
      skip_ws();
      if (saw_coeff || saw_word) {
        std::size_t save = pos;
        if (!eat('*')) break;
        skip_ws();
        if (pos >= s.size() ||
            (s[pos] != 'x' && s[pos] != 'y' && s[pos] != '1' &&
             s[pos] != 'e')) {
          pos = save;
          break;
        }
      } else if (pos >= s.size() ||
                 (s[pos] != 'x' && s[pos] != 'y' && s[pos] != '1' &&
                  s[pos] != 'e')) {
        fail("expected a term");
      }
      w += word_factor();
      saw_word = true;
    }
    if (!saw_coeff && !saw_word) fail("expected a term");
    return {coeff, w};
  }
};

} // namespace

AlgebraElement Algebra::parse(const std::string& text) const {
  ElemParser p{text};
  p.skip_ws();
  if (p.pos < text.size() && text[p.pos] == '0' &&
      (p.pos + 1 == text.size() ||
       std::isspace(static_cast<unsigned char>(text[p.pos + 1])))) {
    ++p.pos;
    p.skip_ws();
    if (p.pos != text.size())
      throw std::invalid_argument("trailing input after 0");
    return zero();
  }
  AlgebraElement acc = zero();
  bool negate = p.eat('-');
  while (true) {
    auto [coeff, word] = p.term();
    if (negate) coeff = -coeff;
    acc = add(acc, from_term(word, coeff));
    p.skip_ws();
    if (p.pos == text.size()) break;
    if (p.eat('+')) {
      negate = false;
    } else if (p.eat('-')) {
      negate = true;
    } else {
      p.fail("expected + or -");
    }
  }
  return acc;
}

std::string word_str(const std::string& word) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += word[i];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Algebra::str(const AlgebraElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms_.rbegin(); it != a.terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool neg = field_.is_rational() && c < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || w.empty()) {
      out += field_.str(mag);
      if (!w.empty()) out += '*';
    }
    if (!w.empty()) out += word_str(w);
  }
  return out;
}

} // namespace gforge
