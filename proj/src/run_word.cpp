#include "gforge/run_word.hpp"

#include <stdexcept>

#include "gforge/errors.hpp"

namespace gforge {

namespace {

void check_letter(char c) {
  if (c != 'x' && c != 'y')
    throw std::invalid_argument(std::string("bad letter '") + c +
                                "' (alphabet is {x, y})");
}

} // namespace

RunWord RunWord::letter(char c) { return run(c, ExtendedNat(1)); }

RunWord RunWord::run(char c, const ExtendedNat& count) {
  RunWord w;
  w.append(c, count);
  return w;
}

RunWord RunWord::from_letters(std::string_view text) {
  RunWord w;
  for (char c : text) w.append(c, ExtendedNat(1));
  return w;
}

void RunWord::append(char letter, const ExtendedNat& count) {
  if (count.is_zero()) return;
  check_letter(letter);
  if (!runs_.empty() && runs_.back().letter == letter)
    runs_.back().count += count;
  else
    runs_.push_back(Run{letter, count});
}

void RunWord::append(const RunWord& tail) {
  for (const Run& r : tail.runs_) append(r.letter, r.count);
}

RunWord RunWord::concat(const RunWord& tail) const {
  RunWord w = *this;
  w.append(tail);
  return w;
}

ExtendedNat RunWord::length() const {
  ExtendedNat n;
  for (const Run& r : runs_) n += r.count;
  return n;
}

ExtendedNat RunWord::x_count() const {
  ExtendedNat n;
  for (const Run& r : runs_)
    if (r.letter == 'x') n += r.count;
  return n;
}

std::uint64_t RunWord::x_count_u64() const { return x_count().to_u64(); }

bool RunWord::pure(char letter) const {
  return runs_.size() == 1 && runs_[0].letter == letter;
}

bool RunWord::has_letter(char letter) const {
  for (const Run& r : runs_)
    if (r.letter == letter) return true;
  return false;
}

ExtendedNat RunWord::max_run(char letter) const {
  ExtendedNat best;
  for (const Run& r : runs_)
    if (r.letter == letter && best < r.count) best = r.count;
  return best;
}

std::string RunWord::str(char sep) const {
  if (runs_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out += sep;
    const Run& r = runs_[i];
    out += r.letter;
    if (!(r.count == ExtendedNat(1))) {
      std::string e = r.count.str();
      out += '^';
      if (e.find('+') != std::string::npos)
        out += '(' + e + ')';
      else
        out += e;
    }
  }
  return out;
}

std::string RunWord::letters(std::uint64_t cap) const {
  ExtendedNat n = length();
  if (!n.fits_u64() || n.to_u64() > cap)
    throw BudgetError("word of length " + n.str() +
                      " exceeds the materialization cap");
  std::string out;
  out.reserve(n.to_u64());
  for (const Run& r : runs_)
    out.append(static_cast<std::size_t>(r.count.to_u64()), r.letter);
  return out;
}

std::strong_ordering RunWord::operator<=>(const RunWord& o) const {
  std::size_t n = std::min(runs_.size(), o.runs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Run& a = runs_[i];
    const Run& b = o.runs_[i];
    if (a.letter != b.letter) return a.letter <=> b.letter;
    if (a.count != b.count) {
      // The side with the shorter run diverges first: at that position it
      // shows its next run's letter (or ends), the other side continues
      // with the current letter.
      bool mine = a.count < b.count;
      const RunWord& shorter = mine ? *this : o;
      if (i + 1 == shorter.runs_.size())
        return mine ? std::strong_ordering::less
                    : std::strong_ordering::greater;
      char next = shorter.runs_[i + 1].letter;
      return mine ? (next <=> a.letter) : (a.letter <=> next);
    }
  }
  return runs_.size() <=> o.runs_.size();
}

std::size_t RunWord::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const Run& r : runs_) {
    h = (h ^ static_cast<std::size_t>(r.letter)) * 1099511628211ull;
    h = (h ^ r.count.hash()) * 1099511628211ull;
  }
  return h;
}

namespace {

struct WordParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail() {
    throw std::invalid_argument("cannot parse word '" + s + "'");
  }

  bool at_sep() { return pos < s.size() && (s[pos] == ' ' || s[pos] == '*'); }

  ExtendedNat exponent() {
    if (pos < s.size() && s[pos] == '(') {
      std::size_t depth = 1, start = ++pos;
      while (pos < s.size() && depth) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
      }
      if (depth) fail();
      return ExtendedNat::parse(s.substr(start, pos - 1 - start));
    }
    std::size_t start = pos;
    while (pos < s.size() && !at_sep()) ++pos;
    return ExtendedNat::parse(s.substr(start, pos - start));
  }
};

} // namespace

RunWord RunWord::parse(const std::string& text) {
  WordParser p{text};
  RunWord w;
  bool saw_identity = false, saw_letter = false;
  while (p.pos < text.size()) {
    if (p.at_sep()) {
      ++p.pos;
      continue;
    }
    char c = text[p.pos];
    if (c == 'e') {
      ++p.pos;
      saw_identity = true;
      continue;
    }
    check_letter(c);
    ++p.pos;
    saw_letter = true;
    if (p.pos < text.size() && text[p.pos] == '^') {
      ++p.pos;
      ExtendedNat e = p.exponent();
      if (e.is_zero())
        throw std::invalid_argument("zero exponent in word '" + text + "'");
      w.append(c, e);
    } else {
      w.append(c, ExtendedNat(1));
    }
  }
  if (!saw_identity && !saw_letter) p.fail();
  return w;
}

} // namespace gforge
