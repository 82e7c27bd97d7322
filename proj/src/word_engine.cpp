#include "gforge/word_engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gforge {

namespace {

/// Running total that stays comparable after symbolic towers enter the sum.
struct TowerSum {
  BigInt exact = 0;
  std::map<ExtendedNat, std::uint64_t> towers;

  void add(const ExtendedNat& v) {
    if (v.is_exact())
      exact += v.exact();
    else
      ++towers[v];
  }

  std::optional<int> compare(const ExtendedNat& rhs) const {
    auto sgn = [](std::strong_ordering c) {
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    };
    if (towers.empty()) return sgn(ExtendedNat(exact) <=> rhs);
    const ExtendedNat& big = towers.rbegin()->first;
    bool single =
        towers.size() == 1 && towers.rbegin()->second == 1 && exact == 0;
    if (single) return sgn(big <=> rhs);
    if (!(big < rhs)) return 1;
    if (big < ExtendedNat(exact)) return std::nullopt;
    std::uint64_t terms = exact > 0 ? 1 : 0;
    for (const auto& [t, mult] : towers) terms += mult;
    ExtendedNat lg = big.log2_floor();
    if (!lg.is_exact()) return std::nullopt;
    std::uint64_t extra = terms > 1 ? std::bit_width(terms - 1) : 0;
    ExtendedNat ub = ExtendedNat::two_pow(ExtendedNat(lg.exact() + extra));
    if (ub < rhs) return -1;
    return std::nullopt;
  }
};

bool rle_contains(const std::vector<Run>& big, const std::vector<Run>& w) {
  if (w.empty()) return true;
  if (w.size() == 1) {
    for (const Run& r : big)
      if (r.letter == w[0].letter && !(r.count < w[0].count)) return true;
    return false;
  }
  if (w.size() > big.size()) return false;
  for (std::size_t j = 0; j + w.size() <= big.size(); ++j) {
    if (big[j].letter != w[0].letter || big[j].count < w[0].count) continue;
    bool mid = true;
    for (std::size_t t = 1; t + 1 < w.size(); ++t)
      if (!(big[j + t] == w[t])) {
        mid = false;
        break;
      }
    if (!mid) continue;
    const Run& last = big[j + w.size() - 1];
    if (last.letter == w.back().letter && !(last.count < w.back().count))
      return true;
  }
  return false;
}

} // namespace

VInfinity::VInfinity(RunSequenceSpec spec, WordBudgets budgets)
    : spec_(std::move(spec)), budgets_(budgets) {}

ExtendedNat VInfinity::word_length(std::uint32_t k) const {
  if (k == 0) throw std::invalid_argument("levels are 1-based");
  ExtendedNat len(1);
  for (std::uint32_t m = 1; m < k; ++m) {
    len = len.doubled();
    len += spec_.run(m);
  }
  return len;
}

RunWord VInfinity::level_word(std::uint32_t k) const {
  if (k == 0) throw std::invalid_argument("levels are 1-based");
  if (k > 62 || ((1ull << k) - 1) > budgets_.max_prefix_runs)
    throw BudgetError("level word exceeds the run budget");
  RunWord w = RunWord::letter('x');
  for (std::uint32_t m = 1; m < k; ++m) {
    RunWord next = w;
    next.append('y', spec_.run(m));
    next.append(w);
    w = std::move(next);
  }
  return w;
}

RunWord VInfinity::prefix_with_x(std::uint64_t c) const {
  if (c == 0) throw std::invalid_argument("prefix needs at least one x");
  if (2 * c - 1 > budgets_.max_prefix_runs)
    throw BudgetError("prefix exceeds the run budget");
  RunWord w = RunWord::letter('x');
  for (std::uint64_t i = 1; i < c; ++i) {
    w.append('y', gap(i));
    w.append('x', ExtendedNat(1));
  }
  return w;
}

std::uint32_t VInfinity::ruler(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("gap indices are 1-based");
  return static_cast<std::uint32_t>(std::countr_zero(i)) + 1;
}

ExtendedNat VInfinity::gap(std::uint64_t i) const { return spec_.run(ruler(i)); }

std::uint32_t VInfinity::top_level() const {
  if (!spec_.unbounded())
    return static_cast<std::uint32_t>(spec_.list().size()) + 1;
  return budgets_.max_level;
}

VInfinity::Level& VInfinity::level(std::uint32_t k) const {
  auto it = levels_.find(k);
  if (it != levels_.end()) return it->second;
  ExtendedNat len;
  try {
    len = word_length(k);
  } catch (const TowerOverflow&) {
    throw BudgetError("level word exceeds the materialization budget");
  }
  if (!len.fits_u64() || len.to_u64() > budgets_.max_chars)
    throw BudgetError("level word exceeds the materialization budget");
  std::string s = "x";
  s.reserve(static_cast<std::size_t>(len.to_u64()));
  for (std::uint32_t m = 1; m < k; ++m) {
    std::string head = s;
    s.append(static_cast<std::size_t>(spec_.run(m).to_u64()), 'y');
    s.append(head);
  }
  Level lv;
  lv.letters = std::move(s);
  lv.sam = SuffixAutomaton(lv.letters);
  return levels_.emplace(k, std::move(lv)).first->second;
}

const std::string& VInfinity::level_letters(std::uint32_t k) const {
  return level(k).letters;
}

const std::vector<std::uint64_t>& VInfinity::counts(std::uint32_t k,
                                                    std::uint64_t lmax) const {
  Level& lv = level(k);
  if (lv.counts_lmax < lmax || lv.counts.empty()) {
    lv.counts = lv.sam.counts_by_length(lmax);
    lv.counts_lmax = lmax;
  }
  return lv.counts;
}

bool VInfinity::stabilization_check(std::uint64_t len, std::uint32_t k) const {
  if (len == 0) throw std::invalid_argument("factor lengths are positive");
  if (k == 0) throw std::invalid_argument("levels are 1-based");
  if (len > budgets_.max_len)
    throw BudgetError("factor length exceeds the enumeration budget");
  // A level too short to contain any factor of this length cannot have a
  // settled factor set, even though both counts below would read zero.
  try {
    if (ExtendedNat(len) > word_length(k)) return false;
  } catch (const TowerOverflow&) {
  }
  return counts(k, len)[len] == counts(k + 1, len)[len];
}

std::uint32_t VInfinity::stable_level(std::uint64_t len) const {
  if (len == 0) throw std::invalid_argument("factor lengths are positive");
  for (std::uint32_t k = 1; k <= budgets_.max_level; ++k) {
    if (stabilization_check(len, k)) return k;
  }
  throw BudgetError("stabilization not observed within the level cap");
}

std::uint32_t VInfinity::closed_form_level(const ExtendedNat& len) const {
  if (len < ExtendedNat(2)) return 2;
  for (std::uint32_t k = 2; k <= budgets_.max_level; ++k) {
    if (spec_.run(k - 1) < len) continue;
    bool long_enough = false;
    try {
      ExtendedNat l = word_length(k - 1);
      l += ExtendedNat(1);
      long_enough = !(l < len);
    } catch (const TowerOverflow&) {
      // the level word dwarfs every representable exact; its dominant run
      // is a usable lower bound
      long_enough = !(spec_.run(k - 2) < len);
    }
    if (long_enough) return k;
  }
  throw BudgetError("no stabilization level within the level cap");
}

std::uint64_t VInfinity::factor_complexity(std::uint64_t len) const {
  if (len == 0) return 1;
  if (len > budgets_.max_len)
    throw BudgetError("factor length exceeds the enumeration budget");
  std::uint32_t k = spec_.unbounded() ? closed_form_level(ExtendedNat(len))
                                      : top_level();
  return counts(k, len)[len];
}

std::vector<std::uint64_t> VInfinity::complexity_table(std::uint64_t lmax) const {
  if (lmax == 0 || lmax > budgets_.max_len)
    throw BudgetError("length range exceeds the enumeration budget");
  std::uint32_t k = spec_.unbounded() ? closed_form_level(ExtendedNat(lmax))
                                      : top_level();
  return counts(k, lmax);
}

bool VInfinity::is_factor(const RunWord& w) const {
  if (w.empty()) return true;
  if (ExtendedNat(1) < w.max_run('x')) return false;
  if (w.pure('y')) {
    if (!spec_.unbounded())
      return !(spec_.run(spec_.levels()) < w.runs()[0].count);
    return true;
  }
  if (!spec_.unbounded()) {
    RunWord top = level_word(top_level());
    return rle_contains(top.runs(), w.runs());
  }
  try {
    ExtendedNat len = w.length();
    if (len.fits_u64() && len.to_u64() <= budgets_.max_len) {
      std::uint32_t k = closed_form_level(len);
      return level(k).sam.contains(w.letters());
    }
  } catch (const TowerOverflow&) {
  } catch (const BudgetError&) {
  }
  return structural_is_factor(w);
}

bool VInfinity::is_factor_letters(std::string_view w) const {
  return is_factor(RunWord::from_letters(w));
}

bool VInfinity::structural_is_factor(const RunWord& w) const {
  if (w.empty()) return true;
  if (ExtendedNat(1) < w.max_run('x')) return false;
  if (w.pure('y')) return true;
  const auto& rs = w.runs();
  ExtendedNat a, b;
  std::size_t lo = 0, hi = rs.size();
  if (rs.front().letter == 'y') {
    a = rs.front().count;
    ++lo;
  }
  if (hi > lo && rs[hi - 1].letter == 'y') {
    b = rs[hi - 1].count;
    --hi;
  }
  std::uint64_t r = 0;
  std::vector<std::uint64_t> gaps;
  for (std::size_t t = lo; t < hi; ++t) {
    if (rs[t].letter == 'x') {
      ++r;
      continue;
    }
    auto lv = spec_.level_of(rs[t].count);
    if (!lv) return false;
    if (*lv > 4096)
      throw BudgetError("interior run level beyond the structural cap");
    gaps.push_back(*lv);
  }
  // Index i of the first x: the gap after the (i+t)-th x has level gaps[t],
  // and sigma(n) == p exactly when n == 2^(p-1) (mod 2^p).
  BigInt c = 0;
  std::uint64_t m = 0;
  for (std::size_t t = 0; t < gaps.size(); ++t) {
    std::uint64_t pi = gaps[t];
    BigInt mod = BigInt(1) << pi;
    BigInt c2 = ((BigInt(1) << (pi - 1)) - BigInt(t)) % mod;
    if (c2 < 0) c2 += mod;
    if (pi <= m) {
      if ((c - c2) % mod != 0) return false;
    } else {
      if (m > 0 && (c2 - c) % (BigInt(1) << m) != 0) return false;
      c = c2;
      m = pi;
    }
  }
  BigInt mod = BigInt(1) << m;
  BigInt left = ((c - 1) % mod + mod) % mod;
  BigInt right = ((c + BigInt(r) - 1) % mod + mod) % mod;
  auto fits = [&](const ExtendedNat& need, const BigInt& residue) {
    std::uint64_t s = boost::multiprecision::lsb(residue) + 1;
    return !(spec_.run(s) < need);
  };
  bool lfree = left == 0, rfree = right == 0;
  bool lneed = !a.is_zero(), rneed = !b.is_zero();
  if (!lfree && !rfree)
    return (!lneed || fits(a, left)) && (!rneed || fits(b, right));
  if (lfree != rfree) {
    if (lfree) return !rneed || fits(b, right);
    return !lneed || fits(a, left);
  }
  if (!lneed || !rneed) return true;
  // both neighbors sit on the 2^m grid; their levels are m+1 plus the
  // 2-adic depth of consecutive grid points delta apart, and only one side
  // can be pushed past m+1+v2(delta)
  std::uint64_t delta = r >> m;
  ExtendedNat q = spec_.run(m + 1 + std::countr_zero(delta));
  return !(q < a) || !(q < b);
}

std::uint64_t VInfinity::max_x_occurrences(const ExtendedNat& len) const {
  if (len.is_zero()) return 0;
  if (len.fits_u64() && len.to_u64() <= budgets_.max_len) {
    try {
      std::uint64_t l = len.to_u64();
      std::uint32_t k =
          spec_.unbounded() ? closed_form_level(len) : top_level();
      Level& lv = level(k);
      const std::string& s = lv.letters;
      if (lv.xprefix.empty()) {
        lv.xprefix.resize(s.size() + 1, 0);
        for (std::size_t i = 0; i < s.size(); ++i)
          lv.xprefix[i + 1] =
              lv.xprefix[i] + static_cast<std::uint32_t>(s[i] == 'x');
      }
      if (l > s.size()) return 0;
      std::uint32_t best = 0;
      for (std::size_t i = 0; i + l <= s.size(); ++i)
        best = std::max(best, lv.xprefix[i + l] - lv.xprefix[i]);
      return best;
    } catch (const BudgetError&) {
      if (!spec_.unbounded()) throw;
    }
  }
  if (!spec_.unbounded())
    throw BudgetError("length exceeds the explicit word");
  // largest c with |x y^{g_1} x ... y^{g_{c-1}} x| <= len; a window of
  // consecutive x slots never beats the prefix window of the same x count
  TowerSum sum;
  sum.add(ExtendedNat(1));
  std::uint64_t c = 1;
  while (true) {
    if (c > (1u << 22)) throw BudgetError("x-count exceeds the search cap");
    sum.add(gap(c));
    sum.add(ExtendedNat(1));
    auto rc = sum.compare(len);
    if (!rc)
      throw TowerOverflow("prefix length not comparable at this scale");
    if (*rc > 0) return c;
    ++c;
  }
}

std::optional<RunWord> VInfinity::prime_witness(const RunWord& w1,
                                                const RunWord& w2,
                                                const ExtendedNat& bound) const {
  if (!is_factor(w1) || !is_factor(w2)) return std::nullopt;
  if (is_factor(w1.concat(w2))) return RunWord();
  if (bound.is_zero()) return std::nullopt;
  bool scannable = false;
  std::uint64_t window = 0;
  try {
    ExtendedNat total = w1.length();
    total += w2.length();
    total += bound;
    scannable = total.fits_u64() && total.to_u64() <= budgets_.max_len;
    if (scannable) window = total.to_u64();
  } catch (const TowerOverflow&) {
    scannable = false;
  }
  if (scannable) {
    try {
      return scan_witness(w1, w2, window);
    } catch (const BudgetError&) {
      if (!spec_.unbounded()) throw;
    }
  }
  if (!spec_.unbounded())
    throw BudgetError("witness scan exceeds the explicit word budgets");
  return structural_witness(w1, w2, bound);
}

std::optional<RunWord> VInfinity::scan_witness(const RunWord& w1,
                                               const RunWord& w2,
                                               std::uint64_t window) const {
  std::uint32_t k = spec_.unbounded() ? closed_form_level(ExtendedNat(window))
                                      : top_level();
  const std::string& text = level(k).letters;
  std::string s1 = w1.letters(), s2 = w2.letters();
  std::uint64_t bound = window - s1.size() - s2.size();
  std::vector<std::uint64_t> occ2;
  for (auto p = text.find(s2); p != std::string::npos;
       p = text.find(s2, p + 1))
    occ2.push_back(p);
  std::optional<std::string> best;
  for (auto p = text.find(s1); p != std::string::npos;
       p = text.find(s1, p + 1)) {
    std::uint64_t e = p + s1.size();
    auto it = std::lower_bound(occ2.begin(), occ2.end(), e);
    if (it == occ2.end() || *it - e > bound) continue;
    std::string cand = text.substr(e, *it - e);
    if (!best || cand.size() < best->size() ||
        (cand.size() == best->size() && cand < *best))
      best = std::move(cand);
  }
  if (!best) return std::nullopt;
  return RunWord::from_letters(*best);
}

std::optional<RunWord> VInfinity::structural_witness(
    const RunWord& w1, const RunWord& w2, const ExtendedNat& bound) const {
  const std::uint64_t eta = 20;
  const std::uint64_t scap = 10;
  bool ax1 = w1.has_letter('x'), ax2 = w2.has_letter('x');
  ExtendedNat b1, a2;
  if (!w1.runs().empty() && w1.runs().back().letter == 'y')
    b1 = w1.runs().back().count;
  if (!w2.runs().empty() && w2.runs().front().letter == 'y')
    a2 = w2.runs().front().count;

  std::uint64_t steps = 0;
  std::optional<RunWord> best;
  ExtendedNat best_len;
  auto ticket = [&]() {
    if (++steps > budgets_.witness_candidates)
      throw BudgetError("witness candidate budget exceeded");
  };
  auto consider = [&](const RunWord& w) {
    if (w.empty()) return;
    ExtendedNat len;
    try {
      len = w.length();
    } catch (const TowerOverflow&) {
      return;
    }
    if (bound < len) return;
    if (best && (best_len < len || (best_len == len && !(w < *best)))) return;
    ticket();
    if (!structural_is_factor(w1.concat(w).concat(w2))) return;
    best = w;
    best_len = len;
  };

  auto anchored_opts = [&](const ExtendedNat& consumed) {
    std::vector<ExtendedNat> opts;
    for (std::uint64_t l = 1; l <= eta; ++l) {
      try {
        opts.push_back(spec_.run(l).sub(consumed));
      } catch (const std::exception&) {
      }
    }
    return opts;
  };
  auto boundary_opts = [&](const ExtendedNat& consumed) {
    std::vector<ExtendedNat> opts;
    for (std::uint64_t v = 0; v <= 6; ++v) opts.push_back(ExtendedNat(v));
    for (const ExtendedNat& o : anchored_opts(consumed)) opts.push_back(o);
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    return opts;
  };

  // bridge with no x: one merged run between the anchors
  {
    ExtendedNat consumed;
    bool representable = true;
    try {
      consumed = b1;
      consumed += a2;
    } catch (const TowerOverflow&) {
      representable = false;
    }
    if (representable) {
      auto opts = (ax1 && ax2) ? anchored_opts(consumed)
                               : boundary_opts(consumed);
      for (const ExtendedNat& alpha : opts) {
        ticket();
        consider(RunWord::run('y', alpha));
      }
    }
  }

  // bridges with s isolated x letters and full runs between them
  for (std::uint64_t s = 1; s <= scap; ++s) {
    std::vector<std::vector<ExtendedNat>> slots(s + 1);
    slots[0] = ax1 ? anchored_opts(b1) : boundary_opts(b1);
    slots[s] = ax2 ? anchored_opts(a2) : boundary_opts(a2);
    for (std::uint64_t i = 1; i < s; ++i) slots[i] = anchored_opts(ExtendedNat());
    std::vector<ExtendedNat> chosen(s + 1);
    auto dfs = [&](auto&& self, std::uint64_t slot,
                   const ExtendedNat& acc) -> void {
      if (slot > s) {
        RunWord w = RunWord::run('y', chosen[0]);
        for (std::uint64_t i = 1; i <= s; ++i) {
          w.append('x', ExtendedNat(1));
          w.append('y', chosen[i]);
        }
        consider(w);
        return;
      }
      for (const ExtendedNat& alpha : slots[slot]) {
        ticket();
        ExtendedNat next;
        try {
          next = acc;
          next += alpha;
        } catch (const TowerOverflow&) {
          break;
        }
        if (bound < next) break;
        if (best && best_len < next) break;
        chosen[slot] = alpha;
        self(self, slot + 1, next);
      }
    };
    dfs(dfs, 0, ExtendedNat(s));
  }

  // the caps must not hide a candidate at least as short as the answer
  ExtendedNat lim = best ? best_len : bound;
  ExtendedNat consumed_max = b1 < a2 ? a2 : b1;
  bool capped = false;
  try {
    ExtendedNat reach = lim;
    reach += consumed_max;
    if (!(reach < spec_.run(eta + 1))) capped = true;
  } catch (const TowerOverflow&) {
    capped = true;
  }
  if (!capped) {
    // A bridge with more than scap x letters carries complete gap runs at
    // scap consecutive positions, and any s consecutive positions hold at
    // least floor(s / 2^(v+1)) runs of the (v+1)-th value (exactly one
    // integer in any 2^(v+1) consecutive ones has 2-adic valuation v).
    bool proven = false;
    try {
      ExtendedNat smin(scap + 1);
      for (std::uint64_t v = 0; (std::uint64_t(1) << (v + 1)) <= scap; ++v)
        for (std::uint64_t i = scap >> (v + 1); i > 0; --i)
          smin += spec_.run(v + 1);
      proven = lim < smin;
    } catch (const TowerOverflow&) {
      // The sum dwarfs every exact value.  It still bounds each single
      // term, and the x letters contribute strictly on top, so matching
      // any one summed term already proves lim below the sum.
      for (std::uint64_t v = 0;
           !proven && (std::uint64_t(1) << (v + 1)) <= scap; ++v)
        proven = !(spec_.run(v + 1) < lim);
    }
    if (!proven) capped = true;
  }
  if (capped)
    throw BudgetError("witness search capped before the bound");
  return best;
}

} // namespace gforge
