#include "gforge/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "gforge/errors.hpp"
#include "gforge/linalg.hpp"

namespace gforge {

namespace {

void require_nonzero(const AlgebraElement& z, const char* who) {
  if (z.is_zero())
    throw std::invalid_argument(std::string(who) + " must be nonzero");
}

bool is_letter_frame(const std::vector<AlgebraElement>& frame) {
  if (frame.size() != 3) return false;
  bool has[3] = {false, false, false};
  for (const auto& e : frame) {
    const std::string* w = e.single_word();
    if (!w) return false;
    if (*w == "")
      has[0] = true;
    else if (*w == "x")
      has[1] = true;
    else if (*w == "y")
      has[2] = true;
    else
      return false;
  }
  return has[0] && has[1] && has[2];
}

// Counts distinct allowed words that contain the middle word with at most
// `margin` letters on each side. Walks the right-extension tree of allowed
// words, which covers everything because the shipped universes are closed
// under subwords.
std::uint64_t count_sandwich_words(const WordUniverse& uni,
                                   const std::string& mid, std::size_t margin,
                                   const SpanBudgets& budgets) {
  std::size_t max_len = 2 * margin + mid.size();
  std::uint64_t count = 0;
  std::size_t visited = 0;
  std::string cur;
  std::function<void()> rec = [&]() {
    if (++visited > budgets.max_enum)
      throw BudgetError("word walk exceeds the enumeration budget");
    if (mid.empty()) {
      if (cur.size() <= 2 * margin) ++count;
    } else if (cur.size() >= mid.size()) {
      for (std::size_t p = 0; (p = cur.find(mid, p)) != std::string::npos;
           ++p) {
        if (p <= margin && cur.size() - p - mid.size() <= margin) {
          ++count;
          break;
        }
      }
    }
    if (cur.size() == max_len) return;
    for (char c : {'x', 'y'}) {
      cur.push_back(c);
      if (uni.allows(cur)) rec();
      cur.pop_back();
    }
  };
  rec();
  return count;
}

// dim span{a z b : a in V^l, b in V^r} by exact row reduction; the letter
// frame with a one-term z reduces to counting words.
std::uint64_t sandwich_dim(const Algebra& alg, const AlgebraElement& z,
                           std::uint32_t level,
                           const std::vector<AlgebraElement>& frame,
                           const SpanBudgets& budgets) {
  if (is_letter_frame(frame)) {
    if (const std::string* zw = z.single_word())
      return count_sandwich_words(alg.universe(), *zw, level, budgets);
  }
  std::vector<AlgebraElement> basis = span_basis(alg, frame, level, budgets);
  RowBasis<std::string, DegLex> rb(alg.field());
  std::size_t products = 0;
  for (const AlgebraElement& a : basis) {
    AlgebraElement az = alg.multiply(a, z);
    if (az.is_zero()) continue;
    for (const AlgebraElement& b : basis) {
      if (++products > budgets.max_products)
        throw BudgetError("sandwich products exceed the budget");
      AlgebraElement v = alg.multiply(az, b);
      if (v.is_zero()) continue;
      if (rb.dim() >= budgets.max_dim)
        throw BudgetError("sandwich dimension exceeds the budget");
      rb.insert(v.terms());
    }
  }
  return rb.dim();
}

} // namespace

AnnihilatorReport annihilator_search(const Algebra& alg,
                                     const AlgebraElement& z, std::uint32_t m,
                                     std::uint32_t n_max,
                                     const std::vector<AlgebraElement>& frame,
                                     const SpanBudgets& budgets) {
  require_nonzero(z, "z");
  std::vector<AlgebraElement> right;
  {
    RowBasis<std::string, DegLex> xb(alg.field());
    for (const AlgebraElement& b : span_basis(alg, frame, m, budgets)) {
      AlgebraElement v = alg.multiply(b, z);
      if (v.is_zero()) continue;
      if (!xb.insert(v.terms()))
        right.push_back(alg.from_terms(xb.rows().back()));
    }
  }
  AnnihilatorReport rep;
  rep.dim_vmz = right.size();

  SpanLevels lv = span_levels(alg, frame, n_max, budgets);
  using TupleKey = std::pair<std::uint32_t, std::string>;
  struct TupleCmp {
    bool operator()(const TupleKey& a, const TupleKey& b) const {
      if (a.first != b.first) return a.first < b.first;
      return DegLex()(a.second, b.second);
    }
  };
  RowBasis<TupleKey, TupleCmp> fb(alg.field());
  std::optional<AlgebraElement> found;
  std::size_t products = 0;
  // Insert-call indices track element indices, so the identity goes in first.
  auto push = [&](std::size_t i) {
    std::map<TupleKey, Scalar, TupleCmp> row;
    for (std::uint32_t j = 0; j < right.size(); ++j) {
      if (++products > budgets.max_products)
        throw BudgetError("annihilator products exceed the budget");
      AlgebraElement prod = alg.multiply(lv.elements[i], right[j]);
      for (const auto& [w, c] : prod.terms()) row[{j, w}] = c;
    }
    auto dep = fb.insert(std::move(row));
    if (dep && !found) {
      AlgebraElement ker = lv.elements[i];
      for (const auto& [idx, c] : *dep)
        ker = alg.sub(ker, alg.scale(c, lv.elements[idx]));
      found = std::move(ker);
    }
  };
  push(0);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    std::size_t to = lv.level_end[n];
    for (std::size_t i = lv.level_end[n - 1]; i < to; ++i) push(i);
    if (found) {
      rep.element = found;
      rep.n = n;
      rep.dim_vn = to;
      rep.dim_image = fb.dim();
      rep.dim_kernel = to - fb.dim();
      return rep;
    }
  }
  rep.n = n_max;
  rep.dim_vn = lv.level_end[n_max];
  rep.dim_image = fb.dim();
  rep.dim_kernel = rep.dim_vn - rep.dim_image;
  return rep;
}

std::uint64_t two_sided_growth(const Algebra& alg, const AlgebraElement& z,
                               std::uint32_t n,
                               const std::vector<AlgebraElement>& frame,
                               const SpanBudgets& budgets) {
  require_nonzero(z, "z");
  return sandwich_dim(alg, z, n, frame, budgets);
}

std::optional<ReductionRelation> reduction_search(
    const Algebra& alg, const AlgebraElement& z, std::uint32_t bound,
    const std::vector<AlgebraElement>& frame, const SpanBudgets& budgets) {
  require_nonzero(z, "z");
  SpanLevels lv = span_levels(alg, frame, bound, budgets);
  RowBasis<std::string, DegLex> U(alg.field());
  // tag per insert call: (i, j, left element, right element)
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>>
      tags;
  std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> cache;
  std::size_t products = 0;
  auto product = [&](std::size_t ai, std::size_t bi) -> const AlgebraElement& {
    auto it = cache.find({ai, bi});
    if (it != cache.end()) return it->second;
    if (++products > budgets.max_products)
      throw BudgetError("reduction products exceed the budget");
    AlgebraElement v =
        alg.multiply(alg.multiply(lv.elements[ai], z), lv.elements[bi]);
    return cache.emplace(std::pair{ai, bi}, std::move(v)).first->second;
  };

  for (std::uint32_t s = 0; s <= bound; ++s) {
    for (std::uint32_t m = 0; m <= s; ++m) {
      std::uint32_t p = s - m;
      std::vector<ReductionRow> rows;
      bool contained = true;
      for (std::size_t ai = 0; ai < lv.level_end[m] && contained; ++ai) {
        for (std::size_t bi = 0; bi < lv.level_end[p] && contained; ++bi) {
          const AlgebraElement& v = product(ai, bi);
          if (v.is_zero()) continue;
          auto dep = U.reduce(v.terms());
          if (!dep) {
            contained = false;
            break;
          }
          ReductionRow row;
          row.left = alg.str(lv.elements[ai]);
          row.right = alg.str(lv.elements[bi]);
          for (const auto& [idx, c] : *dep) {
            const auto& [ti, tj, tai, tbi] = tags[idx];
            row.combination.push_back({ti, tj, alg.str(lv.elements[tai]),
                                       alg.str(lv.elements[tbi]), c});
          }
          rows.push_back(std::move(row));
        }
      }
      if (contained) {
        ReductionRelation rel;
        rel.m = m;
        rel.p = p;
        rel.rows = std::move(rows);
        return rel;
      }
    }
    // no pair at this total degree reduces: its vectors join the span
    for (std::uint32_t m = 0; m <= s; ++m) {
      std::uint32_t p = s - m;
      for (std::size_t ai = 0; ai < lv.level_end[m]; ++ai) {
        for (std::size_t bi = 0; bi < lv.level_end[p]; ++bi) {
          const AlgebraElement& v = product(ai, bi);
          if (v.is_zero()) continue;
          if (U.dim() >= budgets.max_dim)
            throw BudgetError("reduction span exceeds the budget");
          U.insert(v.terms());
          tags.emplace_back(m, p, ai, bi);
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_reduction(const Algebra& alg, const AlgebraElement& z,
                      const ReductionRelation& rel) {
  for (const ReductionRow& row : rel.rows) {
    AlgebraElement lhs = alg.multiply(
        alg.multiply(alg.parse(row.left), z), alg.parse(row.right));
    AlgebraElement rhs = alg.zero();
    for (const ReductionTerm& t : row.combination) {
      bool smaller_sum = t.i + t.j < rel.m + rel.p;
      bool same_sum_smaller = t.i + t.j == rel.m + rel.p && t.i < rel.m;
      if (!smaller_sum && !same_sum_smaller) return false;
      AlgebraElement v = alg.multiply(
          alg.multiply(alg.parse(t.left), z), alg.parse(t.right));
      rhs = alg.add(rhs, alg.scale(t.coeff, v));
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::uint64_t ideal_power_growth(const Algebra& alg, const AlgebraElement& u,
                                 std::uint32_t d, std::uint32_t n,
                                 const std::vector<AlgebraElement>& frame,
                                 const SpanBudgets& budgets,
                                 std::uint32_t power_bound) {
  require_nonzero(u, "u");
  if (d == 0) throw std::invalid_argument("d must be positive");
  AlgebraElement zn = n == 0 ? alg.one() : u;
  AlgebraElement w = u;
  std::uint32_t kmax = std::max(power_bound, n);
  for (std::uint32_t k = 2; k <= kmax; ++k) {
    w = alg.multiply(w, u);
    if (w.is_zero())
      throw NilpotentInputError("u^" + std::to_string(k) + " vanishes");
    if (w.term_count() > budgets.max_dim)
      throw BudgetError("powers of u exceed the budget");
    if (k == n) zn = w;
  }
  return sandwich_dim(alg, zn, d * n, frame, budgets);
}

std::optional<std::uint32_t> nilpotency_index(
    const Algebra& alg, const AlgebraElement& u, std::uint32_t d,
    std::uint32_t k_max, const std::vector<AlgebraElement>& frame,
    const SpanBudgets& budgets) {
  require_nonzero(u, "u");
  std::vector<AlgebraElement> gens;
  {
    RowBasis<std::string, DegLex> tb(alg.field());
    for (const AlgebraElement& b : span_basis(alg, frame, d, budgets)) {
      AlgebraElement v = alg.multiply(b, u);
      if (v.is_zero()) continue;
      if (!tb.insert(v.terms()))
        gens.push_back(alg.from_terms(tb.rows().back()));
    }
  }
  if (gens.empty()) return 1;
  if (k_max == 0) return std::nullopt;
  std::vector<AlgebraElement> cur = gens;
  std::size_t products = 0;
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    RowBasis<std::string, DegLex> nb(alg.field());
    std::vector<AlgebraElement> next;
    for (const AlgebraElement& s : cur) {
      for (const AlgebraElement& t : gens) {
        if (++products > budgets.max_products)
          throw BudgetError("nilpotency products exceed the budget");
        AlgebraElement v = alg.multiply(s, t);
        if (v.is_zero()) continue;
        if (nb.dim() >= budgets.max_dim)
          throw BudgetError("nilpotency span exceeds the budget");
        if (!nb.insert(v.terms()))
          next.push_back(alg.from_terms(nb.rows().back()));
      }
    }
    if (next.empty()) return k;
    cur = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::string> prime_witness_word(const VInfinity& engine,
                                              const std::string& w1,
                                              const std::string& w2,
                                              std::uint64_t len_bound) {
  RunWord a = RunWord::from_letters(w1);
  RunWord b = RunWord::from_letters(w2);
  auto w = engine.prime_witness(a, b, ExtendedNat(len_bound));
  if (!w) return std::nullopt;
  return w->letters();
}

} // namespace gforge
