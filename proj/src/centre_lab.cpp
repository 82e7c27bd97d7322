#include "gforge/centre_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "gforge/errors.hpp"
#include "gforge/growth.hpp"

namespace gforge {

namespace {

struct GroupOrder {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return group_less(a, b);
  }
};

// The six x-carrying generator group parts, indexed as in b_generators().
std::vector<GroupElement> search_letters() {
  return {GroupElement::s(0),     GroupElement::s(0, -1),
          GroupElement::t(0),     GroupElement::t(0, -1),
          GroupElement::u(1),     GroupElement::u(-1)};
}

GInt abs_val(const GInt& v) { return v < 0 ? GInt(-v) : v; }

// Level-wise closure of {identity} under right multiplication by the eight
// generators, keeping every (word, group) pair seen. Returns the per-level
// cumulative pair counts; the final set lands in *out when requested.
std::vector<std::uint64_t> pair_levels(const GroupRing& ring,
                                       std::uint32_t n_max,
                                       const BBudgets& budgets,
                                       std::set<AGKey, AGKeyLess>* out) {
  std::vector<std::pair<RunWord, GroupElement>> gens;
  for (const auto& g : b_generators(ring)) {
    const AGKey* k = g.single_key();
    gens.emplace_back(k->word, k->g);
  }

  std::set<AGKey, AGKeyLess> seen;
  seen.insert(AGKey{});
  std::vector<AGKey> frontier{AGKey{}};
  std::vector<std::uint64_t> dims{1};
  std::uint64_t products = 0;

  for (std::uint32_t n = 1; n <= n_max; ++n) {
    std::vector<AGKey> next;
    for (const AGKey& key : frontier) {
      for (const auto& [gw, gg] : gens) {
        if (++products > budgets.max_products)
          throw BudgetError("pair expansion exceeds the product budget");
        RunWord w = key.word.concat(gw);
        if (!ring.allows(w)) continue;
        AGKey nk{std::move(w), multiply(key.g, gg)};
        if (seen.size() >= budgets.max_terms)
          throw BudgetError("pair expansion exceeds the term budget");
        if (seen.insert(nk).second) next.push_back(std::move(nk));
      }
    }
    dims.push_back(seen.size());
    frontier = std::move(next);
  }
  if (out) *out = std::move(seen);
  return dims;
}

// Forced y-run padding glue: a shortest word between w1 and w2 keeping the
// concatenation a factor, with a bound generous enough to always exist.
std::optional<RunWord> pad_between(const VInfinity& engine, const RunWord& w1,
                                   const RunWord& w2) {
  std::uint64_t xc = w1.x_count_u64() + w2.x_count_u64();
  std::uint32_t level = 1;
  while ((std::uint64_t(1) << level) < xc + 2) ++level;
  ExtendedNat bound;
  try {
    bound = engine.word_length(level + 2);
  } catch (const TowerOverflow&) {
    // The level-word length is a sum that only fails to materialize when a
    // run value is a symbolic tower; then that run value already dominates
    // the whole word (towers outgrow 2^k * previous value), so it is itself
    // a valid search bound.
    bound = engine.sequence().run(level + 2);
  }
  try {
    return engine.prime_witness(w1, w2, bound);
  } catch (const BudgetError&) {
    // Shortest-pad certification can refuse when run values are symbolic
    // towers, but glue only needs some verified pad.  Try pure runs first;
    // then walk w1's own occurrence forward.  The gap after the m-th x of
    // the infinite word is the run value at one plus the 2-adic valuation
    // of m, so each internal gap q_j after w1's k-th x forces the first-x
    // index into a congruence mod 2^j; merging them pins the occurrence
    // class, and extending from the least consistent end along the actual
    // gap sequence yields verifiable continuations into w2.
    for (std::uint64_t j = 1; j <= 2 * std::uint64_t(level) + 8; ++j) {
      RunWord pad = RunWord::run('y', engine.sequence().run(j));
      if (engine.is_factor(w1.concat(pad).concat(w2))) return pad;
    }
    std::uint64_t p = w1.x_count_u64();
    if (p == 0) return std::nullopt;
    std::uint64_t mod_bits = 0, res = 0;
    std::uint64_t k = 0;
    const auto& runs = w1.runs();
    for (std::size_t ri = 0; ri < runs.size(); ++ri) {
      if (runs[ri].letter == 'x') {
        k += runs[ri].count.to_u64();
        continue;
      }
      if (k == 0 || ri + 1 == runs.size()) continue;  // boundary y-run
      auto j = engine.sequence().level_of(runs[ri].count);
      if (!j || *j == 0 || *j >= 63) return std::nullopt;
      std::uint64_t m = *j;
      std::uint64_t mask = (std::uint64_t(1) << m) - 1;
      std::uint64_t r2 = ((std::uint64_t(1) << (m - 1)) - (k - 1)) & mask;
      if (m <= mod_bits) {
        if ((res & mask) != r2) return std::nullopt;
      } else {
        std::uint64_t old = (std::uint64_t(1) << mod_bits) - 1;
        if ((r2 & old) != (res & old)) return std::nullopt;
        res = r2;
        mod_bits = m;
      }
    }
    std::uint64_t mod_mask = (std::uint64_t(1) << mod_bits) - 1;
    std::uint64_t pe = (res + p - 1) & mod_mask;
    if (pe == 0) pe = mod_mask + 1;
    if (pe < p) pe += (p - pe + mod_mask) & ~mod_mask;
    RunWord pad;
    for (std::uint64_t r = pe + 1; r <= pe + 256; ++r) {
      std::uint64_t i = r - 1;
      std::uint64_t sigma = 1;
      while ((i & 1) == 0) { ++sigma; i >>= 1; }
      if (!pad.empty()) pad.append('x', ExtendedNat(1));
      pad.append('y', engine.sequence().run(sigma));
      if (engine.is_factor(w1.concat(pad).concat(w2))) return pad;
    }
    return std::nullopt;
  }
}

// Letter sequence (indices into search_letters) reaching g by conjugation
// and commutator routes:
//   s_n = u^n s_0 u^-n,  t_n = u^n t_0 u^-n,
//   z_n = s_n t_0 s_n^-1 t_0^-1  (so z_n^a uses t_0^a and t_0^-a).
// Emitting z-blocks, then t-blocks, then s-blocks, then the u-power keeps
// the normal form exact. Returns nullopt when the x cost exceeds c_max.
std::optional<std::vector<std::size_t>> direct_route(const GroupElement& g,
                                                     std::uint64_t c_max) {
  GInt cost = 0;
  for (const auto& [n, a] : g.z_part().entries())
    cost += 4 * abs_val(n) + 2 * abs_val(a) + 2;
  for (const auto& [n, b] : g.t_part().entries())
    cost += 2 * abs_val(n) + abs_val(b);
  for (const auto& [n, c] : g.s_part().entries())
    cost += 2 * abs_val(n) + abs_val(c);
  cost += abs_val(g.u_exp());
  if (cost > c_max) return std::nullopt;

  std::vector<std::size_t> seq;
  auto emit_u = [&](const GInt& k) {
    for (GInt i = 0; i < abs_val(k); ++i) seq.push_back(k > 0 ? 4 : 5);
  };
  auto emit_s0 = [&](const GInt& e) {
    for (GInt i = 0; i < abs_val(e); ++i) seq.push_back(e > 0 ? 0 : 1);
  };
  auto emit_t0 = [&](const GInt& e) {
    for (GInt i = 0; i < abs_val(e); ++i) seq.push_back(e > 0 ? 2 : 3);
  };
  for (const auto& [n, a] : g.z_part().entries()) {
    emit_u(n);
    emit_s0(1);
    emit_u(-n);
    emit_t0(a);
    emit_u(n);
    emit_s0(-1);
    emit_u(-n);
    emit_t0(-a);
  }
  for (const auto& [n, b] : g.t_part().entries()) {
    emit_u(n);
    emit_t0(b);
    emit_u(-n);
  }
  for (const auto& [n, c] : g.s_part().entries()) {
    emit_u(n);
    emit_s0(c);
    emit_u(-n);
  }
  emit_u(g.u_exp());
  return seq;
}

// Breadth-first search over products of the six x-carrying group letters,
// shortest first, letters tried in generator order. Abandons the search
// (returning nullopt) when the next level could exceed the node budget.
std::optional<std::vector<std::size_t>> bfs_route(const GroupElement& g,
                                                  std::uint64_t c_max,
                                                  const BBudgets& budgets) {
  const std::vector<GroupElement> letters = search_letters();
  struct Node {
    GroupElement g;
    std::size_t parent;
    std::size_t letter;
  };
  std::vector<Node> nodes{{GroupElement(), 0, 0}};
  std::set<GroupElement, GroupOrder> visited{GroupElement()};
  std::size_t lo = 0, hi = 1;

  auto chain = [&](std::size_t leaf, std::size_t last) {
    std::vector<std::size_t> seq{last};
    for (std::size_t i = leaf; i != 0; i = nodes[i].parent)
      seq.push_back(nodes[i].letter);
    return std::vector<std::size_t>(seq.rbegin(), seq.rend());
  };

  for (std::uint64_t depth = 1; depth <= c_max && lo < hi; ++depth) {
    if (nodes.size() + (hi - lo) * letters.size() > budgets.bfs_nodes)
      return std::nullopt;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t li = 0; li < letters.size(); ++li) {
        GroupElement ng = multiply(nodes[i].g, letters[li]);
        if (ng == g) return chain(i, li);
        if (visited.insert(ng).second) nodes.push_back({std::move(ng), i, li});
      }
    }
    lo = hi;
    hi = nodes.size();
  }
  return std::nullopt;
}

}  // namespace

std::vector<GroupRingElement> b_generators(const GroupRing& ring) {
  RunWord x = RunWord::letter('x');
  RunWord y = RunWord::letter('y');
  return {ring.from_term(x, GroupElement::s(0)),
          ring.from_term(x, GroupElement::s(0, -1)),
          ring.from_term(x, GroupElement::t(0)),
          ring.from_term(x, GroupElement::t(0, -1)),
          ring.from_term(x, GroupElement::u(1)),
          ring.from_term(x, GroupElement::u(-1)),
          ring.from_term(x, GroupElement()),
          ring.from_term(y, GroupElement())};
}

std::vector<GroupElement> group_frame() {
  return {GroupElement(),        GroupElement::s(0), GroupElement::s(0, -1),
          GroupElement::t(0),    GroupElement::t(0, -1),
          GroupElement::u(1),    GroupElement::u(-1)};
}

std::uint64_t b_dim_Vn(const GroupRing& ring, std::uint32_t n,
                       const BBudgets& budgets) {
  return pair_levels(ring, n, budgets, nullptr).back();
}

std::vector<std::uint64_t> b_dim_series(const GroupRing& ring,
                                        std::uint32_t n_max,
                                        const BBudgets& budgets) {
  return pair_levels(ring, n_max, budgets, nullptr);
}

BGrowthReport b_growth_report(const GroupRing& ring, std::uint32_t n_max,
                              double eps, const BBudgets& budgets) {
  BGrowthReport rep;
  rep.eps = eps;
  rep.dims = b_dim_series(ring, n_max, budgets);
  rep.window_lo = std::max<std::uint32_t>(1, n_max / 2);
  rep.window_hi = n_max;
  try {
    rep.slope = gk_estimate(rep.dims, rep.window_lo, rep.window_hi);
  } catch (const std::invalid_argument&) {
    rep.slope = 0.0;
  }
  rep.trend_ok = true;
  for (std::uint32_t n = rep.window_lo; n <= rep.window_hi; ++n) {
    double bound = std::pow(double(n), 2.0 + eps);
    if (double(rep.dims[n]) > bound) {
      rep.trend_ok = false;
      break;
    }
  }
  return rep;
}

std::optional<BExpression> express_in_B(const GroupRing& ring,
                                        const GroupElement& g,
                                        std::uint64_t c_max,
                                        const BBudgets& budgets) {
  if (g.is_identity()) {
    BExpression e;
    e.product = ring.one();
    return e;
  }
  std::optional<std::vector<std::size_t>> seq = bfs_route(g, c_max, budgets);
  if (!seq) seq = direct_route(g, c_max);
  if (!seq) return std::nullopt;

  std::vector<GroupRingElement> gens = b_generators(ring);
  BExpression e;
  e.gens = *seq;
  e.cost = seq->size();
  e.product = gens[(*seq)[0]];
  for (std::size_t i = 1; i < seq->size(); ++i) {
    if (ring.factor_mode()) {
      ExtendedNat gp = ring.engine().gap(i);
      e.paddings.push_back(gp);
      e.product = ring.multiply(e.product,
                                ring.from_term(RunWord::run('y', gp),
                                               GroupElement()));
    }
    e.product = ring.multiply(e.product, gens[(*seq)[i]]);
  }
  const AGKey* key = e.product.single_key();
  if (!key || !(key->g == g))
    throw std::logic_error("generator product failed to reproduce its target");
  return e;
}

GroupRingElement central_witness(const GroupRing& ring, const GInt& n,
                                 const BBudgets& budgets) {
  GInt cost = 4 * abs_val(n) + 4;
  if (cost > GInt(std::uint64_t(1) << 60))
    throw BudgetError("central witness index is out of range");
  std::uint64_t c_max =
      std::max<std::uint64_t>(8, cost.convert_to<std::uint64_t>());
  std::optional<BExpression> e =
      express_in_B(ring, GroupElement::z(n), c_max, budgets);
  if (!e) throw BudgetError("central witness index is out of range");

  // Two-sided module check: word elements slide past the witness without
  // touching its group part.
  const AGKey* key = e->product.single_key();
  std::vector<RunWord> samples{RunWord::letter('y')};
  if (ring.factor_mode())
    samples.push_back(ring.engine().level_word(2));
  else
    samples.push_back(RunWord::letter('x'));
  for (const RunWord& w : samples) {
    GroupRingElement r = ring.from_term(w, GroupElement());
    for (const GroupRingElement& side : {ring.multiply(r, e->product),
                                         ring.multiply(e->product, r)}) {
      if (side.is_zero()) continue;  // word product left the factor set
      const AGKey* sk = side.single_key();
      if (!sk || !(sk->g == key->g))
        throw std::logic_error("central witness group part failed to commute");
    }
  }
  return e->product;
}

bool independence_check(const GroupRing& ring, std::uint32_t degree,
                        const std::vector<GInt>& indices,
                        const BBudgets& budgets) {
  if (degree == 0) return true;
  std::vector<GInt> idx = indices;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty()) return true;

  std::vector<GroupRingElement> wit;
  for (const GInt& n : idx) wit.push_back(central_witness(ring, n, budgets));

  std::set<GroupElement, GroupOrder> parts;
  std::uint64_t products = 0;
  std::function<bool(std::size_t, std::uint32_t, const GroupRingElement&,
                     const GroupElement&)>
      rec = [&](std::size_t start, std::uint32_t left,
                const GroupRingElement& acc, const GroupElement& accg) {
        for (std::size_t i = start; i < idx.size(); ++i) {
          if (++products > budgets.max_products)
            throw BudgetError("independence products exceed the budget");
          GroupRingElement nxt = acc;
          if (ring.factor_mode()) {
            std::optional<RunWord> pad =
                pad_between(ring.engine(), acc.single_key()->word,
                            wit[i].single_key()->word);
            if (!pad) return false;
            if (!pad->empty())
              nxt = ring.multiply(nxt,
                                  ring.from_term(*pad, GroupElement()));
          }
          nxt = ring.multiply(nxt, wit[i]);
          const AGKey* key = nxt.single_key();
          if (!key) return false;
          GroupElement expect = multiply(accg, GroupElement::z(idx[i]));
          if (!(key->g == expect)) return false;
          if (!parts.insert(expect).second) return false;
          if (left > 1 && !rec(i, left - 1, nxt, expect)) return false;
        }
        return true;
      };
  return rec(0, degree, ring.one(), GroupElement());
}

std::optional<GroupRingElement> prime_witness_B(const GroupRing& ring,
                                                const GroupRingElement& b1,
                                                const GroupRingElement& b2,
                                                const ExtendedNat& len_bound,
                                                std::uint64_t c_max,
                                                const BBudgets& budgets) {
  if (b1.is_zero() || b2.is_zero())
    throw std::invalid_argument("prime witness needs nonzero operands");

  auto verified = [&](const GroupRingElement& c) {
    return !ring.multiply(ring.multiply(b1, c), b2).is_zero();
  };

  if (!ring.factor_mode()) {
    for (const GroupRingElement& c :
         {ring.one(), ring.from_term(RunWord::letter('y'), GroupElement()),
          ring.from_term(RunWord::letter('x'), GroupElement())})
      if (verified(c)) return c;
    return std::nullopt;
  }

  std::uint64_t products = 0;
  for (const auto& [k1, c1] : b1.terms()) {
    for (const auto& [k2, c2] : b2.terms()) {
      if (++products > budgets.max_products)
        throw BudgetError("prime witness search exceeds the product budget");
      std::optional<RunWord> w =
          ring.engine().prime_witness(k1.word, k2.word, len_bound);
      if (!w) continue;
      if (w->x_count() > ExtendedNat(c_max)) continue;
      GroupRingElement c = ring.from_term(*w, GroupElement());
      if (verified(c)) return c;
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> x_ideal_nilpotency_B(const GroupRing& ring,
                                                  std::uint32_t d,
                                                  std::uint32_t k_max,
                                                  const BBudgets& budgets) {
  std::set<AGKey, AGKeyLess> pset;
  pair_levels(ring, d, budgets, &pset);

  RunWord xw = RunWord::letter('x');
  std::set<AGKey, AGKeyLess> xset;
  std::uint64_t products = 0;
  auto charge = [&](std::uint64_t n) {
    if ((products += n) > budgets.max_products)
      throw BudgetError("ideal power expansion exceeds the product budget");
  };
  for (const AGKey& a : pset) {
    charge(1);
    RunWord ax = a.word.concat(xw);
    if (!ring.allows(ax)) continue;
    for (const AGKey& b : pset) {
      charge(1);
      RunWord w = ax.concat(b.word);
      if (!ring.allows(w)) continue;
      if (xset.size() >= budgets.max_terms)
        throw BudgetError("ideal power expansion exceeds the term budget");
      xset.insert(AGKey{std::move(w), multiply(a.g, b.g)});
    }
  }
  if (xset.empty()) return 1;
  if (!ring.factor_mode()) return std::nullopt;  // nothing ever vanishes

  std::set<AGKey, AGKeyLess> cur = xset;
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    std::set<AGKey, AGKeyLess> next;
    for (const AGKey& s : cur) {
      for (const AGKey& t : xset) {
        charge(1);
        RunWord w = s.word.concat(t.word);
        if (!ring.allows(w)) continue;
        if (next.size() >= budgets.max_terms)
          throw BudgetError("ideal power expansion exceeds the term budget");
        next.insert(AGKey{std::move(w), multiply(s.g, t.g)});
      }
    }
    if (next.empty()) return k;
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace gforge
