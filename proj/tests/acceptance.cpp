// Acceptance battery: twelve end-to-end checks covering the word engine,
// the monomial algebra and its growth, the span-tower oracles, the witness
// group, and the group-ring subalgebra. Each criterion prints exactly one
// [PASS]/[FAIL] line; the process exit code is the number of failures.
//
// Tolerances and runtime limits are pinned here, next to the checks that
// use them. Randomized parts run from fixed seeds so the battery is
// deterministic.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gforge/algebra.hpp"
#include "gforge/centre_lab.hpp"
#include "gforge/errors.hpp"
#include "gforge/extended_nat.hpp"
#include "gforge/field.hpp"
#include "gforge/group.hpp"
#include "gforge/group_ring.hpp"
#include "gforge/growth.hpp"
#include "gforge/lemmas.hpp"
#include "gforge/run_word.hpp"
#include "gforge/sequence_spec.hpp"
#include "gforge/universe.hpp"
#include "gforge/word_engine.hpp"

using namespace gforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::shared_ptr<const VInfinity> geo2_engine() {
  return std::make_shared<const VInfinity>(RunSequenceSpec::geometric(2));
}

Algebra geo2_algebra() {
  return Algebra(Field::rationals(), std::make_shared<FactorUniverse>(geo2_engine()));
}

Algebra control_algebra() {
  return Algebra(Field::rationals(), std::make_shared<YStarX>());
}

// Words over {x, y} of length at most m, for re-expanding annihilators.
std::vector<std::string> words_up_to(std::uint32_t m) {
  std::vector<std::string> out{""};
  std::size_t lo = 0;
  for (std::uint32_t L = 1; L <= m; ++L) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i) {
      out.push_back(out[i] + 'x');
      out.push_back(out[i] + 'y');
    }
    lo = hi;
  }
  return out;
}

// Shared between criteria 2 and 3: the geometric base-2 series to n = 500.
std::vector<std::uint64_t> g_dims500;

// --- criterion 1: stage words and exact lengths under the tower spec -------

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  VInfinity tower(RunSequenceSpec::tower());
  bool stage2 = tower.level_word(2).str() == "x y^65536 x";
  ExtendedNat len3 = tower.word_length(3);
  BigInt want = (BigInt(1) << 65536) + 131076;
  bool exact = len3.is_exact() && len3.exact() == want;
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = stage2 && exact && secs < 1.0;
  std::ostringstream d;
  d << "stage-2 word " << (stage2 ? "ok" : "WRONG") << ", |stage 3| "
    << (exact ? "= 2^65536+131076 exactly" : "MISMATCH") << " (" << fmt(secs)
    << "s, limit 1s)";
  o.detail = d.str();
  return o;
}

// --- criterion 2: quadratic growth of the factor algebra -------------------

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Algebra alg = geo2_algebra();
  auto frame = alg.default_frame();
  GrowthReport rep = growth_report(alg, frame, 500);
  g_dims500 = rep.dims;
  Field f = Field::rationals();
  bool fit = rep.quadratic && rep.c1 > 0 && rep.c1 <= rep.c2 &&
             rep.window_lo == 250 && rep.window_hi == 500;
  bool gk = rep.slope >= 1.8 && rep.slope <= 2.2;

  // Sliding-window oracle: count distinct factors of each length in two
  // consecutive stage words; equal counts mean the counts are final.
  auto eng = geo2_engine();
  std::string p11 = eng->level_letters(11);
  std::string p12 = eng->level_letters(12);
  bool oracle = true;
  std::uint64_t cumulative = 1; // the empty word
  for (std::uint32_t L = 1; L <= 60 && oracle; ++L) {
    std::unordered_set<std::string_view> seen11, seen12;
    for (std::size_t i = 0; i + L <= p11.size(); ++i)
      seen11.insert(std::string_view(p11).substr(i, L));
    for (std::size_t i = 0; i + L <= p12.size(); ++i)
      seen12.insert(std::string_view(p12).substr(i, L));
    oracle = seen11.size() == seen12.size();
    cumulative += seen12.size();
    oracle = oracle && rep.dims[L] == cumulative;
  }

  double secs = seconds_since(t0);
  Outcome o;
  o.pass = fit && gk && oracle && secs < 120.0;
  std::ostringstream d;
  d << "dim(500)=" << rep.dims[500] << ", c1=" << f.str(rep.c1)
    << " c2=" << f.str(rep.c2) << " on 250..500 ("
    << (fit ? "ok" : "BAD FIT") << "), slope=" << fmt(rep.slope)
    << (gk ? " in [1.8,2.2]" : " OUT OF [1.8,2.2]") << ", oracle n<=60 "
    << (oracle ? "matches" : "MISMATCH") << " (" << fmt(secs)
    << "s, limit 120s)";
  o.detail = d.str();
  return o;
}

// --- criterion 3: triangular lower bound on every level --------------------

Outcome criterion3() {
  if (g_dims500.empty()) {
    Algebra alg = geo2_algebra();
    g_dims500 = dim_series(alg, alg.default_frame(), 500);
  }
  std::uint32_t bad = 0;
  bool ok = true;
  for (std::uint32_t n = 0; n <= 500; ++n)
    if (g_dims500[n] < std::uint64_t(n) * (n + 1) / 2) {
      ok = false;
      bad = n;
      break;
    }
  Outcome o;
  o.pass = ok;
  std::ostringstream d;
  if (ok)
    d << "dim V^n >= n(n+1)/2 for every n <= 500 (dim(500)=" << g_dims500[500]
      << " vs 125250)";
  else
    d << "violated at n=" << bad << ": dim=" << g_dims500[bad] << " < "
      << std::uint64_t(bad) * (bad + 1) / 2;
  o.detail = d.str();
  return o;
}

// --- criterion 4: x-count profile of factors -------------------------------

Outcome criterion4() {
  auto eng = geo2_engine();
  // Library values over the full range.
  std::vector<std::uint64_t> mx(1 << 14);
  bool nondecreasing = true;
  std::uint64_t first_bound_violation = 0;
  for (std::uint64_t l = 1; l <= (1 << 14); ++l) {
    mx[l - 1] = eng->max_x_occurrences(ExtendedNat(l));
    if (l > 1 && mx[l - 1] < mx[l - 2]) nondecreasing = false;
    double bound = 2.0 + std::log2(double(l));
    if (first_bound_violation == 0 && double(mx[l - 1]) > bound)
      first_bound_violation = l;
  }

  // Enumeration oracle for lengths up to 512: sliding maxima of the x-count
  // over two consecutive stage words, which must agree with each other and
  // with the library.
  std::string p12 = eng->level_letters(12);
  std::string p13 = eng->level_letters(13);
  auto prefix_x = [](const std::string& s) {
    std::vector<std::uint32_t> px(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
      px[i + 1] = px[i] + (s[i] == 'x');
    return px;
  };
  auto px12 = prefix_x(p12), px13 = prefix_x(p13);
  bool oracle = true;
  for (std::uint64_t l = 1; l <= 512 && oracle; ++l) {
    std::uint32_t best12 = 0, best13 = 0;
    for (std::size_t i = 0; i + l <= p12.size(); ++i)
      best12 = std::max(best12, px12[i + l] - px12[i]);
    for (std::size_t i = 0; i + l <= p13.size(); ++i)
      best13 = std::max(best13, px13[i + l] - px13[i]);
    oracle = best12 == best13 && best13 == mx[l - 1];
  }

  VInfinity tower(RunSequenceSpec::tower());
  bool structural = tower.max_x_occurrences(ExtendedNat(65538)) == 2;

  Outcome o;
  bool bound_ok = first_bound_violation == 0;
  o.pass = nondecreasing && bound_ok && oracle && structural;
  std::ostringstream d;
  d << "nondecreasing " << (nondecreasing ? "ok" : "VIOLATED") << "; bound 2+log2(l) ";
  if (bound_ok)
    d << "ok";
  else
    d << "VIOLATED from l=" << first_bound_violation << " (max_x("
      << first_bound_violation << ")=" << mx[first_bound_violation - 1]
      << ", max_x(16384)=" << mx[(1 << 14) - 1]
      << " vs 16; x-density of this word grows like l/log l, so no constant"
         "-plus-log bound can hold)";
  d << "; enumeration l<=512 " << (oracle ? "matches" : "MISMATCH")
    << "; tower max_x(65538)=" << (structural ? "2 ok" : "WRONG");
  o.detail = d.str();
  return o;
}

// --- criterion 5: annihilator oracle with exact rank accounting ------------

Outcome criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  struct Instance {
    const char* name;
    Algebra alg;
    std::string z;
    std::uint32_t m;
  };
  std::vector<Instance> instances;
  instances.push_back({"control z=x m=1", control_algebra(), "x", 1});
  instances.push_back({"control z=x m=2", control_algebra(), "x", 2});
  instances.push_back({"control z=x m=3", control_algebra(), "x", 3});
  instances.push_back({"control z=y m=2", control_algebra(), "y", 2});
  instances.push_back({"factor z=x m=1", geo2_algebra(), "x", 1});
  instances.push_back({"factor z=x m=2", geo2_algebra(), "x", 2});

  bool all = true;
  std::string bad;
  for (auto& inst : instances) {
    auto frame = inst.alg.default_frame();
    AlgebraElement z = inst.alg.parse(inst.z);
    auto rep = annihilator_search(inst.alg, z, inst.m, 10, frame);
    bool found = rep.element.has_value();
    bool rank = rep.dim_kernel == rep.dim_vn - rep.dim_image;
    bool verified = false;
    if (found) {
      verified = true;
      for (const std::string& w : words_up_to(inst.m))
        if (!inst.alg
                 .multiply(*rep.element,
                           inst.alg.multiply(inst.alg.from_word(w), z))
                 .is_zero())
          verified = false;
    }
    if (!(found && rank && verified)) {
      all = false;
      bad = inst.name;
      break;
    }
  }
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = all && secs < 30.0;
  std::ostringstream d;
  if (all)
    d << instances.size()
      << " instances: annihilator found, re-expansion zero, rank-nullity "
         "exact ("
      << fmt(secs) << "s, limit 30s)";
  else
    d << "failed on " << bad;
  o.detail = d.str();
  return o;
}

// --- criterion 6: subquadratic growth forces a low-degree reduction --------

Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  Algebra alg = geo2_algebra();
  auto frame = alg.default_frame();
  bool all = true;
  std::string bad;
  std::uint32_t reductions = 0;
  for (const char* zs : {"x", "y", "x*y"}) {
    AlgebraElement z = alg.parse(zs);
    for (std::uint32_t n = 1; n <= 30 && all; ++n) {
      std::uint64_t tsg = two_sided_growth(alg, z, n, frame);
      if (tsg < std::uint64_t(n) * n) {
        auto rel = reduction_search(alg, z, 2 * n, frame);
        if (!rel || !verify_reduction(alg, z, *rel)) {
          all = false;
          std::ostringstream b;
          b << "z=" << zs << " n=" << n << ": growth " << tsg << " < " << n * n
            << " but no verified reduction";
          bad = b.str();
        } else {
          ++reductions;
        }
      }
    }
  }
  // Non-prime control: killing from the right forces the least reduction.
  Algebra ctrl = control_algebra();
  auto cframe = ctrl.default_frame();
  auto crel = reduction_search(ctrl, ctrl.parse("x"), 4, cframe);
  bool control = crel && crel->m == 0 && crel->p == 1 &&
                 verify_reduction(ctrl, ctrl.parse("x"), *crel);
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = all && control && secs < 120.0;
  std::ostringstream d;
  d << "dichotomy held for z in {x, y, xy}, n <= 30 (" << reductions
    << " reductions verified); control reduction (0,1) "
    << (control ? "found and verified" : "MISSING") << " (" << fmt(secs)
    << "s, limit 120s)";
  if (!all) d << "; " << bad;
  o.detail = d.str();
  return o;
}

// --- criterion 7: regular element keeps quadratic ideal-power growth -------

Outcome criterion7() {
  Algebra alg = geo2_algebra();
  auto frame = alg.default_frame();
  AlgebraElement y = alg.parse("y");
  double cfit = -1.0;
  for (std::uint32_t n = 10; n <= 30; ++n) {
    std::uint64_t dim = ideal_power_growth(alg, y, 1, n, frame);
    double c = double(dim) / (double(n) * n);
    if (cfit < 0 || c < cfit) cfit = c;
  }
  bool grows = cfit > 0;
  bool rejected = false;
  try {
    ideal_power_growth(alg, alg.parse("x"), 1, 4, frame);
  } catch (const NilpotentInputError&) {
    rejected = true;
  }
  auto idx = nilpotency_index(alg, alg.parse("x"), 1, 8, frame);
  bool index2 = idx == std::optional<std::uint32_t>(2);
  Outcome o;
  o.pass = grows && rejected && index2;
  std::ostringstream d;
  d << "fitted C=" << fmt(cfit) << " > 0 on 10..30 ("
    << (grows ? "ok" : "NOT POSITIVE") << "); nilpotent input "
    << (rejected ? "rejected" : "NOT REJECTED") << "; index(x)="
    << (idx ? std::to_string(*idx) : "none") << (index2 ? " ok" : " WRONG");
  o.detail = d.str();
  return o;
}

// --- criterion 8: witness group engine --------------------------------------

GroupElement random_group_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 5), type(0, 3), idx(-8, 8),
      expo(-8, 8);
  GroupElement g;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    GroupElement f;
    GInt a(idx(rng)), e(expo(rng));
    switch (type(rng)) {
      case 0: f = GroupElement::s(a, e); break;
      case 1: f = GroupElement::t(a, e); break;
      case 2: f = GroupElement::z(a, e); break;
      default: f = GroupElement::u(e); break;
    }
    g = multiply(g, f);
  }
  return g;
}

bool structurally_central(const GroupElement& g) {
  std::string s = g.str();
  return s.find("s(") == std::string::npos &&
         s.find("t(") == std::string::npos && s.find('u') == std::string::npos;
}

Outcome criterion8() {
  using GE = GroupElement;
  bool relations = true;
  for (int n = -8; n <= 8 && relations; ++n) {
    for (int m = -8; m <= 8 && relations; ++m) {
      relations = multiply(GE::s(n), GE::t(m)) ==
                  multiply(multiply(GE::z(n - m), GE::t(m)), GE::s(n));
      relations = relations && commutator(GE::z(n), GE::s(m)).is_identity() &&
                  commutator(GE::z(n), GE::t(m)).is_identity() &&
                  commutator(GE::z(n), GE::u(m)).is_identity();
    }
    relations = relations && conjugate_by_u(GE::s(n), 1) == GE::s(n + 1) &&
                conjugate_by_u(GE::t(n), 1) == GE::t(n + 1) &&
                is_central(GE::z(n));
  }

  std::mt19937_64 rng(20260816);
  bool assoc = true;
  for (int i = 0; i < 10000 && assoc; ++i) {
    GE a = random_group_element(rng), b = random_group_element(rng),
       c = random_group_element(rng);
    assoc = multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
  }

  bool comm = true;
  for (int n = -8; n <= 8 && comm; ++n)
    comm = commutator(GE::s(n), GE::t(0)) == GE::z(n);

  bool box = true;
  for (int i = 0; i < 10000 && box; ++i) {
    GE g = random_group_element(rng);
    box = is_central(g) == structurally_central(g);
  }

  Outcome o;
  o.pass = relations && assoc && comm && box;
  std::ostringstream d;
  d << "defining relations " << (relations ? "hold" : "BROKEN")
    << "; associativity 10000 triples " << (assoc ? "exact" : "BROKEN")
    << "; commutators " << (comm ? "match the centre generators" : "WRONG")
    << "; centre box-check 10000 " << (box ? "exact" : "BROKEN");
  o.detail = d.str();
  return o;
}

// --- criterion 9: growth of the group-ring subalgebra ----------------------

Outcome criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  GroupRing ring(Field::rationals(), geo2_engine());

  // Naive oracle: close the eight generators under products of length <= 8,
  // deduplicating on the canonical (word, group) pair.
  auto gens = b_generators(ring);
  auto key_of = [&](const GroupRingElement& e) {
    const AGKey* k = e.single_key();
    return k->word.str() + '\x01' + k->g.str();
  };
  std::set<std::string> seen;
  std::vector<GroupRingElement> frontier{ring.one()};
  seen.insert(key_of(ring.one()));
  bool oracle = b_dim_Vn(ring, 0) == 1;
  for (std::uint32_t n = 1; n <= 8 && oracle; ++n) {
    std::vector<GroupRingElement> next;
    for (const auto& t : frontier)
      for (const auto& g : gens) {
        GroupRingElement p = ring.multiply(t, g);
        if (p.is_zero()) continue;
        if (seen.insert(key_of(p)).second) next.push_back(p);
      }
    frontier.swap(next);
    oracle = b_dim_Vn(ring, n) == seen.size();
  }

  // Window clause. The series is nondecreasing, so a level already past the
  // n^2.5 envelope of the whole window certifies the violation without
  // materializing the far levels.
  auto dims = b_dim_series(ring, 16);
  BGrowthReport rep = b_growth_report(ring, 16);
  bool window_ok = true;
  std::string window_note;
  double env30 = std::pow(30.0, 2.5);
  if (double(dims[16]) > env30) {
    window_ok = false;
    std::ostringstream w;
    w << "dim(16)=" << dims[16] << " and the series is nondecreasing, so "
      << "dim(30) > 30^2.5=" << std::uint64_t(env30)
      << "; the window 30..60 cannot satisfy the envelope (group parts "
         "multiply freely enough to force exponential growth here)";
    window_note = w.str();
  } else {
    // Within reach: extend and check the window directly.
    auto full = b_dim_series(ring, 60);
    for (std::uint32_t n = 30; n <= 60 && window_ok; ++n)
      window_ok = double(full[n]) <= std::pow(double(n), 2.5);
  }
  bool gk = rep.slope >= 1.7 && rep.slope <= 2.4;

  double secs = seconds_since(t0);
  Outcome o;
  o.pass = oracle && window_ok && gk && secs < 300.0;
  std::ostringstream d;
  d << "naive product oracle n<=8 " << (oracle ? "matches" : "MISMATCH")
    << "; envelope ";
  if (window_ok)
    d << "ok";
  else
    d << "VIOLATED: " << window_note;
  d << "; slope=" << fmt(rep.slope)
    << (gk ? " in [1.7,2.4]" : " OUT OF [1.7,2.4]") << " (" << fmt(secs)
    << "s, limit 300s)";
  o.detail = d.str();
  return o;
}

// --- criterion 10: central witnesses and their independence ----------------

Outcome criterion10() {
  GroupRing ring(Field::rationals(),
                 std::make_shared<const VInfinity>(RunSequenceSpec::tower()));
  auto gens = b_generators(ring);
  bool witnesses = true;
  std::string bad;
  for (int n = -4; n <= 4 && witnesses; ++n) {
    GroupRingElement wit = central_witness(ring, GInt(n));
    const AGKey* key = wit.single_key();
    witnesses = key && key->g == GroupElement::z(GInt(n)) && is_central(key->g);
    if (!witnesses) {
      bad = "witness for index " + std::to_string(n);
      break;
    }
    // Re-verify the certificate by multiplying out its generator sequence.
    auto ex = express_in_B(ring, GroupElement::z(GInt(n)), 64);
    if (!ex || ex->gens.empty()) {
      witnesses = false;
      bad = "no recipe for index " + std::to_string(n);
      break;
    }
    GroupRingElement acc = gens[ex->gens[0]];
    for (std::size_t i = 1; i < ex->gens.size(); ++i) {
      if (i - 1 < ex->paddings.size() && !ex->paddings[i - 1].is_zero())
        acc = ring.multiply(
            acc, ring.from_term(RunWord::run('y', ex->paddings[i - 1]),
                                GroupElement()));
      acc = ring.multiply(acc, gens[ex->gens[i]]);
    }
    const AGKey* akey = acc.single_key();
    if (!(acc == ex->product && akey &&
          akey->g == GroupElement::z(GInt(n)))) {
      witnesses = false;
      bad = "recipe for index " + std::to_string(n) + " does not multiply out";
    }
  }
  bool indep = independence_check(ring, 3, {GInt(0), GInt(1), GInt(2)});
  Outcome o;
  o.pass = witnesses && indep;
  std::ostringstream d;
  if (witnesses)
    d << "witnesses for indices -4..4 are single central terms that multiply "
         "out from the generators";
  else
    d << "FAILED: " << bad;
  d << "; degree-3 independence " << (indep ? "holds" : "BROKEN");
  o.detail = d.str();
  return o;
}

// --- criterion 11: two-sided joints in the subalgebra -----------------------

Outcome criterion11() {
  GroupRing ring(Field::rationals(), geo2_engine());
  auto gens = b_generators(ring);
  ExtendedNat bound = ring.engine().word_length(6);
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto random_term = [&]() {
    for (;;) {
      GroupRingElement e = gens[pick(rng)];
      int n = count(rng);
      for (int i = 1; i < n && !e.is_zero(); ++i)
        e = ring.multiply(e, gens[pick(rng)]);
      if (!e.is_zero()) return e;
    }
  };
  int verified = 0;
  std::string bad;
  for (int i = 0; i < 100; ++i) {
    GroupRingElement b1 = random_term(), b2 = random_term();
    auto c = prime_witness_B(ring, b1, b2, bound, 12);
    if (!c) {
      bad = "no witness for pair " + std::to_string(i);
      break;
    }
    GroupRingElement prod = ring.multiply(ring.multiply(b1, *c), b2);
    if (prod.is_zero()) {
      bad = "witness product vanished for pair " + std::to_string(i);
      break;
    }
    ++verified;
  }
  Outcome o;
  o.pass = verified == 100;
  std::ostringstream d;
  if (o.pass)
    d << "100/100 random single-term pairs joined within length "
      << bound.str() << ", every product nonzero";
  else
    d << verified << "/100 verified; " << bad;
  o.detail = d.str();
  return o;
}

// --- criterion 12: slabs around x are nilpotent only under the word rules --

Outcome criterion12() {
  GroupRing ring(Field::rationals(), geo2_engine());
  auto k0 = x_ideal_nilpotency_B(ring, 0, 64);
  auto k1 = x_ideal_nilpotency_B(ring, 1, 64);
  auto k2 = x_ideal_nilpotency_B(ring, 2, 64);
  GroupRing free_ring(Field::rationals(), nullptr);
  auto kf = x_ideal_nilpotency_B(free_ring, 0, 64);
  Outcome o;
  o.pass = k0.has_value() && k1.has_value() && k2.has_value() && !kf;
  std::ostringstream d;
  auto show = [](const std::optional<std::uint32_t>& k) {
    return k ? std::to_string(*k) : std::string("none");
  };
  d << "indices " << show(k0) << "/" << show(k1) << "/" << show(k2)
    << " for widths 0/1/2 (all finite: "
    << (k0 && k1 && k2 ? "yes" : "NO") << "); free-word control "
    << (!kf ? "stays alive" : "UNEXPECTEDLY NILPOTENT");
  o.detail = d.str();
  return o;
}

} // namespace

int main() {
  using Fn = Outcome (*)();
  struct Row {
    int id;
    Fn fn;
  };
  const Row rows[] = {{1, criterion1}, {2, criterion2},   {3, criterion3},
                      {4, criterion4}, {5, criterion5},   {6, criterion6},
                      {7, criterion7}, {8, criterion8},   {9, criterion9},
                      {10, criterion10}, {11, criterion11}, {12, criterion12}};
  int failures = 0;
  for (const Row& row : rows) {
    Outcome o;
    try {
      o = row.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << row.id
              << ": " << o.detail << '\n';
  }
  std::cout << (12 - failures) << "/12 criteria passed\n";
  return failures;
}
