// growth-forge: command-line front end for the library. Exposes the
// infinite-word queries, algebra growth tables, the annihilator/reduction/
// ideal-power oracles, the witness-group operations, and the group-ring
// subalgebra reports as subcommands with text, CSV, and JSON output.
//
// Exit codes: 0 success, 1 budget or materialization limit, 2 usage or
// input error (including rejected inputs and failed selftest checks).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

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

using nlohmann::json;
using namespace gforge;

namespace {

struct Options {
  std::string spec = "geo:2";
  std::string field = "rationals";
  std::string universe = "factor";
  std::string format = "text";
  std::string out;
  std::string config;
  std::uint64_t seed = 0;
  // span budgets (algebra-side searches)
  std::uint64_t max_dim = 400000;
  std::uint64_t max_products = 4000000;
  std::uint64_t max_enum = 4000000;
  // group-ring subalgebra budgets
  std::uint64_t b_max_terms = 2000000;
  std::uint64_t b_max_products = 8000000;
  std::uint64_t b_bfs_nodes = 200000;
  // word-engine budgets
  std::uint64_t max_chars = 6u << 20;
  std::uint64_t max_len = 1u << 20;
};

// Registered option pointers plus a setter, per config key, so a JSON
// config file can fill in any value the command line left at its default.
struct ConfigSlot {
  std::vector<CLI::Option*> opts;
  std::function<void(const json&)> set;
};
std::map<std::string, ConfigSlot> config_slots;

void track(const std::string& key, CLI::Option* opt,
           std::function<void(const json&)> set) {
  auto& slot = config_slots[key];
  slot.opts.push_back(opt);
  if (!slot.set) slot.set = std::move(set);
}

void add_common(CLI::App* cmd, Options& o, bool with_universe) {
  track("spec",
        cmd->add_option("--spec", o.spec,
                        "run-length spec: tower | geo:<base> | list:<v1,v2,...>"),
        [&o](const json& v) { o.spec = v.get<std::string>(); });
  track("field",
        cmd->add_option("--field", o.field,
                        "coefficient field: rationals | gf:<p>"),
        [&o](const json& v) { o.field = v.get<std::string>(); });
  if (with_universe)
    track("universe",
          cmd->add_option("--universe", o.universe,
                          "monomial universe: factor | free | ystarx"),
          [&o](const json& v) { o.universe = v.get<std::string>(); });
  track("format",
        cmd->add_option("--format", o.format, "output format: text | csv | json"),
        [&o](const json& v) { o.format = v.get<std::string>(); });
  track("out", cmd->add_option("--out", o.out, "write the report to this file"),
        [&o](const json& v) { o.out = v.get<std::string>(); });
  track("seed", cmd->add_option("--seed", o.seed, "seed for randomized checks"),
        [&o](const json& v) { o.seed = v.get<std::uint64_t>(); });
  track("max-dim",
        cmd->add_option("--max-dim", o.max_dim, "span budget: largest dimension"),
        [&o](const json& v) { o.max_dim = v.get<std::uint64_t>(); });
  track("max-products",
        cmd->add_option("--max-products", o.max_products,
                        "span budget: multiplications per call"),
        [&o](const json& v) { o.max_products = v.get<std::uint64_t>(); });
  track("max-enum",
        cmd->add_option("--max-enum", o.max_enum,
                        "span budget: words visited in counting walks"),
        [&o](const json& v) { o.max_enum = v.get<std::uint64_t>(); });
  track("b-max-terms",
        cmd->add_option("--b-max-terms", o.b_max_terms,
                        "subalgebra budget: distinct (word, group) terms"),
        [&o](const json& v) { o.b_max_terms = v.get<std::uint64_t>(); });
  track("b-max-products",
        cmd->add_option("--b-max-products", o.b_max_products,
                        "subalgebra budget: term-by-term multiplications"),
        [&o](const json& v) { o.b_max_products = v.get<std::uint64_t>(); });
  track("b-bfs-nodes",
        cmd->add_option("--b-bfs-nodes", o.b_bfs_nodes,
                        "subalgebra budget: states in the group-word search"),
        [&o](const json& v) { o.b_bfs_nodes = v.get<std::uint64_t>(); });
  track("max-chars",
        cmd->add_option("--max-chars", o.max_chars,
                        "word budget: largest stage word materialized"),
        [&o](const json& v) { o.max_chars = v.get<std::uint64_t>(); });
  track("max-len",
        cmd->add_option("--max-len", o.max_len,
                        "word budget: largest enumerated factor length"),
        [&o](const json& v) { o.max_len = v.get<std::uint64_t>(); });
  cmd->add_option("--config", o.config,
                  "JSON config file; command-line flags win");
}

void apply_config(const Options& o) {
  if (o.config.empty()) return;
  std::ifstream f(o.config);
  if (!f) throw std::invalid_argument("cannot open config file: " + o.config);
  json cfg = json::parse(f);
  if (!cfg.is_object())
    throw std::invalid_argument("config file must hold a JSON object");
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    auto slot = config_slots.find(it.key());
    if (slot == config_slots.end())
      throw std::invalid_argument("unknown config key: " + it.key());
    bool given = false;
    for (const CLI::Option* opt : slot->second.opts)
      if (opt->count() > 0) given = true;
    if (!given) slot->second.set(it.value());
  }
}

WordBudgets word_budgets(const Options& o) {
  WordBudgets b;
  b.max_chars = o.max_chars;
  b.max_len = o.max_len;
  return b;
}

SpanBudgets span_budgets(const Options& o) {
  SpanBudgets b;
  b.max_dim = static_cast<std::size_t>(o.max_dim);
  b.max_products = static_cast<std::size_t>(o.max_products);
  b.max_enum = static_cast<std::size_t>(o.max_enum);
  return b;
}

BBudgets b_budgets(const Options& o) {
  return BBudgets{o.b_max_terms, o.b_max_products, o.b_bfs_nodes};
}

std::shared_ptr<const VInfinity> make_engine(const Options& o) {
  return std::make_shared<const VInfinity>(RunSequenceSpec::parse(o.spec),
                                           word_budgets(o));
}

std::shared_ptr<const WordUniverse> make_universe(const Options& o) {
  if (o.universe == "factor")
    return std::make_shared<FactorUniverse>(make_engine(o));
  if (o.universe == "free") return std::make_shared<FreeUniverse>();
  if (o.universe == "ystarx") return std::make_shared<YStarX>();
  throw std::invalid_argument("unknown universe: " + o.universe);
}

Algebra make_algebra(const Options& o) {
  return Algebra(Field::parse(o.field), make_universe(o));
}

GroupRing make_ring(const Options& o, bool free_words = false) {
  return GroupRing(Field::parse(o.field),
                   free_words ? nullptr : make_engine(o));
}

AlgebraElement parse_algebra(const Algebra& alg, const std::string& text) {
  AlgebraElement e = alg.parse(text);
  if (e.is_zero() && text.find_first_not_of("0 \t") != std::string::npos)
    std::cerr << "warning: '" << text << "' normalizes to 0 in this universe\n";
  return e;
}

GroupRingElement parse_groupring(const GroupRing& ring,
                                 const std::string& text) {
  GroupRingElement e = ring.parse(text);
  if (e.is_zero() && text.find_first_not_of("0 \t") != std::string::npos)
    std::cerr << "warning: '" << text << "' normalizes to 0 (word part dies)\n";
  return e;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Report {
  std::string text;
  std::optional<std::string> csv;
  json body = json::object();
};

int emit(const Options& o, const std::string& command, Report rep) {
  std::string payload;
  if (o.format == "json") {
    json j = std::move(rep.body);
    j["schema"] = "growth-forge/v1";
    j["command"] = command;
    j["config"] = {{"spec", o.spec},
                   {"field", o.field},
                   {"universe", o.universe},
                   {"seed", o.seed}};
    payload = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    if (!rep.csv)
      throw std::invalid_argument("this report has no CSV form; use text or json");
    payload = *rep.csv;
  } else if (o.format == "text") {
    payload = rep.text;
  } else {
    throw std::invalid_argument("unknown format: " + o.format);
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << payload;
  } else {
    std::cout << payload;
  }
  return 0;
}

// ---------------------------------------------------------------- word ----

json word_common_body(const Options& o) {
  json j = json::object();
  j["spec"] = o.spec;
  return j;
}

// -------------------------------------------------------------- growth ----

std::string growth_csv(const GrowthReport& rep, const Field& f) {
  std::ostringstream csv;
  csv << "n,dim\n";
  for (std::size_t n = 0; n < rep.dims.size(); ++n)
    csv << n << ',' << rep.dims[n] << '\n';
  csv << "# verdict: quadratic=" << (rep.quadratic ? 1 : 0)
      << " c1=" << f.str(rep.c1) << " c2=" << f.str(rep.c2)
      << " slope=" << fmt_double(rep.slope) << " window=" << rep.window_lo
      << ".." << rep.window_hi << '\n';
  return csv.str();
}

// ------------------------------------------------------------- helpers ----

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

bool verify_annihilator(const Algebra& alg, const AlgebraElement& a,
                        const AlgebraElement& z, std::uint32_t m) {
  for (const std::string& w : words_up_to(m)) {
    AlgebraElement wz = alg.multiply(alg.from_word(w), z);
    if (!alg.multiply(a, wz).is_zero()) return false;
  }
  return true;
}

const char* const kBGeneratorNames[] = {"x*s0", "x*s0^-1", "x*t0", "x*t0^-1",
                                        "x*u",  "x*u^-1",  "x",    "y"};

// ------------------------------------------------------------- selftest ---

struct SelfTest {
  std::ostringstream log;
  int failed = 0;
  int total = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++total;
    if (!ok) ++failed;
    log << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) log << " — " << detail;
    log << '\n';
  }
};

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

// Central elements are exactly the products of z generators: the canonical
// print of anything else keeps an s, t, or u factor.
bool looks_central(const GroupElement& g) {
  std::string s = g.str();
  return s.find("s(") == std::string::npos &&
         s.find("t(") == std::string::npos && s.find('u') == std::string::npos;
}

int run_selftest(const Options& o) {
  SelfTest st;

  // Stage words and lengths under the tower run spec.
  {
    VInfinity tower(RunSequenceSpec::tower());
    st.check("tower stage 2 word", tower.level_word(2).str() == "x y^65536 x",
             tower.level_word(2).str());
    st.check("tower stage 3 length",
             tower.word_length(3).str() == "2^^(1;65536)+131076",
             tower.word_length(3).str());
    st.check("tower max-x at 65538",
             tower.max_x_occurrences(ExtendedNat(65538)) == 2);
  }

  // Ruler function and the gap sequence.
  {
    Options og = o;
    og.spec = "geo:2";
    auto eng = make_engine(og);
    std::uint32_t expect[] = {1, 2, 1, 3, 1, 2, 1, 4};
    bool ok = true;
    for (std::uint64_t i = 1; i <= 8; ++i) {
      ok = ok && VInfinity::ruler(i) == expect[i - 1];
      ok = ok && eng->gap(i) == eng->sequence().run(expect[i - 1]);
    }
    st.check("ruler gap pattern", ok);
    st.check("small factor counts", eng->factor_complexity(1) == 2 &&
                                        eng->factor_complexity(2) == 3 &&
                                        eng->factor_complexity(3) == 4);
  }

  // Algebra dimensions against direct word enumeration.
  {
    Options og = o;
    og.spec = "geo:2";
    og.universe = "factor";
    Algebra alg = make_algebra(og);
    auto universe = make_universe(og);
    auto dims = dim_series(alg, alg.default_frame(), 10, span_budgets(og));
    std::uint64_t count = 0;
    bool ok = true;
    std::vector<std::string> layer{""};
    for (std::uint32_t n = 0;; ++n) {
      for (const std::string& w : layer)
        if (universe->allows(w)) ++count;
      ok = ok && dims[n] == count;
      if (n == 10) break;
      std::vector<std::string> next;
      for (const std::string& w : layer) {
        next.push_back(w + 'x');
        next.push_back(w + 'y');
      }
      layer.swap(next);
    }
    st.check("dimension series vs enumeration", ok);
    bool bergman = true;
    auto dims60 = dim_series(alg, alg.default_frame(), 60, span_budgets(og));
    for (std::uint32_t n = 0; n <= 60; ++n)
      bergman = bergman && dims60[n] >= std::uint64_t(n) * (n + 1) / 2;
    st.check("triangular lower bound to n=60", bergman);
  }

  // Annihilator and reduction oracles on the non-prime control.
  {
    Options oc = o;
    oc.universe = "ystarx";
    Algebra ctrl = make_algebra(oc);
    auto frame = ctrl.default_frame();
    AlgebraElement z = ctrl.parse("x");
    auto rep = annihilator_search(ctrl, z, 2, 8, frame, span_budgets(oc));
    bool ok = rep.element.has_value() &&
              verify_annihilator(ctrl, *rep.element, z, 2) &&
              rep.dim_kernel == rep.dim_vn - rep.dim_image;
    st.check("annihilator on the one-sided control", ok);
    auto rel = reduction_search(ctrl, z, 4, frame, span_budgets(oc));
    st.check("reduction (0,1) on the control",
             rel && rel->m == 0 && rel->p == 1 && verify_reduction(ctrl, z, *rel));
  }

  // Ideal-power growth and nilpotency in the factor algebra.
  {
    Options og = o;
    og.spec = "geo:2";
    og.universe = "factor";
    Algebra alg = make_algebra(og);
    auto frame = alg.default_frame();
    st.check("nilpotency index of x", nilpotency_index(alg, alg.parse("x"), 1, 8,
                                                       frame, span_budgets(og)) ==
                                          std::optional<std::uint32_t>(2));
    bool rejected = false;
    try {
      ideal_power_growth(alg, alg.parse("x"), 1, 4, frame, span_budgets(og));
    } catch (const NilpotentInputError&) {
      rejected = true;
    }
    st.check("nilpotent input rejected", rejected);
    st.check("ideal powers of y keep growing",
             ideal_power_growth(alg, alg.parse("y"), 1, 8, frame,
                                span_budgets(og)) >= 32);
  }

  // Group engine: defining relations, associativity, centre box-check.
  {
    using GE = GroupElement;
    bool rel = multiply(GE::s(1), GE::t(0)).str() == "z(1) t(0) s(1)" &&
               multiply(GE::t(0), GE::s(1)).str() == "t(0) s(1)" &&
               conjugate_by_u(GE::s(0), 3) == GE::s(3) &&
               conjugate_by_u(GE::t(2), -2) == GE::t(0) &&
               commutator(GE::s(2), GE::t(0)) == GE::z(2) &&
               is_central(GE::z(5));
    st.check("group relations", rel);
    std::mt19937_64 rng(o.seed);
    bool assoc = true;
    for (int i = 0; i < 2000 && assoc; ++i) {
      GE a = random_group_element(rng), b = random_group_element(rng),
         c = random_group_element(rng);
      assoc = multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
    }
    st.check("associativity on 2000 random triples", assoc);
    bool box = true;
    for (int i = 0; i < 2000 && box; ++i) {
      GE g = random_group_element(rng);
      box = is_central(g) == looks_central(g);
    }
    st.check("centre box-check on 2000 random elements", box);
  }

  // Group-ring subalgebra: growth, central witnesses, primeness, nilpotency.
  {
    Options ot = o;
    ot.spec = "tower";
    GroupRing ring = make_ring(ot);
    std::uint32_t n = 8;
    std::uint64_t want = (n + 1) + 7ull * n * (n + 1) / 2;
    st.check("tower subalgebra dimension at n=8",
             b_dim_Vn(ring, n, b_budgets(ot)) == want);
    GroupRingElement wit = central_witness(ring, GInt(1), b_budgets(ot));
    const AGKey* key = wit.single_key();
    st.check("central witness for z(1)",
             key && key->g == GroupElement::z(1) && is_central(key->g));
    st.check("independent witnesses of degree 3",
             independence_check(ring, 3, {GInt(0), GInt(1), GInt(2)},
                                b_budgets(ot)));
  }
  {
    Options og = o;
    og.spec = "geo:2";
    auto eng = make_engine(og);
    auto pad = eng->prime_witness(RunWord::letter('x'), RunWord::letter('x'),
                                  eng->sequence().run(3));
    st.check("x .. x joint through y^2", pad && pad->str() == "y^2");
    GroupRing ring = make_ring(og);
    bool nilp = x_ideal_nilpotency_B(ring, 0, 8, b_budgets(og)) ==
                    std::optional<std::uint32_t>(2) &&
                x_ideal_nilpotency_B(ring, 1, 8, b_budgets(og)) ==
                    std::optional<std::uint32_t>(3) &&
                x_ideal_nilpotency_B(ring, 2, 8, b_budgets(og)) ==
                    std::optional<std::uint32_t>(5);
    st.check("x-ideal nilpotency ladder 2/3/5", nilp);
    GroupRing free_ring = make_ring(og, /*free_words=*/true);
    st.check("free-word control is not nilpotent",
             x_ideal_nilpotency_B(free_ring, 0, 16, b_budgets(og)) ==
                 std::nullopt);
  }

  Report rep;
  std::ostringstream txt;
  txt << st.log.str() << "selftest: " << (st.total - st.failed) << '/'
      << st.total << " checks passed\n";
  rep.text = txt.str();
  rep.body["passed"] = st.total - st.failed;
  rep.body["total"] = st.total;
  rep.body["ok"] = st.failed == 0;
  emit(o, "selftest", std::move(rep));
  if (st.failed != 0) throw std::invalid_argument("selftest failed");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{
      "growth-forge: a recursively defined infinite word, the monomial "
      "algebra of its factors, growth and annihilator oracles, and a "
      "group-ring subalgebra with a large central family"};
  app.require_subcommand(1);

  Options o;
  std::map<CLI::App*, std::function<void()>> handlers;

  // ---- word ----
  auto* word = app.add_subcommand("word", "queries about the infinite word");
  word->require_subcommand(1);
  std::uint32_t arg_k = 3;
  std::string arg_len = "64";
  std::string arg_w, arg_w1, arg_w2, arg_bound;
  std::uint64_t arg_i = 1, arg_xcount = 1;
  bool arg_table = false, arg_letters = false;
  std::int64_t arg_check_level = -1;

  auto* wlen = word->add_subcommand("len", "length of the k-th stage word");
  wlen->add_option("--k", arg_k, "stage index")->required();
  add_common(wlen, o, false);
  handlers[wlen] = [&] {
    auto eng = make_engine(o);
    ExtendedNat v = eng->word_length(arg_k);
    Report r;
    r.text = v.str() + "\n";
    r.body = word_common_body(o);
    r.body["k"] = arg_k;
    r.body["length"] = v.str();
    emit(o, "word len", std::move(r));
  };

  auto* wshow = word->add_subcommand("show", "the k-th stage word in run form");
  wshow->add_option("--k", arg_k, "stage index")->required();
  add_common(wshow, o, false);
  handlers[wshow] = [&] {
    auto eng = make_engine(o);
    RunWord w = eng->level_word(arg_k);
    Report r;
    r.text = w.str() + "\n";
    r.body = word_common_body(o);
    r.body["k"] = arg_k;
    r.body["word"] = w.str();
    emit(o, "word show", std::move(r));
  };

  auto* wgap = word->add_subcommand("gap", "y-run after the i-th x");
  wgap->add_option("--i", arg_i, "x position (1-based)")->required();
  add_common(wgap, o, false);
  handlers[wgap] = [&] {
    auto eng = make_engine(o);
    ExtendedNat g = eng->gap(arg_i);
    Report r;
    std::ostringstream t;
    t << g.str() << " (run index " << VInfinity::ruler(arg_i) << ")\n";
    r.text = t.str();
    r.body = word_common_body(o);
    r.body["i"] = arg_i;
    r.body["run_index"] = VInfinity::ruler(arg_i);
    r.body["gap"] = g.str();
    emit(o, "word gap", std::move(r));
  };

  auto* wprefix =
      word->add_subcommand("prefix", "shortest prefix holding c x letters");
  wprefix->add_option("--xcount", arg_xcount, "number of x letters")->required();
  add_common(wprefix, o, false);
  handlers[wprefix] = [&] {
    auto eng = make_engine(o);
    RunWord w = eng->prefix_with_x(arg_xcount);
    Report r;
    r.text = w.str() + "\n";
    r.body = word_common_body(o);
    r.body["xcount"] = arg_xcount;
    r.body["word"] = w.str();
    emit(o, "word prefix", std::move(r));
  };

  auto* wfactor = word->add_subcommand("factor", "does the word occur?");
  wfactor->add_option("--w", arg_w, "word, run form like 'x y^2 x'")->required();
  wfactor->add_flag("--letters", arg_letters,
                    "treat --w as a raw letter string like 'xyyx'");
  add_common(wfactor, o, false);
  handlers[wfactor] = [&] {
    auto eng = make_engine(o);
    bool ok = arg_letters ? eng->is_factor_letters(arg_w)
                          : eng->is_factor(RunWord::parse(arg_w));
    Report r;
    r.text = std::string(ok ? "factor" : "not-a-factor") + "\n";
    r.body = word_common_body(o);
    r.body["word"] = arg_w;
    r.body["factor"] = ok;
    emit(o, "word factor", std::move(r));
  };

  auto* wcomp =
      word->add_subcommand("complexity", "number of distinct factors");
  wcomp->add_option("--len", arg_len, "factor length")->required();
  wcomp->add_flag("--table", arg_table, "emit the whole table 1..len");
  add_common(wcomp, o, false);
  handlers[wcomp] = [&] {
    auto eng = make_engine(o);
    std::uint64_t L = ExtendedNat::parse(arg_len).to_u64();
    Report r;
    r.body = word_common_body(o);
    if (arg_table) {
      auto table = eng->complexity_table(L);
      std::ostringstream csv;
      csv << "len,factors\n";
      for (std::size_t i = 1; i < table.size(); ++i)
        csv << i << ',' << table[i] << '\n';
      r.csv = csv.str();
      r.text = *r.csv;
      r.body["table"] = std::vector<std::uint64_t>(table.begin(), table.end());
    } else {
      std::uint64_t c = eng->factor_complexity(L);
      r.text = std::to_string(c) + "\n";
      r.body["len"] = L;
      r.body["factors"] = c;
    }
    emit(o, "word complexity", std::move(r));
  };

  auto* wmaxx = word->add_subcommand(
      "maxx", "largest number of x letters in a factor of the given length");
  wmaxx->add_option("--len", arg_len, "factor length (may be symbolic)")
      ->required();
  add_common(wmaxx, o, false);
  handlers[wmaxx] = [&] {
    auto eng = make_engine(o);
    std::uint64_t m = eng->max_x_occurrences(ExtendedNat::parse(arg_len));
    Report r;
    r.text = std::to_string(m) + "\n";
    r.body = word_common_body(o);
    r.body["len"] = arg_len;
    r.body["max_x"] = m;
    emit(o, "word maxx", std::move(r));
  };

  auto* wstable = word->add_subcommand(
      "stable", "stage whose factors of the given length are final");
  wstable->add_option("--len", arg_len, "factor length (may be symbolic)")
      ->required();
  wstable->add_option("--check", arg_check_level,
                      "instead, test whether this stage already suffices");
  add_common(wstable, o, false);
  handlers[wstable] = [&] {
    auto eng = make_engine(o);
    Report r;
    r.body = word_common_body(o);
    r.body["len"] = arg_len;
    if (arg_check_level >= 0) {
      bool ok = eng->stabilization_check(
          ExtendedNat::parse(arg_len).to_u64(),
          static_cast<std::uint32_t>(arg_check_level));
      r.text = std::string(ok ? "stable" : "not-yet-stable") + "\n";
      r.body["k"] = arg_check_level;
      r.body["stable"] = ok;
    } else {
      std::uint32_t k = eng->closed_form_level(ExtendedNat::parse(arg_len));
      r.text = std::to_string(k) + "\n";
      r.body["stable_level"] = k;
    }
    emit(o, "word stable", std::move(r));
  };

  // ---- growth ----
  auto* growth =
      app.add_subcommand("growth", "dimension series of the monomial algebra");
  std::uint32_t arg_nmax = 100;
  growth->add_option("--nmax", arg_nmax, "largest n in the series");
  add_common(growth, o, true);
  handlers[growth] = [&] {
    Field f = Field::parse(o.field);
    Algebra alg = make_algebra(o);
    GrowthReport rep =
        growth_report(alg, alg.default_frame(), arg_nmax, span_budgets(o));
    Report r;
    r.csv = growth_csv(rep, f);
    std::ostringstream t;
    t << "dim V^n for n = 0.." << arg_nmax << " (universe " << o.universe
      << ", spec " << o.spec << ")\n";
    for (std::size_t n = 0; n < rep.dims.size(); ++n)
      t << "  " << n << ": " << rep.dims[n] << '\n';
    t << "verdict: quadratic=" << (rep.quadratic ? "yes" : "no")
      << " c1=" << f.str(rep.c1) << " c2=" << f.str(rep.c2)
      << " slope=" << fmt_double(rep.slope) << " window=" << rep.window_lo
      << ".." << rep.window_hi << '\n';
    r.text = t.str();
    r.body["nmax"] = arg_nmax;
    r.body["dims"] = rep.dims;
    r.body["verdict"] = {{"quadratic", rep.quadratic},
                         {"c1", f.str(rep.c1)},
                         {"c2", f.str(rep.c2)},
                         {"slope", rep.slope},
                         {"window", {rep.window_lo, rep.window_hi}}};
    emit(o, "growth", std::move(r));
  };

  // ---- lemma1 ----
  auto* lemma1 = app.add_subcommand(
      "lemma1", "search for a left annihilator of V^m z in the span tower");
  std::string arg_z = "x";
  std::uint32_t arg_m = 2, arg_l1_nmax = 12;
  lemma1->add_option("--z", arg_z, "algebra element")->required();
  lemma1->add_option("--m", arg_m, "width of the annihilated slab");
  lemma1->add_option("--nmax", arg_l1_nmax, "largest level searched");
  add_common(lemma1, o, true);
  handlers[lemma1] = [&] {
    Algebra alg = make_algebra(o);
    auto frame = alg.default_frame();
    AlgebraElement z = parse_algebra(alg, arg_z);
    auto rep = annihilator_search(alg, z, arg_m, arg_l1_nmax, frame,
                                  span_budgets(o));
    bool rank_ok = rep.dim_kernel == rep.dim_vn - rep.dim_image;
    bool verified =
        rep.element && verify_annihilator(alg, *rep.element, z, arg_m);
    Report r;
    std::ostringstream t;
    if (rep.element)
      t << "annihilator at level " << rep.n << ": " << alg.str(*rep.element)
        << '\n';
    else
      t << "no annihilator up to level " << rep.n << '\n';
    t << "dim V^n=" << rep.dim_vn << " dim V^m z=" << rep.dim_vmz
      << " rank=" << rep.dim_image << " kernel=" << rep.dim_kernel
      << " rank-nullity=" << (rank_ok ? "ok" : "VIOLATED")
      << " reverified=" << (verified ? "yes" : "no") << '\n';
    r.text = t.str();
    r.body["z"] = arg_z;
    r.body["m"] = arg_m;
    r.body["found"] = rep.element.has_value();
    if (rep.element) r.body["element"] = alg.str(*rep.element);
    r.body["n"] = rep.n;
    r.body["dim_vn"] = rep.dim_vn;
    r.body["dim_vmz"] = rep.dim_vmz;
    r.body["dim_image"] = rep.dim_image;
    r.body["dim_kernel"] = rep.dim_kernel;
    r.body["rank_nullity_ok"] = rank_ok;
    r.body["reverified"] = verified;
    emit(o, "lemma1", std::move(r));
  };

  // ---- lemmaC ----
  auto* lemmac = app.add_subcommand(
      "lemmaC", "two-sided growth of z and the low-degree reduction dichotomy");
  std::uint32_t arg_lc_n = 10, arg_lc_bound = 0;
  lemmac->add_option("--z", arg_z, "algebra element")->required();
  lemmac->add_option("--n", arg_lc_n, "growth level tested");
  lemmac->add_option("--bound", arg_lc_bound,
                     "degree bound for the reduction search (default 2n)");
  add_common(lemmac, o, true);
  handlers[lemmac] = [&] {
    Algebra alg = make_algebra(o);
    auto frame = alg.default_frame();
    AlgebraElement z = parse_algebra(alg, arg_z);
    std::uint64_t tsg =
        two_sided_growth(alg, z, arg_lc_n, frame, span_budgets(o));
    std::uint64_t threshold = std::uint64_t(arg_lc_n) * arg_lc_n;
    Report r;
    std::ostringstream t;
    t << "dim span V^" << arg_lc_n << " z V^" << arg_lc_n << " = " << tsg
      << (tsg < threshold ? " < " : " >= ") << "n^2 = " << threshold << '\n';
    r.body["z"] = arg_z;
    r.body["n"] = arg_lc_n;
    r.body["two_sided_dim"] = tsg;
    r.body["threshold"] = threshold;
    r.body["subquadratic"] = tsg < threshold;
    if (tsg < threshold) {
      std::uint32_t bound = arg_lc_bound ? arg_lc_bound : 2 * arg_lc_n;
      auto rel = reduction_search(alg, z, bound, frame, span_budgets(o));
      if (rel) {
        bool verified = verify_reduction(alg, z, *rel);
        t << "reduction at (m,p)=(" << rel->m << ',' << rel->p << ") with "
          << rel->rows.size() << " certificate rows; reverified="
          << (verified ? "yes" : "NO") << '\n';
        r.body["reduction"] = {{"m", rel->m},
                               {"p", rel->p},
                               {"rows", rel->rows.size()},
                               {"reverified", verified}};
      } else {
        t << "no reduction found up to degree " << bound << '\n';
        r.body["reduction"] = nullptr;
      }
    } else {
      t << "growth is quadratic here; no reduction required\n";
    }
    r.text = t.str();
    emit(o, "lemmaC", std::move(r));
  };

  // ---- gk1 ----
  auto* gk1 = app.add_subcommand(
      "gk1", "growth of the powers V^{dn} u^n V^{dn} of a regular element");
  std::string arg_u = "y";
  std::uint32_t arg_d = 1, arg_gk_n = 0, arg_gk_nmax = 0;
  gk1->add_option("--u", arg_u, "algebra element (must not be nilpotent)");
  gk1->add_option("--d", arg_d, "padding degree");
  gk1->add_option("--n", arg_gk_n, "single power to evaluate");
  gk1->add_option("--nmax", arg_gk_nmax, "evaluate the whole series 1..nmax");
  add_common(gk1, o, true);
  handlers[gk1] = [&] {
    Algebra alg = make_algebra(o);
    auto frame = alg.default_frame();
    AlgebraElement u = parse_algebra(alg, arg_u);
    Report r;
    r.body["u"] = arg_u;
    r.body["d"] = arg_d;
    if (arg_gk_n == 0 && arg_gk_nmax == 0) arg_gk_nmax = 20;
    if (arg_gk_nmax > 0) {
      std::vector<std::uint64_t> dims;
      for (std::uint32_t n = 1; n <= arg_gk_nmax; ++n)
        dims.push_back(
            ideal_power_growth(alg, u, arg_d, n, frame, span_budgets(o)));
      std::uint32_t lo = std::max<std::uint32_t>(1, arg_gk_nmax / 3);
      double cfit = -1.0;
      for (std::uint32_t n = lo; n <= arg_gk_nmax; ++n) {
        double c = double(dims[n - 1]) / (double(n) * n);
        if (cfit < 0 || c < cfit) cfit = c;
      }
      std::ostringstream csv, t;
      csv << "n,dim\n";
      for (std::uint32_t n = 1; n <= arg_gk_nmax; ++n)
        csv << n << ',' << dims[n - 1] << '\n';
      csv << "# verdict: c_fit=" << fmt_double(cfit) << " window=" << lo << ".."
          << arg_gk_nmax << '\n';
      r.csv = csv.str();
      t << "dim span V^{dn} u^n V^{dn} for n = 1.." << arg_gk_nmax << ":\n";
      for (std::uint32_t n = 1; n <= arg_gk_nmax; ++n)
        t << "  " << n << ": " << dims[n - 1] << '\n';
      t << "fitted C (min dim/n^2 over " << lo << ".." << arg_gk_nmax
        << ") = " << fmt_double(cfit) << '\n';
      r.text = t.str();
      r.body["dims"] = dims;
      r.body["c_fit"] = cfit;
      r.body["window"] = {lo, arg_gk_nmax};
    } else {
      std::uint64_t dim =
          ideal_power_growth(alg, u, arg_d, arg_gk_n, frame, span_budgets(o));
      r.text = std::to_string(dim) + "\n";
      r.body["n"] = arg_gk_n;
      r.body["dim"] = dim;
    }
    emit(o, "gk1", std::move(r));
  };

  // ---- group ----
  auto* group = app.add_subcommand("group", "operations in the witness group");
  group->require_subcommand(1);
  std::string arg_ga, arg_gb;
  std::int64_t arg_conj_k = 1;

  auto add_group_leaf = [&](const char* name, const char* help, int arity,
                            std::function<std::string()> run) {
    auto* leaf = group->add_subcommand(name, help);
    leaf->add_option("a", arg_ga, "group element")->required();
    if (arity == 2) leaf->add_option("b", arg_gb, "group element")->required();
    if (std::string(name) == "conj")
      leaf->add_option("--k", arg_conj_k, "conjugation power");
    add_common(leaf, o, false);
    handlers[leaf] = [&o, name, run] {
      std::string out = run();
      Report r;
      r.text = out + "\n";
      r.body["result"] = out;
      emit(o, std::string("group ") + name, std::move(r));
    };
    return leaf;
  };

  add_group_leaf("mul", "product of two elements", 2, [&] {
    return multiply(GroupElement::parse(arg_ga), GroupElement::parse(arg_gb))
        .str();
  });
  add_group_leaf("inv", "inverse", 1,
                 [&] { return inverse(GroupElement::parse(arg_ga)).str(); });
  add_group_leaf("conj", "conjugate by the k-th power of the shift", 1, [&] {
    return conjugate_by_u(GroupElement::parse(arg_ga), GInt(arg_conj_k)).str();
  });
  add_group_leaf("comm", "commutator a b a^-1 b^-1", 2, [&] {
    return commutator(GroupElement::parse(arg_ga), GroupElement::parse(arg_gb))
        .str();
  });
  add_group_leaf("central", "is the element central?", 1, [&] {
    return is_central(GroupElement::parse(arg_ga)) ? std::string("true")
                                                   : std::string("false");
  });
  add_group_leaf("parse", "canonical form", 1,
                 [&] { return GroupElement::parse(arg_ga).str(); });

  // ---- bgrowth ----
  auto* bgrowth = app.add_subcommand(
      "bgrowth", "dimension series of the group-ring subalgebra");
  std::uint32_t arg_b_nmax = 12;
  double arg_eps = 0.5;
  bgrowth->add_option("--nmax", arg_b_nmax, "largest n in the series");
  bgrowth->add_option("--eps", arg_eps, "trend exponent margin");
  add_common(bgrowth, o, false);
  handlers[bgrowth] = [&] {
    GroupRing ring = make_ring(o);
    BGrowthReport rep = b_growth_report(ring, arg_b_nmax, arg_eps, b_budgets(o));
    Report r;
    std::ostringstream csv, t;
    csv << "n,dim\n";
    for (std::size_t n = 0; n < rep.dims.size(); ++n)
      csv << n << ',' << rep.dims[n] << '\n';
    csv << "# verdict: slope=" << fmt_double(rep.slope)
        << " trend_ok=" << (rep.trend_ok ? 1 : 0) << " eps="
        << fmt_double(rep.eps) << " window=" << rep.window_lo << ".."
        << rep.window_hi << '\n';
    r.csv = csv.str();
    t << "dim V^n of the subalgebra for n = 0.." << arg_b_nmax << " (spec "
      << o.spec << ")\n";
    for (std::size_t n = 0; n < rep.dims.size(); ++n)
      t << "  " << n << ": " << rep.dims[n] << '\n';
    t << "verdict: slope=" << fmt_double(rep.slope)
      << " trend_ok=" << (rep.trend_ok ? "yes" : "no") << " window="
      << rep.window_lo << ".." << rep.window_hi << '\n';
    r.text = t.str();
    r.body["nmax"] = arg_b_nmax;
    r.body["dims"] = rep.dims;
    r.body["verdict"] = {{"slope", rep.slope},
                         {"trend_ok", rep.trend_ok},
                         {"eps", rep.eps},
                         {"window", {rep.window_lo, rep.window_hi}}};
    emit(o, "bgrowth", std::move(r));
  };

  // ---- witness ----
  auto* witness = app.add_subcommand(
      "witness", "central elements of the subalgebra and their independence");
  witness->require_subcommand(1);
  std::int64_t arg_wn = 1;
  std::uint32_t arg_degree = 3;
  std::vector<std::int64_t> arg_indices;
  std::string arg_g = "s(1)";
  std::uint64_t arg_cmax = 8;

  auto* wcentral = witness->add_subcommand(
      "central", "single-term element whose group part is the n-th centre generator");
  wcentral->add_option("--n", arg_wn, "centre index")->required();
  add_common(wcentral, o, false);
  handlers[wcentral] = [&] {
    GroupRing ring = make_ring(o);
    GroupRingElement wit = central_witness(ring, GInt(arg_wn), b_budgets(o));
    const AGKey* key = wit.single_key();
    bool central = key && is_central(key->g);
    bool exact = key && key->g == GroupElement::z(GInt(arg_wn));
    Report r;
    std::ostringstream t;
    t << ring.str(wit) << '\n'
      << "group part central: " << (central ? "yes" : "NO")
      << ", equals expected generator: " << (exact ? "yes" : "NO") << '\n';
    r.text = t.str();
    r.body["n"] = arg_wn;
    r.body["witness"] = ring.str(wit);
    if (key) {
      r.body["word"] = key->word.str();
      r.body["group"] = key->g.str();
    }
    r.body["central"] = central;
    r.body["exact_generator"] = exact;
    emit(o, "witness central", std::move(r));
  };

  auto* windep = witness->add_subcommand(
      "indep", "products of central witnesses stay nonzero and distinct");
  windep->add_option("--degree", arg_degree, "largest product length");
  windep->add_option("--indices", arg_indices, "centre indices, comma separated")
      ->delimiter(',')
      ->required();
  add_common(windep, o, false);
  handlers[windep] = [&] {
    GroupRing ring = make_ring(o);
    std::vector<GInt> idx(arg_indices.begin(), arg_indices.end());
    bool ok = independence_check(ring, arg_degree, idx, b_budgets(o));
    Report r;
    r.text = std::string("independent: ") + (ok ? "true" : "false") + "\n";
    r.body["degree"] = arg_degree;
    r.body["indices"] = arg_indices;
    r.body["independent"] = ok;
    emit(o, "witness indep", std::move(r));
  };

  auto* wexpress = witness->add_subcommand(
      "express", "write a group element as a product of subalgebra generators");
  wexpress->add_option("--g", arg_g, "group element")->required();
  wexpress->add_option("--cmax", arg_cmax, "largest number of x letters used");
  add_common(wexpress, o, false);
  handlers[wexpress] = [&] {
    GroupRing ring = make_ring(o);
    auto ex = express_in_B(ring, GroupElement::parse(arg_g), arg_cmax,
                           b_budgets(o));
    Report r;
    if (!ex) {
      r.text = "not expressible within the x budget\n";
      r.body["found"] = false;
    } else {
      std::ostringstream t;
      t << "generators:";
      json gens = json::array();
      for (std::size_t gi : ex->gens) {
        t << ' ' << kBGeneratorNames[gi];
        gens.push_back(kBGeneratorNames[gi]);
      }
      t << "\npaddings:";
      json pads = json::array();
      for (const ExtendedNat& p : ex->paddings) {
        t << ' ' << p.str();
        pads.push_back(p.str());
      }
      t << "\nproduct: " << ring.str(ex->product) << "\ncost: " << ex->cost
        << " x letters\n";
      r.text = t.str();
      r.body["found"] = true;
      r.body["generators"] = gens;
      r.body["paddings"] = pads;
      r.body["product"] = ring.str(ex->product);
      r.body["cost"] = ex->cost;
    }
    r.body["g"] = arg_g;
    emit(o, "witness express", std::move(r));
  };

  // ---- prime ----
  auto* prime = app.add_subcommand(
      "prime", "two-sided joint witnesses in the word and in the subalgebra");
  prime->require_subcommand(1);
  std::string arg_b1, arg_b2;

  auto* pword = prime->add_subcommand(
      "word", "shortest pad making w1 <pad> w2 a factor of the infinite word");
  pword->add_option("--w1", arg_w1, "left word, run form")->required();
  pword->add_option("--w2", arg_w2, "right word, run form")->required();
  pword->add_option("--bound", arg_bound, "pad length bound (may be symbolic)")
      ->required();
  add_common(pword, o, false);
  handlers[pword] = [&] {
    auto eng = make_engine(o);
    RunWord w1 = RunWord::parse(arg_w1), w2 = RunWord::parse(arg_w2);
    auto pad = eng->prime_witness(w1, w2, ExtendedNat::parse(arg_bound));
    Report r;
    r.body["w1"] = arg_w1;
    r.body["w2"] = arg_w2;
    r.body["bound"] = arg_bound;
    if (pad) {
      bool verified = eng->is_factor(w1.concat(*pad).concat(w2));
      r.text = pad->str() + (verified ? "\n" : "  (UNVERIFIED)\n");
      r.body["pad"] = pad->str();
      r.body["verified"] = verified;
    } else {
      r.text = "none\n";
      r.body["pad"] = nullptr;
    }
    emit(o, "prime word", std::move(r));
  };

  auto* pb = prime->add_subcommand(
      "b", "middle factor keeping b1 * c * b2 nonzero in the subalgebra");
  pb->add_option("--b1", arg_b1, "left element, group-ring grammar")->required();
  pb->add_option("--b2", arg_b2, "right element, group-ring grammar")
      ->required();
  pb->add_option("--bound", arg_bound,
                 "word length bound for the middle factor (may be symbolic)");
  pb->add_option("--cmax", arg_cmax, "largest number of x letters in the pad");
  add_common(pb, o, false);
  handlers[pb] = [&] {
    GroupRing ring = make_ring(o);
    GroupRingElement b1 = parse_groupring(ring, arg_b1);
    GroupRingElement b2 = parse_groupring(ring, arg_b2);
    ExtendedNat bound;
    if (arg_bound.empty()) {
      try {
        bound = ring.engine().word_length(6);
      } catch (const TowerOverflow&) {
        bound = ring.engine().sequence().run(6);
      }
    } else {
      bound = ExtendedNat::parse(arg_bound);
    }
    auto c = prime_witness_B(ring, b1, b2, bound, arg_cmax, b_budgets(o));
    Report r;
    r.body["b1"] = arg_b1;
    r.body["b2"] = arg_b2;
    r.body["bound"] = bound.str();
    if (c) {
      GroupRingElement prod = ring.multiply(ring.multiply(b1, *c), b2);
      bool verified = !prod.is_zero();
      std::ostringstream t;
      t << ring.str(*c) << '\n'
        << "product: " << ring.str(prod)
        << (verified ? "" : "  (UNVERIFIED)") << '\n';
      r.text = t.str();
      r.body["witness"] = ring.str(*c);
      r.body["product"] = ring.str(prod);
      r.body["verified"] = verified;
    } else {
      r.text = "none\n";
      r.body["witness"] = nullptr;
    }
    emit(o, "prime b", std::move(r));
  };

  // ---- nilp ----
  auto* nilp = app.add_subcommand(
      "nilp", "nilpotency of slabs around a nilpotent element");
  std::string arg_side = "b";
  std::uint32_t arg_nilp_d = 1, arg_kmax = 64;
  bool arg_free = false;
  nilp->add_option("--side", arg_side,
                   "a: monomial algebra around u; b: x-slabs of the subalgebra");
  nilp->add_option("--u", arg_u, "algebra element (side a)");
  nilp->add_option("--d", arg_nilp_d, "slab width");
  nilp->add_option("--kmax", arg_kmax, "largest power tried");
  nilp->add_flag("--free", arg_free,
                 "side b control: drop the word constraint entirely");
  add_common(nilp, o, true);
  handlers[nilp] = [&] {
    Report r;
    std::optional<std::uint32_t> k;
    if (arg_side == "a") {
      Algebra alg = make_algebra(o);
      AlgebraElement u = parse_algebra(alg, arg_u);
      k = nilpotency_index(alg, u, arg_nilp_d, arg_kmax, alg.default_frame(),
                           span_budgets(o));
      r.body["u"] = arg_u;
    } else if (arg_side == "b") {
      GroupRing ring = make_ring(o, arg_free);
      k = x_ideal_nilpotency_B(ring, arg_nilp_d, arg_kmax, b_budgets(o));
      r.body["free_words"] = arg_free;
    } else {
      throw std::invalid_argument("unknown side: " + arg_side);
    }
    r.body["side"] = arg_side;
    r.body["d"] = arg_nilp_d;
    r.body["kmax"] = arg_kmax;
    if (k) {
      r.text = std::to_string(*k) + "\n";
      r.body["index"] = *k;
    } else {
      r.text = "none\n";
      r.body["index"] = nullptr;
    }
    emit(o, "nilp", std::move(r));
  };

  // ---- selftest ----
  auto* selftest =
      app.add_subcommand("selftest", "run the built-in consistency battery");
  add_common(selftest, o, false);
  handlers[selftest] = [&] { run_selftest(o); };

  try {
    app.parse(argc, argv);
    apply_config(o);
    for (auto& [leaf, fn] : handlers)
      if (leaf->parsed()) {
        fn();
        break;
      }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "growth-forge: budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const TowerOverflow& e) {
    std::cerr << "growth-forge: value not materializable: " << e.what() << '\n';
    return 1;
  } catch (const NilpotentInputError& e) {
    std::cerr << "growth-forge: rejected: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "growth-forge: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
