#include "gforge/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "gforge/errors.hpp"
#include "gforge/linalg.hpp"

namespace gforge {

namespace {

void check_frame(const Algebra& alg, const std::vector<AlgebraElement>& frame) {
  if (frame.empty()) throw std::invalid_argument("frame must not be empty");
  for (const auto& e : frame)
    if (e == alg.one()) return;
  throw std::invalid_argument("frame must contain 1");
}

// Frame words when every frame element is a single term; empty otherwise.
std::vector<std::string> monomial_frame_words(
    const std::vector<AlgebraElement>& frame) {
  std::vector<std::string> words;
  for (const auto& e : frame) {
    const std::string* w = e.single_word();
    if (!w) return {};
    words.push_back(*w);
  }
  std::sort(words.begin(), words.end(), DegLex());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

// Breadth-first span closure. Fills dims; fills out for levels 0..n_max when
// out is given. A frame of single-term elements reduces to a walk over
// distinct words; otherwise products are row-reduced exactly.
void span_bfs(const Algebra& alg, const std::vector<AlgebraElement>& frame,
              std::uint32_t n_max, const SpanBudgets& budgets,
              std::vector<std::uint64_t>& dims, SpanLevels* out) {
  check_frame(alg, frame);
  dims.assign(n_max + 1, 0);

  std::vector<std::string> words = monomial_frame_words(frame);
  if (!words.empty()) {
    std::unordered_set<std::string> seen{""};
    std::vector<std::string> frontier{""};
    if (out) {
      out->elements.push_back(alg.one());
      out->level_end.assign(n_max + 1, 1);
    }
    dims[0] = 1;
    std::size_t walked = 0;
    for (std::uint32_t k = 1; k <= n_max; ++k) {
      std::vector<std::string> next;
      for (const std::string& w : frontier) {
        for (const std::string& f : words) {
          if (f.empty()) continue;
          if (++walked > budgets.max_enum)
            throw BudgetError("span walk exceeds the enumeration budget");
          std::string u = w + f;
          if (seen.count(u) || !alg.universe().allows(u)) continue;
          if (seen.size() >= budgets.max_dim)
            throw BudgetError("span dimension exceeds the budget");
          seen.insert(u);
          next.push_back(std::move(u));
        }
      }
      std::sort(next.begin(), next.end(), DegLex());
      if (out)
        for (const std::string& u : next)
          out->elements.push_back(alg.from_word(u));
      dims[k] = seen.size();
      if (out) out->level_end[k] = seen.size();
      frontier = std::move(next);
    }
    return;
  }

  RowBasis<std::string, DegLex> basis(alg.field());
  std::vector<AlgebraElement> frontier;
  basis.insert(TermMap{{"", Scalar(1)}});
  frontier.push_back(alg.one());
  if (out) {
    out->elements.push_back(alg.one());
    out->level_end.assign(n_max + 1, 1);
  }
  dims[0] = 1;
  std::size_t products = 0;
  for (std::uint32_t k = 1; k <= n_max; ++k) {
    std::vector<AlgebraElement> next;
    for (const AlgebraElement& e : frontier) {
      for (const AlgebraElement& f : frame) {
        if (++products > budgets.max_products)
          throw BudgetError("span products exceed the budget");
        AlgebraElement p = alg.multiply(e, f);
        if (p.is_zero()) continue;
        if (basis.dim() >= budgets.max_dim)
          throw BudgetError("span dimension exceeds the budget");
        if (!basis.insert(p.terms())) {
          AlgebraElement r = alg.from_terms(basis.rows().back());
          if (out) out->elements.push_back(r);
          next.push_back(std::move(r));
        }
      }
    }
    dims[k] = basis.dim();
    if (out) out->level_end[k] = basis.dim();
    frontier = std::move(next);
  }
}

} // namespace

SpanLevels span_levels(const Algebra& alg,
                       const std::vector<AlgebraElement>& frame,
                       std::uint32_t n_max, const SpanBudgets& budgets) {
  SpanLevels out;
  std::vector<std::uint64_t> dims;
  span_bfs(alg, frame, n_max, budgets, dims, &out);
  return out;
}

std::vector<AlgebraElement> span_basis(const Algebra& alg,
                                       const std::vector<AlgebraElement>& frame,
                                       std::uint32_t n,
                                       const SpanBudgets& budgets) {
  return span_levels(alg, frame, n, budgets).elements;
}

std::vector<std::uint64_t> dim_series(const Algebra& alg,
                                      const std::vector<AlgebraElement>& frame,
                                      std::uint32_t n_max,
                                      const SpanBudgets& budgets) {
  std::vector<std::uint64_t> dims;
  span_bfs(alg, frame, n_max, budgets, dims, nullptr);
  return dims;
}

std::uint64_t dim_Vn(const Algebra& alg,
                     const std::vector<AlgebraElement>& frame, std::uint32_t n,
                     const SpanBudgets& budgets) {
  return dim_series(alg, frame, n, budgets).back();
}

double gk_estimate(const std::vector<std::uint64_t>& dims, std::uint32_t lo,
                   std::uint32_t hi) {
  std::vector<std::pair<double, double>> pts;
  for (std::uint32_t n = std::max(lo, 2u); n <= hi && n < dims.size(); ++n)
    if (dims[n] > 0)
      pts.emplace_back(std::log(double(n)), std::log(double(dims[n])));
  if (pts.size() < 3)
    throw std::invalid_argument("degenerate window: need 3 points with n >= 2");
  double mx = 0, my = 0;
  for (auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

GrowthReport growth_report(const Algebra& alg,
                           const std::vector<AlgebraElement>& frame,
                           std::uint32_t n_max, const SpanBudgets& budgets) {
  GrowthReport rep;
  rep.dims = dim_series(alg, frame, n_max, budgets);
  rep.window_lo = std::max<std::uint32_t>(1, n_max / 2);
  rep.window_hi = n_max;
  bool first = true;
  for (std::uint32_t n = rep.window_lo; n <= rep.window_hi; ++n) {
    Scalar v = Scalar(rep.dims[n]) / Scalar(std::uint64_t(n) * n);
    if (first || v < rep.c1) rep.c1 = v;
    if (first || v > rep.c2) rep.c2 = v;
    first = false;
  }
  try {
    rep.slope = gk_estimate(rep.dims, rep.window_lo, rep.window_hi);
  } catch (const std::invalid_argument&) {
    rep.quadratic = false;
    return rep;
  }
  rep.quadratic = rep.c1 > 0 && rep.c2 <= rep.c1 * 8 && rep.slope >= 1.6 &&
                  rep.slope <= 2.4;
  return rep;
}

bool bergman_bound_check(const Algebra& alg,
                         const std::vector<AlgebraElement>& frame,
                         std::uint32_t n, const SpanBudgets& budgets) {
  std::uint64_t need = std::uint64_t(n) * (n + 1) / 2;
  return dim_Vn(alg, frame, n, budgets) >= need;
}

} // namespace gforge
