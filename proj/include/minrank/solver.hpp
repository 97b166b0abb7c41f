#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minrank/geom.hpp"
#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

inline constexpr std::uint64_t kDefaultSolverBudget = 100'000'000;
inline constexpr std::size_t kDefaultMinrankLimit = 14;

enum class SolveStatus { found, none, undecided };

struct DecisionResult {
  SolveStatus status = SolveStatus::none;
  std::optional<Matrix<GF>> witness;
  std::uint64_t nodes_used = 0;
};

enum class LowerTag { independence, product_inequality };
enum class UpperTag { clique_cover, search };

struct MinrankResult {
  std::size_t value = 0;
  std::optional<Matrix<GF>> witness;
  std::size_t lower = 0;
  LowerTag lower_tag = LowerTag::independence;
  std::size_t upper = 0;
  UpperTag upper_tag = UpperTag::clique_cover;
  bool exact = true;  // false: only the bracket [lower, upper] is known
  std::uint64_t nodes_used = 0;
};

namespace detail {

// Row-assignment search for a fit of rank <= k over GF(q).  Rows are
// assigned in ascending-degree vertex order; each row has diagonal 1 and
// support inside N(i) u {i}; candidates are tried fewest-nonzeros first.
// Prunes any prefix whose row-space rank exceeds k.
class FitSearch {
 public:
  FitSearch(const Graph& g, std::uint32_t q, std::size_t k, std::uint64_t budget)
      : g_(g), dom_(q), k_(k), budget_(budget), n_(g.n()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return g.degree(a) < g.degree(b);
                     });
    rows_.assign(n_, {});
    candidates_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) candidates_[v] = make_candidates(v);
  }

  DecisionResult run() {
    DecisionResult res;
    bool found = false;
    try {
      found = dfs(0);
    } catch (const budget_hit&) {
      res.status = SolveStatus::undecided;
      res.nodes_used = nodes_;
      return res;
    }
    res.nodes_used = nodes_;
    if (!found) {
      res.status = SolveStatus::none;
      return res;
    }
    Matrix<GF> m(dom_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = rows_[i][j];
    res.status = SolveStatus::found;
    res.witness = std::move(m);
    return res;
  }

 private:
  struct budget_hit {};

  using Row = std::vector<std::uint32_t>;

  // All pattern-respecting rows for vertex v, sorted by nonzero count
  // (lexicographic within a count for determinism).
  std::vector<Row> make_candidates(std::size_t v) const {
    std::vector<std::size_t> nbrs;
    for (std::size_t j = 0; j < n_; ++j)
      if (g_.has_edge(v, j)) nbrs.push_back(j);
    const std::size_t deg = nbrs.size();
    std::vector<Row> cands;
    std::vector<std::uint32_t> vals(deg, 0);
    while (true) {
      Row r(n_, 0);
      r[v] = 1;
      for (std::size_t t = 0; t < deg; ++t) r[nbrs[t]] = vals[t];
      cands.push_back(std::move(r));
      std::size_t pos = 0;
      while (pos < deg && ++vals[pos] == dom_.q) vals[pos++] = 0;
      if (pos == deg) break;
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Row& a, const Row& b) {
                       auto nz = [](const Row& r) {
                         std::size_t c = 0;
                         for (auto x : r) c += x != 0;
                         return c;
                       };
                       return nz(a) < nz(b);
                     });
    return cands;
  }

  // Reduces r in place against the current basis; returns the leading
  // column if a nonzero remainder survives.
  std::optional<std::size_t> reduce(Row& r) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      std::uint32_t f = r[pivcol_[b]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        r[j] = dom_.sub(r[j], dom_.mul(f, basis_[b][j]));
    }
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j] != 0) return j;
    return std::nullopt;
  }

  bool dfs(std::size_t pos) {
    if (pos == n_) return true;
    const std::size_t v = order_[pos];
    for (const Row& cand : candidates_[v]) {
      if (++nodes_ > budget_) throw budget_hit{};
      Row rem = cand;
      auto lead = reduce(rem);
      bool pushed = false;
      if (lead) {
        if (basis_.size() == k_) continue;  // would exceed rank k
        std::uint32_t inv = dom_.inv(rem[*lead]);
        for (auto& x : rem) x = dom_.mul(x, inv);
        basis_.push_back(std::move(rem));
        pivcol_.push_back(*lead);
        pushed = true;
      }
      rows_[v] = cand;
      if (dfs(pos + 1)) return true;
      if (pushed) {
        basis_.pop_back();
        pivcol_.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  GF dom_;
  std::size_t k_;
  std::uint64_t budget_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Row>> candidates_;
  std::vector<Row> rows_;
  std::vector<Row> basis_;
  std::vector<std::size_t> pivcol_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Decision form: a fit of rank <= k over GF(q), "none" when the search
// space is exhausted, "undecided" when the node budget runs out first.
inline DecisionResult minrank_decision(const Graph& g, std::uint32_t q,
                                       std::size_t k,
                                       std::uint64_t budget = kDefaultSolverBudget) {
  if (k > g.n()) throw std::invalid_argument("minrank_decision: k > n");
  return detail::FitSearch(g, q, k, budget).run();
}

template <class D>
bool verify_certificate(const Graph& g, const Matrix<D>& m, std::size_t claimed) {
  return is_fit(m, g) && mat_rank(m) <= claimed;
}

// alpha(G) and the exact clique-cover number: the field-independent
// sandwich alpha <= minrank <= cc.
inline std::pair<std::size_t, std::size_t> sandwich(const Graph& g) {
  return {independence_number(g), clique_cover_exact(g).first};
}

// Exact minrank over GF(q) by iterative deepening between the sandwich
// bounds, with a witness certificate.  On budget exhaustion only the
// bracket is returned (exact = false).
inline MinrankResult minrank_exact(const Graph& g, std::uint32_t q,
                                   std::uint64_t budget = kDefaultSolverBudget,
                                   std::size_t limit = kDefaultMinrankLimit) {
  if (g.n() > limit) throw limit_exceeded("minrank_exact: instance too large");

  const std::size_t alpha = independence_number(g);
  auto [cc, cover] = clique_cover_exact(g);
  // product route: minrank(G) * minrank(complement) >= n and
  // minrank(complement) <= cc(complement)
  const std::size_t cc_comp = clique_cover_exact(complement(g)).first;
  const std::size_t product_lower = (g.n() + cc_comp - 1) / cc_comp;

  MinrankResult res;
  res.lower = std::max(alpha, product_lower);
  res.lower_tag =
      alpha >= product_lower ? LowerTag::independence : LowerTag::product_inequality;
  res.upper = cc;
  res.upper_tag = UpperTag::clique_cover;
  res.witness = fit_from_coloring(GF(q), g, cover);

  if (res.lower == res.upper) {
    res.value = res.upper;
    res.exact = true;
    return res;
  }

  std::uint64_t remaining = budget;
  for (std::size_t k = res.lower; k < res.upper; ++k) {
    DecisionResult dec = minrank_decision(g, q, k, remaining);
    res.nodes_used += dec.nodes_used;
    if (dec.status == SolveStatus::found) {
      res.value = k;
      res.witness = std::move(dec.witness);
      res.upper = k;
      res.upper_tag = UpperTag::search;
      res.exact = true;
      return res;
    }
    if (dec.status == SolveStatus::undecided) {
      res.lower = std::max(res.lower, k);  // every smaller k was refuted
      res.exact = false;
      res.value = res.upper;
      return res;
    }
    remaining -= dec.nodes_used;
  }
  // every k < cc refuted: the clique-cover witness is optimal
  res.value = res.upper;
  res.lower = res.upper;
  res.exact = true;
  return res;
}

}  // namespace minrank
