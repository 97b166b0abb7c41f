#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minrank/common.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

// Simple undirected labeled graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {
    if (n == 0) throw std::invalid_argument("Graph: n must be positive");
  }

  std::size_t n() const { return n_; }

  bool has_edge(std::size_t i, std::size_t j) const {
    return i != j && adj_[i * n_ + j];
  }

  void add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("Graph: endpoint out of range");
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    adj_[i * n_ + j] = adj_[j * n_ + i] = true;
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (has_edge(i, j)) ++d;
    return d;
  }

  // Sorted (i<j, lexicographic) edge list.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) e.emplace_back(i, j);
    return e;
  }

  std::size_t edge_count() const { return edges().size(); }

  bool operator==(const Graph& o) const = default;

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

// Deterministic G(n,p): one splitmix64 output per pair (i,j), i<j, in
// lexicographic order; edge included iff p >= 1 or u < floor(p * 2^64).
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p out of [0,1]");
  Graph g(n);
  // 2^64 as long double; the product is exact enough for the 64-bit floor.
  const long double two64 = 18446744073709551616.0L;
  const std::uint64_t threshold =
      p >= 1.0 ? 0 : static_cast<std::uint64_t>(static_cast<long double>(p) * two64);
  splitmix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint64_t u = rng.next();
      if (p >= 1.0 || u < threshold) g.add_edge(i, j);
    }
  return g;
}

inline Graph complement(const Graph& g) {
  Graph c(g.n());
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = i + 1; j < g.n(); ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

// Vertex coloring; properness is always asserted against a stated target
// graph by whichever operation produced it.
struct Coloring {
  std::size_t n = 0;
  std::vector<std::size_t> class_of;
  std::size_t num_colors = 0;
};

inline bool is_proper(const Coloring& c, const Graph& g) {
  if (c.n != g.n() || c.class_of.size() != g.n()) return false;
  for (auto [i, j] : g.edges())
    if (c.class_of[i] == c.class_of[j]) return false;
  for (std::size_t v : c.class_of)
    if (v >= c.num_colors) return false;
  return true;
}

namespace detail {

// Bitmask adjacency for the exact searches (n <= 64).
inline std::vector<std::uint64_t> adj_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n(), 0);
  for (auto [i, j] : g.edges()) {
    adj[i] |= std::uint64_t(1) << j;
    adj[j] |= std::uint64_t(1) << i;
  }
  return adj;
}

// Tomita-style branch and bound for a maximum clique, with a greedy
// coloring bound.  Vertices inside `cand` only.
class MaxClique {
 public:
  explicit MaxClique(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::size_t solve() {
    best_ = 0;
    std::uint64_t all = adj_.size() == 64
                            ? ~std::uint64_t(0)
                            : (std::uint64_t(1) << adj_.size()) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t cand, std::size_t size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy color classes over cand; color number bounds the clique size.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    std::uint64_t rest = cand;
    std::size_t color = 0;
    while (rest) {
      ++color;
      std::uint64_t cls = rest;
      while (cls) {
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(cls));
        cls &= ~(std::uint64_t(1) << v);
        cls &= ~adj_[v];
        rest &= ~(std::uint64_t(1) << v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    // Process in reverse color order; cand holds exactly order[0..t].
    for (std::size_t t = order.size(); t-- > 0;) {
      if (size + bound[t] <= best_) return;
      std::size_t v = order[t];
      cand &= ~(std::uint64_t(1) << v);
      expand(cand & adj_[v], size + 1);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::size_t best_ = 0;
};

// Backtracking k-colorability with saturation-first vertex selection.
class KColoring {
 public:
  explicit KColoring(std::vector<std::uint64_t> adj)
      : adj_(std::move(adj)), n_(adj_.size()) {}

  // Returns a proper k-coloring if one exists.
  bool try_color(std::size_t k, std::vector<std::size_t>& out) {
    k_ = k;
    color_.assign(n_, SIZE_MAX);
    forbidden_.assign(n_, 0);
    if (!place(0)) return false;
    out = color_;
    return true;
  }

 private:
  bool place(std::size_t assigned) {
    if (assigned == n_) return true;
    // Most saturated uncolored vertex; ties by degree then index.
    std::size_t pick = SIZE_MAX, pick_sat = 0, pick_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != SIZE_MAX) continue;
      std::size_t sat =
          static_cast<std::size_t>(__builtin_popcountll(forbidden_[v]));
      std::size_t deg = static_cast<std::size_t>(__builtin_popcountll(adj_[v]));
      if (pick == SIZE_MAX || sat > pick_sat ||
          (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    // Symmetry break: a fresh color only as color used_colors_.
    std::size_t limit = std::min(k_, used_colors_ + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden_[pick] >> c & 1) continue;
      color_[pick] = c;
      std::size_t prev_used = used_colors_;
      used_colors_ = std::max(used_colors_, c + 1);
      std::vector<std::size_t> touched;
      std::uint64_t nb = adj_[pick];
      while (nb) {
        std::size_t u = static_cast<std::size_t>(__builtin_ctzll(nb));
        nb &= nb - 1;
        if (!(forbidden_[u] >> c & 1)) {
          forbidden_[u] |= std::uint64_t(1) << c;
          touched.push_back(u);
        }
      }
      if (place(assigned + 1)) return true;
      for (std::size_t u : touched) forbidden_[u] &= ~(std::uint64_t(1) << c);
      used_colors_ = prev_used;
      color_[pick] = SIZE_MAX;
    }
    return false;
  }

  std::vector<std::uint64_t> adj_;
  std::size_t n_, k_ = 0;
  std::vector<std::size_t> color_;
  std::vector<std::uint64_t> forbidden_;
  std::size_t used_colors_ = 0;
};

inline void renumber_colors(std::vector<std::size_t>& cls) {
  std::vector<std::size_t> remap(cls.size(), SIZE_MAX);
  std::size_t next = 0;
  for (auto& c : cls) {
    if (remap[c] == SIZE_MAX) remap[c] = next++;
    c = remap[c];
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultAlphaLimit = 24;
inline constexpr std::size_t kDefaultCliqueCoverLimit = 18;

inline std::size_t independence_number(const Graph& g,
                                       std::size_t limit = kDefaultAlphaLimit) {
  if (g.n() > limit || g.n() > 64)
    throw limit_exceeded("independence_number: instance too large");
  return detail::MaxClique(detail::adj_masks(complement(g))).solve();
}

// Minimum clique cover of G = exact chromatic number of the complement,
// with a witness coloring (classes are cliques of G).
inline std::pair<std::size_t, Coloring> clique_cover_exact(
    const Graph& g, std::size_t limit = kDefaultCliqueCoverLimit) {
  if (g.n() > limit || g.n() > 64)
    throw limit_exceeded("clique_cover_exact: instance too large");
  Graph comp = complement(g);
  auto adj = detail::adj_masks(comp);
  std::size_t lb = detail::MaxClique(adj).solve();  // clique of comp = alpha(G)
  std::vector<std::size_t> cls;
  for (std::size_t k = lb; k <= g.n(); ++k) {
    if (detail::KColoring(adj).try_color(k, cls)) {
      detail::renumber_colors(cls);
      Coloring c{g.n(), cls, k};
      return {k, c};
    }
  }
  throw std::logic_error("clique_cover_exact: unreachable");
}

// Greedy coloring of the complement in descending-degree order (index
// tie-break); scalable upper bound for the experiment harness.
inline std::pair<std::size_t, Coloring> greedy_clique_cover(const Graph& g) {
  Graph comp = complement(g);
  std::vector<std::size_t> order(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return comp.degree(a) > comp.degree(b);
  });
  std::vector<std::size_t> cls(g.n(), SIZE_MAX);
  std::size_t used = 0;
  for (std::size_t v : order) {
    std::vector<bool> taken(used + 1, false);
    for (std::size_t u = 0; u < g.n(); ++u)
      if (cls[u] != SIZE_MAX && comp.has_edge(u, v) && cls[u] <= used)
        taken[cls[u]] = true;
    std::size_t c = 0;
    while (c < used && taken[c]) ++c;
    cls[v] = c;
    used = std::max(used, c + 1);
  }
  Coloring col{g.n(), cls, used};
  return {used, col};
}

// Definition check: nonzero diagonal, zero entries on non-edges.
template <class D>
bool is_fit(const Matrix<D>& m, const Graph& g) {
  if (m.rows() != g.n() || m.cols() != g.n())
    throw std::invalid_argument("is_fit: shape mismatch");
  const D& dom = m.domain();
  for (std::size_t i = 0; i < g.n(); ++i)
    if (dom.is_zero(m(i, i))) return false;
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      if (i != j && !g.has_edge(i, j) && !dom.is_zero(m(i, j))) return false;
  return true;
}

}  // namespace minrank
