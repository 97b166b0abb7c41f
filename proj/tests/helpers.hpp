#pragma once

// Test-only helpers and independent oracles.  Everything here is kept
// separate from the library implementation paths it is used to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace minrank::testing {

// --- independent GF(2) bitset rank (rows as bitmasks) ---
inline std::size_t gf2_rank_bits(std::vector<std::uint32_t> rows) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < 32 && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !(rows[piv] >> c & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] >> c & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

// Brute-force minrank over GF(2): minimum rank over every
// pattern-respecting matrix (diagonal forced to 1, both directions of
// every edge free).  Exponential; n <= 5 intended.
inline std::size_t brute_force_minrank_gf2(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) free_cells.emplace_back(i, j);
  std::size_t best = n;
  const std::uint64_t total = std::uint64_t(1) << free_cells.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::uint32_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint32_t(1) << i;
    for (std::size_t t = 0; t < free_cells.size(); ++t)
      if (bits >> t & 1)
        rows[free_cells[t].first] |= std::uint32_t(1) << free_cells[t].second;
    best = std::min(best, gf2_rank_bits(rows));
    if (best == 1) break;
  }
  return best;
}

// Exhaustive maximum independent set over all vertex subsets (n <= ~20).
inline std::size_t exhaustive_alpha(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(i, j)) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

// Largest k with a nonvanishing k x k minor, by exhaustive minor
// expansion; rank oracle independent of Gaussian elimination.
template <class D>
std::size_t minor_rank_oracle(const Matrix<D>& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t best = 0;
  std::vector<std::size_t> ri, ci;
  // enumerate all row subsets and column subsets of equal size
  for (std::uint32_t rmask = 1; rmask < (std::uint32_t(1) << nr); ++rmask) {
    std::size_t k = __builtin_popcount(rmask);
    if (k <= best) continue;
    ri.clear();
    for (std::size_t i = 0; i < nr; ++i)
      if (rmask >> i & 1) ri.push_back(i);
    for (std::uint32_t cmask = 1; cmask < (std::uint32_t(1) << nc); ++cmask) {
      if (std::size_t(__builtin_popcount(cmask)) != k) continue;
      ci.clear();
      for (std::size_t j = 0; j < nc; ++j)
        if (cmask >> j & 1) ci.push_back(j);
      Matrix<D> sub(m.domain(), k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
      if (!m.domain().is_zero(determinant(sub))) {
        best = k;
        break;
      }
    }
  }
  return best;
}

// All labeled graphs on n vertices (edge bitmask order).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++t)
      if (mask >> t & 1) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n));
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Matrix<GF> random_gf_matrix(GF dom, std::size_t n, splitmix64& rng) {
  Matrix<GF> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = std::uint32_t(rng.next() % dom.q);
  return m;
}

// Random n x n GF(q) matrix of rank exactly r (product of random
// factors, retried until the rank comes out right).
inline Matrix<GF> random_gf_matrix_of_rank(GF dom, std::size_t n, std::size_t r,
                                           splitmix64& rng) {
  for (;;) {
    Matrix<GF> a(dom, n, r), b(dom, r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j)
        a(i, j) = std::uint32_t(rng.next() % dom.q);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b(i, j) = std::uint32_t(rng.next() % dom.q);
    Matrix<GF> m = mat_mul(a, b);
    if (mat_rank(m) == r) return m;
  }
}

}  // namespace minrank::testing
