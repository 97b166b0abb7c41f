#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "minrank/common.hpp"
#include "minrank/matrix.hpp"
#include "minrank/poly.hpp"

namespace minrank {

// Certificate that a matrix satisfies the sparse-basis condition:
// rank k, s nonzeros, and row/column bases whose 2k vectors carry at
// most 4ks/n nonzero entries in total.
struct NksWitness {
  std::size_t n = 0, k = 0, s = 0;
  std::vector<std::size_t> row_basis;
  std::vector<std::size_t> col_basis;
  std::size_t basis_nonzeros = 0;
};

inline constexpr std::size_t kDefaultPatternEnumLimit = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultNksLimit = 10;
inline constexpr std::size_t kDefaultLemma22Limit = 8;

// All distinct zero-patterns of the family over every point of GF(q)^N.
template <class D>
std::set<ZeroPattern> zero_patterns_of_family(
    const std::vector<MultiPoly<D>>& polys, std::uint32_t q,
    std::size_t enum_limit = kDefaultPatternEnumLimit) {
  GF gf(q);  // validates primality
  std::size_t num_vars = polys.empty() ? 0 : polys.front().num_vars();
  for (const auto& p : polys)
    if (p.num_vars() != num_vars)
      throw std::invalid_argument("zero_patterns_of_family: mixed arity");
  if constexpr (std::is_same_v<D, GF>) {
    if (!polys.empty() && polys.front().domain().q != q)
      throw std::invalid_argument("zero_patterns_of_family: field mismatch");
  }

  double points = std::pow(double(q), double(num_vars));
  if (points > double(enum_limit))
    throw limit_exceeded("zero_patterns_of_family: q^N beyond limit");

  std::set<ZeroPattern> out;
  std::vector<typename D::Scalar> point(num_vars,
                                        polys.empty()
                                            ? typename D::Scalar{}
                                            : polys.front().domain().zero());
  std::vector<std::uint32_t> digits(num_vars, 0);
  const D* dom = polys.empty() ? nullptr : &polys.front().domain();
  while (true) {
    ZeroPattern zp;
    zp.length = polys.size();
    for (const auto& p : polys)
      zp.nonzero.push_back(!dom->is_zero(p.eval(point)));
    if (polys.empty()) zp.nonzero.clear();
    out.insert(std::move(zp));
    // odometer over GF(q)^N
    std::size_t pos = 0;
    while (pos < num_vars) {
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == num_vars) break;
    for (std::size_t i = 0; i <= pos && i < num_vars; ++i)
      point[i] = dom->from_int(long(digits[i]));
    if (num_vars == 0) break;
  }
  return out;
}

// binom(m*d + N, N): cap on the number of zero-patterns of m polynomials
// of degree <= d in N variables.
inline mpz_class rbg_bound(std::size_t m, std::size_t d, std::size_t num_vars) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m * d + num_vars),
               static_cast<unsigned long>(num_vars));
  return r;
}

namespace detail {

// Enumerates size-k index subsets in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t t = k; t-- > 0;) {
    if (idx[t] + (k - t) < n) {
      ++idx[t];
      for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class D>
std::size_t rows_nonzeros(const Matrix<D>& m,
                          const std::vector<std::size_t>& rows) {
  std::size_t s = 0;
  for (std::size_t i : rows)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.domain().is_zero(m(i, j))) ++s;
  return s;
}

template <class D>
std::size_t rows_rank(const Matrix<D>& m, const std::vector<std::size_t>& rows) {
  Matrix<D> sub(m.domain(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sub(i, j) = m(rows[i], j);
  return mat_rank(sub);
}

// Minimum nonzero total over all size-k row bases, with the
// lexicographically-first minimizer; nullopt when k exceeds the rank.
template <class D>
std::optional<std::pair<std::vector<std::size_t>, std::size_t>> min_basis(
    const Matrix<D>& m, std::size_t k) {
  std::optional<std::pair<std::vector<std::size_t>, std::size_t>> best;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m.rows()) return best;
  do {
    if (rows_rank(m, idx) != k) continue;
    std::size_t nz = rows_nonzeros(m, idx);
    if (!best || nz < best->second) best = {idx, nz};
  } while (next_combination(idx, m.rows()));
  return best;
}

}  // namespace detail

// Searches all (row-basis, column-basis) pairs of a square exact matrix
// for one meeting the 4ks/n budget; the comparison is exact (integer
// cross-multiplication), never rounded.
template <class D>
std::optional<NksWitness> nks_witness(const Matrix<D>& m,
                                      std::size_t limit = kDefaultNksLimit) {
  static_assert(D::exact, "nks_witness requires an exact domain");
  if (m.rows() != m.cols())
    throw std::invalid_argument("nks_witness: matrix not square");
  if (m.rows() > limit) throw limit_exceeded("nks_witness: instance too large");

  const std::size_t n = m.rows();
  const std::size_t k = mat_rank(m);
  const std::size_t s = m.nonzero_count();
  if (k == 0) return NksWitness{n, 0, s, {}, {}, 0};

  auto rb = detail::min_basis(m, k);
  auto cb = detail::min_basis(transpose(m), k);
  if (!rb || !cb) return std::nullopt;
  std::size_t total = rb->second + cb->second;
  if (total * n > 4 * k * s) return std::nullopt;
  return NksWitness{n, k, s, rb->first, cb->first, total};
}

// Exhaustive principal-submatrix search: first nonempty S (by size, then
// lexicographic) whose principal submatrix admits a witness with
// k'/n' <= k/n.  Failure would falsify the statement this verifies and
// aborts loudly.
template <class D>
std::pair<std::vector<std::size_t>, NksWitness> find_nks_principal_submatrix(
    const Matrix<D>& m, std::size_t limit = kDefaultLemma22Limit) {
  static_assert(D::exact);
  if (m.rows() != m.cols())
    throw std::invalid_argument("find_nks_principal_submatrix: not square");
  if (m.rows() > limit)
    throw limit_exceeded("find_nks_principal_submatrix: instance too large");

  const std::size_t n = m.rows();
  const std::size_t k = mat_rank(m);
  for (std::size_t sz = 1; sz <= n; ++sz) {
    std::vector<std::size_t> idx(sz);
    for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
    do {
      Matrix<D> sub = principal_submatrix(m, idx);
      std::size_t kk = mat_rank(sub);
      if (kk * n > k * sz) continue;  // k'/n' <= k/n, exactly
      if (auto w = nks_witness(sub)) return {idx, *w};
    } while (detail::next_combination(idx, n));
  }
  throw counterexample_error("find_nks_principal_submatrix: lemma-counterexample");
}

// Natural log of binom(n,k)^2 * n^(20ks/n).
inline double lemma24_bound(std::size_t n, std::size_t k, std::size_t s) {
  if (k < 1 || k > n) throw std::invalid_argument("lemma24_bound: bad k");
  if (s > n * n) throw std::invalid_argument("lemma24_bound: bad s");
  double lnC = std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
               std::lgamma(double(n - k) + 1);
  return 2.0 * lnC + (20.0 * double(k) * double(s) / double(n)) * std::log(double(n));
}

// n^2 / (4k), exactly.
inline mpq_class turan_min_nonzeros(std::size_t n, std::size_t k) {
  if (k < 1) throw std::invalid_argument("turan_min_nonzeros: k must be >= 1");
  mpq_class r(mpz_class(static_cast<unsigned long>(n * n)),
              mpz_class(static_cast<unsigned long>(4 * k)));
  r.canonicalize();
  return r;
}

namespace detail {

// Compact mod-q workhorse for the exhaustive census (n <= 4).
struct SmallModMatrix {
  std::size_t n;
  std::uint32_t q;
  std::array<std::uint8_t, 16> a;  // row-major

  std::size_t rank_of_rows(const std::size_t* rows, std::size_t m) const {
    std::array<std::array<std::uint8_t, 4>, 4> w{};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i][j] = a[rows[i] * n + j];
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
      std::size_t piv = rank;
      while (piv < m && w[piv][col] == 0) ++piv;
      if (piv == m) continue;
      std::swap(w[rank], w[piv]);
      std::uint32_t inv = field_inverse(q, w[rank][col]);
      for (std::size_t i = rank + 1; i < m; ++i) {
        if (w[i][col] == 0) continue;
        std::uint32_t f = std::uint32_t(w[i][col]) * inv % q;
        for (std::size_t j = col; j < n; ++j)
          w[i][j] = std::uint8_t((w[i][j] + q - f * w[rank][j] % q) % q);
      }
      ++rank;
    }
    return rank;
  }

  std::size_t rank_of_cols(const std::size_t* cols, std::size_t m) const {
    SmallModMatrix t{n, q, {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) t.a[j * n + i] = a[i * n + cols[j]];
    t.n = n;  // columns become rows of length n
    std::array<std::size_t, 4> rows{};
    for (std::size_t i = 0; i < m; ++i) rows[i] = i;
    return t.rank_of_rows(rows.data(), m);
  }
};

}  // namespace detail

// Exhaustive census over GF(q)^{n x n}: for each (k, s), the number of
// distinct zero-patterns of matrices of rank k with s nonzeros that admit
// a valid witness.  Sharded over the first row, deterministic merge.
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t>
nks_census_all(std::size_t n, std::uint32_t q, unsigned num_threads = 0) {
  if (!is_prime_u32(q)) throw std::invalid_argument("nks_census_all: q not prime");
  if (n < 1 || n > 4)
    throw limit_exceeded("nks_census_all: enumeration beyond limit");
  const std::size_t cells = n * n;
  double total_d = std::pow(double(q), double(cells));
  if (total_d > double(std::uint64_t(1) << 40))
    throw limit_exceeded("nks_census_all: enumeration beyond limit");
  const std::uint64_t total = static_cast<std::uint64_t>(total_d);

  if (num_threads == 0)
    num_threads = std::max(1u, std::thread::hardware_concurrency());
  // pattern space is 2^{n^2} <= 65536: one bitmap per (k, s)
  const std::size_t pat_space = std::size_t(1) << cells;
  using Bitmaps = std::vector<std::vector<bool>>;  // index k*(n^2+1)+s
  const std::size_t slots = (n + 1) * (cells + 1);

  auto worker = [&](std::uint64_t lo, std::uint64_t hi, Bitmaps& maps) {
    maps.assign(slots, {});
    std::array<std::size_t, 4> all_rows{0, 1, 2, 3};
    for (std::uint64_t code = lo; code < hi; ++code) {
      detail::SmallModMatrix m{n, q, {}};
      std::uint64_t c = code;
      std::uint32_t pat = 0;
      std::size_t s = 0;
      for (std::size_t t = 0; t < cells; ++t) {
        m.a[t] = std::uint8_t(c % q);
        c /= q;
        if (m.a[t]) {
          pat |= std::uint32_t(1) << t;
          ++s;
        }
      }
      std::size_t k = m.rank_of_rows(all_rows.data(), n);
      bool ok;
      if (k == 0) {
        ok = true;
      } else {
        // minimal nonzero counts over row and column bases
        std::size_t rmin = SIZE_MAX, cmin = SIZE_MAX;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        do {
          if (m.rank_of_rows(idx.data(), k) == k) {
            std::size_t nz = 0;
            for (std::size_t i : idx)
              for (std::size_t j = 0; j < n; ++j)
                if (m.a[i * n + j]) ++nz;
            rmin = std::min(rmin, nz);
          }
          if (m.rank_of_cols(idx.data(), k) == k) {
            std::size_t nz = 0;
            for (std::size_t j : idx)
              for (std::size_t i = 0; i < n; ++i)
                if (m.a[i * n + j]) ++nz;
            cmin = std::min(cmin, nz);
          }
        } while (detail::next_combination(idx, n));
        ok = rmin != SIZE_MAX && cmin != SIZE_MAX &&
             (rmin + cmin) * n <= 4 * k * s;
      }
      if (ok) {
        auto& bm = maps[k * (cells + 1) + s];
        if (bm.empty()) bm.assign(pat_space, false);
        bm[pat] = true;
      }
    }
  };

  std::vector<Bitmaps> shards(num_threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < num_threads; ++t) {
    std::uint64_t lo = total * t / num_threads;
    std::uint64_t hi = total * (t + 1) / num_threads;
    pool.emplace_back(worker, lo, hi, std::ref(shards[t]));
  }
  for (auto& th : pool) th.join();

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t s = 0; s <= cells; ++s) {
      std::size_t count = 0;
      std::vector<bool> merged;
      for (auto& sh : shards) {
        auto& bm = sh[k * (cells + 1) + s];
        if (bm.empty()) continue;
        if (merged.empty()) merged.assign(pat_space, false);
        for (std::size_t p = 0; p < pat_space; ++p)
          if (bm[p]) merged[p] = true;
      }
      for (bool b : merged)
        if (b) ++count;
      if (count) out[{k, s}] = count;
    }
  return out;
}

// Number of distinct zero-patterns of (n,k,s)-matrices over GF(q).
inline mpz_class count_nks_zero_patterns(std::size_t n, std::size_t k,
                                         std::size_t s, std::uint32_t q,
                                         unsigned num_threads = 0) {
  auto census = nks_census_all(n, q, num_threads);
  auto it = census.find({k, s});
  return it == census.end() ? mpz_class(0) : mpz_class(static_cast<unsigned long>(it->second));
}

}  // namespace minrank
